# Copyright 2026 The coboson Authors
# SPDX-License-Identifier: Apache-2.0
"""Two-fermion composite quasi-bosons as deformed oscillators."""

from coboson._core import *  # noqa: F401,F403
from coboson._core import (
    ConfigurationError,
    DomainError,
    FeasibilityError,
    ResourceError,
)

__version__ = "0.1.0"

// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "coboson/report.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace coboson {

void VerificationReport::add(std::string name, double max_residual, double tolerance, std::string context) {
  // NaN residuals never pass.
  const bool ok = max_residual <= tolerance;
  add_verdict(std::move(name), max_residual, tolerance, ok, std::move(context));
}

void VerificationReport::add_verdict(std::string name, double max_residual, double tolerance, bool passed,
                                     std::string context) {
  checks_.push_back(CheckResult{std::move(name), std::abs(max_residual), tolerance, passed, std::move(context)});
}

void VerificationReport::merge(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::overall_passed() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  const auto it = std::find_if(checks_.begin(), checks_.end(), [&](const CheckResult& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

}  // namespace coboson

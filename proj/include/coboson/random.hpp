// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file random.hpp
 * @brief Seeded, implementation-independent Gaussian source.
 *
 * std::normal_distribution is not specified bit-for-bit by the standard, so
 * Gaussians are produced here from the raw std::mt19937_64 stream:
 *
 *   u = ((x >> 11) + 1) * 2^-53       in (0, 1]
 *   v =  (y >> 11)      * 2^-53       in [0, 1)
 *   g0 = sqrt(-2 ln u) cos(2 pi v),  g1 = sqrt(-2 ln u) sin(2 pi v)
 *
 * A complex Gaussian consumes one (g0, g1) pair as (re, im) / sqrt(2).
 */

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>

namespace coboson {

class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double uniform_open_closed();
  double uniform_closed_open();
  double normal();
  /// Standard complex normal: E|z|^2 = 1.
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace coboson

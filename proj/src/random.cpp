// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "coboson/random.hpp"

#include <cmath>
#include <numbers>

namespace coboson {

namespace {
constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;
}

double GaussianSource::uniform_open_closed() { return static_cast<double>((engine_() >> 11) + 1) * kTwoPow53Inv; }

double GaussianSource::uniform_closed_open() { return static_cast<double>(engine_() >> 11) * kTwoPow53Inv; }

double GaussianSource::normal() {
  if (spare_) {
    const double out = *spare_;
    spare_.reset();
    return out;
  }
  const double u = uniform_open_closed();
  const double v = uniform_closed_open();
  const double radius = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * std::numbers::pi * v;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

std::complex<double> GaussianSource::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re / std::numbers::sqrt2, im / std::numbers::sqrt2};
}

}  // namespace coboson

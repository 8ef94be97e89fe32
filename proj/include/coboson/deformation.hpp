// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file deformation.hpp
 * @brief Structure functions of deformed oscillators and their recurrences.
 *
 * The quadratic family phi(n) = (1 + f/2) n - (f/2) n^2 is the unique solution
 * of the binomial recurrence
 *
 *   phi(n+1) = sum_{k=0}^{n} (-1)^{n-k} C(n+1, k) phi(k),   n >= 2,
 *
 * with phi(0) = 0, phi(1) = 1, phi(2) = 2 - f. The recurrence helpers are
 * templates so the same code runs in double precision and in exact rational
 * arithmetic (boost::multiprecision::cpp_rational).
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <vector>

#include "coboson/errors.hpp"
#include "coboson/report.hpp"

namespace coboson {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class StructureFunction {
 public:
  enum class Kind { quadratic, arik_coon, undeformed };

  static StructureFunction quadratic(double f) { return {Kind::quadratic, f}; }
  static StructureFunction arik_coon(double q) { return {Kind::arik_coon, q}; }
  static StructureFunction undeformed() { return {Kind::undeformed, 0.0}; }

  Kind kind() const noexcept { return kind_; }
  /// f for the quadratic family, q for Arik-Coon, 0 when undeformed.
  double parameter() const noexcept { return parameter_; }
  /// True for quadratic and undeformed (f = 0).
  bool in_quadratic_family() const noexcept { return kind_ != Kind::arik_coon; }

  double operator()(int n) const;
  std::string describe() const;

 private:
  StructureFunction(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

  Kind kind_;
  double parameter_;
};

/// C(n, 0..n) by Pascal's rule in exact integers.
std::vector<BigInt> binomial_row(int n);
BigInt binomial(int n, int k);

template <class T>
T phi_quadratic_t(int n, const T& f) {
  const T half_f = f / T(2);
  return (T(1) + half_f) * T(n) - half_f * T(n) * T(n);
}

double phi_quadratic(int n, double f);

/// phi(n) - sum_{k<n} (-1)^{n-1-k} C(n,k) phi(k), given values phi(0..n). Zero iff the
/// binomial recurrence holds at n (meaningful for n >= 3).
template <class T>
T binomial_recurrence_residual(std::span<const T> values, int n) {
  if (n < 1 || static_cast<std::size_t>(n) >= values.size()) {
    throw DomainError("binomial recurrence residual needs phi(0.." + std::to_string(n) + ")");
  }
  const std::vector<BigInt> row = binomial_row(n);
  T predicted(0);
  for (int k = 0; k < n; ++k) {
    const T term = T(row[static_cast<std::size_t>(k)]) * values[static_cast<std::size_t>(k)];
    predicted += ((n - 1 - k) % 2 == 0) ? term : T(-term);
  }
  return values[static_cast<std::size_t>(n)] - predicted;
}

/// phi(n) by iterating the binomial recurrence from phi(0) = 0, phi(1), phi(2).
template <class T>
T phi_from_recurrence_t(const T& phi1, const T& phi2, int n) {
  if (n < 0) throw DomainError("phi_from_recurrence requires n >= 0");
  std::vector<T> values{T(0), phi1, phi2};
  for (int next = 3; next <= n; ++next) {
    values.push_back(T(0));
    // The residual with a zero placeholder is minus the predicted value.
    values.back() = -binomial_recurrence_residual<T>(std::span<const T>(values), next);
  }
  return values[static_cast<std::size_t>(n)];
}

double phi_from_recurrence(double phi1, double phi2, int n);

/// phi(n+1) = (2(n+1)/n) phi(n) - ((n+1)/(n-1)) phi(n-1); throws DomainError for n < 2.
template <class T>
T phi_three_term_t(const T& phi_prev, const T& phi_curr, int n) {
  if (n < 2) throw DomainError("three-term recurrence requires n >= 2");
  return T(2 * (n + 1)) * phi_curr / T(n) - T(n + 1) * phi_prev / T(n - 1);
}

double phi_three_term(double phi_prev, double phi_curr, int n);

/// E(n) = (phi(n+1) + phi(n)) / 2.
double energy(int n, const StructureFunction& sf);

/// Right-hand side of the quasi-Fibonacci energy recurrence predicting E(n+1) from E(n), E(n-1).
template <class T>
T energy_recurrence_rhs(const T& e_prev, const T& e_curr, int n) {
  const T denom = T(2 * n * n - 1);
  return T(4 * n * n + 4 * n - 4) * e_curr / denom - T(2 * n * n + 4 * n + 1) * e_prev / denom;
}

/// Max |E(n+1) - rhs(E(n), E(n-1))| over n = 1..n_max-1.
/// Throws DomainError if n_max < 2 or sf is not in the quadratic family.
VerificationReport check_energy_recurrence(const StructureFunction& sf, int n_max,
                                           double tolerance = kDefaultTolerance);

/// (q^n - 1) / (q - 1), with the removable singularity q = 1 giving n.
double phi_ac(int n, double q);

/// sum_{k=0}^{n} C(n,k) k^m (-1)^{n-k}; equals 0 for m < n and n! for m = n.
/// Throws DomainError unless 0 <= m <= n.
BigInt alternating_binomial_sum(int n, int m);

}  // namespace coboson

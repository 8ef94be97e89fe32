// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "coboson/deformation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace coboson {

double StructureFunction::operator()(int n) const {
  switch (kind_) {
    case Kind::quadratic:
      return phi_quadratic(n, parameter_);
    case Kind::arik_coon:
      return phi_ac(n, parameter_);
    case Kind::undeformed:
      return static_cast<double>(n);
  }
  return 0.0;
}

std::string StructureFunction::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::quadratic:
      os << "quadratic(f=" << parameter_ << ")";
      break;
    case Kind::arik_coon:
      os << "arik_coon(q=" << parameter_ << ")";
      break;
    case Kind::undeformed:
      os << "undeformed";
      break;
  }
  return os.str();
}

std::vector<BigInt> binomial_row(int n) {
  if (n < 0) throw DomainError("binomial row index must be non-negative");
  std::vector<BigInt> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(static_cast<std::size_t>(i) + 1);
    next.front() = 1;
    next.back() = 1;
    for (int k = 1; k < i; ++k) {
      next[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k) - 1] + row[static_cast<std::size_t>(k)];
    }
    row = std::move(next);
  }
  return row;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return binomial_row(n)[static_cast<std::size_t>(k)];
}

double phi_quadratic(int n, double f) { return phi_quadratic_t<double>(n, f); }

// Iterating the recurrence amplifies rounding by the binomial weights, so the
// double entry point carries the extra bits of long double.
double phi_from_recurrence(double phi1, double phi2, int n) {
  return static_cast<double>(phi_from_recurrence_t<long double>(phi1, phi2, n));
}

double phi_three_term(double phi_prev, double phi_curr, int n) {
  return phi_three_term_t<double>(phi_prev, phi_curr, n);
}

double energy(int n, const StructureFunction& sf) { return 0.5 * (sf(n + 1) + sf(n)); }

VerificationReport check_energy_recurrence(const StructureFunction& sf, int n_max, double tolerance) {
  if (n_max < 2) throw DomainError("energy recurrence check needs n_max >= 2");
  if (!sf.in_quadratic_family()) throw DomainError("energy recurrence holds only for the quadratic family");

  double worst = 0.0;
  int worst_n = 1;
  for (int n = 1; n <= n_max - 1; ++n) {
    const double rhs = energy_recurrence_rhs<double>(energy(n - 1, sf), energy(n, sf), n);
    const double residual = std::abs(energy(n + 1, sf) - rhs);
    if (residual > worst) {
      worst = residual;
      worst_n = n;
    }
  }
  VerificationReport report;
  report.add("energy_recurrence", worst, tolerance,
             sf.describe() + ", n=1.." + std::to_string(n_max - 1) + ", worst at n=" + std::to_string(worst_n));
  return report;
}

double phi_ac(int n, double q) {
  if (n < 0) throw DomainError("phi_ac requires n >= 0");
  if (q == 1.0) return static_cast<double>(n);
  return (std::pow(q, n) - 1.0) / (q - 1.0);
}

BigInt alternating_binomial_sum(int n, int m) {
  if (m < 0 || m > n) throw DomainError("alternating_binomial_sum requires 0 <= m <= n");
  const std::vector<BigInt> row = binomial_row(n);
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) {
    const BigInt term = row[static_cast<std::size_t>(k)] * boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(m));
    if ((n - k) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace coboson

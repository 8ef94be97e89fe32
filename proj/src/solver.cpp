// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "coboson/solver.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

#include "coboson/conditions.hpp"

namespace coboson {

double rank_to_f(int m) {
  if (m < 1) throw DomainError("rank must be at least 1 (got " + std::to_string(m) + ")");
  return 2.0 / static_cast<double>(m);
}

Eigen::MatrixXcd random_unitary(int n, GaussianSource& rng) {
  if (n < 1) throw DomainError("unitary dimension must be positive");
  Eigen::MatrixXcd z(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) z(r, c) = rng.complex_normal();
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

Eigen::MatrixXcd random_unitary(int n, std::uint64_t seed) {
  GaussianSource rng(seed);
  return random_unitary(n, rng);
}

PhiMatrix random_normalized_phi(const ModeConfig& cfg, GaussianSource& rng) {
  Eigen::MatrixXcd m(cfg.d_a(), cfg.d_b());
  for (int r = 0; r < cfg.d_a(); ++r) {
    for (int c = 0; c < cfg.d_b(); ++c) m(r, c) = rng.complex_normal();
  }
  m /= m.norm();
  return PhiMatrix(cfg, std::move(m));
}

PhiFamily construct_family(const FamilySpec& spec) {
  if (spec.k < 1 || spec.m < 1) throw DomainError("family needs k >= 1 and m >= 1");
  const ModeConfig cfg(spec.d_a, spec.d_b);
  if (spec.k * spec.m > std::min(spec.d_a, spec.d_b)) {
    throw FeasibilityError("empty solution set: k*m > min(d_a,d_b)");
  }

  GaussianSource rng(spec.seed);
  const Eigen::MatrixXcd u1 = random_unitary(spec.d_a, rng);
  const Eigen::MatrixXcd u2 = random_unitary(spec.d_b, rng);
  const double scale = std::sqrt(rank_to_f(spec.m) / 2.0);

  std::vector<PhiMatrix> members;
  members.reserve(static_cast<std::size_t>(spec.k));
  for (int alpha = 0; alpha < spec.k; ++alpha) {
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(spec.d_a, spec.d_b);
    block.block(alpha * spec.m, alpha * spec.m, spec.m, spec.m) = scale * random_unitary(spec.m, rng);
    members.emplace_back(cfg, u1 * block * u2.adjoint());
  }
  return PhiFamily(cfg, std::move(members));
}

std::string to_string(SolutionClass c) {
  switch (c) {
    case SolutionClass::non_degenerate:
      return "non_degenerate";
    case SolutionClass::degenerate_family:
      return "degenerate_family";
    case SolutionClass::inadmissible:
      return "inadmissible";
  }
  return "inadmissible";
}

Classification classify(const PhiFamily& family, double tol) {
  Classification out;
  for (const PhiMatrix& phi : family.members()) {
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(phi.entries());
    const Eigen::VectorXd& sv = svd.singularValues();
    out.singular_values.emplace_back(sv.data(), sv.data() + sv.size());
    out.ranks.push_back(static_cast<int>((sv.array() > tol).count()));
  }
  if (out.ranks.empty()) {
    out.reason = "empty family";
    return out;
  }
  if (!std::all_of(out.ranks.begin(), out.ranks.end(), [&](int r) { return r == out.ranks.front(); })) {
    out.reason = "ranks disagree across modes";
    return out;
  }
  if (out.ranks.front() == 0) {
    out.reason = "zero matrix";
    return out;
  }
  out.m = out.ranks.front();
  out.f = rank_to_f(*out.m);

  const double check_tol = std::max(tol, kDefaultTolerance);
  VerificationReport conditions = check_normalization(family, check_tol);
  conditions.merge(check_product_condition(family, check_tol));
  for (const PhiMatrix& phi : family.members()) conditions.merge(check_cubic_condition(phi, *out.f, check_tol));
  if (!conditions.overall_passed()) {
    for (const CheckResult& c : conditions.checks()) {
      if (!c.passed) {
        out.reason = c.name + " fails (residual " + std::to_string(c.max_residual) + ")";
        break;
      }
    }
    return out;
  }

  const ModeConfig& cfg = family.config();
  const bool square = cfg.d_a() == cfg.d_b();
  if (family.size() == 1 && square && *out.m == cfg.d_a()) {
    out.label = SolutionClass::non_degenerate;
    out.reason = "single full-rank mode";
  } else {
    out.label = SolutionClass::degenerate_family;
    out.reason = "common rank " + std::to_string(*out.m) + " over " + std::to_string(family.size()) + " mode(s)";
  }
  return out;
}

}  // namespace coboson

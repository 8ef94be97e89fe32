// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "coboson/conditions.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace coboson {
namespace {

std::string chain_label(const ChainIndex& idx) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < idx.multiplicities.size(); ++i) {
    if (i) os << ",";
    os << idx.multiplicities[i];
  }
  os << ")";
  return os.str();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

/// Running maximum that remembers where it occurred.
struct Worst {
  double value = 0.0;
  std::string where = "(all residuals zero)";

  void offer(double residual, const std::string& location) {
    if (!(residual <= value)) {  // NaN propagates
      value = residual;
      where = location;
    }
  }
};

double relative(double residual, double reference) {
  return reference > kRelativeResidualFloor ? residual / reference : residual;
}

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, int n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  for (int i = 0; i < n; ++i) out = out * m;
  return out;
}

/// Orthonormal basis of span{(A^dagger)^j |O>} as matrix columns.
Eigen::MatrixXcd chain_span_basis(const PhiMatrix& phi) {
  std::vector<Eigen::VectorXcd> basis;
  StateVector v = vacuum(phi.config());
  const auto dim = static_cast<int>(phi.config().dimension());
  for (int j = 0; j < dim && !v.is_zero(); ++j) {
    Eigen::VectorXcd x = to_dense(v);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) x -= q * q.dot(x);
    }
    const double len = x.norm();
    if (len > kRelativeResidualFloor) basis.push_back(x / len);
    v = apply_A_dagger(phi, v);
  }
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(phi.config().dimension()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = basis[i];
  return out;
}

}  // namespace

double implied_deformation(const PhiMatrix& phi) {
  const Eigen::MatrixXcd gram = phi.entries().adjoint() * phi.entries();
  return 2.0 * (gram * gram).trace().real();
}

VerificationReport check_normalization(const PhiFamily& family, double tolerance) {
  if (family.size() == 0) throw std::invalid_argument("check_normalization: empty family");
  Worst worst;
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = 0; b < family.size(); ++b) {
      const Complex overlap = (family[a].entries() * family[b].entries().adjoint()).trace();
      worst.offer(std::abs(overlap - (a == b ? 1.0 : 0.0)),
                  "Tr(Phi_" + std::to_string(a) + " Phi_" + std::to_string(b) + "^dagger)");
    }
  }
  VerificationReport report;
  report.add("normalization", worst.value, tolerance, "worst at " + worst.where);
  return report;
}

VerificationReport check_product_condition(const PhiFamily& family, double tolerance) {
  VerificationReport report;
  if (family.size() < 2) {
    report.add("product_condition", 0.0, tolerance, "vacuous: no alpha != beta pair");
    return report;
  }
  Worst worst;
  for (std::size_t alpha = 0; alpha < family.size(); ++alpha) {
    const Eigen::MatrixXcd adj = family[alpha].entries().adjoint();
    for (std::size_t beta = 0; beta < family.size(); ++beta) {
      if (beta == alpha) continue;
      const Eigen::MatrixXcd& pb = family[beta].entries();
      for (std::size_t gamma = 0; gamma < family.size(); ++gamma) {
        const Eigen::MatrixXcd& pg = family[gamma].entries();
        const double residual = (pb * adj * pg + pg * adj * pb).norm();
        worst.offer(residual, "(alpha,beta,gamma)=(" + std::to_string(alpha) + "," + std::to_string(beta) + "," +
                                  std::to_string(gamma) + ")");
      }
    }
  }
  report.add("product_condition", worst.value, tolerance, "worst at " + worst.where);
  return report;
}

VerificationReport check_cubic_condition(const PhiMatrix& phi, double f, double tolerance) {
  const Eigen::MatrixXcd& p = phi.entries();
  const double cubic = (p * p.adjoint() * p - (f / 2.0) * p).norm();
  const double trace = std::abs(implied_deformation(phi) / 2.0 - f / 2.0);
  VerificationReport report;
  report.add("cubic_condition", cubic, tolerance, "f=" + fmt(f));
  report.add("cubic_trace", trace, tolerance, "Tr((Phi^dagger Phi)^2)=" + fmt(implied_deformation(phi) / 2.0));
  return report;
}

VerificationReport verify_realization(const PhiFamily& family, const StructureFunction& sf, int n_max,
                                      double tolerance, int max_chain_length) {
  if (n_max < 0 || n_max > max_chain_length) {
    throw std::invalid_argument("verify_realization: n_max must lie in [0, " + std::to_string(max_chain_length) +
                                "]");
  }
  const std::size_t k = family.size();
  Worst independence;
  Worst commutator;
  Worst delta;
  Worst lowering;
  Worst norm_law;

  for (const ChainIndex& idx : enumerate_chains(k, n_max)) {
    const StateVector chain = chain_state(family, idx, max_chain_length);
    const double scale = norm(chain);
    const std::string label = chain_label(idx);

    for (std::size_t alpha = 0; alpha < k; ++alpha) {
      const PhiMatrix& pa = family[alpha];
      const int n = idx.multiplicities[alpha];
      const StateVector lowered = apply_A(pa, chain);

      for (std::size_t beta = 0; beta < k; ++beta) {
        const PhiMatrix& pb = family[beta];
        const StateVector comm = add_scaled(apply_A(pa, apply_A_dagger(pb, chain)), -1.0, apply_A_dagger(pb, lowered));
        const std::string where = "chain " + label + ", alpha=" + std::to_string(alpha);
        if (beta != alpha) {
          independence.offer(relative(norm(comm), scale), where + ", beta=" + std::to_string(beta));
        } else {
          const double expected = sf(n + 1) - sf(n);
          commutator.offer(relative(norm(add_scaled(comm, -expected, chain)), scale), where);
        }
      }

      const double delta_eigen = 1.0 - sf(n + 1) + sf(n);
      delta.offer(relative(norm(add_scaled(apply_delta(pa, pa, chain), -delta_eigen, chain)), scale),
                  "chain " + label + ", alpha=" + std::to_string(alpha));

      StateVector target(family.config());
      if (n > 0) {
        ChainIndex below = idx;
        --below.multiplicities[alpha];
        target = scaled(sf(n), chain_state(family, below, max_chain_length));
      }
      lowering.offer(relative(norm(add_scaled(lowered, -1.0, target)), scale),
                     "chain " + label + ", alpha=" + std::to_string(alpha));
    }
  }

  for (std::size_t alpha = 0; alpha < k; ++alpha) {
    double product = 1.0;
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) product *= sf(n);
      const double measured = chain_norm_sq(family[alpha], n, max_chain_length);
      const double reference = std::sqrt(measured) > kRelativeResidualFloor ? measured : 0.0;
      norm_law.offer(relative(std::abs(measured - product), reference),
                     "alpha=" + std::to_string(alpha) + ", n=" + std::to_string(n));
    }
  }

  VerificationReport report;
  const std::string scope = sf.describe() + ", degree<=" + std::to_string(n_max) + ", worst at ";
  if (k > 1) {
    report.add("independence", independence.value, tolerance, scope + independence.where);
  } else {
    report.add("independence", 0.0, tolerance, "vacuous: single mode");
  }
  report.add("commutator_eigenvalue", commutator.value, tolerance, scope + commutator.where);
  report.add("delta_eigenvalue", delta.value, tolerance, scope + delta.where);
  report.add("lowering", lowering.value, tolerance, scope + lowering.where);
  report.add("norm_law", norm_law.value, tolerance, scope + norm_law.where);
  return report;
}

NogoSample ac_nogo_sample(const PhiMatrix& phi, double q, double tolerance, double incompatibility_floor) {
  if (q == 1.0) throw DomainError("q=1 is not a deformation");
  const StateVector two = apply_A_dagger(phi, apply_A_dagger(phi, vacuum(phi.config())));
  const StateVector number_part = apply_A_dagger(phi, apply_A(phi, two));
  const StateVector f_applied = add_scaled(apply_delta(phi, phi, two), q - 1.0, number_part);

  NogoSample sample;
  sample.s2 = norm(two);
  sample.r2 = norm(f_applied);
  sample.inconsistent = sample.r2 > incompatibility_floor;
  sample.nilpotent = sample.s2 <= tolerance;
  return sample;
}

VerificationReport ac_nogo_probe(const PhiFamily& family, double q, double tolerance, double incompatibility_floor) {
  if (q == 1.0) throw DomainError("q=1 is not a deformation");
  VerificationReport report;
  for (std::size_t alpha = 0; alpha < family.size(); ++alpha) {
    const NogoSample s = ac_nogo_sample(family[alpha], q, tolerance, incompatibility_floor);
    std::string branch;
    if (s.nilpotent) {
      branch = "nilpotency branch";
    } else if (s.inconsistent) {
      branch = "inconsistency branch";
    } else {
      branch = "AC relation holds non-trivially";
    }
    report.add_verdict("nogo[" + std::to_string(alpha) + "]", s.r2, incompatibility_floor,
                       s.satisfies_disjunction(),
                       branch + ": r2=" + fmt(s.r2) + ", s2=" + fmt(s.s2) + ", q=" + fmt(q));
  }

  if (family.size() > 1) {
    // F_{alpha beta} = Delta_{alpha beta} for alpha != beta, applied to every two-quantum chain.
    const StateVector vac = vacuum(family.config());
    double worst = 0.0;
    for (std::size_t alpha = 0; alpha < family.size(); ++alpha) {
      for (std::size_t beta = 0; beta < family.size(); ++beta) {
        if (alpha == beta) continue;
        for (std::size_t g1 = 0; g1 < family.size(); ++g1) {
          for (std::size_t g2 = g1; g2 < family.size(); ++g2) {
            const StateVector two = apply_A_dagger(family[g2], apply_A_dagger(family[g1], vac));
            worst = std::max(worst, norm(apply_delta(family[alpha], family[beta], two)));
          }
        }
      }
    }
    report.add_verdict("off_diagonal", worst, incompatibility_floor, true,
                       "informational: max ||F_{alpha beta} A^dagger A^dagger |O>||, alpha != beta");
  }
  return report;
}

VerificationReport check_operator_identities(const PhiMatrix& phi, int n_max, double tolerance) {
  const ModeConfig& cfg = phi.config();
  if (cfg.total_modes() > kMaxDenseModes) {
    throw ResourceError("operator identities need dense matrices; d_a + d_b = " + std::to_string(cfg.total_modes()) +
                        " exceeds " + std::to_string(kMaxDenseModes));
  }
  if (n_max < 1 || n_max > 4) throw std::invalid_argument("check_operator_identities: n_max must lie in [1, 4]");

  const Eigen::MatrixXcd create_m = dense_operator(cfg, [&](const StateVector& v) { return apply_A_dagger(phi, v); });
  const Eigen::MatrixXcd lower_m = dense_operator(cfg, [&](const StateVector& v) { return apply_A(phi, v); });
  const Eigen::MatrixXcd delta_m = dense_operator(cfg, [&](const StateVector& v) { return apply_delta(phi, phi, v); });
  const auto dim = static_cast<Eigen::Index>(cfg.dimension());
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::MatrixXcd eps = identity - delta_m;
  const Eigen::MatrixXcd number_like = create_m * lower_m;
  const double f = implied_deformation(phi);

  VerificationReport report;
  report.add("adjointness", spectral_norm(lower_m - create_m.adjoint()), tolerance, "A - (A^dagger)^dagger");
  report.add("commutator_is_epsilon", spectral_norm(lower_m * create_m - create_m * lower_m - eps), tolerance,
             "[A, A^dagger] - (1 - Delta)");

  for (int n = 1; n <= n_max; ++n) {
    const Eigen::MatrixXcd p = matrix_power(number_like, n);
    const Eigen::MatrixXcd lhs = p * create_m - create_m * p;
    const Eigen::MatrixXcd rhs = create_m * (matrix_power(number_like + eps, n) - p);
    report.add("power_commutator[" + std::to_string(n) + "]", spectral_norm(lhs - rhs), tolerance,
               "[(A^dagger A)^n, A^dagger] vs A^dagger[(A^dagger A + eps)^n - (A^dagger A)^n]");
  }
  for (int n = 1; n <= n_max; ++n) {
    const Eigen::MatrixXcd p = matrix_power(eps, n);
    const Eigen::MatrixXcd lhs = p * create_m - create_m * p;
    const Eigen::MatrixXcd rhs = create_m * (matrix_power(eps - f * identity, n) - p);
    report.add("epsilon_commutator[" + std::to_string(n) + "]", spectral_norm(lhs - rhs), tolerance,
               "[eps^n, A^dagger] vs A^dagger[(eps - f)^n - eps^n], f=" + fmt(f));
  }

  const Eigen::MatrixXcd span = chain_span_basis(phi);
  const Eigen::MatrixXcd raising = delta_m * create_m - create_m * delta_m - f * create_m;
  report.add("delta_raising_on_span", spectral_norm(raising * span), tolerance,
             "([Delta, A^dagger] - f A^dagger) on span of " + std::to_string(span.cols()) + " chain states");

  const Eigen::VectorXcd vac = to_dense(vacuum(cfg));
  report.add("vacuum_epsilon", (eps * vac - vac).norm(), tolerance, "eps|O> - |O>");
  return report;
}

}  // namespace coboson

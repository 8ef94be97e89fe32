// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file conditions.hpp
 * @brief Verification of the matrix conditions, the deformed-oscillator realization
 *        on chain states, the dense operator identities, and the Arik-Coon no-go probe.
 *
 * Weak equalities G ~= 0 are checked by applying G to every chain state
 * prod_alpha (A^dagger_alpha)^{n_alpha} |O> up to a given total degree; these
 * span the quasi-boson state space, so vanishing on them is vanishing on the span.
 */

#pragma once

#include "coboson/deformation.hpp"
#include "coboson/quasiboson.hpp"
#include "coboson/report.hpp"

namespace coboson {

/// Chain norms at or below this are treated as zero and residuals reported as absolute.
inline constexpr double kRelativeResidualFloor = 1e-10;
/// Smallest F_{alpha alpha} residual counted as a genuine inconsistency in the no-go probe.
inline constexpr double kIncompatibilityFloor = 1e-6;
/// Default tolerance for the dense operator identities.
inline constexpr double kOperatorIdentityTolerance = 1e-11;

/// 2 Tr((Phi^dagger Phi)^2), the deformation parameter implied by a single matrix.
double implied_deformation(const PhiMatrix& phi);

/// max_{alpha,beta} |Tr(Phi_alpha Phi_beta^dagger) - delta_{alpha beta}|. Throws std::invalid_argument for
/// an empty family.
VerificationReport check_normalization(const PhiFamily& family, double tolerance = kDefaultTolerance);

/// max over alpha != beta and all gamma of ||Phi_beta Phi_alpha^dagger Phi_gamma + Phi_gamma Phi_alpha^dagger
/// Phi_beta||_F. Vacuously passes for single-mode families.
VerificationReport check_product_condition(const PhiFamily& family, double tolerance = kDefaultTolerance);

/// Two checks: "cubic_condition" = ||Phi Phi^dagger Phi - (f/2) Phi||_F and
/// "cubic_trace" = |Tr((Phi^dagger Phi)^2) - f/2|.
VerificationReport check_cubic_condition(const PhiMatrix& phi, double f, double tolerance = kDefaultTolerance);

/**
 * Checks, on every chain of total degree <= n_max and for all modes alpha, beta:
 *   independence            [A_alpha, A^dagger_beta] chain = 0               (alpha != beta)
 *   commutator_eigenvalue   [A_alpha, A^dagger_alpha] chain = (phi(n+1) - phi(n)) chain
 *   delta_eigenvalue        Delta_{alpha alpha} chain = (1 - phi(n+1) + phi(n)) chain
 *   lowering                A_alpha chain = phi(n_alpha) * chain(n_alpha - 1)
 *   norm_law                ||(A^dagger_alpha)^n |O>||^2 = prod_{j=1..n} phi(j)
 * Residuals are relative to the chain norm when it exceeds kRelativeResidualFloor.
 * Throws std::invalid_argument when n_max is negative or exceeds max_chain_length.
 */
VerificationReport verify_realization(const PhiFamily& family, const StructureFunction& sf, int n_max,
                                      double tolerance = kDefaultTolerance,
                                      int max_chain_length = kDefaultMaxChainLength);

struct NogoSample {
  double r2 = 0.0;  ///< ||F_{aa} (A^dagger)^2 |O>||, F_{aa} = Delta_{aa} + (q - 1) A^dagger A
  double s2 = 0.0;  ///< ||(A^dagger)^2 |O>||
  bool inconsistent = false;
  bool nilpotent = false;

  /// The no-go disjunction: the relation fails or holds only through nilpotency.
  bool satisfies_disjunction() const noexcept { return inconsistent || nilpotent; }
};

/// Throws DomainError for q = 1.
NogoSample ac_nogo_sample(const PhiMatrix& phi, double q, double tolerance = kDefaultTolerance,
                          double incompatibility_floor = kIncompatibilityFloor);

/// One "nogo[alpha]" check per mode asserting the disjunction, plus an informational
/// "off_diagonal" check (always passing) for families with more than one mode.
/// Throws DomainError for q = 1.
VerificationReport ac_nogo_probe(const PhiFamily& family, double q, double tolerance = kDefaultTolerance,
                                 double incompatibility_floor = kIncompatibilityFloor);

/// Dense full-space check of
///   [(A^dagger A)^n, A^dagger] = A^dagger [(A^dagger A + eps)^n - (A^dagger A)^n]
///   [eps^n, A^dagger]          = A^dagger [(eps - f)^n - eps^n]
/// for n = 1..n_max with eps = 1 - Delta, plus [Delta, A^dagger] = f A^dagger restricted to the
/// single-mode chain span. Residuals are spectral norms. f = implied_deformation(phi).
/// Throws ResourceError when d_a + d_b > kMaxDenseModes, std::invalid_argument unless 1 <= n_max <= 4.
VerificationReport check_operator_identities(const PhiMatrix& phi, int n_max,
                                             double tolerance = kOperatorIdentityTolerance);

}  // namespace coboson

// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file solver.hpp
 * @brief Construction and classification of admissible Phi families.
 *
 * Every admissible family of k modes shares a common rank m and is of the form
 *
 *   Phi_alpha = U1 * blockdiag(0, sqrt(f/2) * U_alpha, 0) * U2^dagger,   f = 2/m,
 *
 * with the m x m unitary blocks of different modes occupying disjoint rows and
 * columns. A solution exists only when k*m <= min(d_a, d_b).
 */

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coboson/quasiboson.hpp"
#include "coboson/random.hpp"

namespace coboson {

/// Numeric rank threshold on singular values.
inline constexpr double kRankTolerance = 1e-9;

struct FamilySpec {
  int d_a = 1;
  int d_b = 1;
  int k = 1;  ///< number of quasi-boson modes
  int m = 1;  ///< common rank of every Phi_alpha
  std::uint64_t seed = 0;
};

/// f = 2/m; throws DomainError for m < 1.
double rank_to_f(int m);

/// Haar-distributed n x n unitary: QR of a complex Gaussian matrix with the phases of R's diagonal
/// moved into Q. Entries are drawn row-major from rng.
Eigen::MatrixXcd random_unitary(int n, GaussianSource& rng);
Eigen::MatrixXcd random_unitary(int n, std::uint64_t seed);

/// Complex Gaussian d_a x d_b matrix scaled to Tr(Phi Phi^dagger) = 1.
PhiMatrix random_normalized_phi(const ModeConfig& cfg, GaussianSource& rng);

/// Draws U1 (d_a), U2 (d_b), then U_0..U_{k-1} (m each) from one GaussianSource seeded with spec.seed,
/// and places sqrt(1/m) U_alpha at rows/columns [alpha*m, (alpha+1)*m).
/// Throws FeasibilityError when k*m > min(d_a, d_b), DomainError when k or m < 1.
PhiFamily construct_family(const FamilySpec& spec);

enum class SolutionClass { non_degenerate, degenerate_family, inadmissible };

std::string to_string(SolutionClass c);

struct Classification {
  std::vector<int> ranks;
  std::vector<std::vector<double>> singular_values;
  std::optional<int> m;
  std::optional<double> f;
  SolutionClass label = SolutionClass::inadmissible;
  std::string reason;
};

/// Numeric ranks (singular values > tol), the common rank m with f = 2/m when all ranks agree, and
/// the solution class. Families failing the normalization, product or cubic conditions (checked at
/// tolerance max(tol, 1e-10)) are inadmissible.
Classification classify(const PhiFamily& family, double tol = kRankTolerance);

}  // namespace coboson

// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file quasiboson.hpp
 * @brief Two-fermion composite operators built from coefficient matrices.
 *
 * A mode alpha is described by a d_a x d_b complex matrix Phi_alpha:
 *
 *   A^dagger = sum_{mu,nu} Phi[mu,nu] a^dagger_mu b^dagger_nu
 *   A        = sum_{mu,nu} conj(Phi[mu,nu]) b_nu a_mu
 *
 * and the deviation from canonical bosonic commutation is
 *
 *   [A_alpha, A^dagger_beta] = delta_{alpha beta} - Delta_{alpha beta}.
 */

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "coboson/fock.hpp"

namespace coboson {

/// Longest chain (total number of A^dagger applications) built by default.
inline constexpr int kDefaultMaxChainLength = 6;

class PhiMatrix {
 public:
  /// Throws ConfigurationError if entries is not d_a x d_b.
  PhiMatrix(ModeConfig cfg, Eigen::MatrixXcd entries);

  const ModeConfig& config() const noexcept { return cfg_; }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  Complex operator()(int mu, int nu) const { return entries_(mu, nu); }

  /// Tr(Phi Phi^dagger).
  double trace_norm_sq() const { return entries_.squaredNorm(); }
  bool is_normalized(double tol = 1e-12) const;

 private:
  ModeConfig cfg_;
  Eigen::MatrixXcd entries_;
};

class PhiFamily {
 public:
  /// Throws ConfigurationError if any member's configuration differs from cfg.
  PhiFamily(ModeConfig cfg, std::vector<PhiMatrix> members);

  const ModeConfig& config() const noexcept { return cfg_; }
  const std::vector<PhiMatrix>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const PhiMatrix& operator[](std::size_t alpha) const { return members_.at(alpha); }

  /// Pairwise Tr(Phi_alpha Phi_beta^dagger) = delta within tol.
  bool is_normalized(double tol = 1e-12) const;

 private:
  ModeConfig cfg_;
  std::vector<PhiMatrix> members_;
};

/// Multiplicities (n_0, ..., n_{k-1}) of a chain state; creators commute so order is irrelevant.
struct ChainIndex {
  std::vector<int> multiplicities;

  int total() const;
  bool operator==(const ChainIndex&) const = default;
};

/// All chain indices over k modes with total degree <= max_total, in lexicographic order.
std::vector<ChainIndex> enumerate_chains(std::size_t k, int max_total);

StateVector apply_A_dagger(const PhiMatrix& phi, const StateVector& v);
StateVector apply_A(const PhiMatrix& phi, const StateVector& v);

/// Delta_{alpha beta} v; satisfies [A_alpha, A^dagger_beta] = delta_{alpha beta} - Delta_{alpha beta}.
StateVector apply_delta(const PhiMatrix& phi_alpha, const PhiMatrix& phi_beta, const StateVector& v);

/// prod_alpha (A^dagger_alpha)^{n_alpha} |O>, unnormalized, modes applied in ascending alpha.
/// Throws std::invalid_argument for negative multiplicities, a size mismatch, or total > max_length.
StateVector chain_state(const PhiFamily& family, const ChainIndex& idx, int max_length = kDefaultMaxChainLength);

/// Same chain with creators applied in descending alpha; used to check that creators commute.
StateVector chain_state_reversed(const PhiFamily& family, const ChainIndex& idx,
                                 int max_length = kDefaultMaxChainLength);

/// || (A^dagger)^n |O> ||^2.
double chain_norm_sq(const PhiMatrix& phi, int n, int max_length = kDefaultMaxChainLength);

}  // namespace coboson

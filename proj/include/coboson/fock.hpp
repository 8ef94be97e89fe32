// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Finite fermionic Fock space for two anticommuting species (a and b).
 *
 * Basis states are pairs of occupation bitmasks. Bit mu of the a-mask is
 * the occupation of a_mu, bit nu of the b-mask the occupation of b_nu.
 * The global mode order is a_0 < ... < a_{d_a-1} < b_0 < ... < b_{d_b-1};
 * a ladder operator acting at global position p picks up the sign
 * (-1)^(number of occupied modes at positions < p).
 */

#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "coboson/errors.hpp"

namespace coboson {

using Complex = std::complex<double>;

/// Amplitudes with modulus at or below this are dropped from state vectors.
inline constexpr double kPruneEpsilon = 1e-14;
/// Upper bound on d_a + d_b for sparse state vectors.
inline constexpr int kMaxTotalModes = 16;
/// Upper bound on d_a + d_b for dense full-space operator matrices.
inline constexpr int kMaxDenseModes = 8;

enum class Species { a, b };

class ModeConfig {
 public:
  /// Throws ConfigurationError unless d_a, d_b >= 1 and d_a + d_b <= kMaxTotalModes.
  ModeConfig(int d_a, int d_b);

  int d_a() const noexcept { return d_a_; }
  int d_b() const noexcept { return d_b_; }
  int total_modes() const noexcept { return d_a_ + d_b_; }
  std::size_t dimension() const noexcept { return std::size_t{1} << total_modes(); }

  /// Width of the given species.
  int width(Species s) const noexcept { return s == Species::a ? d_a_ : d_b_; }

  /// Position in the global a-then-b ordering; throws std::out_of_range.
  int global_position(Species s, int mode) const;

  bool operator==(const ModeConfig&) const = default;

 private:
  int d_a_;
  int d_b_;
};

struct FockState {
  std::uint32_t a_occupancy = 0;
  std::uint32_t b_occupancy = 0;

  auto operator<=>(const FockState&) const = default;
};

/// Index of a basis state in the dense 2^(d_a+d_b) representation: a-bits low, b-bits high.
std::size_t basis_index(const ModeConfig& cfg, FockState s) noexcept;
FockState basis_state(const ModeConfig& cfg, std::size_t index) noexcept;

/// Sparse complex superposition of Fock basis states.
class StateVector {
 public:
  using Terms = std::map<FockState, Complex>;

  explicit StateVector(ModeConfig cfg) : cfg_(cfg) {}
  /// Single basis state with the given amplitude; throws ConfigurationError if s has bits outside cfg.
  StateVector(ModeConfig cfg, FockState s, Complex amplitude = 1.0);

  const ModeConfig& config() const noexcept { return cfg_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Complex amplitude(FockState s) const;

  /// Adds c to the amplitude of s without pruning. Callers finish with prune().
  void accumulate(FockState s, Complex c);
  void prune(double epsilon = kPruneEpsilon);

 private:
  ModeConfig cfg_;
  Terms terms_;
};

StateVector vacuum(const ModeConfig& cfg);

/// Applies a^dagger_mode (Species::a) or b^dagger_mode (Species::b). Throws std::out_of_range.
StateVector create(Species species, int mode, const StateVector& v);
/// Adjoint of create(). Throws std::out_of_range.
StateVector annihilate(Species species, int mode, const StateVector& v);

/// sum_s conj(v[s]) w[s]; throws ConfigurationError on mismatched configurations.
Complex inner(const StateVector& v, const StateVector& w);
/// v + c*w, pruned; throws ConfigurationError on mismatched configurations.
StateVector add_scaled(const StateVector& v, Complex c, const StateVector& w);
StateVector scaled(Complex c, const StateVector& v);

double norm_sq(const StateVector& v);
double norm(const StateVector& v);

Eigen::VectorXcd to_dense(const StateVector& v);
StateVector from_dense(const ModeConfig& cfg, const Eigen::VectorXcd& x);

/// Integer matrix of a single ladder operator on the full Fock space (dagger selects creation).
Eigen::SparseMatrix<int> ladder_matrix(const ModeConfig& cfg, Species species, int mode, bool dagger);

/// Dense matrix of a linear map on state vectors, built column by column from basis states.
/// Throws ResourceError when d_a + d_b > kMaxDenseModes.
template <class LinearMap>
Eigen::MatrixXcd dense_operator(const ModeConfig& cfg, LinearMap&& op) {
  if (cfg.total_modes() > kMaxDenseModes) {
    throw ResourceError("dense operator requested for d_a + d_b = " + std::to_string(cfg.total_modes()) +
                        " > " + std::to_string(kMaxDenseModes));
  }
  const auto dim = static_cast<Eigen::Index>(cfg.dimension());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const StateVector image = op(StateVector(cfg, basis_state(cfg, static_cast<std::size_t>(col))));
    for (const auto& [state, amp] : image.terms()) {
      out(static_cast<Eigen::Index>(basis_index(cfg, state)), col) = amp;
    }
  }
  return out;
}

}  // namespace coboson

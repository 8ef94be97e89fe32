// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "coboson/fock.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace coboson {
namespace {

std::uint32_t width_mask(int width) { return (std::uint32_t{1} << width) - 1U; }

std::uint32_t combined_mask(const ModeConfig& cfg, FockState s) {
  return s.a_occupancy | (s.b_occupancy << cfg.d_a());
}

bool conforms(const ModeConfig& cfg, FockState s) {
  return (s.a_occupancy & ~width_mask(cfg.d_a())) == 0 && (s.b_occupancy & ~width_mask(cfg.d_b())) == 0;
}

void require_same_config(const StateVector& v, const StateVector& w, const char* what) {
  if (!(v.config() == w.config())) {
    throw ConfigurationError(std::string(what) + ": mode configurations differ");
  }
}

// Shared body of create/annihilate: flips the target bit when its occupation equals
// `required`, with the Jordan-Wigner parity of all modes below the global position.
StateVector apply_ladder(Species species, int mode, const StateVector& v, bool dagger) {
  const ModeConfig& cfg = v.config();
  const int position = cfg.global_position(species, mode);
  const std::uint32_t below = width_mask(position);
  const std::uint32_t bit = std::uint32_t{1} << mode;

  StateVector out(cfg);
  for (const auto& [state, amp] : v.terms()) {
    const std::uint32_t occ = species == Species::a ? state.a_occupancy : state.b_occupancy;
    const bool occupied = (occ & bit) != 0;
    if (occupied == dagger) continue;

    FockState next = state;
    (species == Species::a ? next.a_occupancy : next.b_occupancy) ^= bit;
    const int parity = std::popcount(combined_mask(cfg, state) & below) & 1;
    out.accumulate(next, parity ? -amp : amp);
  }
  out.prune();
  return out;
}

}  // namespace

ModeConfig::ModeConfig(int d_a, int d_b) : d_a_(d_a), d_b_(d_b) {
  if (d_a < 1 || d_b < 1) {
    throw ConfigurationError("mode counts must be positive (got d_a=" + std::to_string(d_a) +
                             ", d_b=" + std::to_string(d_b) + ")");
  }
  if (d_a + d_b > kMaxTotalModes) {
    throw ConfigurationError("d_a + d_b = " + std::to_string(d_a + d_b) + " exceeds the cap of " +
                             std::to_string(kMaxTotalModes));
  }
}

int ModeConfig::global_position(Species s, int mode) const {
  if (mode < 0 || mode >= width(s)) {
    throw std::out_of_range(std::string(s == Species::a ? "a" : "b") + "-mode " + std::to_string(mode) +
                            " outside [0, " + std::to_string(width(s)) + ")");
  }
  return s == Species::a ? mode : d_a_ + mode;
}

std::size_t basis_index(const ModeConfig& cfg, FockState s) noexcept { return combined_mask(cfg, s); }

FockState basis_state(const ModeConfig& cfg, std::size_t index) noexcept {
  const auto packed = static_cast<std::uint32_t>(index);
  return FockState{packed & width_mask(cfg.d_a()), (packed >> cfg.d_a()) & width_mask(cfg.d_b())};
}

StateVector::StateVector(ModeConfig cfg, FockState s, Complex amplitude) : cfg_(cfg) {
  if (!conforms(cfg_, s)) throw ConfigurationError("Fock state has bits outside the declared mode widths");
  if (std::abs(amplitude) > kPruneEpsilon) terms_.emplace(s, amplitude);
}

Complex StateVector::amplitude(FockState s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? Complex{} : it->second;
}

void StateVector::accumulate(FockState s, Complex c) { terms_[s] += c; }

void StateVector::prune(double epsilon) {
  std::erase_if(terms_, [epsilon](const auto& kv) { return std::abs(kv.second) <= epsilon; });
}

StateVector vacuum(const ModeConfig& cfg) { return StateVector(cfg, FockState{}); }

StateVector create(Species species, int mode, const StateVector& v) {
  return apply_ladder(species, mode, v, /*dagger=*/true);
}

StateVector annihilate(Species species, int mode, const StateVector& v) {
  return apply_ladder(species, mode, v, /*dagger=*/false);
}

Complex inner(const StateVector& v, const StateVector& w) {
  require_same_config(v, w, "inner");
  Complex sum{};
  const auto& small = v.size() <= w.size() ? v.terms() : w.terms();
  const auto& large = v.size() <= w.size() ? w.terms() : v.terms();
  const bool v_is_small = v.size() <= w.size();
  for (const auto& [state, amp] : small) {
    const auto it = large.find(state);
    if (it == large.end()) continue;
    sum += v_is_small ? std::conj(amp) * it->second : std::conj(it->second) * amp;
  }
  return sum;
}

StateVector add_scaled(const StateVector& v, Complex c, const StateVector& w) {
  require_same_config(v, w, "add_scaled");
  StateVector out = v;
  if (c != Complex{}) {
    for (const auto& [state, amp] : w.terms()) out.accumulate(state, c * amp);
  }
  out.prune();
  return out;
}

StateVector scaled(Complex c, const StateVector& v) {
  StateVector out(v.config());
  for (const auto& [state, amp] : v.terms()) out.accumulate(state, c * amp);
  out.prune();
  return out;
}

double norm_sq(const StateVector& v) {
  double sum = 0.0;
  for (const auto& kv : v.terms()) sum += std::norm(kv.second);
  return sum;
}

double norm(const StateVector& v) { return std::sqrt(norm_sq(v)); }

Eigen::VectorXcd to_dense(const StateVector& v) {
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(v.config().dimension()));
  for (const auto& [state, amp] : v.terms()) {
    x(static_cast<Eigen::Index>(basis_index(v.config(), state))) = amp;
  }
  return x;
}

StateVector from_dense(const ModeConfig& cfg, const Eigen::VectorXcd& x) {
  if (static_cast<std::size_t>(x.size()) != cfg.dimension()) {
    throw ConfigurationError("dense vector length does not match 2^(d_a+d_b)");
  }
  StateVector out(cfg);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (std::abs(x(i)) > kPruneEpsilon) out.accumulate(basis_state(cfg, static_cast<std::size_t>(i)), x(i));
  }
  return out;
}

Eigen::SparseMatrix<int> ladder_matrix(const ModeConfig& cfg, Species species, int mode, bool dagger) {
  const auto dim = static_cast<Eigen::Index>(cfg.dimension());
  std::vector<Eigen::Triplet<int>> entries;
  entries.reserve(static_cast<std::size_t>(dim) / 2);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const StateVector basis(cfg, basis_state(cfg, static_cast<std::size_t>(col)));
    const StateVector image = dagger ? create(species, mode, basis) : annihilate(species, mode, basis);
    for (const auto& [state, amp] : image.terms()) {
      entries.emplace_back(static_cast<Eigen::Index>(basis_index(cfg, state)), col,
                           static_cast<int>(std::lround(amp.real())));
    }
  }
  Eigen::SparseMatrix<int> m(dim, dim);
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

}  // namespace coboson

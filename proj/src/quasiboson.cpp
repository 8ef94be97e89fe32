// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "coboson/quasiboson.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace coboson {
namespace {

void require_shape(const PhiMatrix& phi, const StateVector& v, const char* what) {
  if (!(phi.config() == v.config())) {
    throw ConfigurationError(std::string(what) + ": Phi matrix and state vector use different mode configurations");
  }
}

void accumulate_scaled(StateVector& out, Complex c, const StateVector& v) {
  if (c == Complex{}) return;
  for (const auto& [state, amp] : v.terms()) out.accumulate(state, c * amp);
}

void check_chain_index(const PhiFamily& family, const ChainIndex& idx, int max_length) {
  if (idx.multiplicities.size() != family.size()) {
    throw std::invalid_argument("chain index has " + std::to_string(idx.multiplicities.size()) +
                                " entries for a family of " + std::to_string(family.size()) + " modes");
  }
  for (int n : idx.multiplicities) {
    if (n < 0) throw std::invalid_argument("chain multiplicities must be non-negative");
  }
  if (idx.total() > max_length) {
    throw std::invalid_argument("chain degree " + std::to_string(idx.total()) + " exceeds the maximum of " +
                                std::to_string(max_length));
  }
}

StateVector power_apply(const PhiMatrix& phi, int times, StateVector v) {
  for (int i = 0; i < times && !v.is_zero(); ++i) v = apply_A_dagger(phi, v);
  return v;
}

void enumerate_into(std::vector<ChainIndex>& out, std::vector<int>& current, std::size_t pos, int remaining) {
  if (pos == current.size()) {
    out.push_back(ChainIndex{current});
    return;
  }
  for (int n = 0; n <= remaining; ++n) {
    current[pos] = n;
    enumerate_into(out, current, pos + 1, remaining - n);
  }
  current[pos] = 0;
}

}  // namespace

PhiMatrix::PhiMatrix(ModeConfig cfg, Eigen::MatrixXcd entries) : cfg_(cfg), entries_(std::move(entries)) {
  if (entries_.rows() != cfg_.d_a() || entries_.cols() != cfg_.d_b()) {
    throw ConfigurationError("Phi matrix is " + std::to_string(entries_.rows()) + "x" +
                             std::to_string(entries_.cols()) + ", expected " + std::to_string(cfg_.d_a()) + "x" +
                             std::to_string(cfg_.d_b()));
  }
}

bool PhiMatrix::is_normalized(double tol) const { return std::abs(trace_norm_sq() - 1.0) <= tol; }

PhiFamily::PhiFamily(ModeConfig cfg, std::vector<PhiMatrix> members) : cfg_(cfg), members_(std::move(members)) {
  for (const auto& phi : members_) {
    if (!(phi.config() == cfg_)) throw ConfigurationError("family members must share one mode configuration");
  }
}

bool PhiFamily::is_normalized(double tol) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = 0; j < members_.size(); ++j) {
      const Complex overlap = (members_[i].entries() * members_[j].entries().adjoint()).trace();
      if (std::abs(overlap - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

int ChainIndex::total() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), 0); }

std::vector<ChainIndex> enumerate_chains(std::size_t k, int max_total) {
  std::vector<ChainIndex> out;
  if (max_total < 0) return out;
  std::vector<int> current(k, 0);
  enumerate_into(out, current, 0, max_total);
  return out;
}

StateVector apply_A_dagger(const PhiMatrix& phi, const StateVector& v) {
  require_shape(phi, v, "apply_A_dagger");
  const ModeConfig& cfg = v.config();
  StateVector out(cfg);
  for (int nu = 0; nu < cfg.d_b(); ++nu) {
    const StateVector with_b = create(Species::b, nu, v);
    if (with_b.is_zero()) continue;
    for (int mu = 0; mu < cfg.d_a(); ++mu) {
      if (phi(mu, nu) == Complex{}) continue;
      accumulate_scaled(out, phi(mu, nu), create(Species::a, mu, with_b));
    }
  }
  out.prune();
  return out;
}

StateVector apply_A(const PhiMatrix& phi, const StateVector& v) {
  require_shape(phi, v, "apply_A");
  const ModeConfig& cfg = v.config();
  StateVector out(cfg);
  for (int mu = 0; mu < cfg.d_a(); ++mu) {
    const StateVector without_a = annihilate(Species::a, mu, v);
    if (without_a.is_zero()) continue;
    for (int nu = 0; nu < cfg.d_b(); ++nu) {
      if (phi(mu, nu) == Complex{}) continue;
      accumulate_scaled(out, std::conj(phi(mu, nu)), annihilate(Species::b, nu, without_a));
    }
  }
  out.prune();
  return out;
}

StateVector apply_delta(const PhiMatrix& phi_alpha, const PhiMatrix& phi_beta, const StateVector& v) {
  require_shape(phi_alpha, v, "apply_delta");
  require_shape(phi_beta, v, "apply_delta");
  const ModeConfig& cfg = v.config();
  const Eigen::MatrixXcd& pa = phi_alpha.entries();
  const Eigen::MatrixXcd& pb = phi_beta.entries();
  // a-part coefficient of a^dagger_{mu'} a_mu is (Phi_beta Phi_alpha^dagger)[mu', mu];
  // b-part coefficient of b^dagger_{nu'} b_nu is (Phi_alpha^dagger Phi_beta)[nu, nu'].
  const Eigen::MatrixXcd a_coeff = pb * pa.adjoint();
  const Eigen::MatrixXcd b_coeff = pa.adjoint() * pb;

  StateVector out(cfg);
  for (int mu = 0; mu < cfg.d_a(); ++mu) {
    const StateVector lowered = annihilate(Species::a, mu, v);
    if (lowered.is_zero()) continue;
    for (int mu_p = 0; mu_p < cfg.d_a(); ++mu_p) {
      accumulate_scaled(out, a_coeff(mu_p, mu), create(Species::a, mu_p, lowered));
    }
  }
  for (int nu = 0; nu < cfg.d_b(); ++nu) {
    const StateVector lowered = annihilate(Species::b, nu, v);
    if (lowered.is_zero()) continue;
    for (int nu_p = 0; nu_p < cfg.d_b(); ++nu_p) {
      accumulate_scaled(out, b_coeff(nu, nu_p), create(Species::b, nu_p, lowered));
    }
  }
  out.prune();
  return out;
}

StateVector chain_state(const PhiFamily& family, const ChainIndex& idx, int max_length) {
  check_chain_index(family, idx, max_length);
  StateVector v = vacuum(family.config());
  for (std::size_t alpha = 0; alpha < family.size(); ++alpha) {
    v = power_apply(family[alpha], idx.multiplicities[alpha], std::move(v));
  }
  return v;
}

StateVector chain_state_reversed(const PhiFamily& family, const ChainIndex& idx, int max_length) {
  check_chain_index(family, idx, max_length);
  StateVector v = vacuum(family.config());
  for (std::size_t alpha = family.size(); alpha-- > 0;) {
    v = power_apply(family[alpha], idx.multiplicities[alpha], std::move(v));
  }
  return v;
}

double chain_norm_sq(const PhiMatrix& phi, int n, int max_length) {
  if (n < 0 || n > max_length) {
    throw std::invalid_argument("chain length " + std::to_string(n) + " outside [0, " + std::to_string(max_length) +
                                "]");
  }
  return norm_sq(power_apply(phi, n, vacuum(phi.config())));
}

}  // namespace coboson

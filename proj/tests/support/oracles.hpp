// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only reference constructions. Nothing here calls the sparse ladder
// operators under test: fermion matrices come from explicit Kronecker
// products, composite operators from dense sums over those matrices.

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <complex>
#include <random>

#include "coboson/fock.hpp"

namespace coboson::oracle {

/// Jordan-Wigner annihilator for global position p out of n_modes, with position 0 the lowest index bit.
inline Eigen::MatrixXd jw_annihilator(int p, int n_modes) {
  Eigen::Matrix2d lower;
  lower << 0, 1, 0, 0;  // |1> -> |0> in the (|0>, |1>) basis
  Eigen::Matrix2d parity;
  parity << 1, 0, 0, -1;
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
  // Kronecker factors from the highest position down to position 0.
  for (int q = n_modes - 1; q >= 0; --q) {
    Eigen::MatrixXd factor = q == p ? Eigen::MatrixXd(lower) : q < p ? Eigen::MatrixXd(parity)
                                                                      : Eigen::MatrixXd(Eigen::Matrix2d::Identity());
    out = Eigen::kroneckerProduct(out, factor).eval();
  }
  return out;
}

inline Eigen::MatrixXcd a_lower(const ModeConfig& cfg, int mu) {
  return jw_annihilator(mu, cfg.total_modes()).cast<std::complex<double>>();
}

inline Eigen::MatrixXcd b_lower(const ModeConfig& cfg, int nu) {
  return jw_annihilator(cfg.d_a() + nu, cfg.total_modes()).cast<std::complex<double>>();
}

/// sum_{mu,nu} Phi[mu,nu] a^dagger_mu b^dagger_nu from Kronecker matrices.
inline Eigen::MatrixXcd composite_creator(const ModeConfig& cfg, const Eigen::MatrixXcd& phi) {
  const auto dim = static_cast<Eigen::Index>(cfg.dimension());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (int mu = 0; mu < cfg.d_a(); ++mu) {
    for (int nu = 0; nu < cfg.d_b(); ++nu) {
      out += phi(mu, nu) * a_lower(cfg, mu).adjoint() * b_lower(cfg, nu).adjoint();
    }
  }
  return out;
}

/// The deviation operator written term by term from its defining double sums.
inline Eigen::MatrixXcd deviation(const ModeConfig& cfg, const Eigen::MatrixXcd& pa, const Eigen::MatrixXcd& pb) {
  const auto dim = static_cast<Eigen::Index>(cfg.dimension());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (int mu = 0; mu < cfg.d_a(); ++mu) {
    for (int nu = 0; nu < cfg.d_b(); ++nu) {
      for (int mu_p = 0; mu_p < cfg.d_a(); ++mu_p) {
        out += std::conj(pa(mu, nu)) * pb(mu_p, nu) * a_lower(cfg, mu_p).adjoint() * a_lower(cfg, mu);
      }
      for (int nu_p = 0; nu_p < cfg.d_b(); ++nu_p) {
        out += std::conj(pa(mu, nu)) * pb(mu, nu_p) * b_lower(cfg, nu_p).adjoint() * b_lower(cfg, nu);
      }
    }
  }
  return out;
}

/// Pseudorandom state with every basis amplitude populated (std::mt19937 based, test-only).
inline StateVector random_state(const ModeConfig& cfg, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::VectorXcd x(static_cast<Eigen::Index>(cfg.dimension()));
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = {dist(gen), dist(gen)};
  return from_dense(cfg, x);
}

inline Eigen::MatrixXcd random_matrix(int rows, int cols, unsigned seed, bool normalize = true) {
  std::mt19937 gen(seed);
  std::normal_distribution<double> dist;
  Eigen::MatrixXcd m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = {dist(gen), dist(gen)};
  }
  if (normalize) m /= m.norm();
  return m;
}

}  // namespace coboson::oracle

// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <Eigen/SVD>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "cli.hpp"
#include "coboson/conditions.hpp"
#include "coboson/deformation.hpp"
#include "coboson/fock.hpp"
#include "coboson/io.hpp"
#include "coboson/solver.hpp"

using namespace coboson;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

std::vector<FamilySpec> criterion4_specs() {
  std::vector<FamilySpec> specs;
  for (int d_a = 1; d_a <= 6; ++d_a) {
    for (int d_b = 1; d_b <= 6; ++d_b) {
      for (int k = 1; k <= 2; ++k) {
        for (int m = 1; m <= 3; ++m) {
          if (k * m > std::min(d_a, d_b)) continue;
          specs.push_back({d_a, d_b, k, m, static_cast<std::uint64_t>(1000 * d_a + 100 * d_b + 10 * k + m)});
        }
      }
    }
  }
  return specs;
}

// 1. Anticommutators of the sparse integer ladder matrices on cfg(4,4).
Outcome fermion_algebra() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const ModeConfig cfg(4, 4);
  const auto dim = static_cast<Eigen::Index>(cfg.dimension());
  std::vector<Eigen::SparseMatrix<int>> lower;
  std::vector<Eigen::SparseMatrix<int>> raise;
  for (Species s : {Species::a, Species::b}) {
    for (int mode = 0; mode < 4; ++mode) {
      lower.push_back(ladder_matrix(cfg, s, mode, false));
      raise.push_back(ladder_matrix(cfg, s, mode, true));
    }
  }
  Eigen::SparseMatrix<int> identity(dim, dim);
  identity.setIdentity();
  auto is_exactly = [](Eigen::SparseMatrix<int> m, const Eigen::SparseMatrix<int>& target) {
    Eigen::SparseMatrix<int> diff = m - target;
    diff.prune(0, 0);
    return diff.nonZeros() == 0;
  };
  const Eigen::SparseMatrix<int> zero(dim, dim);
  int relations = 0;
  for (std::size_t p = 0; p < lower.size(); ++p) {
    for (std::size_t q = 0; q < lower.size(); ++q) {
      const std::string pq = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      o.require(is_exactly(lower[p] * raise[q] + raise[q] * lower[p], p == q ? identity : zero), "{c, c^dagger} at " + pq);
      o.require(is_exactly(lower[p] * lower[q] + lower[q] * lower[p], zero), "{c, c} at " + pq);
      o.require(is_exactly(raise[p] * raise[q] + raise[q] * raise[p], zero), "{c^dagger, c^dagger} at " + pq);
      relations += 3;
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds < 5.0, "runtime " + std::to_string(seconds) + " s");
  if (o.passed) o.detail = std::to_string(relations) + " integer identities, " + sci(seconds) + " s";
  return o;
}

// 2. Closed form against both recurrences, exactly and in doubles.
Outcome closed_form_recurrences() {
  Outcome o;
  const std::vector<Rational> fs{Rational(2), Rational(1), Rational(2, 3), Rational(1, 2), Rational(2, 5)};
  double worst_double = 0.0;
  for (const Rational& f : fs) {
    const double fd = static_cast<double>(f);
    std::vector<Rational> exact;
    std::vector<double> approx;
    for (int n = 0; n <= 21; ++n) {
      exact.push_back(phi_quadratic_t<Rational>(n, f));
      approx.push_back(phi_quadratic(n, fd));
    }
    for (int n = 2; n <= 20; ++n) {
      const auto un = static_cast<std::size_t>(n);
      const std::string where = "f=" + f.str() + ", n=" + std::to_string(n);
      o.require(binomial_recurrence_residual<Rational>(std::span<const Rational>(exact), n + 1) == 0,
                "exact binomial recurrence at " + where);
      o.require(phi_three_term_t<Rational>(exact[un - 1], exact[un], n) == exact[un + 1],
                "exact three-term recurrence at " + where);
      const double scale = std::max(1.0, std::abs(approx[un + 1]));
      const double eq16 = std::abs(binomial_recurrence_residual<double>(std::span<const double>(approx), n + 1)) / scale;
      const double three = std::abs(phi_three_term(approx[un - 1], approx[un], n) - approx[un + 1]) / scale;
      worst_double = std::max({worst_double, eq16, three});
    }
  }
  o.require(worst_double <= 1e-9, "double relative residual " + sci(worst_double));

  // n and n^2 each satisfy the binomial recurrence.
  for (int power = 1; power <= 2; ++power) {
    std::vector<Rational> values;
    for (int n = 0; n <= 21; ++n) values.push_back(power == 1 ? Rational(n) : Rational(n * n));
    for (int n = 3; n <= 21; ++n) {
      o.require(binomial_recurrence_residual<Rational>(std::span<const Rational>(values), n) == 0,
                "n^" + std::to_string(power) + " at n=" + std::to_string(n));
    }
  }
  if (o.passed) o.detail = "5 exact f values, worst double relative residual " + sci(worst_double);
  return o;
}

// 3. Energy recurrence.
Outcome energy_recurrence() {
  Outcome o;
  double worst = 0.0;
  for (double f : {0.0, 1.0, 0.4}) {
    const VerificationReport r = check_energy_recurrence(StructureFunction::quadratic(f), 20, 1e-10);
    worst = std::max(worst, r.checks().front().max_residual);
    o.require(r.overall_passed(), "f=" + std::to_string(f) + ": " + r.checks().front().context);
  }
  if (o.passed) o.detail = "max residual " + sci(worst);
  return o;
}

// 4. Solver output passes the matrix checks with the expected rank.
Outcome solver_round_trip() {
  Outcome o;
  double worst = 0.0;
  int count = 0;
  for (const FamilySpec& spec : criterion4_specs()) {
    const PhiFamily family = construct_family(spec);
    const double f = rank_to_f(spec.m);
    VerificationReport r = check_normalization(family, 1e-12);
    r.merge(check_product_condition(family, 1e-12));
    for (const PhiMatrix& phi : family.members()) {
      r.merge(check_cubic_condition(phi, f, 1e-12));
      const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(phi.entries()).singularValues();
      const auto rank = std::count_if(sv.begin(), sv.end(), [](double s) { return s > kRankTolerance; });
      o.require(rank == spec.m, "rank " + std::to_string(rank) + " != m for spec (" + std::to_string(spec.d_a) + "," +
                                    std::to_string(spec.d_b) + "," + std::to_string(spec.k) + "," +
                                    std::to_string(spec.m) + ")");
    }
    for (const CheckResult& c : r.checks()) worst = std::max(worst, c.max_residual);
    o.require(r.overall_passed(), "matrix checks fail for spec (" + std::to_string(spec.d_a) + "," +
                                      std::to_string(spec.d_b) + "," + std::to_string(spec.k) + "," +
                                      std::to_string(spec.m) + ")");
    ++count;
  }
  if (o.passed) o.detail = std::to_string(count) + " feasible specs, max residual " + sci(worst);
  return o;
}

// 5. Full realization of the quadratic law for spec(4,4,2,2).
Outcome full_realization() {
  Outcome o;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const PhiFamily family = construct_family(FamilySpec{4, 4, 2, 2, seed});
    const VerificationReport r = verify_realization(family, StructureFunction::quadratic(1.0), 3, 1e-10);
    for (const char* name : {"independence", "commutator_eigenvalue", "delta_eigenvalue", "lowering", "norm_law"}) {
      const CheckResult* c = r.find(name);
      o.require(c != nullptr && c->passed, std::string(name) + " (seed " + std::to_string(seed) + ")");
      if (c != nullptr) worst = std::max(worst, c->max_residual);
    }
    for (const PhiMatrix& phi : family.members()) {
      StateVector v = vacuum(family.config());
      for (int i = 0; i < 3; ++i) v = apply_A_dagger(phi, v);
      o.require(norm(v) <= 1e-10, "occupancy cutoff ||(A^dagger)^3|O>|| = " + sci(norm(v)));
    }
  }
  if (o.passed) o.detail = "3 seeds, degree <= 3, max residual " + sci(worst);
  return o;
}

// 6. Distinct modes commute on chain states.
Outcome mode_independence() {
  Outcome o;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const PhiFamily family = construct_family(FamilySpec{4, 4, 2, 2, seed});
    for (const ChainIndex& idx : enumerate_chains(family.size(), 3)) {
      const StateVector chain = chain_state(family, idx);
      for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t b = 0; b < family.size(); ++b) {
          if (a == b) continue;
          const StateVector comm = add_scaled(apply_A(family[a], apply_A_dagger(family[b], chain)), -1.0,
                                              apply_A_dagger(family[b], apply_A(family[a], chain)));
          worst = std::max(worst, norm(comm));
        }
      }
    }
  }
  o.require(worst <= 1e-10, "max ||[A_a, A^dagger_b] chain|| = " + sci(worst));
  if (o.passed) o.detail = "max ||[A_a, A^dagger_b] chain|| = " + sci(worst);
  return o;
}

// 7. No sample obeys the Arik-Coon relation non-trivially.
Outcome arik_coon_nogo() {
  Outcome o;
  std::vector<PhiMatrix> samples;
  GaussianSource rng(20260418);
  const ModeConfig cfg(4, 4);
  for (int i = 0; i < 100; ++i) samples.push_back(random_normalized_phi(cfg, rng));
  for (const FamilySpec& spec : criterion4_specs()) {
    const PhiFamily family = construct_family(spec);
    for (const PhiMatrix& phi : family.members()) samples.push_back(phi);
  }
  int nilpotent = 0;
  int inconsistent = 0;
  double min_r2 = std::numeric_limits<double>::infinity();
  for (double q : {0.5, 0.9, 1.5}) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const NogoSample s = ac_nogo_sample(samples[i], q, 1e-10, 1e-6);
      o.require(s.satisfies_disjunction(), "sample " + std::to_string(i) + " at q=" + std::to_string(q) +
                                               " obeys the relation: r2=" + sci(s.r2) + ", s2=" + sci(s.s2));
      if (s.nilpotent) {
        ++nilpotent;
      } else {
        ++inconsistent;
        min_r2 = std::min(min_r2, s.r2);
      }
    }
  }
  if (o.passed) {
    o.detail = std::to_string(nilpotent + inconsistent) + " probes: " + std::to_string(inconsistent) +
               " inconsistent (min r2 " + sci(min_r2) + "), " + std::to_string(nilpotent) + " nilpotent";
  }
  return o;
}

// 8. Deliberately broken inputs are rejected.
Outcome negative_controls() {
  Outcome o;
  const PhiFamily family = construct_family(FamilySpec{4, 4, 2, 2, 1});
  const PhiMatrix stretched(family.config(), family[0].entries() * 1.01);
  const VerificationReport cubic = check_cubic_condition(stretched, 1.0);
  const double cubic_residual = cubic.find("cubic_condition")->max_residual;
  o.require(!cubic.overall_passed() && cubic_residual >= 1e-3, "1% scaled block: cubic residual " + sci(cubic_residual));

  const PhiFamily copied(family.config(), {family[0], family[0]});
  o.require(!check_normalization(copied).overall_passed(), "Phi_1 := Phi_0 passes normalization");

  const VerificationReport shifted = verify_realization(family, StructureFunction::quadratic(1.1), 3);
  const CheckResult* comm = shifted.find("commutator_eigenvalue");
  o.require(comm != nullptr && !comm->passed, "f + 0.1 passes commutator_eigenvalue");
  if (o.passed) {
    o.detail = "cubic " + sci(cubic_residual) + ", normalization " +
               sci(check_normalization(copied).checks().front().max_residual) + ", commutator " +
               sci(comm->max_residual);
  }
  return o;
}

// 9. Dense operator identities.
Outcome operator_identities() {
  Outcome o;
  double worst = 0.0;
  for (int m = 1; m <= 3; ++m) {
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      const PhiFamily family = construct_family(FamilySpec{3, 3, 1, m, seed});
      const VerificationReport r = check_operator_identities(family[0], 3, 1e-11);
      for (const CheckResult& c : r.checks()) {
        worst = std::max(worst, c.max_residual);
        o.require(c.passed, c.name + " for m=" + std::to_string(m) + ": " + sci(c.max_residual));
      }
    }
  }
  if (o.passed) o.detail = "m = 1..3, n = 1..3, max residual " + sci(worst);
  return o;
}

// 10. The command-line contract.
Outcome cli_contract() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("coboson_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto run = [](const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run(args, out, err);
    if (out_text != nullptr) *out_text = out.str();
    return status;
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };

  const fs::path phi = dir / "phi.json";
  const fs::path report = dir / "report.json";
  o.require(run({"construct", "4", "4", "2", "2", "--seed", "7", "--out", phi.string()}) == cli::kPass,
            "construct did not exit 0");
  o.require(run({"verify", phi.string(), "--m", "2", "--out", report.string()}) == cli::kPass,
            "verify did not exit 0");
  o.require(run({"verify", phi.string()}) == cli::kPass, "verify --auto-f did not exit 0");
  o.require(run({"construct", "3", "3", "2", "2"}) == cli::kInfeasible, "infeasible spec did not exit 2");

  std::string first;
  std::string second;
  run({"construct", "5", "6", "2", "2", "--seed", "99"}, &first);
  run({"construct", "5", "6", "2", "2", "--seed", "99"}, &second);
  o.require(!first.empty() && first == second, "construct output differs under a fixed seed");
  o.require(slurp(phi) == [&] {
    std::string again;
    run({"construct", "4", "4", "2", "2", "--seed", "7"}, &again);
    return again;
  }(), "file and stdout output differ");

  try {
    const std::string text = slurp(report);
    ReportMetadata meta;
    const VerificationReport parsed = report_from_json(nlohmann::json::parse(text), &meta);
    o.require(dump_document(report_to_json(parsed, meta)) == text, "report JSON does not round-trip byte for byte");
    o.require(parsed.overall_passed(), "round-tripped report does not pass");
  } catch (const std::exception& e) {
    o.require(false, std::string("report parse failed: ") + e.what());
  }
  fs::remove_all(dir);
  if (o.passed) o.detail = "exit codes 0/0/2, byte-identical construct, report round trip";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fermion algebra exactness", fermion_algebra},
      {"closed form vs recurrences", closed_form_recurrences},
      {"energy quasi-Fibonacci recurrence", energy_recurrence},
      {"solver/checker round trip", solver_round_trip},
      {"full realization", full_realization},
      {"independence of modes", mode_independence},
      {"Arik-Coon no-go", arik_coon_nogo},
      {"negative controls", negative_controls},
      {"operator identities", operator_identities},
      {"CLI contract", cli_contract},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s [%2zu] %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>

#include "coboson/conditions.hpp"
#include "coboson/deformation.hpp"
#include "coboson/io.hpp"
#include "coboson/solver.hpp"

#ifndef COBOSON_VERSION
#define COBOSON_VERSION "0.0.0"
#endif

namespace coboson::cli {
namespace {

struct ConstructArgs {
  int d_a = 0;
  int d_b = 0;
  int k = 0;
  int m = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct VerifyArgs {
  std::string phi_path;
  std::optional<int> m;
  bool auto_f = false;
  int n_max = 4;
  double tolerance = kDefaultTolerance;
  std::string out;
};

struct TableArgs {
  std::string family;
  double parameter = 0.0;
  int n_max = 4;
};

struct NogoArgs {
  std::string family_path;
  std::vector<std::uint64_t> random;  // count, d, seed
  double q = 0.0;
  double tolerance = kDefaultTolerance;
  std::string out;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

void emit_report(const VerificationReport& report, std::optional<std::uint64_t> seed, const std::string& path,
                 std::ostream& out) {
  const ReportMetadata meta{COBOSON_VERSION, seed, current_timestamp()};
  emit(dump_document(report_to_json(report, meta)), path, out);
}

int status_of(const VerificationReport& report) { return report.overall_passed() ? kPass : kVerificationFailed; }

/// Renames "name" to "name[alpha]" so per-mode checks stay distinguishable in merged reports.
VerificationReport tagged(const VerificationReport& report, std::size_t alpha) {
  VerificationReport out;
  for (const CheckResult& c : report.checks()) {
    out.add_verdict(c.name + "[" + std::to_string(alpha) + "]", c.max_residual, c.tolerance, c.passed, c.context);
  }
  return out;
}

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const PhiFamily family = construct_family(FamilySpec{a.d_a, a.d_b, a.k, a.m, a.seed});
  emit(dump_document(phi_family_to_json(family)), a.out, out);
  return kPass;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const PhiFamily family = read_phi_file(a.phi_path);
  VerificationReport report;

  double f = 0.0;
  if (a.m) {
    f = rank_to_f(*a.m);
  } else {
    std::vector<double> per_mode;
    for (const PhiMatrix& phi : family.members()) per_mode.push_back(implied_deformation(phi));
    f = per_mode.front();
    double spread = 0.0;
    for (double x : per_mode) spread = std::max(spread, std::abs(x - f));
    std::ostringstream ctx;
    ctx.precision(17);
    ctx << "f = 2 Tr((Phi^dagger Phi)^2) from mode 0: " << f;
    if (spread > a.tolerance) {
      ctx << "; f mismatch across modes";
      err << "f mismatch across modes (spread " << spread << ")\n";
    }
    report.add("f_consistency", spread, a.tolerance, ctx.str());
  }

  report.merge(check_normalization(family, a.tolerance));
  report.merge(check_product_condition(family, a.tolerance));
  for (std::size_t alpha = 0; alpha < family.size(); ++alpha) {
    report.merge(tagged(check_cubic_condition(family[alpha], f, a.tolerance), alpha));
  }
  report.merge(verify_realization(family, StructureFunction::quadratic(f), a.n_max, a.tolerance));

  emit_report(report, std::nullopt, a.out, out);
  if (!report.overall_passed()) {
    for (const CheckResult& c : report.checks()) {
      if (!c.passed) err << "FAILED " << c.name << ": residual " << c.max_residual << " > " << c.tolerance << "\n";
    }
  }
  return status_of(report);
}

std::string residual_cell(std::optional<double> r) {
  if (!r) return "-";
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << *r;
  return os.str();
}

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream&) {
  const StructureFunction sf = a.family == "quadratic"  ? StructureFunction::quadratic(a.parameter)
                               : a.family == "ac"       ? StructureFunction::arik_coon(a.parameter)
                                                        : StructureFunction::undeformed();
  // phi up to n_max + 2 so that E(n_max) is available.
  std::vector<double> phi;
  for (int n = 0; n <= a.n_max + 1; ++n) phi.push_back(sf(n));
  std::vector<double> e;
  for (int n = 0; n <= a.n_max; ++n) e.push_back(0.5 * (phi[static_cast<std::size_t>(n) + 1] + phi[static_cast<std::size_t>(n)]));

  constexpr int w = 24;
  out << std::left << std::setw(6) << "n" << std::setw(w) << "phi(n)" << std::setw(w) << "E(n)" << std::setw(16)
      << "eq16_residual" << std::setw(20) << "three_term_residual" << "energy_rec_residual" << "\n";
  for (int n = 0; n <= a.n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    std::optional<double> eq16;
    std::optional<double> three;
    std::optional<double> energy_rec;
    if (n >= 3) {
      eq16 = std::abs(binomial_recurrence_residual<double>(std::span<const double>(phi.data(), un + 1), n));
      three = std::abs(phi[un] - phi_three_term(phi[un - 2], phi[un - 1], n - 1));
    }
    if (n >= 2) energy_rec = std::abs(e[un] - energy_recurrence_rhs<double>(e[un - 2], e[un - 1], n - 1));

    std::ostringstream phi_s;
    std::ostringstream e_s;
    phi_s << std::setprecision(15) << phi[un];
    e_s << std::setprecision(15) << e[un];
    out << std::left << std::setw(6) << n << std::setw(w) << phi_s.str() << std::setw(w) << e_s.str() << std::setw(16)
        << residual_cell(eq16) << std::setw(20) << residual_cell(three) << residual_cell(energy_rec) << "\n";
  }
  return kPass;
}

int cmd_nogo(const NogoArgs& a, std::ostream& out, std::ostream& err) {
  if (a.q == 1.0) {
    err << "q=1 is not a deformation\n";
    return kUsageOrIo;
  }
  if (a.family_path.empty() == a.random.empty()) {
    err << "nogo: give exactly one of --family <path> or --random <count> <d> <seed>\n";
    return kUsageOrIo;
  }

  VerificationReport report;
  std::optional<std::uint64_t> seed;
  double min_off_nilpotent = std::numeric_limits<double>::infinity();
  std::size_t off_nilpotent = 0;

  auto record = [&](const PhiMatrix& phi, const std::string& label) {
    const NogoSample s = ac_nogo_sample(phi, a.q, a.tolerance);
    std::ostringstream ctx;
    ctx << (s.nilpotent ? "nilpotency branch" : s.inconsistent ? "inconsistency branch" : "AC relation holds non-trivially")
        << ": r2=" << s.r2 << ", s2=" << s.s2;
    report.add_verdict(label, s.r2, kIncompatibilityFloor, s.satisfies_disjunction(), ctx.str());
    if (!s.nilpotent) {
      ++off_nilpotent;
      min_off_nilpotent = std::min(min_off_nilpotent, s.r2);
    }
  };

  if (!a.family_path.empty()) {
    const PhiFamily family = read_phi_file(a.family_path);
    for (std::size_t alpha = 0; alpha < family.size(); ++alpha) record(family[alpha], "nogo[" + std::to_string(alpha) + "]");
  } else {
    const std::uint64_t count = a.random[0];
    const auto d = static_cast<int>(a.random[1]);
    seed = a.random[2];
    const ModeConfig cfg(d, d);
    GaussianSource rng(*seed);
    for (std::uint64_t i = 0; i < count; ++i) record(random_normalized_phi(cfg, rng), "sample[" + std::to_string(i) + "]");
  }

  if (off_nilpotent > 0) {
    report.add_verdict("min_off_nilpotent_residual", min_off_nilpotent, kIncompatibilityFloor,
                       min_off_nilpotent > kIncompatibilityFloor,
                       "minimum r2 over " + std::to_string(off_nilpotent) + " non-nilpotent sample(s), q=" +
                           std::to_string(a.q));
  }
  emit_report(report, seed, a.out, out);
  return status_of(report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-fermion composite quasi-boson verification tool", "coboson"};
  app.require_subcommand(1);
  app.set_version_flag("--version", COBOSON_VERSION);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build an admissible Phi family and write it as JSON");
  construct->add_option("d_a", construct_args.d_a, "number of a-fermion modes")->required();
  construct->add_option("d_b", construct_args.d_b, "number of b-fermion modes")->required();
  construct->add_option("k", construct_args.k, "number of quasi-boson modes")->required();
  construct->add_option("m", construct_args.m, "common rank of every Phi")->required();
  construct->add_option("--seed", construct_args.seed, "generator seed")->default_val(0);
  construct->add_option("--out", construct_args.out, "output path (default stdout)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check the matrix conditions and the realization on chain states");
  verify->add_option("phi_path", verify_args.phi_path, "Phi family JSON file")->required()->check(CLI::ExistingFile);
  auto* m_opt = verify->add_option("--m", verify_args.m, "common rank; uses f = 2/m");
  auto* auto_opt = verify->add_flag("--auto-f", verify_args.auto_f, "estimate f = 2 Tr((Phi^dagger Phi)^2) (default)");
  m_opt->excludes(auto_opt);
  verify->add_option("--n-max", verify_args.n_max, "maximum chain degree")->default_val(4)->check(CLI::Range(0, kDefaultMaxChainLength));
  verify->add_option("--tolerance", verify_args.tolerance, "residual tolerance")->default_val(kDefaultTolerance);
  verify->add_option("--out", verify_args.out, "report path (default stdout)");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Tabulate phi(n), E(n) and recurrence residuals");
  table->add_option("family", table_args.family, "quadratic | ac | undeformed")
      ->required()
      ->check(CLI::IsMember({"quadratic", "ac", "undeformed"}));
  table->add_option("parameter", table_args.parameter, "f (quadratic) or q (ac); ignored for undeformed")->required();
  table->add_option("n_max", table_args.n_max, "largest n")->default_val(4)->check(CLI::Range(0, 1000));

  NogoArgs nogo_args;
  auto* nogo = app.add_subcommand("nogo", "Probe the Arik-Coon relation on two-quantum states");
  auto* fam_opt = nogo->add_option("--family", nogo_args.family_path, "Phi family JSON file")->check(CLI::ExistingFile);
  auto* rnd_opt = nogo->add_option("--random", nogo_args.random, "count d seed: random normalized d x d matrices")
                      ->expected(3);
  fam_opt->excludes(rnd_opt);
  nogo->add_option("--q", nogo_args.q, "deformation parameter q != 1")->required();
  nogo->add_option("--tolerance", nogo_args.tolerance, "nilpotency tolerance")->default_val(kDefaultTolerance);
  nogo->add_option("--out", nogo_args.out, "report path (default stdout)");

  std::vector<const char*> argv{"coboson"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageOrIo;
  }

  try {
    if (construct->parsed()) return cmd_construct(construct_args, out);
    if (verify->parsed()) return cmd_verify(verify_args, out, err);
    if (table->parsed()) return cmd_table(table_args, out, err);
    if (nogo->parsed()) return cmd_nogo(nogo_args, out, err);
  } catch (const FeasibilityError& e) {
    err << e.what() << "\n";
    return kInfeasible;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageOrIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageOrIo;
  }
  return kUsageOrIo;
}

}  // namespace coboson::cli

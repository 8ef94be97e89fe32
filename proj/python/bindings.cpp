// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "coboson/conditions.hpp"
#include "coboson/deformation.hpp"
#include "coboson/quasiboson.hpp"
#include "coboson/solver.hpp"

namespace py = pybind11;
using namespace coboson;

namespace {

PhiFamily family_from(const std::vector<Eigen::MatrixXcd>& matrices) {
  if (matrices.empty()) throw ConfigurationError("a Phi family needs at least one matrix");
  const ModeConfig cfg(static_cast<int>(matrices.front().rows()), static_cast<int>(matrices.front().cols()));
  std::vector<PhiMatrix> members;
  for (const auto& m : matrices) members.emplace_back(cfg, m);
  return PhiFamily(cfg, std::move(members));
}

PhiMatrix phi_from(const Eigen::MatrixXcd& m) {
  return PhiMatrix(ModeConfig(static_cast<int>(m.rows()), static_cast<int>(m.cols())), m);
}

std::vector<Eigen::MatrixXcd> matrices_of(const PhiFamily& family) {
  std::vector<Eigen::MatrixXcd> out;
  for (const PhiMatrix& phi : family.members()) out.push_back(phi.entries());
  return out;
}

py::dict report_dict(const VerificationReport& report) {
  py::list checks;
  for (const CheckResult& c : report.checks()) {
    py::dict d;
    d["name"] = c.name;
    d["max_residual"] = c.max_residual;
    d["tolerance"] = c.tolerance;
    d["passed"] = c.passed;
    d["context"] = c.context;
    checks.append(d);
  }
  py::dict out;
  out["checks"] = checks;
  out["overall_passed"] = report.overall_passed();
  return out;
}

StructureFunction structure_function(const std::string& kind, double parameter) {
  if (kind == "quadratic") return StructureFunction::quadratic(parameter);
  if (kind == "ac") return StructureFunction::arik_coon(parameter);
  if (kind == "undeformed") return StructureFunction::undeformed();
  throw ConfigurationError("unknown structure function \"" + kind + "\" (quadratic, ac, undeformed)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Composite quasi-boson operators, deformed-oscillator checks and the admissible-family solver";

  py::register_exception<FeasibilityError>(m, "FeasibilityError", PyExc_RuntimeError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigurationError>(m, "ConfigurationError", PyExc_ValueError);

  m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;

  // Structure functions.
  m.def("phi_quadratic", &phi_quadratic, py::arg("n"), py::arg("f"));
  m.def("phi_from_recurrence", &phi_from_recurrence, py::arg("phi1"), py::arg("phi2"), py::arg("n"));
  m.def("phi_three_term", &phi_three_term, py::arg("phi_prev"), py::arg("phi_curr"), py::arg("n"));
  m.def("phi_ac", &phi_ac, py::arg("n"), py::arg("q"));
  m.def(
      "structure_function",
      [](const std::string& kind, double parameter, int n) { return structure_function(kind, parameter)(n); },
      py::arg("kind"), py::arg("parameter"), py::arg("n"));
  m.def(
      "energy", [](int n, double f) { return energy(n, StructureFunction::quadratic(f)); }, py::arg("n"),
      py::arg("f"));
  m.def(
      "check_energy_recurrence",
      [](double f, int n_max, double tol) { return report_dict(check_energy_recurrence(StructureFunction::quadratic(f), n_max, tol)); },
      py::arg("f"), py::arg("n_max"), py::arg("tolerance") = kDefaultTolerance);
  m.def(
      "alternating_binomial_sum",
      [](int n, int power) { return py::int_(py::str(alternating_binomial_sum(n, power).str())); }, py::arg("n"),
      py::arg("m"));

  // Solver.
  m.def("rank_to_f", &rank_to_f, py::arg("m"));
  m.def(
      "random_unitary", [](int n, std::uint64_t seed) { return random_unitary(n, seed); }, py::arg("n"),
      py::arg("seed"));
  m.def(
      "construct_family",
      [](int d_a, int d_b, int k, int rank, std::uint64_t seed) {
        return matrices_of(construct_family(FamilySpec{d_a, d_b, k, rank, seed}));
      },
      py::arg("d_a"), py::arg("d_b"), py::arg("k"), py::arg("m"), py::arg("seed") = 0);
  m.def(
      "classify",
      [](const std::vector<Eigen::MatrixXcd>& matrices, double tol) {
        const Classification c = classify(family_from(matrices), tol);
        py::dict out;
        out["ranks"] = c.ranks;
        out["singular_values"] = c.singular_values;
        out["m"] = c.m ? py::object(py::int_(*c.m)) : py::object(py::none());
        out["f"] = c.f ? py::object(py::float_(*c.f)) : py::object(py::none());
        out["label"] = to_string(c.label);
        out["reason"] = c.reason;
        return out;
      },
      py::arg("matrices"), py::arg("tolerance") = kRankTolerance);

  // Conditions.
  m.def(
      "implied_deformation", [](const Eigen::MatrixXcd& phi) { return implied_deformation(phi_from(phi)); },
      py::arg("phi"));
  m.def(
      "check_normalization",
      [](const std::vector<Eigen::MatrixXcd>& matrices, double tol) {
        return report_dict(check_normalization(family_from(matrices), tol));
      },
      py::arg("matrices"), py::arg("tolerance") = kDefaultTolerance);
  m.def(
      "check_product_condition",
      [](const std::vector<Eigen::MatrixXcd>& matrices, double tol) {
        return report_dict(check_product_condition(family_from(matrices), tol));
      },
      py::arg("matrices"), py::arg("tolerance") = kDefaultTolerance);
  m.def(
      "check_cubic_condition",
      [](const Eigen::MatrixXcd& phi, double f, double tol) {
        return report_dict(check_cubic_condition(phi_from(phi), f, tol));
      },
      py::arg("phi"), py::arg("f"), py::arg("tolerance") = kDefaultTolerance);
  m.def(
      "verify_realization",
      [](const std::vector<Eigen::MatrixXcd>& matrices, double parameter, int n_max, double tol,
         const std::string& kind) {
        return report_dict(verify_realization(family_from(matrices), structure_function(kind, parameter), n_max, tol));
      },
      py::arg("matrices"), py::arg("f"), py::arg("n_max") = 3, py::arg("tolerance") = kDefaultTolerance,
      py::arg("kind") = "quadratic");
  m.def(
      "ac_nogo_probe",
      [](const std::vector<Eigen::MatrixXcd>& matrices, double q, double tol) {
        return report_dict(ac_nogo_probe(family_from(matrices), q, tol));
      },
      py::arg("matrices"), py::arg("q"), py::arg("tolerance") = kDefaultTolerance);
  m.def(
      "check_operator_identities",
      [](const Eigen::MatrixXcd& phi, int n_max, double tol) {
        return report_dict(check_operator_identities(phi_from(phi), n_max, tol));
      },
      py::arg("phi"), py::arg("n_max") = 3, py::arg("tolerance") = kOperatorIdentityTolerance);

  // Chain states.
  m.def(
      "chain_norm_sq", [](const Eigen::MatrixXcd& phi, int n) { return chain_norm_sq(phi_from(phi), n); },
      py::arg("phi"), py::arg("n"));
}

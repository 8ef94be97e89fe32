// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

#include "coboson/io.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace coboson {
namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing field \"" + key + "\"");
  return obj.at(key);
}

int require_positive_int(const json& obj, const char* key) {
  const json& v = require(obj, key, "Phi file");
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ParseError(std::string("Phi file: \"") + key + "\" must be a positive integer");
  }
  return v.get<int>();
}

double number_or_nan(const json& v, const std::string& where) {
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!v.is_number()) throw ParseError(where + " must be a number");
  return v.get<double>();
}

}  // namespace

json phi_family_to_json(const PhiFamily& family) {
  json matrices = json::array();
  for (const PhiMatrix& phi : family.members()) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < phi.entries().rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < phi.entries().cols(); ++c) {
        const Complex z = phi.entries()(r, c);
        row.push_back(json::array({z.real(), z.imag()}));
      }
      rows.push_back(std::move(row));
    }
    matrices.push_back(std::move(rows));
  }
  json doc;
  doc["d_a"] = family.config().d_a();
  doc["d_b"] = family.config().d_b();
  doc["matrices"] = std::move(matrices);
  return doc;
}

PhiFamily phi_family_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("Phi file: top level must be an object");
  const int d_a = require_positive_int(doc, "d_a");
  const int d_b = require_positive_int(doc, "d_b");
  const json& matrices = require(doc, "matrices", "Phi file");
  if (!matrices.is_array() || matrices.empty()) throw ParseError("Phi file: \"matrices\" must be a non-empty array");

  std::optional<ModeConfig> cfg;
  try {
    cfg.emplace(d_a, d_b);
  } catch (const ConfigurationError& e) {
    throw ParseError(std::string("Phi file: ") + e.what());
  }

  std::vector<PhiMatrix> members;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const std::string where = "Phi file: matrices[" + std::to_string(i) + "]";
    const json& rows = matrices[i];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(d_a)) {
      throw ParseError(where + " must have exactly d_a=" + std::to_string(d_a) + " rows");
    }
    Eigen::MatrixXcd m(d_a, d_b);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const json& row = rows[r];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(d_b)) {
        throw ParseError(where + "[" + std::to_string(r) + "] must have exactly d_b=" + std::to_string(d_b) +
                         " entries");
      }
      for (std::size_t c = 0; c < row.size(); ++c) {
        const json& z = row[c];
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
          throw ParseError(where + "[" + std::to_string(r) + "][" + std::to_string(c) +
                           "] must be a [re, im] pair of numbers");
        }
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Complex(z[0].get<double>(), z[1].get<double>());
      }
    }
    members.emplace_back(*cfg, std::move(m));
  }
  return PhiFamily(*cfg, std::move(members));
}

json report_to_json(const VerificationReport& report, const ReportMetadata& metadata) {
  json checks = json::array();
  for (const CheckResult& c : report.checks()) {
    checks.push_back({{"name", c.name},
                      {"max_residual", c.max_residual},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed},
                      {"context", c.context}});
  }
  json doc;
  doc["checks"] = std::move(checks);
  doc["overall_passed"] = report.overall_passed();
  doc["metadata"] = {{"tool_version", metadata.tool_version},
                     {"seed", metadata.seed ? json(*metadata.seed) : json(nullptr)},
                     {"timestamp", metadata.timestamp}};
  return doc;
}

VerificationReport report_from_json(const json& doc, ReportMetadata* metadata) {
  const json& checks = require(doc, "checks", "report");
  if (!checks.is_array()) throw ParseError("report: \"checks\" must be an array");
  VerificationReport report;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const std::string where = "report: checks[" + std::to_string(i) + "]";
    const json& c = checks[i];
    const json& name = require(c, "name", where);
    const json& passed = require(c, "passed", where);
    const json& context = require(c, "context", where);
    if (!name.is_string() || !passed.is_boolean() || !context.is_string()) {
      throw ParseError(where + ": wrong field types");
    }
    report.add_verdict(name.get<std::string>(), number_or_nan(require(c, "max_residual", where), where + ".max_residual"),
                       number_or_nan(require(c, "tolerance", where), where + ".tolerance"), passed.get<bool>(),
                       context.get<std::string>());
  }
  const json& overall = require(doc, "overall_passed", "report");
  if (!overall.is_boolean()) throw ParseError("report: \"overall_passed\" must be a boolean");
  if (overall.get<bool>() != report.overall_passed()) {
    throw ParseError("report: overall_passed is inconsistent with the individual checks");
  }
  if (metadata != nullptr) {
    const json& meta = require(doc, "metadata", "report");
    ReportMetadata out;
    out.tool_version = require(meta, "tool_version", "report.metadata").get<std::string>();
    const json& seed = require(meta, "seed", "report.metadata");
    if (!seed.is_null()) out.seed = seed.get<std::uint64_t>();
    out.timestamp = require(meta, "timestamp", "report.metadata").get<std::string>();
    *metadata = std::move(out);
  }
  return report;
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

PhiFamily read_phi_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  try {
    return phi_family_from_json(doc);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

std::string current_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace coboson

// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief JSON documents for Phi families and verification reports.
 *
 * Phi family:  { "d_a": int, "d_b": int, "matrices": [ [ [ [re, im], ... row ], ... ], ... ] }
 * Report:      { "checks": [ {"name", "max_residual", "tolerance", "passed", "context"} ],
 *                "overall_passed": bool,
 *                "metadata": {"tool_version", "seed", "timestamp"} }
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "coboson/quasiboson.hpp"
#include "coboson/report.hpp"

namespace coboson {

/// Malformed or inconsistent JSON document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReportMetadata {
  std::string tool_version;
  std::optional<std::uint64_t> seed;
  std::string timestamp;

  bool operator==(const ReportMetadata&) const = default;
};

nlohmann::json phi_family_to_json(const PhiFamily& family);
/// Throws ParseError with a diagnostic naming the offending field.
PhiFamily phi_family_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const VerificationReport& report, const ReportMetadata& metadata);
/// Throws ParseError, including when overall_passed disagrees with the individual checks.
VerificationReport report_from_json(const nlohmann::json& doc, ReportMetadata* metadata = nullptr);

/// Text form used for files: two-space indented JSON followed by a newline.
std::string dump_document(const nlohmann::json& doc);

/// Throws ParseError (syntax or schema) or std::runtime_error (I/O).
PhiFamily read_phi_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// UTC ISO-8601 time; honors SOURCE_DATE_EPOCH when set so reports can be reproduced byte for byte.
std::string current_timestamp();

}  // namespace coboson

// Copyright 2026 The coboson Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace coboson {

/// Default absolute tolerance on unit-normalized state residuals.
inline constexpr double kDefaultTolerance = 1e-10;

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = kDefaultTolerance;
  bool passed = true;
  std::string context;

  bool operator==(const CheckResult&) const = default;
};

class VerificationReport {
 public:
  VerificationReport() = default;

  /// Records a check that passes iff max_residual <= tolerance.
  void add(std::string name, double max_residual, double tolerance, std::string context = {});
  /// Records a check whose verdict was decided by the caller.
  void add_verdict(std::string name, double max_residual, double tolerance, bool passed, std::string context = {});
  /// Appends all checks of another report, preserving order.
  void merge(const VerificationReport& other);

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  bool overall_passed() const noexcept;
  /// First check with the given name, or nullptr.
  const CheckResult* find(const std::string& name) const;

  bool operator==(const VerificationReport&) const = default;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace coboson

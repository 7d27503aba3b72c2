#pragma once

#include <string>
#include <vector>

#include "tourforge/rational.hpp"

namespace tourforge {

// One named check inside a verification report.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  // witness description on failure, context on success
};

// Structured outcome of an identity / rank / TU check. A report passes iff
// every recorded check passes. TU failures additionally carry the violating
// submatrix as row/column index sets plus its determinant.
struct VerificationReport {
  std::vector<Check> checks;

  // Witness payload for TU-style failures (empty when unused).
  std::vector<int> witness_rows;
  std::vector<int> witness_cols;
  Rational witness_det = 0;

  // Bookkeeping for enumeration-style checks.
  long long submatrices_checked = 0;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back(Check{name, ok, detail});
  }

  // One line per check: "PASS <name>: <detail>".
  std::string summary() const {
    std::string out;
    for (const auto& c : checks) {
      out += c.pass ? "PASS " : "FAIL ";
      out += c.name;
      if (!c.detail.empty()) {
        out += ": ";
        out += c.detail;
      }
      out += "\n";
    }
    return out;
  }
};

}  // namespace tourforge

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dissoc/dissociation.hpp"

namespace dissoc {

inline constexpr const char* kEngineVersion = "dissoc 1.0.0";

struct GraphRecord {
  std::string graph6;
  std::string code;

  friend bool operator==(const GraphRecord&, const GraphRecord&) = default;
};

/// One checked (or merely recorded) relation: lhs <rule> rhs.
struct Finding {
  std::string graph6;
  std::string rule;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::string detail;

  friend bool operator==(const Finding&, const Finding&) = default;
};

/// Outcome of one verification suite over one order or order range. The
/// suite passed iff `violations` is empty.
struct VerificationReport {
  std::string suite;
  int order_min = 0;
  int order_max = 0;
  Count graphs_examined = 0;
  std::optional<Count> bound;
  std::optional<Count> min_phi;
  std::vector<GraphRecord> minimizers;           // sorted by code
  std::vector<GraphRecord> expected_minimizers;  // sorted by code
  std::vector<Finding> violations;
  std::vector<Finding> observations;  // recorded, never asserted
  std::optional<double> runtime_ms;   // left empty for reproducible output
  std::string engine_version = kEngineVersion;

  bool passed() const { return violations.empty(); }
};

struct ReportFormatOptions {
  bool include_runtime = false;
};

/// JSON array of reports, two-space indented, trailing newline.
std::string reports_to_json(const std::vector<VerificationReport>& reports, const ReportFormatOptions& opts = {});
std::vector<VerificationReport> reports_from_json(const std::string& text);
/// Header "suite,n,graphs,min_phi,bound,pass" and one row per report.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);
std::string reports_to_text(const std::vector<VerificationReport>& reports);

}  // namespace dissoc

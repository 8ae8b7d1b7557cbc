#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gyroloop/io.hpp"

namespace gyroloop {

/// Per-entry classification record. Fields that only make sense for loops
/// (the predicates) or for gyrogroups (gyrocommutativity, derived data) are
/// left unset otherwise and serialize as empty/null.
struct ClassifiedRow {
  std::string name;
  int order = 0;
  bool is_loop = false;
  std::optional<bool> is_left_bol;
  std::optional<bool> is_moufang;
  std::optional<bool> is_group;
  std::optional<bool> is_gyrogroup;
  std::optional<bool> is_gyrocommutative;
  std::optional<int> non_identity_gyrator_count;
  std::optional<bool> gyrators_closed;
  std::optional<int> derived_order;
  std::optional<bool> derived_is_subgroup;
  std::optional<bool> derived_is_normal;
  std::string canonical_key_digest;  // empty when not a loop
  std::string error;                 // validation failure, when any

  // Full key bytes, kept for summary dedup; not serialized.
  std::vector<std::uint8_t> key;
};

/// Per-order isomorphism-class counts over non-degenerate gyrogroups.
/// alpha counts them all, beta the gyrocommutative ones. Orders 24, 27 and 30
/// have no complete classification to compare against and are flagged
/// "partial"; every other order is "exact".
struct SummaryRow {
  int order = 0;
  int alpha = 0;
  int beta = 0;
  std::string status;  // "exact" or "partial"
};

struct ClassificationReport {
  std::vector<ClassifiedRow> rows;      // corpus order
  std::vector<SummaryRow> summary;      // ascending order
};

/// Classifies every corpus entry and aggregates the per-order summary.
/// Entries fan out to an OpenMP worker pool; rows land at their corpus
/// position, so output is deterministic regardless of scheduling.
ClassificationReport classify(const Corpus& corpus, int threads = 0);

/// Single-threaded reference of the same computation, kept for testing.
ClassificationReport classify_serial(const Corpus& corpus);

enum class ReportFormat { Csv, Json };

std::string emit_csv(const ClassificationReport& report);
std::string emit_json(const ClassificationReport& report);

/// Writes the report to a file with deterministic bytes. Throws IoError.
void emit_report(const ClassificationReport& report, ReportFormat format,
                 const std::string& path);

}  // namespace gyroloop

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace blowup {

// Comparison discipline of a report row.
//   equality:    the claim is exact at the evaluated parameters.
//   threshold:   the claim holds for sufficiently large n; the grid records
//                where agreement is observed (see judge_threshold).
//   lower_bound: observed must be >= expected.
//   experiment:  recorded, never judged.
enum class RowMode { kEquality, kThreshold, kLowerBound, kExperiment };

struct ReportRow {
  nlohmann::json params;
  std::string claim;
  std::optional<long long> expected;
  std::optional<long long> observed;
  RowMode mode = RowMode::kEquality;
  bool match = false;
  std::optional<std::string> skipped;  // reason, when the cell was not run
  std::vector<std::string> witnesses;  // graph6
  std::string note;
};

struct VerificationReport {
  std::string theorem_key;
  std::string title;
  std::vector<ReportRow> rows;

  int passed = 0;
  int failed = 0;
  int skipped_cells = 0;
  int experiments = 0;
  std::vector<std::string> flags;
  std::uint64_t explored = 0;  // oracle search nodes (deterministic)

  // 0 all pass, 1 genuine mismatch, 2 cells skipped for resources only.
  int exit_code() const {
    if (failed > 0) return 1;
    if (skipped_cells > 0) return 2;
    return 0;
  }
};

// Tallies equality/lower-bound/experiment rows and skipped cells. Threshold
// rows are judged separately, group by group.
void tally_rows(VerificationReport& report);

// Sufficiently-large-n policy over the threshold rows [first, last): pass
// when the top evaluated cell agrees, flag when agreement never appears, and
// fail (a genuine discrepancy) when agreement appears and is then lost.
void judge_threshold(VerificationReport& report, size_t first, size_t last,
                     const std::string& group);

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);
std::string report_to_text(const VerificationReport& report);

// format: "json" or "text".
std::string render_report(const VerificationReport& report,
                          const std::string& format);

}  // namespace blowup

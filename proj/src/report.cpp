#include "blowup/report.hpp"

#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

const char* mode_name(RowMode mode) {
  switch (mode) {
    case RowMode::kEquality:
      return "equality";
    case RowMode::kThreshold:
      return "threshold";
    case RowMode::kLowerBound:
      return "lower-bound";
    case RowMode::kExperiment:
      return "experiment";
  }
  return "?";
}

}  // namespace

void tally_rows(VerificationReport& report) {
  for (const ReportRow& row : report.rows) {
    if (row.skipped) {
      ++report.skipped_cells;
      continue;
    }
    switch (row.mode) {
      case RowMode::kEquality:
      case RowMode::kLowerBound:
        row.match ? ++report.passed : ++report.failed;
        break;
      case RowMode::kExperiment:
        ++report.experiments;
        break;
      case RowMode::kThreshold:
        break;  // judged per group
    }
  }
}

void judge_threshold(VerificationReport& report, size_t first, size_t last,
                     const std::string& group) {
  const ReportRow* top = nullptr;
  bool any_match = false;
  int first_match_n = -1;
  for (size_t i = first; i < last && i < report.rows.size(); ++i) {
    const ReportRow& row = report.rows[i];
    if (row.skipped || row.mode != RowMode::kThreshold) continue;
    top = &row;
    if (row.match) {
      any_match = true;
      if (first_match_n < 0 && row.params.contains("n"))
        first_match_n = row.params["n"].get<int>();
    }
  }
  if (!top) return;
  if (top->match) {
    ++report.passed;
    report.flags.push_back(group + ": agreement at the top of the grid" +
                           (first_match_n >= 0
                                ? " (first agreeing n = " +
                                      std::to_string(first_match_n) + ")"
                                : ""));
  } else if (any_match) {
    ++report.failed;
    report.flags.push_back(group +
                           ": GENUINE DISCREPANCY - agreement observed at "
                           "smaller n is lost at the top of the grid");
  } else {
    report.flags.push_back(group +
                           ": threshold not reached within the grid (the "
                           "claim holds for sufficiently large n only)");
  }
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportRow& row : report.rows) {
    nlohmann::json j;
    j["params"] = row.params;
    j["claim"] = row.claim;
    if (row.expected) j["expected"] = *row.expected;
    if (row.observed) j["observed"] = *row.observed;
    j["mode"] = mode_name(row.mode);
    if (row.skipped)
      j["skipped"] = *row.skipped;
    else
      j["match"] = row.match;
    if (!row.witnesses.empty()) j["witnesses"] = row.witnesses;
    if (!row.note.empty()) j["note"] = row.note;
    rows.push_back(std::move(j));
  }
  return nlohmann::json{
      {"theorem", report.theorem_key},
      {"title", report.title},
      {"rows", std::move(rows)},
      {"summary",
       {{"passed", report.passed},
        {"failed", report.failed},
        {"skipped", report.skipped_cells},
        {"experiments", report.experiments},
        {"flags", report.flags},
        {"explored", report.explored}}}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport report;
  report.theorem_key = j.value("theorem", "");
  report.title = j.value("title", "");
  for (const auto& r : j.value("rows", nlohmann::json::array())) {
    ReportRow row;
    row.params = r.value("params", nlohmann::json::object());
    row.claim = r.value("claim", "");
    if (r.contains("expected")) row.expected = r["expected"].get<long long>();
    if (r.contains("observed")) row.observed = r["observed"].get<long long>();
    std::string mode = r.value("mode", "equality");
    row.mode = mode == "threshold"     ? RowMode::kThreshold
               : mode == "lower-bound" ? RowMode::kLowerBound
               : mode == "experiment"  ? RowMode::kExperiment
                                       : RowMode::kEquality;
    if (r.contains("skipped")) row.skipped = r["skipped"].get<std::string>();
    row.match = r.value("match", false);
    if (r.contains("witnesses"))
      row.witnesses = r["witnesses"].get<std::vector<std::string>>();
    row.note = r.value("note", "");
    report.rows.push_back(std::move(row));
  }
  const auto& summary = j.value("summary", nlohmann::json::object());
  report.passed = summary.value("passed", 0);
  report.failed = summary.value("failed", 0);
  report.skipped_cells = summary.value("skipped", 0);
  report.experiments = summary.value("experiments", 0);
  report.flags = summary.value("flags", std::vector<std::string>{});
  report.explored = summary.value("explored", 0ULL);
  return report;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "== " << report.theorem_key << ": " << report.title << " ==\n";
  for (const ReportRow& row : report.rows) {
    if (row.skipped)
      out << "[skip] ";
    else if (row.mode == RowMode::kExperiment)
      out << "[expr] ";
    else if (row.mode == RowMode::kThreshold)
      out << (row.match ? "[ == ] " : "[ != ] ");  // judged per grid, not per row
    else
      out << (row.match ? "[ ok ] " : "[FAIL] ");
    out << row.claim;
    if (!row.params.empty()) out << "  " << row.params.dump();
    if (row.expected) out << "  expected=" << *row.expected;
    if (row.observed) out << "  observed=" << *row.observed;
    if (row.skipped) out << "  (" << *row.skipped << ")";
    if (!row.note.empty()) out << "  -- " << row.note;
    if (!row.witnesses.empty()) {
      out << "  witnesses:";
      for (const std::string& w : row.witnesses) out << ' ' << w;
    }
    out << '\n';
  }
  for (const std::string& flag : report.flags) out << "  * " << flag << '\n';
  out << "summary: passed=" << report.passed << " failed=" << report.failed
      << " skipped=" << report.skipped_cells
      << " experiments=" << report.experiments
      << " explored=" << report.explored << '\n';
  return out.str();
}

std::string render_report(const VerificationReport& report,
                          const std::string& format) {
  if (format == "json") return report_to_json(report).dump(2) + "\n";
  if (format == "text") return report_to_text(report);
  throw ParameterError("unknown report format: " + format);
}

}  // namespace blowup

#pragma once

#include <algorithm>
#include <chrono>
#include <fnmatch.h>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fano/error.hpp"

namespace fano {

enum class Status { Pass, Fail, EvidenceOnly, FlaggedDiscrepancy };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::EvidenceOnly: return "evidence-only";
    case Status::FlaggedDiscrepancy: return "flagged-discrepancy";
  }
  return "?";
}

// What a check computes; the runner adds identity and timing.
struct CheckOutcome {
  Status status = Status::Fail;
  std::string expected;
  std::string computed;
  std::string note;
};

// Pass iff the renderings agree exactly.
inline CheckOutcome compare(std::string expected, std::string computed, std::string note = {}) {
  Status s = expected == computed ? Status::Pass : Status::Fail;
  return {s, std::move(expected), std::move(computed), std::move(note)};
}

struct CheckReport {
  std::string checkId;
  std::string scenario;
  Status status = Status::Fail;
  std::string expected;
  std::string computed;
  std::string paperAnchor;
  std::string note;
  long durationMs = 0;
};

struct CheckSpec {
  std::string id;
  std::string description;
  std::string anchor;
  std::function<CheckOutcome()> run;
};

inline bool glob_match(const std::string& pattern, const std::string& text) {
  return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

inline std::vector<const CheckSpec*> select_checks(const std::vector<CheckSpec>& all, const std::string& pattern) {
  std::vector<const CheckSpec*> out;
  for (const auto& c : all)
    if (glob_match(pattern, c.id)) out.push_back(&c);
  std::sort(out.begin(), out.end(), [](const CheckSpec* a, const CheckSpec* b) { return a->id < b->id; });
  return out;
}

inline CheckReport run_check(const std::string& scenario, const CheckSpec& spec) {
  auto start = std::chrono::steady_clock::now();
  CheckOutcome o = spec.run();
  auto stop = std::chrono::steady_clock::now();
  CheckReport r{spec.id, scenario, o.status, std::move(o.expected), std::move(o.computed), spec.anchor,
                std::move(o.note), 0};
  r.durationMs = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  if (r.status == Status::Pass && r.expected != r.computed)
    throw InvariantViolation("check " + spec.id + " passed with differing expected and computed values");
  return r;
}

// Every report counts as success unless it failed.
inline bool all_succeeded(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == Status::Fail; });
}

inline nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["checkId"] = r.checkId;
  j["scenario"] = r.scenario;
  j["status"] = to_string(r.status);
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["paperAnchor"] = r.paperAnchor;
  if (!r.note.empty()) j["note"] = r.note;
  j["durationMs"] = r.durationMs;
  return j;
}

// A single report is emitted as one object, several as an array.
inline std::string render_json(const std::vector<CheckReport>& reports) {
  if (reports.size() == 1) return to_json(reports[0]).dump(2) + "\n";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

inline std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += "<br>";
    else out += c;
  }
  return out;
}

inline std::string render_markdown(const std::string& scenario, const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "# Scenario " << scenario << "\n\n";
  os << "| check | status | expected | computed | anchor |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& r : reports)
    os << "| " << md_cell(r.checkId) << " | " << to_string(r.status) << " | " << md_cell(r.expected) << " | "
       << md_cell(r.computed) << " | " << md_cell(r.paperAnchor) << " |\n";
  bool notes = std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return !r.note.empty(); });
  if (notes) {
    os << "\n## Notes\n\n";
    for (const auto& r : reports)
      if (!r.note.empty()) os << "- `" << r.checkId << "`: " << md_cell(r.note) << "\n";
  }
  return os.str();
}

inline std::string render_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << to_string(r.status) << "  " << r.scenario << "/" << r.checkId << "  computed: " << r.computed;
    if (r.status != Status::Pass) os << "  expected: " << r.expected;
    os << "\n";
  }
  return os.str();
}

}  // namespace fano

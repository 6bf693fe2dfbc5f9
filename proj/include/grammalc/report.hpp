#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "grammalc/laurent_poly.hpp"
#include "grammalc/uni_poly.hpp"

namespace grammalc {

using CheckParams = std::vector<std::pair<std::string, long long>>;

/// Outcome of one exact identity check. lhs/rhs hold canonical text.
struct CheckReport {
  std::string check;
  CheckParams params;
  bool passed = false;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

using CheckReports = std::vector<CheckReport>;

inline CheckReport make_report(std::string check, CheckParams params, bool passed, std::string lhs,
                               std::string rhs, std::string detail = {}) {
  return {std::move(check), std::move(params), passed, std::move(lhs), std::move(rhs), std::move(detail)};
}

inline CheckReport compare(std::string check, CheckParams params, const LaurentPoly& lhs,
                           const LaurentPoly& rhs) {
  const bool ok = lhs == rhs;
  return make_report(std::move(check), std::move(params), ok, canonical_text(lhs), canonical_text(rhs));
}

inline CheckReport compare(std::string check, CheckParams params, const UniPoly& lhs, const UniPoly& rhs) {
  const bool ok = lhs == rhs;
  return make_report(std::move(check), std::move(params), ok, to_text(lhs), to_text(rhs));
}

inline CheckReport compare(std::string check, CheckParams params, const Integer& lhs, const Integer& rhs) {
  const bool ok = lhs == rhs;
  return make_report(std::move(check), std::move(params), ok, to_string(lhs), to_string(rhs));
}

inline bool all_passed(const CheckReports& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

inline void append(CheckReports& into, CheckReports more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

inline std::string params_text(const CheckParams& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ",";
    out += name + "=" + std::to_string(value);
  }
  return out;
}

/// {check, params, status, lhs?, rhs?}; lhs/rhs only on failure unless verbose.
inline nlohmann::ordered_json to_json(const CheckReport& r, bool verbose = false) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  j["params"] = std::move(params);
  j["status"] = r.passed ? "pass" : "fail";
  if (!r.passed || verbose) {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
  }
  if (!r.detail.empty() && (!r.passed || verbose)) j["detail"] = r.detail;
  return j;
}

inline std::string to_text_line(const CheckReport& r, bool verbose = false) {
  std::string out = std::string(r.passed ? "PASS " : "FAIL ") + r.check + "(" + params_text(r.params) + ")";
  if (!r.passed || verbose) {
    out += "\n  lhs: " + r.lhs + "\n  rhs: " + r.rhs;
    if (!r.detail.empty()) out += "\n  detail: " + r.detail;
  }
  return out;
}

}  // namespace grammalc

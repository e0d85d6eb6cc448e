#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyzero/rational.hpp"

namespace polyzero {

enum class ClaimStatus { pass, partial, fail };

inline const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::partial: return "partial";
    case ClaimStatus::fail: return "fail";
  }
  return "fail";
}

inline ClaimStatus status_from_string(const std::string& s) {
  if (s == "pass") return ClaimStatus::pass;
  if (s == "partial") return ClaimStatus::partial;
  if (s == "fail") return ClaimStatus::fail;
  throw std::invalid_argument("unknown status: " + s);
}

inline ClaimStatus worst(ClaimStatus a, ClaimStatus b) { return a > b ? a : b; }

struct Witness {
  std::string param;
  std::string value;
};

/// Findings for one claim over a swept parameter range. `pass` means every
/// swept instance satisfied the claim; eventual claims report the discovered
/// threshold. Reports are deterministic given (ranges, tolerances, seed).
struct VerificationReport {
  std::string claim_id;
  std::string anchor;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  ClaimStatus status = ClaimStatus::pass;
  std::vector<Witness> witnesses;
  std::optional<long> discovered_threshold;
  std::string notes;

  void witness(std::string param, std::string value) {
    witnesses.push_back(Witness{std::move(param), std::move(value)});
  }

  /// Records a checked condition; any failure flips the report to fail.
  void require(bool ok, std::string param, std::string value = "") {
    if (value.empty()) value = ok ? "ok" : "VIOLATED";
    else if (!ok) value += " [VIOLATED]";
    witnesses.push_back(Witness{std::move(param), std::move(value)});
    if (!ok) status = ClaimStatus::fail;
  }

  void mark_partial(const std::string& why) {
    status = worst(status, ClaimStatus::partial);
    note(why);
  }

  void note(const std::string& s) {
    if (!notes.empty()) notes += "; ";
    notes += s;
  }
};

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  j["paper_anchor"] = r.anchor;
  j["params"] = r.params;
  j["status"] = to_string(r.status);
  if (r.discovered_threshold) j["discovered_threshold"] = *r.discovered_threshold;
  else j["discovered_threshold"] = nullptr;
  nlohmann::ordered_json w = nlohmann::ordered_json::array();
  for (const auto& x : r.witnesses) w.push_back(nlohmann::ordered_json{{x.param, x.value}});
  j["witnesses"] = std::move(w);
  j["notes"] = r.notes;
  return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.claim_id = j.at("claim_id").get<std::string>();
  r.anchor = j.value("paper_anchor", std::string());
  r.params = j.value("params", nlohmann::json::object());
  r.status = status_from_string(j.at("status").get<std::string>());
  if (j.contains("discovered_threshold") && !j.at("discovered_threshold").is_null())
    r.discovered_threshold = j.at("discovered_threshold").get<long>();
  if (j.contains("witnesses"))
    for (const auto& w : j.at("witnesses"))
      for (const auto& [k, v] : w.items()) r.witnesses.push_back({k, v.get<std::string>()});
  r.notes = j.value("notes", std::string());
  return r;
}

inline ClaimStatus overall_status(const std::vector<VerificationReport>& reports) {
  ClaimStatus s = ClaimStatus::pass;
  for (const auto& r : reports) s = worst(s, r.status);
  return s;
}

}  // namespace polyzero

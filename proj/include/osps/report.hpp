#pragma once

#include <json.hpp>

#include "osps/core.hpp"

namespace osps {

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    default: return "SKIP";
  }
}

// Command-level report: per-check status lines plus derived artifacts,
// emitted in canonical order so identical input gives identical bytes.
struct Report {
  std::string command;

  struct Entry {
    std::string name;
    CheckStatus status;
    std::vector<std::string> witnesses;
  };
  std::vector<Entry> entries;
  nlohmann::json derived = nlohmann::json::object();

  void add(std::string name, bool passed, std::vector<std::string> witnesses = {}) {
    entries.push_back({std::move(name), passed ? CheckStatus::Pass : CheckStatus::Fail,
                       std::move(witnesses)});
  }
  void skip(std::string name, std::string reason) {
    entries.push_back({std::move(name), CheckStatus::Skip, {std::move(reason)}});
  }

  bool all_passed() const {
    for (const auto& e : entries)
      if (e.status == CheckStatus::Fail) return false;
    return true;
  }
};

inline std::string emit_report_text(const Report& rep) {
  std::string out = "# " + rep.command + "\n";
  for (const auto& e : rep.entries) {
    out += std::string(to_string(e.status)) + " " + e.name + "\n";
    for (const auto& w : e.witnesses) out += "  witness: " + w + "\n";
  }
  if (!rep.derived.empty()) out += "derived:\n" + rep.derived.dump(2) + "\n";
  return out;
}

inline std::string emit_report_json(const Report& rep) {
  nlohmann::json doc;
  doc["command"] = rep.command;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& e : rep.entries)
    checks.push_back({{"name", e.name}, {"status", to_string(e.status)}, {"witnesses", e.witnesses}});
  doc["checks"] = checks;
  doc["derived"] = rep.derived;
  return doc.dump(2) + "\n";
}

inline std::string emit_report(const Report& rep, const std::string& format) {
  if (format == "json") return emit_report_json(rep);
  return emit_report_text(rep);
}

}  // namespace osps

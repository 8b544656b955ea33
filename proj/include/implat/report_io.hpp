#ifndef IMPLAT_REPORT_IO_HPP
#define IMPLAT_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "implat/core.hpp"

namespace implat {

/// Human-readable report: one "[PASS]/[FAIL]" line per check.
inline std::string report_text(const Report& rep) {
  std::string out;
  for (const auto& it : rep.items) {
    out += it.pass ? "[PASS] " : "[FAIL] ";
    out += it.name;
    out += " (checked=" + std::to_string(it.checked) + ")";
    if (!it.witness.empty()) {
      out += " witness=(";
      for (std::size_t i = 0; i < it.witness.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(it.witness[i]);
      }
      out += ")";
    }
    if (!it.note.empty()) out += " " + it.note;
    out += "\n";
  }
  return out;
}

/// Machine-readable report; field order is fixed so output is byte-stable.
inline nlohmann::ordered_json report_json(const Report& rep) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& it : rep.items) {
    nlohmann::ordered_json c;
    c["name"] = it.name;
    c["verdict"] = it.pass ? "pass" : "fail";
    if (!it.witness.empty()) c["witness"] = it.witness;
    c["checked"] = it.checked;
    if (!it.note.empty()) c["note"] = it.note;
    checks.push_back(std::move(c));
  }
  nlohmann::ordered_json doc;
  doc["format"] = "implat-report";
  doc["version"] = 1;
  doc["ok"] = rep.ok();
  doc["checks"] = std::move(checks);
  return doc;
}

inline std::string report_machine(const Report& rep) { return report_json(rep).dump(2) + "\n"; }

}  // namespace implat

#endif  // IMPLAT_REPORT_IO_HPP

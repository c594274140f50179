#include "liecheck/report.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace liecheck {

std::string render_text(const std::vector<CaseResult>& results) {
  std::string out;
  std::size_t pass = 0, dev = 0, fail = 0;
  for (const CaseResult& r : results) {
    switch (r.status) {
      case CaseStatus::pass: ++pass; break;
      case CaseStatus::deviation: ++dev; break;
      case CaseStatus::fail: ++fail; break;
    }
    out += "case " + r.id + ": " + to_string(r.status) + " (" +
           std::to_string(r.millis) + " ms)\n";
    for (const CheckLine& c : r.checks)
      out += std::string("  [") + (c.ok ? "ok" : "FAIL") + "] " + c.name +
             ": " + c.detail + "\n";
    for (const Deviation& d : r.deviations) {
      out += "  deviation: " + d.computed + "\n";
      out += "    reference value: " + d.paper_value + "\n";
      out += "    note: " + d.citation + "\n";
    }
  }
  out += std::to_string(results.size()) + " case" +
         (results.size() == 1 ? "" : "s") + ": " + std::to_string(pass) +
         " pass, " + std::to_string(dev) + " deviation, " +
         std::to_string(fail) + " fail\n";
  return out;
}

std::string render_json(std::vector<CaseResult> results) {
  std::sort(results.begin(), results.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CaseResult& r : results) {
    nlohmann::ordered_json entry;
    entry["case"] = r.id;
    entry["status"] = to_string(r.status);
    entry["checks"] = nlohmann::ordered_json::array();
    for (const CheckLine& c : r.checks) {
      nlohmann::ordered_json check;
      check["name"] = c.name;
      check["ok"] = c.ok;
      check["detail"] = c.detail;
      entry["checks"].push_back(std::move(check));
    }
    entry["deviations"] = nlohmann::ordered_json::array();
    for (const Deviation& d : r.deviations) {
      nlohmann::ordered_json dev;
      dev["computed"] = d.computed;
      dev["paper_value"] = d.paper_value;
      dev["citation"] = d.citation;
      entry["deviations"].push_back(std::move(dev));
    }
    entry["millis"] = 0;  // pinned: report bytes must not depend on timing
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoFailure("cannot open '" + path + "' for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  f.flush();
  if (!f) throw IoFailure("failed to write '" + path + "'");
}

}  // namespace liecheck

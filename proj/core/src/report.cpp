#include "bip/report.hpp"

#include <json.hpp>

namespace bip::report {

void Report::merge(const Report& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

bool Report::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

long long Report::total_checked() const {
  long long n = 0;
  for (const auto& r : results) n += r.checked;
  return n;
}

const CheckResult* Report::find(const std::string& law) const {
  for (const auto& r : results)
    if (r.law == law) return &r;
  return nullptr;
}

std::string to_text(const Report& r) {
  std::string out;
  for (const auto& c : r.results) {
    out += c.pass ? "[PASS] " : "[FAIL] ";
    out += c.law;
    out += " checked=" + std::to_string(c.checked);
    if (!c.pass && !c.witness.empty()) out += " witness=" + c.witness;
    out += '\n';
  }
  out += "overall: ";
  out += r.all_pass() ? "PASS" : "FAIL";
  out += " laws=" + std::to_string(r.results.size());
  out += " instances=" + std::to_string(r.total_checked());
  out += '\n';
  return out;
}

std::string to_json(const Report& r) {
  nlohmann::json j;
  j["results"] = nlohmann::json::array();
  for (const auto& c : r.results) {
    nlohmann::json e;
    e["law"] = c.law;
    e["pass"] = c.pass;
    e["checked"] = c.checked;
    if (!c.pass && !c.witness.empty()) e["witness"] = c.witness;
    j["results"].push_back(std::move(e));
  }
  j["overall"] = r.all_pass();
  j["laws"] = r.results.size();
  j["instances"] = r.total_checked();
  return j.dump(2) + "\n";
}

}  // namespace bip::report

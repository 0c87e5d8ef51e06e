#pragma once

#include <string>
#include <vector>

namespace bip::report {

// Outcome of one law checked exhaustively over its configuration space.
// `checked` counts the instances examined; `witness` pins the first failing
// instance so a red run is reproducible by eye.
struct CheckResult {
  std::string law;
  bool pass = true;
  long long checked = 0;
  std::string witness;
};

struct Report {
  std::vector<CheckResult> results;

  void add(CheckResult r) { results.push_back(std::move(r)); }
  void merge(const Report& other);
  bool all_pass() const;
  long long total_checked() const;
  const CheckResult* find(const std::string& law) const;
};

// One line per law, stable byte-for-byte across runs:
//   [PASS] law checked=N
//   [FAIL] law checked=N witness=...
// followed by an overall line.
std::string to_text(const Report& r);

// Same content as a JSON document (array of results + overall flag).
std::string to_json(const Report& r);

}  // namespace bip::report

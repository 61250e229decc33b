#pragma once

#include <string>
#include <vector>

namespace hopfgal {

// One verified identity or property.  `witness` is empty on success and
// carries a human-readable description of the first failing basis tuple or
// residual otherwise.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string witness;
};

// Outcome of a validation run: a named bundle of checks.  Verification
// failures are data, not exceptions — a report with failing items is still a
// well-formed result.
struct Report {
  std::string subject;
  std::vector<CheckItem> items;

  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  void add(std::string name, bool ok, std::string witness = "") {
    items.push_back(CheckItem{std::move(name), ok, std::move(witness)});
  }
  void merge(const Report& other, const std::string& prefix = "");
  const CheckItem* first_failure() const {
    for (const auto& it : items)
      if (!it.pass) return &it;
    return nullptr;
  }
};

// Plain-text rendering: one line per check, `ok`/`FAIL`, witnesses indented.
std::string to_text(const Report& r, bool include_witnesses = true);
// Structured rendering (JSON object with subject/pass/items).
std::string to_json(const Report& r, bool include_witnesses = true);

}  // namespace hopfgal

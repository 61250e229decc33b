#include "hopfgal/report.hpp"

#include <sstream>

#include <json.hpp>

namespace hopfgal {

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& it : other.items) {
    items.push_back(CheckItem{prefix.empty() ? it.name : prefix + "." + it.name,
                              it.pass, it.witness});
  }
}

std::string to_text(const Report& r, bool include_witnesses) {
  std::ostringstream os;
  os << r.subject << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& it : r.items) {
    os << "  [" << (it.pass ? " ok " : "FAIL") << "] " << it.name << "\n";
    if (include_witnesses && !it.pass && !it.witness.empty())
      os << "         witness: " << it.witness << "\n";
  }
  return os.str();
}

std::string to_json(const Report& r, bool include_witnesses) {
  nlohmann::json j;
  j["subject"] = r.subject;
  j["pass"] = r.pass();
  j["items"] = nlohmann::json::array();
  for (const auto& it : r.items) {
    nlohmann::json ji;
    ji["name"] = it.name;
    ji["pass"] = it.pass;
    if (include_witnesses && !it.pass && !it.witness.empty())
      ji["witness"] = it.witness;
    j["items"].push_back(ji);
  }
  return j.dump(2);
}

}  // namespace hopfgal

#include "slowcf/scfa.hpp"

#include <nlohmann/json.hpp>

namespace slowcf {

using ordered_json = nlohmann::ordered_json;

Scfa scfa_from_json(std::string_view json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(ErrorKind::ParseError, std::string("bad SCFA spec JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("partition") || !j.contains("signs")) {
    throw DomainError(ErrorKind::ParseError,
                      "SCFA spec must be an object with \"partition\" and \"signs\"");
  }
  std::vector<std::pair<Rational, Rational>> raw;
  for (const auto& cell : j.at("partition")) {
    if (!cell.is_array() || cell.size() != 2) {
      throw DomainError(ErrorKind::ParseError, "partition cells must be [lo, hi] pairs");
    }
    raw.emplace_back(Rational::parse(cell.at(0).get<std::string>()),
                     Rational::parse(cell.at(1).get<std::string>()));
  }
  std::vector<int> signs;
  for (const auto& s : j.at("signs")) {
    int v = s.get<int>();
    if (v != 1 && v != -1) {
      throw DomainError(ErrorKind::ParseError, "signs must be +1 or -1");
    }
    signs.push_back(v);
  }
  return Scfa(UnimodularPartition::validate(raw), std::move(signs));
}

std::string scfa_to_json(const Scfa& s) {
  ordered_json j;
  j["partition"] = ordered_json::array();
  for (int i = 1; i <= s.branch_count(); ++i) {
    j["partition"].push_back({s.cell(i).lo().str(), s.cell(i).hi().str()});
  }
  j["signs"] = ordered_json::array();
  for (int i = 1; i <= s.branch_count(); ++i) j["signs"].push_back(s.sign(i));
  return j.dump();
}

} // namespace slowcf

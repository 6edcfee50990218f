#pragma once

// Report serialization and the expected-failure registry.
//
// CSV columns, in this exact order:
//   n,t,l,check_id,lhs,rhs,holds,tight,witness,gap
// Fractions are reduced "a/b" strings (including "2/1"); booleans are
// true/false; absent sides and witnesses are empty fields; fields containing
// commas or quotes are quoted RFC-4180 style. JSON carries the same ten
// fields per record, with fractions as ["a","b"] string pairs and absent
// values as null. Error rows put "error: <message>" in the witness slot.
//
// Both formats are byte-stable for fixed inputs, and JSON round-trips back to
// the exact in-memory report list.

#include <ordersum/bounds.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ordersum {

inline constexpr std::string_view kCsvHeader = "n,t,l,check_id,lhs,rhs,holds,tight,witness,gap";
inline constexpr std::string_view kErrorWitnessPrefix = "error: ";

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

namespace detail {

inline std::string fraction_or_empty(const std::optional<Rational>& r) {
  return r ? r->fraction_str() : std::string();
}

inline std::string witness_field(const BoundReport& rep) {
  if (rep.verdict == Verdict::Error) return std::string(kErrorWitnessPrefix) + rep.error;
  return rep.witness;
}

}  // namespace detail

inline std::string report_to_csv_row(const BoundReport& rep) {
  std::string row;
  row += std::to_string(rep.n);
  row += ',';
  row += std::to_string(rep.t);
  row += ',';
  row += std::to_string(rep.l);
  row += ',';
  row += to_string(rep.check);
  row += ',';
  row += detail::fraction_or_empty(rep.lhs);
  row += ',';
  row += detail::fraction_or_empty(rep.rhs);
  row += ',';
  row += rep.holds() ? "true" : "false";
  row += ',';
  row += rep.tight ? "true" : "false";
  row += ',';
  row += csv_field(detail::witness_field(rep));
  row += ',';
  row += detail::fraction_or_empty(rep.gap);
  return row;
}

inline std::string reports_to_csv(const std::vector<BoundReport>& reports) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const BoundReport& rep : reports) {
    out += report_to_csv_row(rep);
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json fraction_to_json(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  return nlohmann::ordered_json::array({r->num().get_str(), r->den().get_str()});
}

inline nlohmann::ordered_json report_to_json(const BoundReport& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  j["t"] = rep.t;
  j["l"] = rep.l;
  j["check_id"] = to_string(rep.check);
  j["lhs"] = fraction_to_json(rep.lhs);
  j["rhs"] = fraction_to_json(rep.rhs);
  j["holds"] = rep.holds();
  j["tight"] = rep.tight;
  j["witness"] = detail::witness_field(rep);
  j["gap"] = fraction_to_json(rep.gap);
  return j;
}

inline std::string reports_to_json_text(const std::vector<BoundReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const BoundReport& rep : reports) arr.push_back(report_to_json(rep));
  return arr.dump(2) + "\n";
}

inline std::optional<Rational> fraction_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return Rational(Int(j.at(0).get<std::string>()), Int(j.at(1).get<std::string>()));
}

inline BoundReport report_from_json(const nlohmann::json& j) {
  BoundReport rep;
  rep.n = j.at("n").get<Nat>();
  rep.t = j.at("t").get<unsigned>();
  rep.l = j.at("l").get<Nat>();
  const auto id = parse_check_id(j.at("check_id").get<std::string>());
  if (!id) throw std::runtime_error("unknown check_id in report JSON");
  rep.check = *id;
  rep.lhs = fraction_from_json(j.at("lhs"));
  rep.rhs = fraction_from_json(j.at("rhs"));
  const bool holds = j.at("holds").get<bool>();
  rep.tight = j.at("tight").get<bool>();
  rep.gap = fraction_from_json(j.at("gap"));
  const std::string witness = j.at("witness").get<std::string>();
  if (witness.starts_with(kErrorWitnessPrefix)) {
    rep.verdict = Verdict::Error;
    rep.error = witness.substr(kErrorWitnessPrefix.size());
  } else {
    rep.witness = witness;
    if (!holds)
      rep.verdict = Verdict::Fails;
    else if (rep.lhs && rep.rhs)
      rep.verdict = Verdict::Holds;
    else if (!check_applies(rep.check, rep.n))
      rep.verdict = Verdict::NotApplicable;
    else
      rep.verdict = Verdict::VacuousHold;
  }
  return rep;
}

inline std::vector<BoundReport> reports_from_json_text(const std::string& text) {
  const nlohmann::json arr = nlohmann::json::parse(text);
  std::vector<BoundReport> out;
  out.reserve(arr.size());
  for (const auto& j : arr) out.push_back(report_from_json(j));
  return out;
}

// Known failing n per check, shipped as a data file so sweeps can tell
// recorded small-n exceptions from regressions.
struct ExpectedFailures {
  std::map<CheckId, std::set<Nat>> entries;

  bool expected(CheckId id, Nat n) const {
    const auto it = entries.find(id);
    return it != entries.end() && it->second.contains(n);
  }
};

inline ExpectedFailures expected_failures_from_json(const nlohmann::json& j) {
  ExpectedFailures reg;
  for (const auto& [key, value] : j.items()) {
    const auto id = parse_check_id(key);
    if (!id) throw std::runtime_error("expected-failures registry: unknown check id '" + key + "'");
    std::set<Nat>& ns = reg.entries[*id];
    for (const auto& n : value) ns.insert(n.get<Nat>());
  }
  return reg;
}

inline ExpectedFailures load_expected_failures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open expected-failures registry: " + path.string());
  nlohmann::json j;
  in >> j;
  return expected_failures_from_json(j);
}

// One line per check, declaration order: "MAIN: holds=97 fails=0 ...".
inline std::string summary_text(const SweepSummary& summary) {
  std::string out;
  for (CheckId id : kAllChecks) {
    const auto it = summary.find(id);
    if (it == summary.end()) continue;
    const CheckTally& tally = it->second;
    out += to_string(id);
    out += ": holds=" + std::to_string(tally.holds);
    out += " fails=" + std::to_string(tally.fails);
    out += " vacuous=" + std::to_string(tally.vacuous);
    out += " not-applicable=" + std::to_string(tally.not_applicable);
    out += " errors=" + std::to_string(tally.errors);
    out += " (of " + std::to_string(tally.total()) + ")\n";
  }
  return out;
}

}  // namespace ordersum

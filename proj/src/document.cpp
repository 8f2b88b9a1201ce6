#include "prefagg/document.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace prefagg {

std::string_view outcome_name(Outcome o) noexcept {
  switch (o) {
    case Outcome::AWins: return "a_wins";
    case Outcome::BWins: return "b_wins";
    case Outcome::Draw: return "draw";
  }
  return "draw";
}

Outcome parse_outcome(std::string_view name) {
  if (name == "a_wins") return Outcome::AWins;
  if (name == "b_wins") return Outcome::BWins;
  if (name == "draw") return Outcome::Draw;
  throw Error(ErrorCode::InvalidDocument, "unknown outcome '" + std::string(name) + "'");
}

nlohmann::json profile_to_json(const Profile& profile) {
  nlohmann::json judges = nlohmann::json::array();
  for (const auto& ballot : profile.judges()) {
    nlohmann::json comparisons = nlohmann::json::array();
    for (const auto& cmp : ballot) {
      comparisons.push_back(
          {{"a", profile.label(cmp.a)}, {"b", profile.label(cmp.b)}, {"outcome", outcome_name(cmp.outcome)}});
    }
    judges.push_back({{"comparisons", std::move(comparisons)}});
  }
  return {{"alternatives", profile.alternatives()}, {"judges", std::move(judges)}};
}

Profile profile_from_json(const nlohmann::json& doc) {
  try {
    RawProfile raw;
    if (!doc.is_object()) throw Error(ErrorCode::InvalidDocument, "profile document must be a JSON object");
    for (const auto& label : doc.at("alternatives")) raw.alternatives.push_back(label.get<std::string>());
    for (const auto& judge : doc.at("judges")) {
      std::vector<RawComparison> ballot;
      for (const auto& c : judge.at("comparisons")) {
        ballot.push_back({c.at("a").get<std::string>(), c.at("b").get<std::string>(),
                          parse_outcome(c.at("outcome").get<std::string>())});
      }
      raw.judges.push_back(std::move(ballot));
    }
    return validate_profile(raw);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidDocument, std::string("malformed profile document: ") + e.what());
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos ? std::string{} : field.substr(first, last - first + 1));
  }
  return fields;
}

}  // namespace

RawProfile raw_profile_from_csv(std::istream& in) {
  RawProfile raw;
  std::unordered_map<std::string, std::size_t> judge_index;
  std::unordered_map<std::string, bool> seen_alternative;
  auto note_alternative = [&](const std::string& label) {
    if (seen_alternative.emplace(label, true).second) raw.alternatives.push_back(label);
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fields = split_csv_line(line);
    if (line_no == 1 && !fields.empty() && fields[0] == "judge") continue;
    if (fields.size() != 4) {
      throw Error(ErrorCode::InvalidDocument, "csv line " + std::to_string(line_no) + ": expected judge,a,b,outcome");
    }
    auto [it, inserted] = judge_index.emplace(fields[0], raw.judges.size());
    if (inserted) raw.judges.emplace_back();
    note_alternative(fields[1]);
    note_alternative(fields[2]);
    raw.judges[it->second].push_back({fields[1], fields[2], parse_outcome(fields[3])});
  }
  return raw;
}

Profile profile_from_csv(std::istream& in) { return validate_profile(raw_profile_from_csv(in)); }

Profile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidDocument, "cannot open '" + path + "'");
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return profile_from_csv(in);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidDocument, "'" + path + "' is not valid JSON: " + e.what());
  }
  return profile_from_json(doc);
}

}  // namespace prefagg

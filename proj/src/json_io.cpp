#include "projcone/json_io.hpp"

#include <fstream>
#include <utility>
#include <vector>

#include "projcone/errors.hpp"

namespace projcone {
namespace {

using nlohmann::json;

Rat rational_field(const json& j, const std::string& where) {
  if (!j.is_string()) {
    throw SchemaError(where + ": rational must be a string \"p\" or \"p/q\"");
  }
  auto value = parse_rational(j.get<std::string>());
  if (!value) {
    throw SchemaError(where + ": malformed rational '" + j.get<std::string>() + "'");
  }
  return *value;
}

int dimension_field(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw SchemaError("top level: missing integer field \"n\"");
  }
  int n = j["n"].get<int>();
  if (n < 1 || n > kMaxDimension) {
    throw SchemaError("field \"n\": dimension out of range");
  }
  return n;
}

AxisSet subset_field(const json& j, int n, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw SchemaError(where + ": subset must be a nonempty array of axes");
  }
  AxisSet set;
  int prev = 0;
  for (const auto& e : j) {
    if (!e.is_number_integer()) {
      throw SchemaError(where + ": axis entries must be integers");
    }
    int axis = e.get<int>();
    if (axis < 1 || axis > n) {
      throw SchemaError(where + ": axis out of range [1, n]");
    }
    if (axis <= prev) {
      throw SchemaError(where + ": axes must be strictly ascending");
    }
    set = set.with(axis);
    prev = axis;
  }
  return set;
}

json subset_to_json(AxisSet set) {
  json arr = json::array();
  for (int axis : set.axes()) arr.push_back(axis);
  return arr;
}

}  // namespace

json inequality_to_json(const ProjectionInequality& ineq) {
  json terms = json::array();
  for (const auto& [set, coeff] : ineq.terms()) {
    terms.push_back({{"subset", subset_to_json(set)}, {"coeff", rational_str(coeff)}});
  }
  return json{{"n", ineq.dimension()}, {"terms", terms}};
}

ProjectionInequality inequality_from_json(const json& j) {
  int n = dimension_field(j);
  if (!j.contains("terms") || !j["terms"].is_array()) {
    throw SchemaError("field \"terms\": missing term array");
  }
  std::vector<std::pair<AxisSet, Rat>> terms;
  int index = 0;
  for (const auto& t : j["terms"]) {
    std::string where = "terms[" + std::to_string(index) + "]";
    if (!t.is_object() || !t.contains("subset") || !t.contains("coeff")) {
      throw SchemaError(where + ": term needs \"subset\" and \"coeff\"");
    }
    terms.emplace_back(subset_field(t["subset"], n, where + ".subset"),
                       rational_field(t["coeff"], where + ".coeff"));
    ++index;
  }
  return ProjectionInequality::canonicalize(n, terms);
}

json pi_to_json(const LogProjectionVector& pi) {
  json entries = json::object();
  for (AxisSet s : enumerate_subsets(pi.dimension)) {
    entries[s.str()] = rational_str(pi.at(s));
  }
  return json{{"n", pi.dimension}, {"entries", entries}};
}

LogProjectionVector pi_from_json(const json& j) {
  int n = dimension_field(j);
  if (!j.contains("entries") || !j["entries"].is_object()) {
    throw SchemaError("field \"entries\": missing object");
  }
  LogProjectionVector pi = LogProjectionVector::zeros(n);
  std::vector<bool> seen(pi.entries.size(), false);
  for (const auto& [key, value] : j["entries"].items()) {
    AxisSet set = parse_axis_set(key, n);
    size_t pos = subset_position(set, n);
    if (seen[pos]) {
      throw SchemaError("entries: duplicate subset '" + key + "'");
    }
    seen[pos] = true;
    pi.at(set) = rational_field(value, "entries['" + key + "']");
  }
  for (size_t pos = 0; pos < seen.size(); ++pos) {
    if (!seen[pos]) {
      throw SchemaError("entries: missing subset '" +
                        enumerate_subsets(n)[pos].str() + "'");
    }
  }
  return pi;
}

json flower_to_json(const Flower& fl) {
  json entries = json::object();
  for (AxisSet s : enumerate_subsets(fl.dimension)) {
    for (int axis : s.axes()) {
      entries[s.str() + "|" + std::to_string(axis)] = rational_str(fl.at(s, axis));
    }
  }
  return json{{"n", fl.dimension}, {"entries", entries}};
}

Flower flower_from_json(const json& j) {
  int n = dimension_field(j);
  if (!j.contains("entries") || !j["entries"].is_object()) {
    throw SchemaError("field \"entries\": missing object");
  }
  Flower fl = Flower::zeros(n);
  for (const auto& [key, value] : j["entries"].items()) {
    auto bar = key.find('|');
    if (bar == std::string::npos) {
      throw SchemaError("entries: key '" + key + "' must look like \"S|i\"");
    }
    AxisSet set = parse_axis_set(key.substr(0, bar), n);
    int axis = 0;
    try {
      size_t used = 0;
      axis = std::stoi(key.substr(bar + 1), &used);
      if (used != key.size() - bar - 1) throw std::invalid_argument("trail");
    } catch (const std::exception&) {
      throw SchemaError("entries: bad axis in key '" + key + "'");
    }
    if (!set.contains(axis)) {
      throw SchemaError("entries: axis not in subset for key '" + key + "'");
    }
    fl.at(set, axis) = rational_field(value, "entries['" + key + "']");
  }
  return fl;
}

json box_union_to_json(const BoxUnion& u) {
  json boxes = json::array();
  for (const auto& box : u.boxes) {
    json corner = json::array();
    json sides = json::array();
    for (const auto& c : box.corner) corner.push_back(rational_str(c));
    for (const auto& s : box.sides) sides.push_back(rational_str(s));
    boxes.push_back({{"corner", corner}, {"sides", sides}});
  }
  return json{{"n", u.dimension}, {"boxes", boxes}};
}

BoxUnion box_union_from_json(const json& j) {
  int n = dimension_field(j);
  if (!j.contains("boxes") || !j["boxes"].is_array()) {
    throw SchemaError("field \"boxes\": missing array");
  }
  BoxUnion u;
  u.dimension = n;
  int index = 0;
  for (const auto& b : j["boxes"]) {
    std::string where = "boxes[" + std::to_string(index) + "]";
    if (!b.is_object() || !b.contains("corner") || !b.contains("sides") ||
        !b["corner"].is_array() || !b["sides"].is_array() ||
        b["corner"].size() != static_cast<size_t>(n) ||
        b["sides"].size() != static_cast<size_t>(n)) {
      throw SchemaError(where + ": box needs \"corner\" and \"sides\" arrays of length n");
    }
    std::vector<Rat> corner;
    std::vector<Rat> sides;
    for (int i = 0; i < n; ++i) {
      corner.push_back(rational_field(b["corner"][i], where + ".corner"));
      sides.push_back(rational_field(b["sides"][i], where + ".sides"));
    }
    u.boxes.push_back(make_box(std::move(corner), std::move(sides)));
    ++index;
  }
  return u;
}

json report_to_json(const RefutationReport& report) {
  json params = json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  return json{{"method", report.method},
              {"witness", box_union_to_json(report.witness)},
              {"params", params},
              {"lhs", rational_str(report.lhs)},
              {"rhs", rational_str(report.rhs)},
              {"margin", rational_str(report.margin)}};
}

json combination_to_json(const BtCombination& comb) {
  json terms = json::array();
  for (const auto& term : comb.terms) {
    json cover = json::array();
    for (const auto& ws : term.cover) {
      cover.push_back({{"subset", subset_to_json(ws.set)}, {"weight", rational_str(ws.weight)}});
    }
    terms.push_back({{"set", subset_to_json(term.set)},
                     {"cover", cover},
                     {"k", rational_str(term.k)},
                     {"multiplier", rational_str(term.multiplier)}});
  }
  return json{{"n", comb.dimension}, {"integral", comb.integral}, {"terms", terms}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError("cannot open '" + path + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("parse error in '" + path + "': " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw SchemaError("cannot write '" + path + "'");
  }
  out << j.dump(2) << "\n";
}

}  // namespace projcone

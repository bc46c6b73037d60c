#include "metareason/io.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "metareason/errors.hpp"

namespace metareason {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path.empty() ? what : path + ": " + what);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string item(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& field(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* a : allowed)
      if (it.key() == a) known = true;
    if (!known) fail(path, "unexpected field '" + it.key() + "'");
  }
}

const json& object(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object");
  return v;
}

const json& array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

std::string string_value(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::int64_t int_value(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

// Rational fields accept canonical strings ("7/40", "3") and, for convenience,
// plain JSON integers. Floating-point literals are rejected outright.
Rational rational_value(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number_float())
    fail(path, "floating-point literals are not accepted; write the exact rational "
               "as a string like \"1/3\"");
  if (!v.is_string()) fail(path, "expected a rational string such as \"7/40\"");
  try {
    return Rational::from_string(v.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

json rational_json(const Rational& r) { return json(r.str()); }

// ---- knapsack ----

KnapsackInstance parse_knapsack(const json& body) {
  reject_unknown_keys(body, {"kind", "items", "capacity", "target"}, "");
  const json& items_json = array(field(body, "items", ""), "items");
  std::vector<KnapsackItem> items;
  items.reserve(items_json.size());
  for (std::size_t i = 0; i < items_json.size(); ++i) {
    const std::string path = item("items", i);
    const json& it = object(items_json[i], path);
    reject_unknown_keys(it, {"cost", "value"}, path);
    items.push_back({int_value(field(it, "cost", path), join(path, "cost")),
                     int_value(field(it, "value", path), join(path, "value"))});
  }
  return KnapsackInstance(std::move(items),
                          int_value(field(body, "capacity", ""), "capacity"),
                          int_value(field(body, "target", ""), "target"));
}

json serialize_knapsack(const KnapsackInstance& k) {
  json body;
  body["kind"] = "knapsack";
  body["capacity"] = k.capacity;
  body["target"] = k.target;
  json items = json::array();
  for (const auto& it : k.items) items.push_back({{"cost", it.cost}, {"value", it.value}});
  body["items"] = std::move(items);
  return body;
}

// ---- setcover ----

SetCoverInstance parse_setcover(const json& body) {
  reject_unknown_keys(body, {"kind", "universe", "subsets", "bound"}, "");
  const json& universe_json = array(field(body, "universe", ""), "universe");
  std::vector<std::string> universe;
  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < universe_json.size(); ++i) {
    universe.push_back(string_value(universe_json[i], item("universe", i)));
    index_of.emplace(universe.back(), i);
  }
  const json& subsets_json = array(field(body, "subsets", ""), "subsets");
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t i = 0; i < subsets_json.size(); ++i) {
    const std::string path = item("subsets", i);
    const json& sub = array(subsets_json[i], path);
    std::vector<std::size_t> indices;
    for (std::size_t j = 0; j < sub.size(); ++j) {
      const std::string label = string_value(sub[j], item(path, j));
      const auto it = index_of.find(label);
      if (it == index_of.end()) fail(item(path, j), "label '" + label + "' is not in the universe");
      indices.push_back(it->second);
    }
    subsets.push_back(std::move(indices));
  }
  return SetCoverInstance(std::move(universe), std::move(subsets),
                          int_value(field(body, "bound", ""), "bound"));
}

json serialize_setcover(const SetCoverInstance& sc) {
  json body;
  body["kind"] = "setcover";
  body["universe"] = sc.universe;
  json subsets = json::array();
  for (const auto& sub : sc.subsets) {
    json labels = json::array();
    for (std::size_t idx : sub) labels.push_back(sc.universe[idx]);
    subsets.push_back(std::move(labels));
  }
  body["subsets"] = std::move(subsets);
  body["bound"] = sc.bound;
  return body;
}

// ---- ssat ----

SsatLiteral parse_literal(const std::string& text, const std::string& path) {
  std::string_view s = text;
  SsatLiteral lit;
  if (!s.empty() && s.front() == '-') {
    lit.negated = true;
    s.remove_prefix(1);
  }
  if (s.empty() || (s.front() != 'x' && s.front() != 'y'))
    fail(path, "invalid literal '" + text + "'; expected forms like \"x1\" or \"-y2\"");
  lit.kind = s.front() == 'x' ? LiteralKind::Choice : LiteralKind::Chance;
  s.remove_prefix(1);
  if (s.empty()) fail(path, "invalid literal '" + text + "': missing variable index");
  int index = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      fail(path, "invalid literal '" + text + "': bad variable index");
    index = index * 10 + (c - '0');
    if (index > 1'000'000) fail(path, "invalid literal '" + text + "': index too large");
  }
  lit.index = index;
  return lit;
}

std::string literal_text(const SsatLiteral& lit) {
  std::string s;
  if (lit.negated) s += '-';
  s += lit.kind == LiteralKind::Choice ? 'x' : 'y';
  s += std::to_string(lit.index);
  return s;
}

SsatInstance parse_ssat(const json& body) {
  reject_unknown_keys(body, {"kind", "variables", "clauses"}, "");
  const auto variables = int_value(field(body, "variables", ""), "variables");
  const json& clauses_json = array(field(body, "clauses", ""), "clauses");
  std::vector<std::vector<SsatLiteral>> clauses;
  for (std::size_t i = 0; i < clauses_json.size(); ++i) {
    const std::string path = item("clauses", i);
    const json& clause = array(clauses_json[i], path);
    std::vector<SsatLiteral> lits;
    for (std::size_t j = 0; j < clause.size(); ++j)
      lits.push_back(parse_literal(string_value(clause[j], item(path, j)), item(path, j)));
    clauses.push_back(std::move(lits));
  }
  return SsatInstance(static_cast<int>(variables), std::move(clauses));
}

json serialize_ssat(const SsatInstance& s) {
  json body;
  body["kind"] = "ssat";
  body["variables"] = s.variables;
  json clauses = json::array();
  for (const auto& clause : s.clauses) {
    json lits = json::array();
    for (const auto& lit : clause) lits.push_back(literal_text(lit));
    clauses.push_back(std::move(lits));
  }
  body["clauses"] = std::move(clauses);
  return body;
}

// ---- performance profiles ----

PerformanceProfilesInstance parse_profiles(const json& body) {
  reject_unknown_keys(body, {"kind", "profiles", "budget", "target"}, "");
  const json& profiles_json = array(field(body, "profiles", ""), "profiles");
  std::vector<PiecewiseLinearProfile> profiles;
  for (std::size_t i = 0; i < profiles_json.size(); ++i) {
    const std::string path = item("profiles", i);
    const json& points_json = array(profiles_json[i], path);
    std::vector<Breakpoint> points;
    for (std::size_t j = 0; j < points_json.size(); ++j) {
      const std::string bp_path = item(path, j);
      const json& pair = array(points_json[j], bp_path);
      if (pair.size() != 2) fail(bp_path, "expected a [time, value] pair");
      points.push_back({rational_value(pair[0], join(bp_path, "time")),
                        rational_value(pair[1], join(bp_path, "value"))});
    }
    try {
      profiles.emplace_back(std::move(points));
    } catch (const ValidationError& e) {
      fail(path, e.what());
    }
  }
  return PerformanceProfilesInstance(std::move(profiles),
                                     rational_value(field(body, "budget", ""), "budget"),
                                     rational_value(field(body, "target", ""), "target"));
}

json serialize_profiles(const PerformanceProfilesInstance& p) {
  json body;
  body["kind"] = "performance-profiles";
  json profiles = json::array();
  for (const auto& profile : p.profiles) {
    json points = json::array();
    for (const auto& bp : profile.breakpoints())
      points.push_back({rational_json(bp.time), rational_json(bp.value)});
    profiles.push_back(std::move(points));
  }
  body["profiles"] = std::move(profiles);
  body["budget"] = rational_json(p.budget);
  body["target"] = rational_json(p.target);
  return body;
}

// ---- action evaluation ----

EvaluationNode parse_node(const json& v, const std::string& path) {
  const json& node = object(v, path);
  if (node.contains("value")) {
    reject_unknown_keys(node, {"value"}, path);
    return EvaluationNode::leaf(rational_value(node["value"], join(path, "value")));
  }
  reject_unknown_keys(node, {"cost", "children"}, path);
  const json& children_json = array(field(node, "children", path), join(path, "children"));
  std::vector<EvaluationNode::Edge> edges;
  for (std::size_t i = 0; i < children_json.size(); ++i) {
    const std::string edge_path = item(join(path, "children"), i);
    const json& edge = object(children_json[i], edge_path);
    reject_unknown_keys(edge, {"probability", "node"}, edge_path);
    edges.emplace_back(
        rational_value(field(edge, "probability", edge_path), join(edge_path, "probability")),
        parse_node(field(edge, "node", edge_path), join(edge_path, "node")));
  }
  try {
    return EvaluationNode::internal(
        rational_value(field(node, "cost", path), join(path, "cost")), std::move(edges));
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
}

json serialize_node(const EvaluationNode& node) {
  json v;
  if (node.is_leaf()) {
    v["value"] = rational_json(node.leaf_value());
    return v;
  }
  v["cost"] = rational_json(node.step_cost());
  json children = json::array();
  for (const auto& [p, child] : node.children())
    children.push_back({{"probability", rational_json(p)}, {"node", serialize_node(child)}});
  v["children"] = std::move(children);
  return v;
}

ActionEvaluationInstance parse_evaluation(const json& body) {
  reject_unknown_keys(body, {"kind", "trees", "budget", "names"}, "");
  const json& trees_json = array(field(body, "trees", ""), "trees");
  std::vector<EvaluationTree> trees;
  for (std::size_t i = 0; i < trees_json.size(); ++i)
    trees.push_back(parse_node(trees_json[i], item("trees", i)));
  std::vector<std::string> names;
  if (body.contains("names")) {
    const json& names_json = array(body["names"], "names");
    for (std::size_t i = 0; i < names_json.size(); ++i)
      names.push_back(string_value(names_json[i], item("names", i)));
  }
  return ActionEvaluationInstance(std::move(trees),
                                  rational_value(field(body, "budget", ""), "budget"),
                                  std::move(names));
}

json serialize_evaluation(const ActionEvaluationInstance& a) {
  json body;
  body["kind"] = "action-evaluation";
  json trees = json::array();
  for (const auto& tree : a.trees) trees.push_back(serialize_node(tree));
  body["trees"] = std::move(trees);
  body["budget"] = rational_json(a.budget);
  if (!a.names.empty()) body["names"] = a.names;
  return body;
}

// ---- state disambiguation ----

DisambiguationInstance parse_disambiguation(const json& body) {
  reject_unknown_keys(body, {"kind", "states", "prior", "utility", "queries", "budget", "target"},
                      "");
  const json& states_json = array(field(body, "states", ""), "states");
  std::vector<std::string> states;
  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < states_json.size(); ++i) {
    states.push_back(string_value(states_json[i], item("states", i)));
    index_of.emplace(states.back(), i);
  }
  const auto aligned = [&](const char* key) {
    const json& obj = object(field(body, key, ""), key);
    std::vector<Rational> values(states.size(), Rational(0));
    std::vector<bool> present(states.size(), false);
    for (const auto& [label, value] : obj.items()) {
      const auto it = index_of.find(label);
      if (it == index_of.end())
        fail(std::string(key), "unknown state '" + label + "'");
      values[it->second] = rational_value(value, join(key, "'" + label + "'"));
      present[it->second] = true;
    }
    for (std::size_t i = 0; i < states.size(); ++i)
      if (!present[i]) fail(std::string(key), "missing entry for state '" + states[i] + "'");
    return values;
  };
  std::vector<Rational> prior = aligned("prior");
  std::vector<Rational> utility = aligned("utility");
  const json& queries_json = array(field(body, "queries", ""), "queries");
  std::vector<DisambiguationInstance::Query> queries;
  for (std::size_t q = 0; q < queries_json.size(); ++q) {
    const std::string q_path = item("queries", q);
    const json& answers_json = array(queries_json[q], q_path);
    DisambiguationInstance::Query query;
    for (std::size_t a = 0; a < answers_json.size(); ++a) {
      const std::string a_path = item(q_path, a);
      const json& answer_json = array(answers_json[a], a_path);
      DisambiguationInstance::Answer answer;
      for (std::size_t j = 0; j < answer_json.size(); ++j) {
        const std::string label = string_value(answer_json[j], item(a_path, j));
        const auto it = index_of.find(label);
        if (it == index_of.end())
          fail(item(a_path, j), "label '" + label + "' is not a state");
        answer.push_back(it->second);
      }
      query.push_back(std::move(answer));
    }
    queries.push_back(std::move(query));
  }
  return DisambiguationInstance(std::move(states), std::move(prior), std::move(utility),
                                std::move(queries), int_value(field(body, "budget", ""), "budget"),
                                rational_value(field(body, "target", ""), "target"));
}

json serialize_disambiguation(const DisambiguationInstance& d) {
  json body;
  body["kind"] = "state-disambiguation";
  body["states"] = d.states;
  json prior, utility;
  for (std::size_t i = 0; i < d.states.size(); ++i) {
    prior[d.states[i]] = rational_json(d.prior[i]);
    utility[d.states[i]] = rational_json(d.utility[i]);
  }
  body["prior"] = std::move(prior);
  body["utility"] = std::move(utility);
  json queries = json::array();
  for (const auto& query : d.queries) {
    json answers = json::array();
    for (const auto& answer : query) {
      json labels = json::array();
      for (std::size_t idx : answer) labels.push_back(d.states[idx]);
      answers.push_back(std::move(labels));
    }
    queries.push_back(std::move(answers));
  }
  body["queries"] = std::move(queries);
  body["budget"] = d.budget;
  body["target"] = rational_json(d.target);
  return body;
}

}  // namespace

InstanceDocument parse_instance(std::string_view text) {
  json body;
  try {
    body = json::parse(std::string(text));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid document syntax: ") + e.what());
  }
  if (!body.is_object()) throw ParseError("document root must be an object");
  const auto kind_it = body.find("kind");
  if (kind_it == body.end()) throw ParseError("missing field 'kind'");
  const std::string name = string_value(*kind_it, "kind");
  const auto kind = kind_from_name(name);
  if (!kind) throw ParseError("kind: unknown instance kind '" + name + "'");
  try {
    switch (*kind) {
      case DocumentKind::Knapsack: return InstanceDocument(parse_knapsack(body));
      case DocumentKind::SetCover: return InstanceDocument(parse_setcover(body));
      case DocumentKind::Ssat: return InstanceDocument(parse_ssat(body));
      case DocumentKind::PerformanceProfiles: return InstanceDocument(parse_profiles(body));
      case DocumentKind::ActionEvaluation: return InstanceDocument(parse_evaluation(body));
      case DocumentKind::StateDisambiguation:
        return InstanceDocument(parse_disambiguation(body));
    }
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("kind: unknown instance kind '" + name + "'");
}

std::string serialize_instance(const InstanceDocument& doc) {
  const json body = std::visit(
      [](const auto& payload) -> json {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, KnapsackInstance>) return serialize_knapsack(payload);
        else if constexpr (std::is_same_v<T, SetCoverInstance>) return serialize_setcover(payload);
        else if constexpr (std::is_same_v<T, SsatInstance>) return serialize_ssat(payload);
        else if constexpr (std::is_same_v<T, PerformanceProfilesInstance>)
          return serialize_profiles(payload);
        else if constexpr (std::is_same_v<T, ActionEvaluationInstance>)
          return serialize_evaluation(payload);
        else
          return serialize_disambiguation(payload);
      },
      doc.payload());
  return body.dump(2) + "\n";
}

InstanceDocument load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void store_instance(const InstanceDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << serialize_instance(doc);
  if (!out) throw ParseError("failed while writing '" + path.string() + "'");
}

}  // namespace metareason

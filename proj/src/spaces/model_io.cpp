#include "tpdl/spaces/model_io.hpp"

#include <fstream>
#include <set>

#include "tpdl/error.hpp"
#include "tpdl/syntax/parser.hpp"

namespace tpdl {

namespace {

using nlohmann::json;

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw FormatError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (allowed.count(key) == 0) throw FormatError("unknown key '" + key + "' in " + where);
  }
}

PointId lookup(const Model& m, const json& id, const std::string& where) {
  if (!id.is_string()) throw FormatError(where + ": point ids must be strings");
  if (auto p = m.find_point(id.get<std::string>())) return *p;
  throw FormatError(where + ": unknown point '" + id.get<std::string>() + "'");
}

void check_name(const std::string& name, const std::string& role) {
  if (!syntax::is_identifier(name)) throw FormatError("'" + name + "' is not a valid " + role + " name");
}

}  // namespace

Model model_from_json(const json& j) {
  only_keys(j, {"points", "agents", "valuation"}, "model");
  if (!j.contains("points") || !j["points"].is_array()) throw FormatError("model needs a \"points\" array");

  std::vector<std::string> names;
  for (const auto& p : j["points"]) {
    if (!p.is_string()) throw FormatError("point ids must be strings");
    names.push_back(p.get<std::string>());
  }
  Model m = [&] {
    try {
      return Model(names);
    } catch (const PreconditionError& e) {
      throw FormatError(e.what());
    }
  }();

  if (j.contains("agents") && !j["agents"].is_object()) throw FormatError("\"agents\" must be an object");
  if (j.contains("valuation") && !j["valuation"].is_object()) throw FormatError("\"valuation\" must be an object");
  const json agents = j.value("agents", json::object());
  for (const auto& [name, spec] : agents.items()) {
    check_name(name, "agent");
    const std::string where = "agent '" + name + "'";
    only_keys(spec, {"kind", "edges"}, where);
    if (!spec.contains("kind") || !spec["kind"].is_string()) throw FormatError(where + " needs a \"kind\" string");
    const auto kind = parse_kind(spec["kind"].get<std::string>());
    if (!kind) throw FormatError(where + ": unknown kind '" + spec["kind"].get<std::string>() + "'");
    Relation r(m.size());
    const json edges = spec.value("edges", json::array());
    for (const auto& edge : edges) {
      if (!edge.is_array() || edge.size() != 2) throw FormatError(where + ": edges must be [from, to] pairs");
      r.add(lookup(m, edge[0], where), lookup(m, edge[1], where));
    }
    m.set_agent(name, *kind, std::move(r));
  }

  const json valuation = j.value("valuation", json::object());
  for (const auto& [atom, members] : valuation.items()) {
    check_name(atom, "atom");
    const std::string where = "valuation of '" + atom + "'";
    if (!members.is_array()) throw FormatError(where + " must be an array of point ids");
    if (m.has_agent(atom)) throw FormatError("'" + atom + "' is both an agent and an atom");
    PointSet truth(m.size());
    for (const auto& id : members) truth.insert(lookup(m, id, where));
    m.set_valuation(atom, std::move(truth));
  }
  return m;
}

json model_to_json(const Model& m) {
  json agents = json::object();
  for (const auto& a : m.agents()) {
    json edges = json::array();
    for (const auto& [from, to] : a.relation.pairs()) edges.push_back({m.point_name(from), m.point_name(to)});
    agents[a.name] = {{"kind", std::string(kind_name(a.kind))}, {"edges", std::move(edges)}};
  }
  json valuation = json::object();
  for (const auto& atom : m.atom_names()) {
    json members = json::array();
    m.valuation(atom).for_each([&](PointId p) { members.push_back(m.point_name(p)); });
    valuation[atom] = std::move(members);
  }
  return {{"points", m.points()}, {"agents", std::move(agents)}, {"valuation", std::move(valuation)}};
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open model file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return model_from_json(j);
}

}  // namespace tpdl

#include "tpdl/pltl/pltl_io.hpp"

#include <fstream>
#include <set>

#include "tpdl/error.hpp"

namespace tpdl::pltl {

using nlohmann::json;

namespace {

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw FormatError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (allowed.count(key) == 0) throw FormatError("unknown key '" + key + "' in " + where);
  }
}

template <class T>
T get(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw FormatError(where + " is missing \"" + key + "\"");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(where + ": \"" + key + "\" has the wrong type");
  }
}

}  // namespace

BijectiveModel bijective_from_json(const json& j) {
  only_keys(j, {"size", "succ", "valuation"}, "bijective model");
  const auto size = get<std::size_t>(j, "size", "bijective model");
  const auto succ = get<std::vector<std::size_t>>(j, "succ", "bijective model");
  if (succ.size() != size) throw FormatError("\"succ\" must list exactly \"size\" successors");
  BijectiveModel m = [&] {
    try {
      return BijectiveModel(succ);
    } catch (const PreconditionError& e) {
      throw FormatError(e.what());
    }
  }();
  const json valuation = j.value("valuation", json::object());
  for (const auto& [atom, members] : valuation.items()) {
    PointSet truth(size);
    for (const auto& p : members) {
      if (!p.is_number_unsigned() || p.get<std::size_t>() >= size) {
        throw FormatError("valuation of '" + atom + "' names a point outside 0.." + std::to_string(size - 1));
      }
      truth.insert(p.get<std::size_t>());
    }
    m.set_valuation(atom, std::move(truth));
  }
  return m;
}

json bijective_to_json(const BijectiveModel& m) {
  json valuation = json::object();
  for (const auto& atom : m.atom_names()) valuation[atom] = m.valuation(atom).members();
  return {{"size", m.size()}, {"succ", m.successor()}, {"valuation", valuation}};
}

TailSet tail_set_from_json(const json& j) {
  only_keys(j, {"left", "lo", "bits", "right"}, "tail set");
  return TailSet(get<bool>(j, "left", "tail set"), get<std::int64_t>(j, "lo", "tail set"),
                 get<std::vector<bool>>(j, "bits", "tail set"), get<bool>(j, "right", "tail set"));
}

json tail_set_to_json(const TailSet& s) {
  return {{"left", s.left_tail()}, {"lo", s.lo()}, {"bits", s.window()}, {"right", s.right_tail()}};
}

TailModel tail_model_from_json(const json& j) {
  only_keys(j, {"valuation"}, "tail model");
  TailModel m;
  const json valuation = j.value("valuation", json::object());
  for (const auto& [atom, set] : valuation.items()) {
    m.set_valuation(atom, tail_set_from_json(set));
  }
  return m;
}

json tail_model_to_json(const TailModel& m) {
  json valuation = json::object();
  for (const auto& atom : m.atom_names()) valuation[atom] = tail_set_to_json(m.valuation(atom));
  return {{"valuation", valuation}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace tpdl::pltl

#include "tpdl/spaces/constructions.hpp"

#include <sstream>

#include "tpdl/error.hpp"

namespace tpdl {

namespace {

Model map_relations(const Model& m, FrameKind kind, Relation (*close)(const Relation&)) {
  Model out(m.points());
  for (const auto& a : m.agents()) out.set_agent(a.name, kind, close(a.relation));
  for (const auto& atom : m.atom_names()) out.set_valuation(atom, m.valuation(atom));
  return out;
}

}  // namespace

Model reflexive_transitive_closure(const Model& m) {
  return map_relations(m, FrameKind::S4, &tpdl::reflexive_transitive_closure);
}

Model transitive_closure(const Model& m) { return map_relations(m, FrameKind::K4, &tpdl::transitive_closure); }

std::optional<std::string> check_p_morphism(const PMorphismWitness& w, const PMorphismCheck& options) {
  const Model& src = w.source;
  const Model& tgt = w.target;
  auto name_src = [&](PointId p) { return src.point_name(p); };
  auto name_tgt = [&](PointId p) { return tgt.point_name(p); };

  if (w.map.size() != src.size()) return "map is not total on the source";
  PointSet image(tgt.size());
  for (PointId x = 0; x < src.size(); ++x) {
    if (w.map[x] >= tgt.size()) return "map sends " + name_src(x) + " outside the target";
    image.insert(w.map[x]);
  }
  if (options.require_surjective && !image.is_full()) {
    const PointId missing = (image.complement()).members().front();
    return "map is not surjective: " + name_tgt(missing) + " has no preimage";
  }

  for (const auto& atom : tgt.atom_names()) {
    const PointSet& truth = tgt.valuation(atom);
    const PointSet* src_truth = src.has_atom(atom) ? &src.valuation(atom) : nullptr;
    for (PointId x = 0; x < src.size(); ++x) {
      const bool here = src_truth != nullptr && src_truth->contains(x);
      if (here != truth.contains(w.map[x])) return "atom " + atom + " differs at " + name_src(x);
    }
  }

  for (const auto& agent : w.agents) {
    const Relation& rs = src.agent(agent).relation;
    const Relation& rt = tgt.agent(agent).relation;
    for (PointId x = 0; x < src.size(); ++x) {
      std::optional<std::string> err;
      rs.successors(x).for_each([&](PointId y) {
        if (!err && !rt.has(w.map[x], w.map[y])) {
          err = "forth fails for " + agent + " on " + name_src(x) + " -> " + name_src(y);
        }
      });
      if (err) return err;
      if (options.back_domain && !options.back_domain->contains(x)) continue;
      PointSet reached(tgt.size());
      rs.successors(x).for_each([&](PointId y) { reached.insert(w.map[y]); });
      const PointSet unmatched = rt.successors(w.map[x]) - reached;
      if (!unmatched.empty()) {
        return "back fails for " + agent + " at " + name_src(x) + ": no successor maps to " +
               name_tgt(unmatched.members().front());
      }
    }
  }
  return std::nullopt;
}

Resolution irreflexive_resolution(const Model& m) {
  for (const auto& a : m.agents()) {
    if (auto v = validate_frame(a.relation, FrameKind::WK4)) {
      throw PreconditionError("agent '" + a.name + "' is not weakly transitive: " + v->describe(m.points()));
    }
  }

  const std::size_t n = m.size();
  std::vector<bool> split(n, false);
  for (const auto& a : m.agents()) {
    for (PointId w = 0; w < n; ++w) split[w] = split[w] || a.relation.has(w, w);
  }
  for (const auto& a : m.agents()) {
    for (PointId w = 0; w < n; ++w) {
      if (!split[w] || a.relation.has(w, w)) continue;
      a.relation.successors(w).for_each([&](PointId s) {
        if (a.relation.has(s, w)) {
          throw PreconditionError("point '" + m.point_name(w) + "' is reflexive for another agent but lies in a '" +
                                  a.name + "'-cluster with '" + m.point_name(s) + "' without being '" + a.name +
                                  "'-reflexive");
        }
      });
    }
  }

  // copies[w] lists the new points standing for w.
  std::vector<std::string> names;
  std::vector<PointId> label;
  std::vector<std::vector<PointId>> copies(n);
  for (PointId w = 0; w < n; ++w) {
    const int count = split[w] ? 2 : 1;
    for (int i = 0; i < count; ++i) {
      copies[w].push_back(names.size());
      names.push_back(split[w] ? m.point_name(w) + "." + std::to_string(i) : m.point_name(w));
      label.push_back(w);
    }
  }

  Model out(names);
  for (const auto& a : m.agents()) {
    Relation r(names.size());
    for (const auto& [w, v] : a.relation.pairs()) {
      for (PointId x : copies[w]) {
        for (PointId y : copies[v]) {
          if (x != y) r.add(x, y);
        }
      }
    }
    out.set_agent(a.name, FrameKind::IrreflexiveWK4, std::move(r));
  }
  for (const auto& atom : m.atom_names()) {
    PointSet truth(names.size());
    for (PointId x = 0; x < names.size(); ++x) {
      if (m.valuation(atom).contains(label[x])) truth.insert(x);
    }
    out.set_valuation(atom, std::move(truth));
  }

  PMorphismWitness witness{out, m, label, m.agent_names()};
  return Resolution{std::move(out), std::move(witness)};
}

Model restrict_to_open(const Model& m, const PointSet& u, const std::vector<std::string>& agents) {
  if (u.universe() != m.size()) throw PreconditionError("subset is over a different carrier");
  for (const auto& a : agents) {
    if (!is_open(m, a, u)) throw PreconditionError("subset is not open for agent '" + a + "'");
  }

  const std::vector<PointId> kept = u.members();
  std::vector<std::string> names;
  std::vector<std::optional<PointId>> index(m.size());
  for (PointId p : kept) {
    index[p] = names.size();
    names.push_back(m.point_name(p));
  }

  Model out(names);
  for (const auto& a : m.agents()) {
    Relation r(kept.size());
    for (const auto& [w, v] : a.relation.pairs()) {
      if (index[w] && index[v]) r.add(*index[w], *index[v]);
    }
    out.set_agent(a.name, a.kind, std::move(r));
  }
  for (const auto& atom : m.atom_names()) {
    PointSet truth(kept.size());
    m.valuation(atom).for_each([&](PointId p) {
      if (index[p]) truth.insert(*index[p]);
    });
    out.set_valuation(atom, std::move(truth));
  }
  return out;
}

Unwinding bounded_unwinding(const Model& m, PointId root, std::size_t max_length) {
  if (max_length == 0) throw PreconditionError("unwinding length must be positive");
  if (root >= m.size()) throw PreconditionError("root outside the carrier");
  for (const auto& a : m.agents()) {
    if (auto v = validate_frame(a.relation, FrameKind::K4)) {
      throw PreconditionError("agent '" + a.name + "' is not transitive: " + v->describe(m.points()));
    }
  }

  struct Node {
    std::optional<std::size_t> parent;
    std::size_t agent = 0;  // agent of the step into this node
    PointId point;
    std::size_t length;
    std::string name;
  };
  std::vector<Node> nodes{{std::nullopt, 0, root, 1, m.point_name(root)}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].length == max_length) continue;
    for (std::size_t a = 0; a < m.agents().size(); ++a) {
      const auto& frame = m.agents()[a];
      frame.relation.successors(nodes[i].point).for_each([&](PointId v) {
        nodes.push_back(Node{i, a, v, nodes[i].length + 1, nodes[i].name + "/" + frame.name + ":" + m.point_name(v)});
      });
    }
  }

  std::vector<std::string> names;
  Unwinding out;
  for (const auto& node : nodes) {
    names.push_back(node.name);
    out.label.push_back(node.point);
    out.length.push_back(node.length);
  }
  out.model = Model(names);

  // Each node is seen by the ancestors it reaches through steps of one agent only.
  for (std::size_t a = 0; a < m.agents().size(); ++a) {
    Relation r(nodes.size());
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      std::size_t cur = v;
      while (nodes[cur].parent && nodes[cur].agent == a) {
        cur = *nodes[cur].parent;
        r.add(cur, v);
      }
    }
    out.model.set_agent(m.agents()[a].name, FrameKind::IrreflexiveWK4, std::move(r));
  }
  for (const auto& atom : m.atom_names()) {
    PointSet truth(nodes.size());
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      if (m.valuation(atom).contains(nodes[v].point)) truth.insert(v);
    }
    out.model.set_valuation(atom, std::move(truth));
  }
  return out;
}

}  // namespace tpdl

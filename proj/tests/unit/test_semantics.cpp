#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tpdl/cli/random.hpp"
#include "tpdl/error.hpp"
#include "tpdl/pltl/doubling.hpp"
#include "tpdl/search/enumerate.hpp"
#include "tpdl/semantics/eval.hpp"
#include "tpdl/semantics/knowledge.hpp"
#include "tpdl/spaces/constructions.hpp"
#include "tpdl/syntax/parser.hpp"
#include "tpdl/syntax/printer.hpp"
#include "tpdl/syntax/translate.hpp"

using namespace tpdl;
using namespace tpdl::semantics;
using syntax::parse_formula;
using syntax::parse_program;

namespace {

const std::set<std::string> kAB{"a", "b"};

Model named(std::vector<std::string> names, FrameKind kind, const std::vector<std::pair<PointId, PointId>>& edges) {
  Model m(std::move(names));
  m.set_agent("a", kind, Relation::from_pairs(m.size(), edges));
  return m;
}

Model pairs_model(std::size_t n, const std::vector<std::vector<std::size_t>>& clusters, const std::string& agent,
                  Model m) {
  Relation r(n);
  for (const auto& c : clusters)
    for (auto x : c)
      for (auto y : c)
        if (x != y) r.add(x, y);
  m.set_agent(agent, FrameKind::MonadicDerivative, r);
  return m;
}

const std::vector<std::pair<std::string, FrameKind>> kTwoK{{"a", FrameKind::Any}, {"b", FrameKind::Any}};

}  // namespace

TEST_CASE("program semantics examples") {
  const Model cluster = named({"x", "y"}, FrameKind::MonadicDerivative, {{0, 1}, {1, 0}});
  CHECK(eval_program(cluster, parse_program("a*"), PointSet(2, {0})) == PointSet::full(2));
  CHECK(eval_program(cluster, parse_program("a;a u a"), PointSet(2)).empty());
  CHECK(eval_program(cluster, parse_program("a;a"), PointSet(2, {0})) == PointSet(2, {0}));
  CHECK_THROWS_AS(eval_program(cluster, parse_program("b"), PointSet(2)), UnknownIdentifier);

  Model chain = named({"x", "y"}, FrameKind::IrreflexiveWK4, {{0, 1}});
  chain.set_valuation("q", PointSet(2, {1}));
  CHECK(evaluate(chain, parse_formula("<a*>q", {"a"})) == PointSet::full(2));
  CHECK(holds_at(chain, "x", parse_formula("<a>q")));
  CHECK_FALSE(holds_at(chain, "y", parse_formula("<a>q")));
  CHECK_THROWS_AS(evaluate(chain, parse_formula("r")), UnknownIdentifier);
  CHECK_THROWS_AS(holds_at(chain, "t", parse_formula("q")), UnknownIdentifier);

  Model empty_p = Model::with_points(3);
  empty_p.set_valuation("p", PointSet(3));
  CHECK(evaluate(empty_p, parse_formula("~p")).is_full());
  CHECK(validates(empty_p, parse_formula("p -> false")));
  CHECK_FALSE(validates(empty_p, parse_formula("p")));
}

TEST_CASE("star results contain their argument and star-free programs are normal") {
  gen::Rng rng(41);
  gen::FormulaOptions opts{{"a", "b"}, {}, 0, 3, true};
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = gen::uniform(rng, 1, 7);
    const Model m = gen::random_model(rng, n, {{"a", FrameKind::Any}, {"b", FrameKind::WK4}}, {});
    const auto p = gen::random_program(rng, opts, 3);
    const PointSet y = PointSet::from_mask(n, rng() & ((1U << n) - 1));
    CHECK(y.is_subset_of(eval_program(m, syntax::Program::star(p), y)));
    opts.star = false;
    CHECK(eval_program(m, gen::random_program(rng, opts, 3), PointSet(n)).empty());
    opts.star = true;
  }
}

TEST_CASE("star oracle") {
  SUBCASE("trivial cases") {
    const Model anti = named({"x", "y", "z"}, FrameKind::IrreflexiveWK4, {});
    CHECK(star_oracle(anti, parse_program("a"), PointSet(3)).empty());
    CHECK(star_oracle(anti, parse_program("a"), PointSet::full(3)).is_full());
    Model big = Model::with_points(17);
    big.set_agent("a", FrameKind::Any, Relation(17));
    CHECK_THROWS_AS(star_oracle(big, parse_program("a"), PointSet(17)), PreconditionError);
  }
  SUBCASE("every single-agent relation up to three points") {
    const auto star_a = parse_program("a");
    for (std::size_t n = 1; n <= 3; ++n) {
      search::for_each_relation(n, FrameKind::Any, [&](const Relation& r) {
        Model m = Model::with_points(n);
        m.set_agent("a", FrameKind::Any, r);
        const auto mat = oracle::relation_matrix(m, "a");
        for (std::uint32_t y = 0; y < (1U << n); ++y) {
          const PointSet ys = PointSet::from_mask(n, y);
          const PointSet fix = eval_program(m, syntax::Program::star(star_a), ys);
          REQUIRE(fix.to_mask() == oracle::least_closed_superset(mat, y));
          REQUIRE(star_oracle(m, star_a, ys) == fix);
        }
        return true;
      });
    }
  }
  SUBCASE("every pair of relations on two points") {
    const std::vector<syntax::Program> bodies{parse_program("a"), parse_program("a u b"), parse_program("a;b")};
    const auto rels = search::all_relations(2, FrameKind::Any);
    for (const auto& ra : rels) {
      for (const auto& rb : rels) {
        Model m = Model::with_points(2);
        m.set_agent("a", FrameKind::Any, ra);
        m.set_agent("b", FrameKind::Any, rb);
        for (const auto& body : bodies) {
          const auto mat = oracle::program_matrix(m, body);
          for (std::uint32_t y = 0; y < 4; ++y) {
            const PointSet ys = PointSet::from_mask(2, y);
            const PointSet fix = eval_program(m, syntax::Program::star(body), ys);
            REQUIRE(star_oracle(m, body, ys) == fix);
            REQUIRE(fix.to_mask() == oracle::least_closed_superset(mat, y));
          }
        }
      }
    }
  }
  SUBCASE("random bimodels up to eight points") {
    gen::Rng rng(43);
    gen::FormulaOptions opts{{"a", "b"}, {}, 0, 3, true};
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = gen::uniform(rng, 1, 8);
      const Model m = gen::random_model(rng, n, kTwoK, {}, 0.2);
      const auto body = gen::random_program(rng, opts, 3);
      const PointSet ys = PointSet::from_mask(n, rng() & ((1U << n) - 1));
      REQUIRE(star_oracle(m, body, ys) == eval_program(m, syntax::Program::star(body), ys));
    }
  }
}

TEST_CASE("evaluator agrees with the pointwise oracle") {
  gen::Rng rng(47);
  gen::FormulaOptions opts{{"a", "b"}, {"p", "q"}, 4, 3, true};
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = gen::uniform(rng, 1, 6);
    const Model m = gen::random_model(rng, n, kTwoK, {"p", "q"});
    const auto f = gen::random_formula(rng, opts);
    CAPTURE(syntax::to_string(f));
    REQUIRE(oracle::bits(evaluate(m, f)) == oracle::truth(m, f));
  }
}

TEST_CASE("union and composition clauses") {
  gen::Rng rng(53);
  gen::FormulaOptions opts{{"a", "b"}, {"p", "q"}, 3, 2, true};
  for (int i = 0; i < 300; ++i) {
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 6), kTwoK, {"p", "q"});
    const auto f = gen::random_formula(rng, opts);
    const auto x = gen::random_program(rng, opts, 2);
    const auto y = gen::random_program(rng, opts, 2);
    using F = syntax::Formula;
    using P = syntax::Program;
    CHECK(evaluate(m, F::diamond(P::choice(x, y), f)) ==
          (evaluate(m, F::diamond(x, f)) | evaluate(m, F::diamond(y, f))));
    CHECK(evaluate(m, F::diamond(P::seq(x, y), f)) == evaluate(m, F::diamond(x, F::diamond(y, f))));
    CHECK(evaluate(m, F::box(x, f)) == evaluate(m, F::negation(F::diamond(x, F::negation(f)))));
  }
}

TEST_CASE("subformula cache") {
  Model m = Model::with_points(2);
  m.set_agent("a", FrameKind::Any, Relation::from_pairs(2, {{0, 1}}));
  m.set_valuation("p", PointSet(2, {1}));
  const auto f = parse_formula("<a>p & ~p");
  const EvalResult r = truth_set(m, f);
  CHECK(r.truth_set() == PointSet(2, {0}));
  CHECK(r.subformulas().back().first == f);
  REQUIRE(r.find(parse_formula("<a>p")) != nullptr);
  CHECK(*r.find(parse_formula("<a>p")) == PointSet(2, {0}));
  CHECK(*r.find(parse_formula("p")) == PointSet(2, {1}));
  CHECK(r.find(parse_formula("[a]p")) == nullptr);
}

TEST_CASE("star translation on Kripke bimodels matches the reflexive-transitive closure") {
  gen::Rng rng(59);
  gen::FormulaOptions opts{{"a", "b"}, {"p", "q"}, 4, 2, true};
  for (int i = 0; i < 150; ++i) {
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 6), kTwoK, {"p", "q"});
    const Model star = reflexive_transitive_closure(m);
    for (int k = 0; k < 10; ++k) {
      const auto f = gen::random_formula(rng, opts);
      REQUIRE(oracle::truth(m, syntax::star_translation(f)) == oracle::truth(star, f));
      REQUIRE(evaluate(m, syntax::star_translation(f)) == evaluate(star, f));
    }
  }
}

TEST_CASE("star translation is invisible on preorders") {
  gen::Rng rng(61);
  gen::FormulaOptions opts{{"a", "b"}, {"p", "q"}, 4, 2, true};
  for (int i = 0; i < 150; ++i) {
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 6), {{"a", FrameKind::S4}, {"b", FrameKind::S4}},
                                      {"p", "q"});
    for (int k = 0; k < 10; ++k) {
      const auto f = gen::random_formula(rng, opts);
      REQUIRE(evaluate(m, f) == evaluate(m, syntax::star_translation(f)));
    }
  }
}

TEST_CASE("plus translation matches the transitive closure") {
  gen::Rng rng(67);
  gen::FormulaOptions opts{{"a", "b"}, {"p", "q"}, 4, 2, true};
  for (int i = 0; i < 150; ++i) {
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 6), kTwoK, {"p", "q"});
    const Model plus = transitive_closure(m);
    for (int k = 0; k < 10; ++k) {
      const auto f = gen::random_formula(rng, opts);
      REQUIRE(oracle::truth(m, syntax::plus_translation(f)) == oracle::truth(plus, f));
    }
  }
}

TEST_CASE("common knowledge") {
  CHECK(common_knowledge({"a", "b"}, parse_formula("two")) == parse_formula("C{a,b} two", kAB));
  CHECK(group_program({"a", "b", "c"}) == parse_program("(a u b u c)*"));
  CHECK_THROWS_AS(group_program({}), PreconditionError);

  SUBCASE("true is common knowledge everywhere") {
    gen::Rng rng(71);
    const Model m = gen::random_model(rng, 5, {{"a", FrameKind::WK4}, {"b", FrameKind::Any}}, {});
    const auto r = common_knowledge_open_check(m, {"a", "b"}, syntax::Formula::top());
    CHECK(r.truth.is_full());
    CHECK(r.jointly_open());
    CHECK(r.witness(3) == PointSet::full(5));
  }
  SUBCASE("a single non-open point") {
    Model m = named({"x", "y"}, FrameKind::IrreflexiveWK4, {{0, 1}});
    m.set_agent("b", FrameKind::IrreflexiveWK4, Relation(2));
    m.set_valuation("p", PointSet(2, {0}));
    const auto r = common_knowledge_open_check(m, {"a", "b"}, parse_formula("p", kAB));
    CHECK(r.truth.empty());
    CHECK(r.jointly_open());
    CHECK_FALSE(r.witness(0));
  }
  SUBCASE("doubled 2-cycle") {
    const auto d = pltl::doubling(pltl::BijectiveModel({1, 0}));
    const auto r = common_knowledge_open_check(d.model, {"a", "b"}, two_formula("a", "b"));
    CHECK(r.truth.is_full());
    CHECK(r.open_for == std::vector<std::pair<std::string, bool>>{{"a", true}, {"b", true}});
    CHECK(holds_at(d.model, "x0", parse_formula("<a>~whole", kAB)));
  }
}

TEST_CASE("common knowledge truth sets are open for every agent") {
  gen::Rng rng(73);
  gen::FormulaOptions opts{{"a", "b"}, {"p", "q"}, 3, 2, true};
  for (int i = 0; i < 300; ++i) {
    const auto kind = all_kinds()[gen::uniform(rng, 0, all_kinds().size() - 1)];
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 7), {{"a", kind}, {"b", FrameKind::Any}}, {"p", "q"});
    const auto r = common_knowledge_open_check(m, {"a", "b"}, gen::random_formula(rng, opts));
    REQUIRE(r.jointly_open());
    const auto u = r.truth;
    const auto mat_a = oracle::relation_matrix(m, "a");
    u.for_each([&](PointId x) {
      for (std::size_t y = 0; y < m.size(); ++y) REQUIRE((!mat_a[x][y] || u.contains(y)));
    });
  }
}

TEST_CASE("restriction to a jointly open set preserves truth") {
  gen::Rng rng(79);
  gen::FormulaOptions opts{{"a", "b"}, {"p", "q"}, 4, 2, true};
  for (int i = 0; i < 200; ++i) {
    const Model m = gen::random_model(rng, gen::uniform(rng, 1, 7), {{"a", FrameKind::WK4}, {"b", FrameKind::Any}},
                                      {"p", "q"});
    const PointSet u = evaluate(m, common_knowledge({"a", "b"}, gen::random_formula(rng, opts)));
    const Model sub = restrict_to_open(m, u, {"a", "b"});
    for (int k = 0; k < 10; ++k) {
      const auto f = gen::random_formula(rng, opts);
      u.for_each([&](PointId x) { REQUIRE(holds_at(m, x, f) == holds_at(sub, m.point_name(x), f)); });
    }
  }
}

TEST_CASE("the Two formula") {
  CHECK(syntax::to_string(two_for("a")) == "(whole -> [a]~whole & <a>~whole) & (~whole -> [a]whole & <a>whole)");
  CHECK(two_formula("a", "b") == syntax::Formula::conj(two_for("a"), two_for("b")));
  CHECK_THROWS_AS(two_formula("a", "a"), PreconditionError);

  SUBCASE("fails at a lone point") {
    Model m = pairs_model(3, {{0, 1}, {2}}, "a", Model::with_points(3));
    m = pairs_model(3, {{0, 1}, {2}}, "b", m);
    m.set_valuation("whole", PointSet::full(3));
    CHECK_FALSE(validates_two(m, "a", "b"));
  }
  SUBCASE("doubled models of random permutations validate it") {
    gen::Rng rng(83);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = gen::uniform(rng, 1, 8);
      const auto d = pltl::doubling(pltl::BijectiveModel(gen::random_permutation(rng, n)));
      CHECK(validates_two(d.model, "a", "b"));
    }
  }
}

TEST_CASE("successor extraction") {
  SUBCASE("doubled model") {
    const auto d = pltl::doubling(pltl::BijectiveModel({1, 2, 0}));
    const auto sa = extract_successor(d.model, "a");
    const auto sb = extract_successor(d.model, "b");
    REQUIRE(sa.ok());
    REQUIRE(sb.ok());
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(d.model.point_name((*sa.map)[d.embedding[i]]) == "x" + std::to_string(i) + "'");
    }
    const auto s = compose(*sa.map, *sb.map);
    CHECK(s[d.embedding[0]] == d.embedding[1]);
    CHECK(s[d.embedding[2]] == d.embedding[0]);
  }
  SUBCASE("a 3-point cluster has no partner") {
    const Model m = pairs_model(4, {{0, 1, 2}, {3}}, "a", Model::with_points(4));
    const auto e = extract_successor(m, "a");
    CHECK_FALSE(e.ok());
    CHECK(e.failure_point == PointId{0});
    CHECK_FALSE(e.reason.empty());
  }
  SUBCASE("two-valid random pairs models give involutions and a bijective composite") {
    gen::Rng rng(89);
    int valid = 0;
    for (int i = 0; i < 400; ++i) {
      const std::size_t n = 2 * gen::uniform(rng, 1, 4);
      Model m = Model::with_points(n);
      for (const char* agent : {"a", "b"}) {
        const auto perm = gen::random_permutation(rng, n);
        std::vector<std::vector<std::size_t>> clusters;
        for (std::size_t k = 0; k < n; k += 2) clusters.push_back({perm[k], perm[k + 1]});
        m = pairs_model(n, clusters, agent, m);
      }
      m.set_valuation("whole", PointSet::from_mask(n, rng() & ((1U << n) - 1)));
      if (!validates_two(m, "a", "b")) continue;
      ++valid;
      const auto sa = extract_successor(m, "a");
      const auto sb = extract_successor(m, "b");
      REQUIRE(sa.ok());
      REQUIRE(sb.ok());
      CHECK(is_bijection(*sa.map));
      CHECK(is_bijection(*sb.map));
      for (PointId x = 0; x < n; ++x) {
        CHECK((*sa.map)[(*sa.map)[x]] == x);
        CHECK((*sb.map)[(*sb.map)[x]] == x);
      }
      CHECK(is_bijection(compose(*sa.map, *sb.map)));
    }
    CHECK(valid > 10);
  }
  CHECK(is_bijection({2, 0, 1}));
  CHECK_FALSE(is_bijection({0, 0}));
  CHECK_FALSE(is_bijection({3, 0, 1}));
}

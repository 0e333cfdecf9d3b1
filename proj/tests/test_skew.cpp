#include <gtest/gtest.h>

#include <set>

#include "common.hpp"
#include "skewgentle/corpus.hpp"
#include "skewgentle/engine.hpp"
#include "skewgentle/skew.hpp"

using namespace skewgentle;

namespace {

std::set<std::string> relation_strings(const QuiverSpec& q) {
  std::set<std::string> out;
  const std::string dsl = serialize_quiver(q);
  std::size_t pos = 0;
  while ((pos = dsl.find("rel ", pos)) != std::string::npos) {
    const auto end = dsl.find(';', pos);
    out.insert(dsl.substr(pos + 4, end - pos - 4));
    pos = end;
  }
  return out;
}

}  // namespace

TEST(Split, ExampleQuiver) {
  const auto sq = split_triple(sgtest::example_triple());
  EXPECT_EQ(sq.spec.vertices(), (std::vector<std::string>{"1__p", "1__m", "2__p", "2__m", "3", "4"}));
  EXPECT_EQ(sq.spec.arrow_count(), 7);
  EXPECT_EQ(relation_strings(sq.spec),
            (std::set<std::string>{"a__p_p*b__p_o + a__p_m*b__m_o", "a__m_p*b__p_o + a__m_m*b__m_o"}));
  EXPECT_EQ(sq.minus_vertices.size(), 2u);
  EXPECT_EQ(sq.plus_vertices.size(), 2u);
  EXPECT_TRUE(sq.is_minus(*sq.spec.find_vertex("2__m")));
}

TEST(Split, EmptySpecialSetIsIdentity) {
  const auto q = sgtest::spec(sgtest::kChain);
  const auto sq = split_triple(require_skew_gentle(q));
  EXPECT_EQ(parse_quiver(serialize_quiver(sq.spec)), q);
}

TEST(Split, SpecialMiddleVertexLiftsMonomialRelation) {
  // vertex 2 special, ordinary neighbours: a b becomes two monomial relations
  const auto sq = split_triple(require_skew_gentle(sgtest::spec(sgtest::chain_with_special("2"))));
  EXPECT_EQ(sq.spec.vertex_count(), 5);
  EXPECT_EQ(sq.spec.arrow_count(), 5);
  EXPECT_EQ(relation_strings(sq.spec), (std::set<std::string>{"a__o_p*b__p_o + a__o_m*b__m_o"}));
}

TEST(Split, GeneratedSplitsMatchOracle) {
  GenConfig c;
  c.seed = 11;
  c.count = 40;
  for (const auto& inst : generate_corpus(c)) {
    const auto sq = split_triple(require_skew_gentle(inst.spec));
    EXPECT_EQ(realize<Rational>(sq.spec).dimension(), oracle_dimension<Rational>(sq.spec)) << inst.dsl;
    EXPECT_EQ(realize<F2>(sq.spec).dimension(), realize<Rational>(sq.spec).dimension()) << inst.dsl;
  }
}

TEST(Gamma, ExampleDisplay) {
  const auto g = build_gamma(sgtest::example_triple());
  EXPECT_EQ(g.spec.vertices(), (std::vector<std::string>{"1", "2", "3__p", "3__m", "4__p", "4__m"}));
  EXPECT_EQ(g.spec.arrow_count(), 6);
  EXPECT_EQ(relation_strings(g.spec), (std::set<std::string>{"a__p*b__m", "a__m*b__p"}));
  EXPECT_TRUE(check_gentle(g.spec).is_gentle);
  for (int v = 0; v < g.spec.vertex_count(); ++v)
    EXPECT_EQ(g.vertex_action[static_cast<std::size_t>(g.vertex_action[static_cast<std::size_t>(v)])], v);
  EXPECT_EQ(g.vertex_action[0], 0);
  EXPECT_EQ(g.vertex_action[2], 3);
  for (int a = 0; a < g.spec.arrow_count(); ++a) {
    const int b = g.arrow_action[static_cast<std::size_t>(a)];
    EXPECT_NE(a, b);
    EXPECT_EQ(g.arrow_action[static_cast<std::size_t>(b)], a);
  }
}

TEST(Probes, ExamplePassesWithOneSignPair) {
  const auto sq = split_triple(sgtest::example_triple());
  const auto rq = structure_probes(sq, realize<Rational>(sq.spec));
  const auto r2 = structure_probes(sq, realize<F2>(sq.spec));
  EXPECT_TRUE(rq.passed) << rq.to_json().dump();
  EXPECT_TRUE(r2.passed);
  EXPECT_EQ(rq.sign_pairs.size(), 1u);
}

TEST(Probes, InvariantUnderSignSwap) {
  GenConfig c;
  c.seed = 5;
  c.count = 40;
  for (const auto& inst : generate_corpus(c)) {
    const auto sq = split_triple(require_skew_gentle(inst.spec));
    const auto sw = swap_signs(sq);
    const auto a = realize<Rational>(sq.spec);
    const auto b = realize<Rational>(sw.spec);
    EXPECT_EQ(a.dimension(), b.dimension());
    EXPECT_TRUE(structure_probes(sq, a).passed) << inst.dsl;
    EXPECT_TRUE(structure_probes(sw, b).passed) << inst.dsl;
  }
}

TEST(Split, AllSpecialRelationGivesFourSquares) {
  const auto t = require_skew_gentle(sgtest::spec("vertices 1 2 3; arrow a: 1->2; arrow b: 2->3; rel a*b; special 1 2 3;"));
  const auto sq = split_triple(t);
  EXPECT_EQ(sq.spec.vertex_count(), 6);
  EXPECT_EQ(sq.spec.arrow_count(), 8);
  ASSERT_EQ(sq.spec.relations().size(), 4u);
  for (const auto& r : sq.spec.relations()) {
    ASSERT_EQ(r.terms.size(), 2u);
    EXPECT_EQ(r.terms[0].coefficient, Rational(1));
    EXPECT_EQ(r.terms[1].coefficient, Rational(1));
  }
  const auto a = realize<Rational>(sq.spec);
  EXPECT_EQ(a.dimension(), oracle_dimension<Rational>(sq.spec));
  EXPECT_TRUE(structure_probes(sq, a).passed);
}

TEST(Split, VertexAndArrowCountsFollowKinds) {
  GenConfig c;
  c.seed = 3;
  c.count = 60;
  for (const auto& inst : generate_corpus(c)) {
    const auto t = require_skew_gentle(inst.spec);
    const auto sq = split_triple(t);
    const int sp = static_cast<int>(t.special_vertices.size());
    EXPECT_EQ(sq.spec.vertex_count(), t.base.vertex_count() + sp);
    int arrows = 0;
    for (const auto& a : t.base.arrows()) arrows += (t.is_special(a.source) ? 2 : 1) * (t.is_special(a.target) ? 2 : 1);
    EXPECT_EQ(sq.spec.arrow_count(), arrows) << inst.dsl;
    for (int a = 0; a < sq.spec.arrow_count(); ++a)
      EXPECT_EQ(sq.arrow_origin[static_cast<std::size_t>(a)] >= 0, true);
  }
}

TEST(Gamma, SingleOrdinaryVertex) {
  const auto g = build_gamma(require_skew_gentle(sgtest::spec("vertices 1;")));
  EXPECT_EQ(g.spec.vertex_count(), 2);
  EXPECT_EQ(g.spec.arrow_count(), 0);
  EXPECT_EQ(g.vertex_action, (std::vector<int>{1, 0}));
}

TEST(Gamma, GeneratedTriplesGiveGentlePairs) {
  GenConfig c;
  c.seed = 17;
  c.count = 80;
  for (const auto& inst : generate_corpus(c)) {
    const auto g = build_gamma(require_skew_gentle(inst.spec));
    EXPECT_TRUE(check_gentle(g.spec).is_gentle) << inst.dsl;
  }
}

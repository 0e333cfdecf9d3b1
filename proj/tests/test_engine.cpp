#include <gtest/gtest.h>

#include "common.hpp"
#include "skewgentle/corpus.hpp"
#include "skewgentle/engine.hpp"
#include "skewgentle/skew.hpp"

using namespace skewgentle;

TEST(Engine, ChainDimensionMatchesPathCount) {
  const auto q = sgtest::spec(sgtest::kChain);
  const auto a = realize<Rational>(q);
  // e1..e4, a, b, c, bc
  EXPECT_EQ(a.dimension(), 8);
  EXPECT_EQ(a.dimension(), sgtest::monomial_path_count(q));
  EXPECT_EQ(oracle_dimension<Rational>(q), 8);
  EXPECT_EQ(a.graded_dimensions(), (std::vector<int>{4, 3, 1}));
  EXPECT_EQ(radical_filtration_dims(a), (std::vector<int>{8, 4, 1, 0}));
}

TEST(Engine, SplitExampleOverTwoFields) {
  const auto sq = split_triple(sgtest::example_triple());
  const auto aq = realize<Rational>(sq.spec);
  const auto a2 = realize<F2>(sq.spec);
  EXPECT_EQ(aq.dimension(), 19);
  EXPECT_EQ(a2.dimension(), 19);
  EXPECT_EQ(oracle_dimension<Rational>(sq.spec), 19);
  EXPECT_EQ(oracle_dimension<F2>(sq.spec), 19);
  EXPECT_FALSE(associativity_witness(*aq.algebra()).has_value());
}

TEST(Engine, AntiCommutativeSquareNormalForm) {
  const auto sq = split_triple(sgtest::example_triple());
  const auto a = realize<Rational>(sq.spec);
  const auto p = a.normal_form(sq.spec.path({"a__p_p", "b__p_o"}));
  const auto p2 = a.normal_form(sq.spec.path({"a__p_m", "b__m_o"}));
  EXPECT_FALSE(p.terms.empty());
  auto sum = p;
  add_scaled(sum, p2, Rational(1));
  EXPECT_TRUE(sum.terms.empty()) << a.format(p) << " vs " << a.format(p2);
}

TEST(Engine, InfiniteDimensionHitsCap) {
  const auto loop = sgtest::spec("vertices 1; arrow x: 1->1;");
  EXPECT_THROW(realize<Rational>(loop, 10), CapExceeded);
  EXPECT_THROW(oracle_dimension<Rational>(loop, 10), CapExceeded);
  const auto nil = sgtest::spec("vertices 1; arrow x: 1->1; rel x*x;");
  EXPECT_EQ(realize<Rational>(nil).dimension(), 2);
}

TEST(Engine, SquareDimensionIndependentOfSign) {
  // 4 idempotents, 4 arrows, one class of length 2
  for (const char* rel : {"rel a*b + c*d;", "rel a*b - c*d;"}) {
    const auto q =
        sgtest::spec(std::string("vertices 1 2 3 4; arrow a: 1->2; arrow b: 2->4; arrow c: 1->3; arrow d: 3->4; ") +
                     rel);
    EXPECT_EQ(realize<Rational>(q).dimension(), 9);
    EXPECT_EQ(realize<F2>(q).dimension(), 9);
    EXPECT_EQ(oracle_dimension<F3>(q), 9);
  }
}

TEST(Engine, GeneratedGentlePairsMatchMonomialCount) {
  GenConfig c;
  c.count = 60;
  c.seed = 7;
  for (const auto& q : generate_gentle(c)) {
    const auto a = realize<Rational>(q);
    EXPECT_EQ(a.dimension(), sgtest::monomial_path_count(q)) << serialize_quiver(q);
    EXPECT_FALSE(associativity_witness(*a.algebra()).has_value());
  }
}

TEST(Engine, ProductsFollowPathConcatenation) {
  const auto q = sgtest::spec(sgtest::kChain);
  const auto a = realize<Rational>(q);
  const int ib = *a.index_of(q.path({"b"}));
  const int ic = *a.index_of(q.path({"c"}));
  const int ia = *a.index_of(q.path({"a"}));
  const auto bc = a.product(ib, ic);
  ASSERT_EQ(bc.terms.size(), 1u);
  EXPECT_EQ(a.basis_label(bc.terms.begin()->first), "b*c");
  EXPECT_TRUE(a.product(ia, ib).terms.empty());
  EXPECT_TRUE(a.product(ic, ib).terms.empty());
}

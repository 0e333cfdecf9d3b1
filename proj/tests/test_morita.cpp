#include <gtest/gtest.h>

#include "common.hpp"
#include "skewgentle/engine.hpp"
#include "skewgentle/morita.hpp"

using namespace skewgentle;

namespace {

template <class S>
struct Setup {
  SplitQuiver sq;
  PresentedAlgebra<S> alg;
  PeirceData<S> pd;
};

template <class S>
Setup<S> setup(const std::string& sp) {
  const auto t = require_skew_gentle(sgtest::spec(sgtest::chain_with_special(sp)));
  auto sq = split_triple(t);
  auto alg = realize<S>(sq.spec);
  auto pd = peirce(alg, sq);
  return {std::move(sq), std::move(alg), std::move(pd)};
}

}  // namespace

TEST(Peirce, ExampleBlockDimensions) {
  const auto s = setup<Rational>("1 2");
  EXPECT_EQ(s.pd.dim_A(), 19);
  EXPECT_EQ(s.pd.B.size(), 10u);
  EXPECT_EQ(s.pd.M.size(), 1u);
  EXPECT_EQ(s.pd.N.size(), 5u);
  EXPECT_EQ(s.pd.C.size(), 3u);
  EXPECT_EQ(s.pd.f_image.dim(), 2);
  EXPECT_EQ(s.pd.B.size() + s.pd.M.size() + s.pd.N.size() + s.pd.C.size(), 19u);
}

TEST(Peirce, EmptySpecialSetIsDegenerate) {
  const auto t = require_skew_gentle(sgtest::spec(sgtest::kChain));
  const auto sq = split_triple(t);
  const auto pd = peirce(realize<Rational>(sq.spec), sq);
  EXPECT_TRUE(pd.degenerate());
  EXPECT_EQ(pd.B.size(), 8u);
  EXPECT_TRUE(pd.C.empty());
}

TEST(Corners, CIsPathAlgebraOfA2) {
  for (const auto& factors : {present_C(setup<Rational>("1 2").pd).factors, present_C(setup<F2>("1 2").pd).factors})
    EXPECT_EQ(factors, (std::vector<std::string>{"A_2"}));
  const auto c = present_C(setup<Rational>("1 2").pd);
  EXPECT_TRUE(c.iso.ok) << c.iso.witness;
  EXPECT_EQ(c.quiver.vertex_count(), 2);
  EXPECT_EQ(c.quiver.arrow_count(), 1);
  EXPECT_TRUE(c.quiver.relations().empty());
}

TEST(Corners, SingleSpecialVertexGivesField) {
  const auto c = present_C(setup<Rational>("2").pd);
  EXPECT_EQ(c.factors, (std::vector<std::string>{"k"}));
  EXPECT_TRUE(c.iso.ok);
}

TEST(Corners, BIsGentleOverPlusLifts) {
  const auto s = setup<Rational>("1 2");
  const auto b = present_B(s.pd, sgtest::example_triple());
  EXPECT_TRUE(b.iso.ok) << b.iso.witness;
  EXPECT_EQ(b.quiver.vertex_count(), 4);
  EXPECT_EQ(b.quiver.arrow_count(), 3);
  ASSERT_TRUE(b.gentle_or.has_value());
  EXPECT_TRUE(*b.gentle_or);
}

TEST(Corners, WrongArrowImageIsRejected) {
  const auto s = setup<Rational>("1 2");
  auto c = present_C(s.pd);
  const auto pc = realize<Rational>(c.quiver);
  std::vector<Element<Rational>> zero_images(c.arrow_images.size());
  Matrix<Rational> target(s.pd.dim_A(), static_cast<Index>(s.pd.C.size()));
  target.setZero();
  for (std::size_t k = 0; k < s.pd.C.size(); ++k) target(s.pd.C[k], static_cast<Index>(k)) = Rational(1);
  const auto iso = verify_presentation(pc, s.alg, c.vertex_images, zero_images, Subspace<Rational>::span(target),
                                       Subspace<Rational>(s.pd.dim_A()));
  EXPECT_FALSE(iso.ok);
  EXPECT_FALSE(iso.witness.empty());
}

TEST(Bimodules, ArrowsThroughMinusVertices) {
  const auto s = setup<Rational>("1 2");
  const auto d = decompose_bimodules(s.pd, present_C(s.pd));
  EXPECT_TRUE(d.m_direct);
  EXPECT_TRUE(d.n_direct);
  std::vector<std::string> m, n;
  for (const auto& g : d.m_arrows) m.insert(m.end(), g.begin(), g.end());
  for (const auto& g : d.n_arrows) n.insert(n.end(), g.begin(), g.end());
  std::sort(n.begin(), n.end());
  EXPECT_EQ(m, (std::vector<std::string>{"a__p_m"}));
  EXPECT_EQ(n, (std::vector<std::string>{"a__m_p", "b__m_o"}));
}

TEST(Bimodules, OneSidedProjectivity) {
  for (const char* sp : {"1 2", "1", "2", "4", "1 2 4"}) {
    const auto s = setup<Rational>(sp);
    const auto v = check_one_sided_projectivity(s.pd);
    EXPECT_TRUE(v.m_projective) << sp;
    EXPECT_TRUE(v.n_projective) << sp;
  }
}

TEST(Quotient, MatchesGentleAlgebra) {
  const auto s = setup<Rational>("1 2");
  const auto q = quotient_iso_check(s.pd, sgtest::example_triple());
  EXPECT_TRUE(q.iso.ok) << q.iso.witness;
  EXPECT_TRUE(q.f_image_matches);
  EXPECT_EQ(q.quotient_dim, 8);
  EXPECT_EQ(q.base_dim, 8);
  const auto base = sgtest::spec(sgtest::kChain);
  EXPECT_EQ(q.base_dim, sgtest::monomial_path_count(base));
  EXPECT_EQ(q.base_dim, oracle_dimension<Rational>(base));
}

TEST(Context, PairingsAreCompatible) {
  // example: no M element starts where an N element ends, so nothing composes
  const auto s = setup<F2>("1 2");
  const auto c = morita_context_checks(s.pd);
  EXPECT_TRUE(c.compatibility && c.g_in_radical && c.f_nilpotent);
  EXPECT_EQ(c.checked, 0);

  const auto t = require_skew_gentle(sgtest::spec("vertices 1 2; arrow x: 1->2; arrow y: 2->1; rel x*y; rel y*x; special 1;"));
  const auto sq = split_triple(t);
  const auto pd = peirce(realize<Rational>(sq.spec), sq);
  const auto cyc = morita_context_checks(pd);
  EXPECT_GT(cyc.checked, 0);
  EXPECT_TRUE(cyc.compatibility);
  EXPECT_TRUE(cyc.g_in_radical);
  EXPECT_TRUE(cyc.f_nilpotent);
  EXPECT_TRUE(cyc.exhaustive);
  EXPECT_FALSE(morita_context_checks(pd, 1).exhaustive);
}

TEST(Context, CornerModulesAreClosed) {
  const auto s = setup<Rational>("1 2");
  EXPECT_EQ(corner_module(s.pd, s.pd.M, false).dimension(), 1);
  EXPECT_EQ(corner_module(s.pd, s.pd.N, true).dimension(), 5);
  EXPECT_FALSE(validate(corner_module(s.pd, s.pd.N, true)).has_value());
}

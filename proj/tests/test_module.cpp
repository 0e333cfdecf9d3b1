#include <gtest/gtest.h>

#include "common.hpp"
#include "skewgentle/engine.hpp"
#include "skewgentle/module.hpp"

using namespace skewgentle;

namespace {

template <class S>
AlgebraPtr<S> chain() {
  return realize<S>(sgtest::spec(sgtest::kChain)).algebra();
}

}  // namespace

// Hand computation for 1 -a-> 2 -b-> 3 -c-> 4 with ab = 0:
// P1 = <e1, a>, P2 = <e2, b, bc>, P3 = <e3, c>, P4 = <e4>;
// I1 = <e1>, I2 = <e2, a>, I3 = <e3, b>, I4 = <e4, c, bc>.
TEST(Modules, DimensionVectorsOfProjectivesAndInjectives) {
  const auto a = chain<Rational>();
  const std::vector<std::vector<int>> p{{1, 1, 0, 0}, {0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  const std::vector<std::vector<int>> i{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 1}};
  for (int v = 0; v < 4; ++v) {
    const auto pv = projective_module(a, v), iv = injective_module(a, v);
    EXPECT_EQ(pv.dims(), p[static_cast<std::size_t>(v)]);
    EXPECT_EQ(iv.dims(), i[static_cast<std::size_t>(v)]);
    EXPECT_FALSE(validate(pv).has_value());
    EXPECT_FALSE(validate(iv).has_value());
    EXPECT_TRUE(is_projective(pv));
  }
  EXPECT_FALSE(is_projective(injective_module(a, 0)));
  EXPECT_TRUE(is_projective(injective_module(a, 1)));
  EXPECT_FALSE(is_projective(injective_module(a, 2)));
  EXPECT_TRUE(is_projective(injective_module(a, 3)));
}

TEST(Modules, ProjectiveDimensionsOfSimples) {
  // S4 = P4; 0 -> P4 -> P3 -> S3; rad P2 = P3; rad P1 = S2
  const std::vector<int> expected{2, 1, 1, 0};
  for (int v = 0; v < 4; ++v) {
    const auto rq = resolve(simple_module(chain<Rational>(), v), 10);
    const auto r2 = resolve(simple_module(chain<F2>(), v), 10);
    EXPECT_EQ(rq.projective_dimension(), expected[static_cast<std::size_t>(v)]);
    EXPECT_EQ(r2.projective_dimension(), expected[static_cast<std::size_t>(v)]);
  }
}

TEST(Modules, MinimalResolutionTerms) {
  const auto r = resolve(simple_module(chain<Rational>(), 0), 10);
  ASSERT_EQ(r.terms.size(), 3u);
  EXPECT_EQ(r.terms[0], (std::vector<int>{0}));
  EXPECT_EQ(r.terms[1], (std::vector<int>{1}));
  EXPECT_EQ(r.terms[2], (std::vector<int>{2}));
}

TEST(Modules, ExtAndTorFromTheResolution) {
  const auto a = chain<Rational>();
  const auto s1 = simple_module(a, 0);
  EXPECT_EQ(ext_dims(s1, simple_module(a, 2), 3), (std::vector<int>{0, 0, 1, 0}));
  EXPECT_EQ(ext_dims(s1, simple_module(a, 1), 3), (std::vector<int>{0, 1, 0, 0}));
  EXPECT_EQ(ext_dims(s1, s1, 3), (std::vector<int>{1, 0, 0, 0}));
  const auto op = opposite(a);
  EXPECT_EQ(tor_dims(s1, simple_module(op, 2), 3), (std::vector<int>{0, 0, 1, 0}));
  EXPECT_EQ(tor_dims(s1, simple_module(op, 0), 3), (std::vector<int>{1, 0, 0, 0}));
}

TEST(Modules, NonMinimalResolutionGivesSameExt) {
  const auto a = chain<F3>();
  const auto m = direct_sum<F3>({simple_module(a, 0), injective_module(a, 2), truncated_projective(a, 1, 2)});
  for (int v = 0; v < 4; ++v) {
    const auto y = projective_module(a, v);
    EXPECT_EQ(ext_dims(m, y, 4, true), ext_dims(m, y, 4, false));
  }
}

TEST(Modules, CoverAndSyzygy) {
  const auto a = chain<Rational>();
  const auto pc = projective_cover(injective_module(a, 3));
  EXPECT_EQ(pc.tops, (std::vector<int>{1}));
  EXPECT_EQ(kernel_of_cover(pc).module.dimension(), 0);
  const auto pc1 = projective_cover(truncated_projective(a, 1, 2));
  EXPECT_EQ(kernel_of_cover(pc1).module.dims(), (std::vector<int>{0, 0, 0, 1}));
}

TEST(Modules, DirectSumsAndRegular) {
  const auto a = chain<Rational>();
  EXPECT_EQ(regular_module(a).dimension(), 8);
  EXPECT_EQ(dual_regular_module(a).dimension(), 8);
  EXPECT_EQ(top_vertices(regular_module(a)), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_TRUE(zero_module(a).is_zero());
  EXPECT_EQ(direct_sum<Rational>({simple_module(a, 0), simple_module(a, 0)}).dims(), (std::vector<int>{2, 0, 0, 0}));
}

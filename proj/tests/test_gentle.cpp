#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "common.hpp"
#include "skewgentle/corpus.hpp"

using namespace skewgentle;

namespace {

bool mentions(const GentleVerdict& v, int axiom, const std::string& needle) {
  return std::any_of(v.violations.begin(), v.violations.end(), [&](const Violation& x) {
    return x.axiom == axiom && x.message.find(needle) != std::string::npos;
  });
}

// Every arrow-simple closed walk whose cyclic compositions lie in I, found by
// exhaustive search from its smallest arrow.
std::vector<std::vector<int>> brute_cycles(const QuiverSpec& q) {
  const auto zero = monomial_pairs(q);
  std::vector<std::vector<int>> out;
  std::vector<int> walk;
  std::function<void(int)> extend = [&](int last) {
    const int first = walk.front();
    if (zero.count({last, first}) && q.arrows()[last].target == q.arrows()[first].source) out.push_back(walk);
    for (int b : q.out_arrows(q.arrows()[last].target)) {
      if (b <= first || std::find(walk.begin(), walk.end(), b) != walk.end() || !zero.count({last, b})) continue;
      walk.push_back(b);
      extend(b);
      walk.pop_back();
    }
  };
  for (int a = 0; a < q.arrow_count(); ++a) {
    walk = {a};
    extend(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Gentle, ChainIsGentle) {
  const auto v = check_gentle(sgtest::spec(sgtest::kChain));
  EXPECT_TRUE(v.is_gentle);
  EXPECT_TRUE(v.violations.empty());
}

TEST(Gentle, DegreeBudgetViolation) {
  const auto v = check_gentle(sgtest::spec("vertices 1 2 3 4; arrow a: 1->2; arrow b: 1->3; arrow c: 1->4;"));
  EXPECT_FALSE(v.is_gentle);
  EXPECT_TRUE(mentions(v, 1, "1"));
}

TEST(Gentle, ContinuationViolations) {
  // a has two continuations outside I
  const auto two_free = check_gentle(sgtest::spec("vertices 1 2 3 4; arrow a: 1->2; arrow b: 2->3; arrow c: 2->4;"));
  EXPECT_FALSE(two_free.is_gentle);
  EXPECT_TRUE(mentions(two_free, 2, "a"));
  // a has two continuations inside I
  const auto two_zero = check_gentle(
      sgtest::spec("vertices 1 2 3 4; arrow a: 1->2; arrow b: 2->3; arrow c: 2->4; rel a*b; rel a*c;"));
  EXPECT_FALSE(two_zero.is_gentle);
  EXPECT_TRUE(mentions(two_zero, 3, "a"));
}

TEST(Gentle, FiniteDimensionAxiom) {
  const auto v = check_gentle(sgtest::spec("vertices 1; arrow x: 1->1;"));
  EXPECT_FALSE(v.is_gentle);
  EXPECT_TRUE(std::any_of(v.violations.begin(), v.violations.end(), [](const Violation& x) { return x.axiom == 4; }));
}

TEST(Gentle, RejectsNonMonomialRelations) {
  const auto q = sgtest::spec("vertices 1 2 3 4; arrow a: 1->2; arrow b: 2->4; arrow c: 1->3; arrow d: 3->4; "
                              "rel a*b + c*d;");
  EXPECT_THROW(check_gentle(q), SpecError);
}

TEST(SkewGentle, ExampleTripleIsValid) {
  const auto c = check_skew_gentle(sgtest::spec(sgtest::chain_with_special("1 2")));
  ASSERT_TRUE(c.valid());
  EXPECT_EQ(c.triple->special_vertices, (std::vector<int>{0, 1}));
  EXPECT_EQ(c.triple->ordinary_vertices, (std::vector<int>{2, 3}));
  EXPECT_EQ(c.triple->augmented.arrow_count(), 5);
  EXPECT_EQ(c.triple->augmented.relations().size(), 3u);
}

TEST(SkewGentle, SpecialThreeIsNotASpecialLoop) {
  const auto c = check_skew_gentle(sgtest::spec(sgtest::chain_with_special("3")));
  EXPECT_FALSE(c.valid());
  EXPECT_EQ(c.offending_special, (std::vector<std::string>{"3"}));
  EXPECT_TRUE(mentions(c.verdict, 2, "delta_3"));
  EXPECT_THROW(require_skew_gentle(sgtest::spec(sgtest::chain_with_special("3"))), SpecError);
}

TEST(SkewGentle, LoopNameAvoidsCollisions) {
  const auto q = sgtest::spec("vertices 1 2; arrow delta_1: 2->1;");
  EXPECT_NE(special_loop_name(q, 0), "delta_1");
}

TEST(SkewGentle, SplitRelationsByMiddleVertex) {
  const auto t = require_skew_gentle(sgtest::spec(sgtest::chain_with_special("2")));
  const auto [ord, sp] = split_relations(t);
  EXPECT_TRUE(ord.empty());
  ASSERT_EQ(sp.size(), 1u);
  const auto t0 = require_skew_gentle(sgtest::spec(sgtest::kChain));
  EXPECT_EQ(split_relations(t0).first.size(), 1u);
}

TEST(Cycles, AcyclicChainHasNone) { EXPECT_TRUE(find_full_relation_cycles(sgtest::spec(sgtest::kChain)).empty()); }

TEST(Cycles, NakayamaCycles) {
  for (int n = 1; n <= 6; ++n) {
    const auto q = sgtest::spec(sgtest::nakayama_cycle(n));
    const auto cycles = find_full_relation_cycles(q);
    ASSERT_EQ(cycles.size(), 1u) << n;
    EXPECT_EQ(static_cast<int>(cycles[0].size()), n);
  }
}

TEST(Cycles, AgreeWithBruteForceOnGeneratedPairs) {
  GenConfig c;
  c.seed = 99;
  c.count = 150;
  c.relation_density = Rational(9, 10);
  for (const auto& q : generate_gentle(c)) EXPECT_EQ(find_full_relation_cycles(q), brute_cycles(q)) << serialize_quiver(q);
}

#include <gtest/gtest.h>

#include "common.hpp"
#include "skewgentle/field.hpp"
#include "skewgentle/linalg.hpp"

using namespace skewgentle;

TEST(Rational, ParseAndArithmetic) {
  EXPECT_EQ(Rational::parse("3/4") + Rational::parse("1/4"), Rational(1));
  EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
  EXPECT_EQ(Rational(2, 3).inverse(), Rational(3, 2));
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(PrimeField, InverseTimesValueIsOne) {
  for (std::uint32_t v = 1; v < 7; ++v) EXPECT_TRUE((F7(v) * F7(v).inverse()).is_one());
  EXPECT_TRUE((F2(1) + F2(1)).is_zero());
  // 1/2 in F3 is 2
  EXPECT_EQ(F3::from_rational(Rational(1, 2)), F3(2));
  EXPECT_THROW(F3::from_rational(Rational(1, 3)), std::domain_error);
}

TEST(FieldSpec, ParsesNames) {
  EXPECT_EQ(FieldSpec::parse("q"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("F5"), FieldSpec::prime(5));
  EXPECT_EQ(FieldSpec::parse("f2").name(), "F2");
  EXPECT_THROW(FieldSpec::parse("f4"), std::invalid_argument);
  EXPECT_THROW(dispatch_field(FieldSpec::prime(11), [](auto) { return 0; }), std::invalid_argument);
}

TEST(Linalg, RankAndKernelOfSmallMatrix) {
  Matrix<Rational> m(3, 4);
  // row 3 = row 1 + row 2
  m << 1, 2, 0, 1,
       0, 1, 1, 0,
       1, 3, 1, 1;
  EXPECT_EQ(rank<Rational>(m), 2);
  const auto k = kernel<Rational>(m);
  EXPECT_EQ(k.dim(), 2);
  EXPECT_TRUE(is_zero_matrix<Rational>(Matrix<Rational>(m * k.basis)));
}

TEST(Linalg, CharacteristicMatters) {
  Matrix<Rational> q(2, 2);
  q << 1, 1, 1, -1;  // det -2
  Matrix<F2> f(2, 2);
  f << F2(1), F2(1), F2(1), F2(1);
  EXPECT_EQ(rank<Rational>(q), 2);
  EXPECT_EQ(rank<F2>(f), 1);
}

TEST(Linalg, SubspaceMembershipAndSum) {
  Matrix<Rational> a(3, 1), b(3, 1);
  a << 1, 0, 0;
  b << 0, 1, 1;
  const auto sa = Subspace<Rational>::span(a), sb = Subspace<Rational>::span(b);
  const auto sum = sa.sum(sb);
  EXPECT_EQ(sum.dim(), 2);
  Vector<Rational> v(3);
  v << 2, 3, 3;
  EXPECT_TRUE(sum.contains(v));
  v(2) = 4;
  EXPECT_FALSE(sum.contains(v));
}

TEST(Quiver, BuildsChain) {
  const auto q = sgtest::spec(sgtest::chain_with_special("1 2"));
  EXPECT_EQ(q.vertex_count(), 4);
  EXPECT_EQ(q.arrow_count(), 3);
  ASSERT_EQ(q.relations().size(), 1u);
  EXPECT_EQ(q.special(), (std::vector<int>{0, 1}));
  EXPECT_EQ(path_to_string(q, q.path({"a", "b"})), "a*b");
  EXPECT_THROW(q.path({"b", "a"}), SpecError);
}

TEST(Quiver, RejectsBadDeclarations) {
  QuiverSpec q;
  q.add_vertex("1");
  q.add_vertex("2");
  EXPECT_THROW(q.add_vertex("1"), SpecError);
  q.add_arrow("a", "1", "2");
  EXPECT_THROW(q.add_arrow("a", "2", "1"), SpecError);
  EXPECT_THROW(q.add_arrow("b", "1", "9"), SpecError);
  q.add_arrow("b", "2", "1");
  // a*b and a are not parallel
  Relation mixed{{RelationTerm{Rational(1), {0, 1}}, RelationTerm{Rational(1), {0}}}};
  EXPECT_THROW(q.add_relation(mixed), SpecError);
}

TEST(Dsl, RoundTripIsIdentity) {
  const auto q = sgtest::spec(sgtest::chain_with_special("1 2"));
  EXPECT_EQ(parse_quiver(serialize_quiver(q)), q);
  const auto two = sgtest::spec(
      "vertices x y z w; arrow p: x->y; arrow q: y->w; arrow r: x->z; arrow s: z->w; rel p*q - 1/2*r*s;");
  EXPECT_EQ(parse_quiver(serialize_quiver(two)), two);
}

TEST(Dsl, ReportsPositionOfSyntaxErrors) {
  try {
    parse_quiver("vertices 1 2;\narrow a 1->2;");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 9);
  }
  EXPECT_THROW(parse_quiver("vertices 1; arrow a: 1->2;"), ParseError);
  EXPECT_THROW(parse_quiver("vertices 1 2; arrow 7: 1->2;"), ParseError);
  EXPECT_THROW(parse_quiver("vertices 1 2; special 3;"), ParseError);
}

TEST(Dsl, CommentsAndLeadingMinus) {
  const auto q = parse_quiver("# square\nvertices 1 2 3 4; arrow a: 1->2; arrow b: 2->4;\n"
                              "arrow c: 1->3; arrow d: 3->4; rel -a*b + c*d; # anti\n");
  ASSERT_EQ(q.relations().size(), 1u);
  EXPECT_EQ(q.relations()[0].terms[0].coefficient, Rational(-1));
}

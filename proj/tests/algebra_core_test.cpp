#include <gtest/gtest.h>

#include "jacarena/error.hpp"
#include "jacarena/parser.hpp"
#include "jacarena/ring.hpp"
#include "test_util.hpp"

using namespace jacarena;
using jacarena::testing::P;
using jacarena::testing::random_poly;
using jacarena::testing::space_of;

TEST(PolyArith, ProductOfConjugates) {
  auto s = space_of("QQ[X]");
  EXPECT_EQ((P("X+1", s) * P("X-1", s)).to_string(), "X^2 - 1");
}

TEST(PolyArith, ZeroPowerIsOne) {
  auto s = space_of("ZZ[X,Y]");
  EXPECT_TRUE(P("X+Y", s).pow(0).is_one());
}

TEST(PolyArith, PrimeFieldCoefficientsWrap) {
  auto s = space_of("GF(5)[X]");
  EXPECT_EQ(P("X+2", s) * P("X+3", s), P("X^2+1", s));
  EXPECT_EQ(P("X^2 + 6", s).to_string(), "X^2 + 1");
}

TEST(PolyArith, MixedCoefficientRingsRejected) {
  auto zz = space_of("ZZ[X]");
  auto qq = space_of("QQ[X]");
  try {
    (void)(P("X", zz) + P("X", qq));
    FAIL() << "expected IncompatibleRings";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompatibleRings);
  }
}

TEST(PolyArith, VariableListsMergeByName) {
  auto sx = space_of("ZZ[X]");
  auto sy = space_of("ZZ[Y]");
  const Polynomial sum = P("X", sx) + P("Y", sy);
  EXPECT_EQ(sum.space()->vars.size(), 2u);
  EXPECT_EQ(sum.to_string(), "X + Y");
}

TEST(Substitute, Examples) {
  auto s = space_of("ZZ[X,T,Y,g,f]");
  EXPECT_EQ(P("X^2", s).substitute({{"X", P("T+1", s)}}), P("T^2+2*T+1", s));
  EXPECT_TRUE(P("1-g*(1-X*f)", s).substitute({{"g", Polynomial(s)}}).is_one());
  EXPECT_EQ(P("X+Y", s).substitute({{"X", P("Y", s)}}), P("2*Y", s));
  // Simultaneous, not sequential.
  EXPECT_EQ(P("X+2*Y", s).substitute({{"X", P("Y", s)}, {"Y", P("X", s)}}), P("Y+2*X", s));
}

TEST(ParseExpr, Examples) {
  auto zz = RingPresentation::parse("ZZ[x,y]");
  EXPECT_EQ(parse_expr("1 - y*(1 - 2*x)", zz).value(), zz->parse_polynomial("1 - y + 2*x*y"));
  auto f3 = RingPresentation::parse("GF(3)[x]");
  EXPECT_EQ(parse_expr("x^2 + 3", f3).to_string(), "x^2");
  auto qq = RingPresentation::parse("QQ[x]/(x^2)");
  EXPECT_EQ(parse_expr("(1-x)*(1+x)", qq).to_string(), "1");
}

TEST(Parser, ErrorsCarryPosition) {
  auto s = space_of("ZZ[x]");
  try {
    parse_polynomial("x + * 2", s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("4"), std::string::npos) << e.what();
  }
  try {
    parse_polynomial("x + z", s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownVariable);
  }
  EXPECT_THROW(parse_ring_syntax("GF(6)[x]"), Error);
  EXPECT_THROW(parse_ring_syntax("ZZ[x,x]"), Error);
}

TEST(Parser, RingGrammar) {
  auto r = parse_ring_syntax("ZZ[x,y]/(x^2, 3)");
  EXPECT_EQ(r.vars, (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(r.relations.size(), 2u);
  EXPECT_EQ(r.relations[1].to_string(), "3");
  auto z4 = parse_ring_syntax("ZZ/4");
  EXPECT_TRUE(z4.vars.empty());
  ASSERT_EQ(z4.relations.size(), 1u);
  EXPECT_EQ(z4.relations[0].to_string(), "4");
  auto f2 = parse_ring_syntax("GF(2)");
  EXPECT_EQ(f2.coeffs, CoefficientRing::prime_field(2));
}

TEST(Coefficients, RationalsStayReduced) {
  auto s = space_of("QQ[x]");
  const Polynomial p = P("(2/4)*x + 6/(-4)", s);
  EXPECT_EQ(p.to_string(), "1/2*x - 3/2");
  EXPECT_THROW(parse_polynomial("x/2", space_of("ZZ[x]")), Error);
}

class RingAxioms : public ::testing::TestWithParam<std::string> {};

TEST_P(RingAxioms, RandomTriples) {
  auto s = space_of(GetParam());
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 200; ++iter) {
    const Polynomial a = random_poly(rng, s, 4, 3, 9);
    const Polynomial b = random_poly(rng, s, 4, 3, 9);
    const Polynomial c = random_poly(rng, s, 4, 3, 9);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a + (-a)).is_zero());
    EXPECT_EQ(a - b, a + (-b));
    EXPECT_EQ(a.pow(3), a * a * a);
    for (const auto& t : (a * b).terms()) EXPECT_NE(t.coeff, 0);
  }
}

INSTANTIATE_TEST_SUITE_P(Coefficients, RingAxioms, ::testing::Values("ZZ[x,y,z]", "QQ[x,y]", "GF(7)[x,y,z]"));

class OrderLaws : public ::testing::TestWithParam<MonomialOrder::Kind> {};

TEST_P(OrderLaws, TotalMultiplicativeWellFounded) {
  const MonomialOrder order =
      GetParam() == MonomialOrder::Kind::kLex ? MonomialOrder::lex() : MonomialOrder::degrevlex();
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> e(0, 4);
  auto mono = [&] {
    std::vector<std::uint32_t> v(3);
    for (auto& x : v) x = static_cast<std::uint32_t>(e(rng));
    return Monomial(std::move(v));
  };
  for (int iter = 0; iter < 500; ++iter) {
    const Monomial u = mono(), v = mono(), w = mono();
    const int uv = order.compare(u, v);
    EXPECT_EQ(uv == 0, u == v);
    EXPECT_EQ(uv, -order.compare(v, u));
    if (uv < 0) EXPECT_LT(order.compare(u * w, v * w), 0);
    if (uv < 0 && order.compare(v, w) < 0) EXPECT_LT(order.compare(u, w), 0);
    if (!(u == Monomial())) EXPECT_LT(order.compare(Monomial(), u), 0);
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, OrderLaws,
                         ::testing::Values(MonomialOrder::Kind::kLex, MonomialOrder::Kind::kDegRevLex));

TEST(MonomialTest, TrailingZerosIgnored) {
  EXPECT_EQ(Monomial({1, 2, 0, 0}), Monomial({1, 2}));
  EXPECT_TRUE(Monomial({1}).divides(Monomial({1, 3})));
  EXPECT_EQ(lcm(Monomial({2, 1}), Monomial({1, 0, 2})), Monomial({2, 1, 2}));
}

TEST(RoundTrip, ParsePrintIdentity) {
  std::mt19937_64 rng(7);
  for (const std::string ring : {"ZZ[x,y,z]", "GF(5)[a,b]", "QQ[u,v]"}) {
    auto s = space_of(ring);
    for (int iter = 0; iter < 200; ++iter) {
      Polynomial p = random_poly(rng, s, 5, 4, 20);
      if (s->coeffs.kind() == CoefficientKind::kRationals) {
        p = p.scaled(Scalar(1, 1 + static_cast<unsigned>(iter % 7)));
      }
      EXPECT_EQ(parse_polynomial(p.to_string(), s).in_space(s), p) << p.to_string();
    }
  }
}

TEST(RoundTrip, RingTextReparses) {
  for (const std::string text : {"ZZ", "ZZ[x]/(x^2 - 2, 4)", "GF(5)[X,Y]", "QQ[x]/(x^2)"}) {
    auto r = RingPresentation::parse(text);
    auto again = RingPresentation::parse(r->to_string());
    EXPECT_EQ(again->to_string(), r->to_string());
  }
}

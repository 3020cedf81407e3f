#include <gtest/gtest.h>

#include "jacarena/error.hpp"
#include "jacarena/integral.hpp"
#include "jacarena/ring.hpp"
#include "jacarena/zero_dim.hpp"
#include "test_util.hpp"

using namespace jacarena;
using jacarena::testing::random_poly;

namespace {

RingPtr R(const std::string& text) { return RingPresentation::parse(text); }
Polynomial E(const RingPtr& r, const std::string& text) { return r->parse_polynomial(text); }

// Determinant by cofactor expansion along the first row.
Polynomial laplace_det(const std::vector<std::vector<Polynomial>>& m, const SpacePtr& space) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(space, 1);
  Polynomial det(space);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const Polynomial term = m[0][j] * laplace_det(minor, space);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace

TEST(QuotientExtend, Examples) {
  auto zz = R("ZZ");
  auto z6 = quotient_extend(zz, {zz->constant(6)});
  EXPECT_EQ(z6->reduce(zz->constant(7)).to_string(), "1");
  EXPECT_EQ(z6->reduce(zz->constant(-1)).to_string(), "5");

  auto qx = R("QQ[X]");
  auto q1 = quotient_extend(quotient_extend(qx, {E(qx, "X^2")}), {E(qx, "X")});
  EXPECT_TRUE(q1->reduce(E(qx, "X")).is_zero());
  EXPECT_TRUE(q1->reduce(E(qx, "1")).is_one());

  auto zx = R("ZZ[X]");
  auto half = quotient_extend(zx, {E(zx, "1 - X*2")});
  EXPECT_FALSE(half->is_trivial());
  ASSERT_EQ(half->basis().basis().size(), 1u);
  EXPECT_EQ(half->basis().basis()[0].to_string(), "2*X - 1");
  EXPECT_TRUE(half->equal(E(zx, "2*X"), E(zx, "1")));
  EXPECT_EQ(half->relations().size(), 1u);
}

TEST(IsTrivial, Examples) {
  auto zz = R("ZZ");
  EXPECT_TRUE(quotient_extend(zz, {zz->constant(1)})->is_trivial());
  EXPECT_TRUE(R("QQ[X]/(X, X-1)")->is_trivial());
  EXPECT_FALSE(zz->is_trivial());
}

TEST(QuotientExtend, Monotone) {
  auto base = R("ZZ[x,y]/(x^2 - 3*y)");
  auto s = base->space();
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    const Polynomial extra = random_poly(rng, s, 3, 2, 4);
    auto ext = quotient_extend(base, {extra});
    EXPECT_TRUE(ext->is_zero(extra));
    for (const auto& r : base->relations()) EXPECT_TRUE(ext->is_zero(r));
    const Polynomial zero = random_poly(rng, s, 2, 1, 3) * base->relations()[0];
    EXPECT_TRUE(base->is_zero(zero));
    EXPECT_TRUE(ext->is_zero(zero));
  }
}

TEST(RingElementTest, Arithmetic) {
  auto r = R("ZZ[x]/(x^2 + 1)");
  const RingElement x = parse_expr("x", r);
  EXPECT_EQ((x * x).to_string(), "-1");
  EXPECT_EQ(x.pow(4).to_string(), "1");
  EXPECT_EQ((x + x - x).to_string(), "x");
}

TEST(Staircase, FiniteRings) {
  auto st = staircase(*R("ZZ[X]/(2, X^2)"));
  ASSERT_TRUE(st);
  EXPECT_TRUE(st->finite_ring());
  EXPECT_EQ(st->cardinality(), 4);
  EXPECT_EQ(staircase(*R("ZZ/6"))->cardinality(), 6);
  EXPECT_EQ(staircase(*R("GF(2)[X]/(X^2+X)"))->cardinality(), 4);
  EXPECT_FALSE(staircase(*R("ZZ"))->finite_ring());
  EXPECT_FALSE(staircase(*R("QQ[X,Y]/(X^2)")));
}

TEST(MinimalPolynomial, Examples) {
  auto a = R("QQ[X]/(X^2)");
  EXPECT_EQ(minimal_polynomial(E(a, "X"), *a).to_string(), "T^2");
  auto b = R("GF(2)[X]/(X^2+X)");
  EXPECT_EQ(minimal_polynomial(E(b, "X"), *b).to_string(), "T^2 + T");
  auto c = R("QQ[X]/(X-3)");
  EXPECT_EQ(minimal_polynomial(E(c, "X"), *c).to_string(), "T - 3");
  try {
    minimal_polynomial(E(a, "X"), *R("QQ[X]"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFiniteDimensional);
  }
}

TEST(MinimalPolynomial, MinimalOverSmallPrimeField) {
  // Exhaustive check: no monic polynomial of smaller degree annihilates x.
  auto ring = R("GF(3)[X,Y]/(X^2 - Y, Y^2 + X*Y, X*Y^2)");
  auto s = ring->space();
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 12; ++iter) {
    const Polynomial x = ring->reduce(random_poly(rng, s, 3, 2, 2));
    const Polynomial mu = minimal_polynomial(x, *ring);
    const auto dense = mu.coefficients_in(0);
    // mu(x) == 0
    Polynomial value(s), p = ring->constant(1);
    for (const auto& c : dense) {
      value += p.scaled(c.constant_term());
      p = ring->reduce(p * x);
    }
    EXPECT_TRUE(ring->is_zero(value));
    const std::size_t deg = dense.size() - 1;
    ASSERT_LE(deg, 4u);
    for (std::size_t d = 0; d < deg; ++d) {
      std::size_t combos = 1;
      for (std::size_t i = 0; i < d; ++i) combos *= 3;
      for (std::size_t code = 0; code < combos; ++code) {
        Polynomial v = ring->reduce(x.pow(d));
        std::size_t rest = code;
        Polynomial xp = ring->constant(1);
        for (std::size_t i = 0; i < d; ++i) {
          v += xp.scaled(Scalar(static_cast<long>(rest % 3)));
          rest /= 3;
          xp = ring->reduce(xp * x);
        }
        EXPECT_FALSE(ring->is_zero(v)) << "degree " << d << " annihilates " << x.to_string();
      }
    }
  }
}

TEST(ZeroDimWitness, Examples) {
  auto z12 = R("ZZ/12");
  auto w = zero_dim_witness(z12->constant(6), z12);
  EXPECT_EQ(w.exponent, 2u);
  EXPECT_TRUE(w.a.is_zero());

  auto z7 = R("ZZ/7");
  w = zero_dim_witness(z7->constant(3), z7);
  EXPECT_EQ(w.exponent, 1u);
  EXPECT_EQ(w.a.to_string(), "5");

  auto q = R("QQ[X]/(X^2)");
  w = zero_dim_witness(E(q, "X"), q);
  EXPECT_EQ(w.exponent, 2u);
  EXPECT_TRUE(w.a.is_zero());

  auto f5 = R("GF(5)");
  w = zero_dim_witness(f5->constant(2), f5);
  EXPECT_EQ(w.exponent, 0u);
  EXPECT_EQ(w.a.to_string(), "3");

  EXPECT_THROW(zero_dim_witness(E(R("ZZ[X]"), "X"), R("ZZ[X]")), Error);
}

TEST(ZeroDimWitness, AlwaysHolds) {
  std::mt19937_64 rng(21);
  for (const std::string text : {"ZZ/360", "ZZ/97", "QQ[X]/(X^3*(X-1)^2*(X^2+1))", "GF(5)[X]/(X^4 + 2*X)",
                                 "QQ[X,Y]/(X^2, Y^2 - X)", "ZZ[X]/(4, X^2 + 2)", "GF(3)[X,Y]/(X^3, Y^2 - 1)"}) {
    auto ring = R(text);
    for (int iter = 0; iter < 15; ++iter) {
      const Polynomial x = random_poly(rng, ring->space(), 3, 3, 50);
      const auto w = zero_dim_witness(x, ring);
      EXPECT_TRUE(witness_holds(x, *ring, w)) << text << " x=" << x.to_string();
    }
  }
}

TEST(Berkowitz, MatchesLaplaceExpansion) {
  const SpacePtr s = make_space(CoefficientRing::integers(), {"T"});
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (std::size_t n = 0; n <= 5; ++n) {
    for (int iter = 0; iter < 10; ++iter) {
      std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
      std::vector<std::vector<Polynomial>> t_minus_m(n, std::vector<Polynomial>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          m[i][j] = Polynomial::constant(s, Scalar(coef(rng)));
          t_minus_m[i][j] = (i == j ? Polynomial::variable(s, 0) : Polynomial(s)) - m[i][j];
        }
      }
      const auto vec = berkowitz<Polynomial>(
          m, Polynomial::constant(s, 1), [](const Polynomial& a, const Polynomial& b) { return a + b; },
          [](const Polynomial& a, const Polynomial& b) { return a * b; }, [](const Polynomial& a) { return -a; });
      Polynomial chi(s);
      for (std::size_t k = 0; k <= n; ++k) {
        chi += vec[k] * Polynomial::variable(s, 0, static_cast<std::uint32_t>(n - k));
      }
      EXPECT_EQ(chi, laplace_det(t_minus_m, s)) << "n=" << n;
    }
  }
}

TEST(Berkowitz, SymbolicEntries) {
  // Entries in ZZ[a,b,c,d,T]: the 2x2 case gives T^2 - (a+d) T + ad - bc.
  const SpacePtr s = make_space(CoefficientRing::integers(), {"a", "b", "c", "d"});
  auto v = [&](std::size_t i) { return Polynomial::variable(s, i); };
  const auto vec = berkowitz<Polynomial>(
      {{v(0), v(1)}, {v(2), v(3)}}, Polynomial::constant(s, 1),
      [](const Polynomial& a, const Polynomial& b) { return a + b; },
      [](const Polynomial& a, const Polynomial& b) { return a * b; }, [](const Polynomial& a) { return -a; });
  EXPECT_EQ(vec[1], -(v(0) + v(3)));
  EXPECT_EQ(vec[2], v(0) * v(3) - v(1) * v(2));
}

namespace {

MonogenicAlgebra mono_of(const std::string& base, const std::string& algebra, const std::string& gen,
                         const std::string& relation) {
  auto a = R(base);
  auto b = R(algebra);
  return MonogenicAlgebra::make(a, b, gen, b->parse_polynomial(relation));
}

}  // namespace

TEST(IntegralDependence, Examples) {
  auto m = mono_of("QQ", "QQ[X]/(X^2 - 2)", "X", "X^2 - 2");
  auto rel = integral_dependence(E(m.algebra, "X"), m);
  EXPECT_EQ(rel.l, 0u);
  ASSERT_EQ(rel.d, 2u);
  EXPECT_EQ(rel.c[0].to_string(), "2");
  EXPECT_TRUE(rel.c[1].is_zero());

  rel = integral_dependence(E(m.algebra, "X + 1"), m);
  EXPECT_EQ(rel.l, 0u);
  EXPECT_EQ(rel.c[0].to_string(), "1");
  EXPECT_EQ(rel.c[1].to_string(), "2");

  auto m2 = mono_of("ZZ", "ZZ[X]/(2*X^2 - 1)", "X", "2*X^2 - 1");
  rel = integral_dependence(E(m2.algebra, "X"), m2);
  EXPECT_EQ(rel.l, 1u);
  ASSERT_EQ(rel.d, 2u);
  EXPECT_EQ(rel.c[0].to_string(), "1");
  EXPECT_TRUE(rel.c[1].is_zero());
  EXPECT_TRUE(rel.holds(m2));
}

TEST(IntegralDependence, Errors) {
  try {
    mono_of("ZZ", "ZZ[X,Y]", "X", "X");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMonogenic);
  }
  try {
    mono_of("ZZ", "ZZ[X]/(2*X^2 + 1)", "X", "X^2 + 1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  try {
    auto a = R("ZZ/(4)");
    auto b = R("ZZ[X]/(4, 4*X + 1)");
    MonogenicAlgebra::make(a, b, "X", b->parse_polynomial("4*X + 1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLeadingCoefficientZero);
  }
}

TEST(IntegralDependence, RandomRelationsHold) {
  std::mt19937_64 rng(31);
  for (const auto& [base, alg, rel] : std::vector<std::tuple<std::string, std::string, std::string>>{
           {"ZZ", "ZZ[X]/(3*X^3 - X + 2)", "3*X^3 - X + 2"},
           {"ZZ[Y]", "ZZ[Y,X]/(Y*X^2 + X - Y)", "Y*X^2 + X - Y"},
           {"GF(5)[Y]", "GF(5)[Y,X]/((Y+1)*X^3 + Y*X + 1)", "(Y+1)*X^3 + Y*X + 1"},
           {"ZZ", "ZZ[X]/(6*X^2 + 4, 5*X + 1)", "6*X^2 + 4"}}) {
    auto m = mono_of(base, alg, "X", rel);
    for (int iter = 0; iter < 6; ++iter) {
      const Polynomial b = random_poly(rng, m.algebra->space(), 3, 2, 3);
      const auto dep = integral_dependence(b, m);
      // Independent re-check by raw expansion in the presented ring.
      const Polynomial y = m.algebra->reduce(b);
      Polynomial rhs(m.algebra->space()), p = m.algebra->constant(1);
      for (const auto& c : dep.c) {
        rhs += m.lift(c) * p;
        p = p * y;
      }
      EXPECT_TRUE(m.algebra->is_zero(m.lift(dep.a).pow(dep.l) * y.pow(dep.d) - rhs)) << alg << " b=" << b.to_string();
    }
  }
}

TEST(InvertInIntegralQuotient, Examples) {
  auto m = mono_of("ZZ", "ZZ[Y]/(Y^2 + 1)", "Y", "Y^2 + 1");
  const auto dep = integral_dependence(E(m.algebra, "Y"), m);
  const Polynomial a = invert_in_integral_quotient(m.base->constant(2), E(m.algebra, "Y"), dep, m);
  EXPECT_EQ(a.to_string(), "-2");
  // 5 = (1 - 2Y)(1 + 2Y) modulo Y^2 + 1.
  auto q = quotient_extend(m.algebra, {E(m.algebra, "1 - 2*Y")});
  EXPECT_TRUE(q->is_zero(m.algebra->constant(5)));

  // b in A: degree-one dependence gives back b.
  auto m1 = mono_of("ZZ", "ZZ[Y]/(Y - 7)", "Y", "Y - 7");
  const auto dep1 = integral_dependence(m1.algebra->constant(4), m1);
  EXPECT_EQ(invert_in_integral_quotient(m1.base->constant(3), m1.algebra->constant(4), dep1, m1).to_string(), "4");

  auto m2 = mono_of("QQ", "QQ[Y]/(Y^2 - Y)", "Y", "Y^2 - Y");
  const auto dep2 = integral_dependence(E(m2.algebra, "Y"), m2);
  EXPECT_EQ(invert_in_integral_quotient(m2.base->constant(1), E(m2.algebra, "Y"), dep2, m2).to_string(), "1");

  auto m3 = mono_of("ZZ", "ZZ[X]/(2*X^2 - 1)", "X", "2*X^2 - 1");
  const auto dep3 = integral_dependence(E(m3.algebra, "X"), m3);
  try {
    invert_in_integral_quotient(m3.base->constant(1), E(m3.algebra, "X"), dep3, m3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonMonicDependence);
  }
}

TEST(LocKeyClear, Examples) {
  auto s = R("ZZ")->space();
  auto c = [&](long v) { return Polynomial::constant(s, Scalar(v)); };
  EXPECT_EQ(loc_key_clear(c(3), c(2), c(5), 0), c(5));
  EXPECT_EQ(loc_key_clear(c(3), c(2), c(5), 1), c(11));
  const Polynomial a2 = loc_key_clear(c(3), c(2), c(5), 2);
  EXPECT_EQ(a2, c(27));
  EXPECT_EQ(c(1) - a2 * (c(1) - c(6)), c(136));
}

TEST(KeyElementaryTransfer, Examples) {
  // B = A: the dependence has degree one and a2 = b2.
  auto same = mono_of("ZZ", "ZZ[Y]/(Y - 3)", "Y", "Y - 3");
  EXPECT_EQ(key_elementary_transfer(same.base->constant(1), same.base->constant(5), same.algebra->constant(4), same)
                .to_string(),
            "4");

  // x = 1 - a1 a a0 = -1 here; Y^2 = -1 gives a2 = 1 and 2 = (1+Y)(1-Y).
  auto m = mono_of("ZZ", "ZZ[Y]/(Y^2 + 1)", "Y", "Y^2 + 1");
  const Polynomial a2 = key_elementary_transfer(m.base->constant(1), m.base->constant(2), E(m.algebra, "Y"), m);
  EXPECT_EQ(a2.to_string(), "1");
  auto q = quotient_extend(m.algebra, {E(m.algebra, "1 + Y")});
  EXPECT_TRUE(q->is_zero(m.algebra->constant(2)));

  // a1 = 0: only membership is pinned down.
  const Polynomial z = key_elementary_transfer(m.base->constant(1), m.base->constant(0), E(m.algebra, "Y + 3"), m);
  auto q0 = quotient_extend(m.algebra, {E(m.algebra, "1 - (Y + 3)")});
  EXPECT_TRUE(q0->is_zero(m.algebra->constant(1) - m.lift(z)));
}

TEST(KeyElementaryTransfer, RandomMembershipHolds) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (const auto& [base, alg, rel] : std::vector<std::tuple<std::string, std::string, std::string>>{
           {"ZZ", "ZZ[X]/(2*X^2 + X - 1)", "2*X^2 + X - 1"},
           {"ZZ", "ZZ[X]/(3*X - 1)", "3*X - 1"},
           {"QQ[Y]", "QQ[Y,X]/(Y*X^2 - 1)", "Y*X^2 - 1"},
           {"GF(7)", "GF(7)[X]/(X^3 + 2)", "X^3 + 2"}}) {
    auto m = mono_of(base, alg, "X", rel);
    for (int iter = 0; iter < 6; ++iter) {
      const Polynomial a0 = m.base->reduce(random_poly(rng, m.base->space(), 2, 1, 3));
      const Polynomial a1 = m.base->reduce(random_poly(rng, m.base->space(), 2, 1, 3));
      const Polynomial b2 = random_poly(rng, m.algebra->space(), 3, 2, 3);
      const Polynomial a2 = key_elementary_transfer(a0, a1, b2, m);
      const Polynomial x = m.lift(m.base->constant(1) - a1 * m.leading() * a0);
      auto q = quotient_extend(m.algebra, {m.algebra->constant(1) - b2 * x});
      EXPECT_TRUE(q->is_zero(m.algebra->constant(1) - m.lift(a2) * x)) << alg << " b2=" << b2.to_string();
    }
  }
}

TEST(LocalizationTest, EqualityWithSaturation) {
  auto zz = R("ZZ/(12)");
  Localization loc(zz, zz->constant(2));
  // In (Z/12)_2 = Z/3: 1/2 == 2, and 3 == 0 since 4*3 = 0.
  const LocalizedElement half = loc.over_a(loc.from(zz->constant(1)));
  EXPECT_TRUE(loc.equal(half, loc.from(zz->constant(2)), 4));
  EXPECT_TRUE(loc.equal(loc.from(zz->constant(3)), loc.from(zz->constant(0)), 4));
  EXPECT_FALSE(loc.equal(loc.from(zz->constant(3)), loc.from(zz->constant(0)), 1));
  EXPECT_FALSE(loc.equal(loc.from(zz->constant(1)), loc.from(zz->constant(0)), 8));
}

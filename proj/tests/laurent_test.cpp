#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "support.hpp"

using namespace fibered;
using testing_support::Rng;

static LaurentPoly P(const char* s, std::size_t n = 1) { return parse_laurent(s, n); }

TEST(Laurent, Arithmetic) {
  EXPECT_EQ(P("1+t") * P("1-t"), P("1-t^2"));
  EXPECT_EQ(P("t^-1") * P("t"), P("1"));
  EXPECT_TRUE((P("3+t") * LaurentPoly(1)).is_zero());
  EXPECT_EQ(-P("t-1"), P("1-t"));
  EXPECT_THROW(P("t") + P("t1", 2), DimensionMismatch);
}

TEST(Laurent, RenderingAndParsing) {
  EXPECT_EQ(P("1 - t + t^2").to_string(), "t^2 - t + 1");
  EXPECT_EQ(P("2*t^2-3t+2").to_string(), "2*t^2 - 3*t + 2");
  EXPECT_EQ(P("-t^-3").to_string(), "-t^-3");
  EXPECT_EQ(LaurentPoly(2).to_string(), "0");
  EXPECT_EQ(P("3*t1^2*t2^-1 - t1 + 5", 2).to_string(), "3*t1^2*t2^-1 - t1 + 5");
  EXPECT_EQ(parse_laurent("t1 t2").nvars(), 2u);
  EXPECT_THROW(parse_laurent("t +"), ParseError);
  EXPECT_THROW(parse_laurent("t3", 2), ParseError);
  EXPECT_THROW(parse_laurent(""), ParseError);
}

TEST(Laurent, RingAxioms) {
  Rng rng(21);
  for (std::size_t r = 1; r <= 3; ++r)
    for (int i = 0; i < 40; ++i) {
      const auto a = testing_support::random_poly(rng, r, 4, -2, 2, 5);
      const auto b = testing_support::random_poly(rng, r, 4, -2, 2, 5);
      const auto c = testing_support::random_poly(rng, r, 4, -2, 2, 5);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + b - b, a);
    }
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(P("-t^3+t^4")), P("1-t"));
  EXPECT_EQ(normalize(P("t^-2-t^-1")), P("1-t"));
  EXPECT_TRUE(normalize(LaurentPoly(1)).is_zero());
  const auto nf = normalize_with_unit(P("-t^3+t^4"));
  EXPECT_EQ(nf.sign, -1);
  EXPECT_EQ(nf.shift, Exponent{-3});
}

TEST(Normalize, UnitInvariance) {
  Rng rng(22);
  for (std::size_t r = 1; r <= 3; ++r)
    for (int i = 0; i < 40; ++i) {
      const auto a = testing_support::random_poly(rng, r, 4, -3, 3, 6);
      Exponent v(r);
      for (auto& x : v) x = testing_support::uniform(rng, -4, 4);
      const auto unit = LaurentPoly::monomial(v, testing_support::uniform(rng, 0, 1) ? 1 : -1);
      EXPECT_EQ(normalize(a * unit), normalize(a));
      const auto nf = normalize_with_unit(a);
      if (!a.is_zero()) {
        EXPECT_EQ(nf.poly, a.shifted(nf.shift) * Integer(nf.sign));
      }
    }
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(P("2t"), P("4t^2")), P("2"));
  EXPECT_EQ(gcd(P("t^2-1"), P("t^2-2t+1")), normalize(P(fixtures::kGcdT2m1T2m2t1)));
  EXPECT_TRUE(gcd(LaurentPoly(1), LaurentPoly(1)).is_zero());
  EXPECT_EQ(gcd(P("2"), P("t-1")), P("1"));
  EXPECT_EQ(gcd(P("t^3-1"), LaurentPoly(1)), P("1-t^3"));
  EXPECT_EQ(gcd(P("t1^2-t2^2", 2), P("t1^2-2*t1*t2+t2^2", 2)), normalize(P("t1-t2", 2)));
}

TEST(Gcd, DividesBothAndIsMultiplicative) {
  Rng rng(23);
  for (std::size_t r = 1; r <= 3; ++r)
    for (int i = 0; i < 25; ++i) {
      const auto a = testing_support::random_poly(rng, r, 3, -2, 2, 4);
      const auto b = testing_support::random_poly(rng, r, 3, -2, 2, 4);
      const auto c = testing_support::random_poly(rng, r, 3, -1, 2, 3);
      if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
      const auto g = gcd(a, b);
      ASSERT_FALSE(g.is_zero());
      EXPECT_TRUE(divide_exact(a, g).has_value());
      EXPECT_TRUE(divide_exact(b, g).has_value());
      EXPECT_EQ(gcd(a * c, b * c), normalize(g * c));
    }
}

TEST(DivideExact, Basics) {
  EXPECT_EQ(*divide_exact(P("t^2-1"), P("t+1")), P("t-1"));
  EXPECT_EQ(*divide_exact(P("t^-1-t"), P("1+t")), P("t^-1-1"));
  EXPECT_FALSE(divide_exact(P("t^2+1"), P("t+1")).has_value());
  EXPECT_FALSE(divide_exact(P("t"), P("2")).has_value());
  EXPECT_THROW(divide_exact(P("t"), LaurentPoly(1)), ZeroPolynomial);
}

TEST(Det, Examples) {
  EXPECT_EQ(det(identity_matrix(3, 1)), P("1"));
  EXPECT_EQ(det(LaurentMatrix{{P("1+t")}}), P("1+t"));
  EXPECT_EQ(det(LaurentMatrix{{P("1"), P("t")}, {P("t"), P("1")}}), P("1-t^2"));
  EXPECT_TRUE(det(zero_matrix(2, 2, 1)).is_zero());
  EXPECT_EQ(det(zero_matrix(0, 0, 2), 2), LaurentPoly::one(2));
}

TEST(Det, MatchesCofactorExpansion) {
  Rng rng(24);
  for (std::size_t r = 1; r <= 2; ++r)
    for (std::size_t n = 1; n <= 4; ++n)
      for (int i = 0; i < 10; ++i) {
        const auto m = testing_support::random_matrix(rng, n, n, r, 3, -2, 2, 3);
        const auto expected = testing_support::cofactor_det(m, r);
        EXPECT_EQ(det_bareiss(m, r), expected);
        EXPECT_EQ(det_modular(m, r), expected);
      }
}

TEST(Det, ModularAgreesWithBareissOnLargerMatrices) {
  Rng rng(25);
  for (std::size_t r = 1; r <= 2; ++r)
    for (std::size_t n : {7u, 9u, 12u}) {
      auto m = testing_support::random_matrix(rng, n, n, r, 2, -1, 2, 4);
      EXPECT_EQ(det_modular(m, r), det_bareiss(m, r));
    }
}

TEST(Det, RowSwapAndMultiplicativity) {
  Rng rng(26);
  for (int i = 0; i < 15; ++i) {
    auto m = testing_support::random_matrix(rng, 3, 3, 2, 3, -2, 2, 3);
    const auto n = testing_support::random_matrix(rng, 3, 3, 2, 3, -2, 2, 3);
    const auto d = det(m);
    EXPECT_EQ(det(m * n), d * det(n));
    m.swap_rows(0, 2);
    EXPECT_EQ(det(m), -d);
  }
}

TEST(Det, AdjugateIdentity) {
  Rng rng(27);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto m = testing_support::random_matrix(rng, n, n, 1, 3, -2, 2, 3);
    const auto adj = adjugate(m, 1);
    EXPECT_EQ(adj * m, scaled(identity_matrix(n, 1), det(m)));
  }
}

TEST(MaximalMinors, Examples) {
  EXPECT_EQ(maximal_minors_gcd(identity_matrix(2, 1), 1), P("1"));
  EXPECT_EQ(maximal_minors_gcd(LaurentMatrix{{P("2")}, {P("t-1")}}, 1), P("1"));
  EXPECT_TRUE(maximal_minors_gcd(LaurentMatrix{{P("1"), P("t")}}, 1).is_zero());
  EXPECT_EQ(maximal_minors_gcd(zero_matrix(0, 0, 1), 1), P("1"));
  EXPECT_TRUE(maximal_minors_gcd(zero_matrix(0, 2, 1), 1).is_zero());
}

TEST(UMinimal, Examples) {
  const auto u1 = WeightFunctional::from_integers({{1}});
  const auto lex = WeightFunctional::lexicographic(2);
  EXPECT_EQ(u_minimal_part(P("t^-1+5+t"), u1), P("t^-1"));
  EXPECT_EQ(u_minimal_part(P("t1+t2", 2), lex), P("t2", 2));
  EXPECT_EQ(u_minimal_part(P("3"), u1), P("3"));
  EXPECT_THROW(u_minimal_part(LaurentPoly(1), u1), ZeroPolynomial);
  EXPECT_TRUE(is_u_monic(P("1-t+t^2"), u1));
  EXPECT_FALSE(is_u_monic(P("2-3t+2t^2"), u1));
  EXPECT_TRUE(is_u_monic(P("-t^-3"), u1));
  EXPECT_FALSE(is_u_monic(LaurentPoly(1), u1));
}

TEST(UMinimal, MonicityIsMultiplicative) {
  Rng rng(28);
  const auto lex = WeightFunctional::lexicographic(2);
  const auto half = WeightFunctional(2, {{Rational(1), Rational(1, 2)}});
  for (const auto& u : {lex, half})
    for (int i = 0; i < 60; ++i) {
      const auto a = testing_support::random_poly(rng, 2, 3, -2, 2, 2);
      const auto b = testing_support::random_poly(rng, 2, 3, -2, 2, 2);
      if (a.is_zero() || b.is_zero()) continue;
      EXPECT_EQ(is_u_monic(a * b, u), is_u_monic(a, u) && is_u_monic(b, u));
    }
}

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "support.hpp"

using namespace fibered;
using testing_support::Rng;
using testing_support::uniform;

static LaurentPoly P(const char* s, std::size_t n = 1) { return parse_laurent(s, n); }

namespace {

struct Knot {
  const char* text;
  const char* alexander;
  Verdict verdict;
};

const Knot kKnots[] = {
    {fixtures::kTrefoil, fixtures::kTrefoilAlexander, Verdict::Monic},
    {fixtures::kTrefoilTwoBridge, fixtures::kTrefoilAlexander, Verdict::Monic},
    {fixtures::kFigureEight, fixtures::kFigureEightAlexander, Verdict::Monic},
    {fixtures::kFiveTwo, fixtures::kFiveTwoAlexander, Verdict::NonMonic},
};

const WeightFunctional kU1 = WeightFunctional::from_integers({{1}});

}  // namespace

TEST(Alpha, Examples) {
  const auto g = parse_presentation(fixtures::kTrefoil);
  const auto psi = abelianize(g).psi;
  const auto triv = trivial_quotient(2);
  const Word w = Word::generator(0) * Word::generator(1, -3);
  EXPECT_EQ(alpha(w, psi, triv), (LaurentMatrix{{P("t^-2")}}));
  const FiniteQuotient s3(3, {{1, 0, 2}, {0, 2, 1}});
  EXPECT_EQ(alpha(Word(), psi, s3), identity_matrix(6, 1));
  const FiniteQuotient z2(2, {{1, 0}});
  const Character id{1, {Exponent{1}}};
  EXPECT_EQ(alpha(Word::generator(0), id, z2), (LaurentMatrix{{P("0"), P("t")}, {P("t"), P("0")}}));
}

TEST(Alpha, MultiplicativeAndTrivialOnRelators) {
  Rng rng(51);
  const auto g = parse_presentation(fixtures::kFigureEight);
  const auto psi = abelianize(g).psi;
  for (const auto& fq : enumerate_quotients(g, 4)) {
    for (int i = 0; i < 5; ++i) {
      const Word v = testing_support::random_word(rng, 2, 6), w = testing_support::random_word(rng, 2, 6);
      EXPECT_EQ(alpha(v * w, psi, fq), alpha(v, psi, fq) * alpha(w, psi, fq));
    }
    EXPECT_EQ(alpha(g.relators[0], psi, fq), identity_matrix(fq.order(), 1));
  }
}

TEST(TwistedMatrix, TrefoilTrivialQuotient) {
  const auto g = parse_presentation(fixtures::kTrefoil);
  const auto tm = twisted_alexander_matrix(g, abelianize(g).psi, trivial_quotient(2), 1);
  EXPECT_EQ(tm.matrix, (LaurentMatrix{{P(fixtures::kTrefoilDxAbelian)}}));
}

TEST(TwistedMatrix, CommutatorDerivative) {
  const auto g = parse_presentation(fixtures::kZ2);
  const auto tm = twisted_alexander_matrix(g, abelianize(g).psi, trivial_quotient(2), 1);
  EXPECT_EQ(tm.matrix, (LaurentMatrix{{P(fixtures::kCommutatorDxAbelian, 2)}}));
}

TEST(TwistedMatrix, FreeCyclicIsEmpty) {
  const auto g = parse_presentation(fixtures::kFreeZ);
  const auto psi = abelianize(g).psi;
  const auto tm = twisted_alexander_matrix(g, psi, trivial_quotient(1), 0);
  EXPECT_EQ(tm.matrix.rows(), 0u);
  EXPECT_EQ(tm.matrix.cols(), 0u);
  const auto v = twisted_order(g, psi, trivial_quotient(1), kU1);
  EXPECT_EQ(v.order, P("1"));
  EXPECT_EQ(v.verdict, Verdict::Monic);
}

TEST(TwistedMatrix, BlockStructure) {
  const auto g = parse_presentation(fixtures::kTrefoil);
  const auto psi = abelianize(g).psi;
  const FiniteQuotient s3(3, {{1, 0, 2}, {0, 2, 1}});
  const auto tm = twisted_alexander_matrix(g, psi, s3, 1);
  EXPECT_EQ(tm.matrix, alpha(fox_derivative(g.relators[0], 0, 2), psi, s3));
}

TEST(TwistedOrder, KnotFixtures) {
  for (const auto& k : kKnots) {
    const auto g = parse_presentation(k.text);
    const auto ab = abelianize(g);
    ASSERT_EQ(ab.rank(), 1u);
    const auto v = alexander_order(g, ab.psi, kU1);
    EXPECT_EQ(v.order, normalize(P(k.alexander))) << k.text;
    EXPECT_EQ(v.verdict, k.verdict) << k.text;
    EXPECT_TRUE(v.caveat);
  }
  const auto g = parse_presentation(fixtures::kFiveTwo);
  const auto v = alexander_order(g, abelianize(g).psi, kU1);
  EXPECT_EQ(v.minimal_part, P("2"));
}

TEST(TwistedOrder, DeletingEitherGeneratorMatchesOracle) {
  const auto t = parse_presentation(fixtures::kTrefoil);
  const auto tpsi = abelianize(t).psi;
  EXPECT_EQ(twisted_order(t, tpsi, trivial_quotient(2), kU1, 0).order, normalize(P("t^2-t+1")));
  EXPECT_EQ(twisted_order(t, tpsi, trivial_quotient(2), kU1, 1).order, normalize(P("t^2-t+1")));
  const auto f = parse_presentation(fixtures::kFiveTwo);
  EXPECT_EQ(twisted_order(f, abelianize(f).psi, trivial_quotient(2), kU1, 0).order,
            normalize(P("2*t^2-3*t+2")));
}

TEST(TwistedOrder, FreeGroupOfRankTwoHasZeroOrder) {
  GroupPresentation f2;
  f2.generators = {"x", "y"};
  const auto v = alexander_order(f2, abelianize(f2).psi, WeightFunctional::lexicographic(2));
  EXPECT_EQ(v.verdict, Verdict::Zero);
  EXPECT_TRUE(v.order.is_zero());
}

TEST(TwistedOrder, ColumnChoiceInvariance) {
  for (const auto& k : kKnots) {
    const auto g = parse_presentation(k.text);
    const auto psi = abelianize(g).psi;
    const auto dels = deletable_generators(psi, kU1);
    ASSERT_EQ(dels.size(), 2u);
    for (const auto& fq : enumerate_quotients(g, 4)) {
      const auto ref = twisted_order(g, psi, fq, kU1, dels[0]).verdict;
      for (auto d : dels) EXPECT_EQ(twisted_order(g, psi, fq, kU1, d).verdict, ref);
    }
  }
}

TEST(TwistedOrder, VerdictStableUnderRescalingU) {
  const auto g = parse_presentation(fixtures::kFigureEight);
  const auto psi = abelianize(g).psi;
  const auto u3 = WeightFunctional::from_integers({{3}});
  const auto neg = WeightFunctional::from_integers({{-1}});
  for (const auto& fq : enumerate_quotients(g, 3)) {
    EXPECT_EQ(twisted_order(g, psi, fq, u3).verdict, twisted_order(g, psi, fq, kU1).verdict);
    EXPECT_EQ(twisted_order(g, psi, fq, neg).verdict, twisted_order(g, psi, fq, kU1).verdict);
  }
}

// Deficiency-one presentations with first Betti number >= 2: the column
// deleted twisted matrix is square, so its order is a determinant and
// commutes with t_i -> t^{w_i}.
TEST(TwistedOrder, SpecializationConsistency) {
  Rng rng(52);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 25; ++trial) {
    GroupPresentation g;
    g.generators = {"a", "b", "c"};
    g.relators.push_back(testing_support::random_word(rng, 3, 6));
    const Word w1 = testing_support::random_word(rng, 3, 3), w2 = testing_support::random_word(rng, 3, 3);
    g.relators.push_back(w1 * w2 * w1.inverse() * w2.inverse());
    const auto ab = abelianize(g);
    if (ab.rank() < 2) continue;
    std::vector<long> w(ab.rank());
    for (auto& x : w) x = uniform(rng, -2, 2);
    Character flat{1, {}};
    for (const auto& e : ab.psi.images) {
      long s = 0;
      for (std::size_t i = 0; i < e.size(); ++i) s += w[i] * e[i];
      flat.images.push_back(Exponent{s});
    }
    std::optional<std::size_t> del;
    for (std::size_t i = 0; i < 3 && !del; ++i)
      if (flat.images[i][0] != 0) del = i;
    if (!del) continue;
    const auto lex = WeightFunctional::lexicographic(ab.rank());
    for (const auto& fq : enumerate_quotients(g, 3)) {
      const auto multi = twisted_order(g, ab.psi, fq, lex, *del).order;
      const auto direct = twisted_order(g, flat, fq, kU1, *del).order;
      const auto spec = specialize(multi, w);
      if (spec.is_zero()) continue;
      EXPECT_EQ(normalize(spec), direct);
    }
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(Scan, FiberedKnotsHaveNoObstruction) {
  for (const char* text : {fixtures::kTrefoil, fixtures::kFigureEight}) {
    const auto g = parse_presentation(text);
    const auto rep = fibered_obstruction_scan(g, abelianize(g).psi, kU1, 4, false);
    EXPECT_FALSE(rep.not_fibered());
    EXPECT_GT(rep.verdicts.size(), 3u);
    for (const auto& e : rep.verdicts) EXPECT_EQ(e.verdict.verdict, Verdict::Monic);
    EXPECT_EQ(rep.conclusion(), "no obstruction up to degree 4 (consistent with fibered)");
  }
}

TEST(Scan, FiveTwoWitnessAtTrivialQuotient) {
  const auto g = parse_presentation(fixtures::kFiveTwo);
  for (std::size_t k : {1u, 3u}) {
    const auto rep = fibered_obstruction_scan(g, abelianize(g).psi, kU1, k);
    ASSERT_TRUE(rep.not_fibered());
    EXPECT_EQ(*rep.witness, 0u);
    EXPECT_EQ(rep.verdicts.size(), 1u);
    EXPECT_EQ(rep.verdicts[0].quotient.order(), 1u);
    EXPECT_EQ(rep.conclusion(), "NOT fibered (certified)");
  }
}

TEST(Scan, CircleHasNoObstruction) {
  const auto g = parse_presentation(fixtures::kFreeZ);
  const auto rep = fibered_obstruction_scan(g, abelianize(g).psi, kU1, 6, false);
  EXPECT_FALSE(rep.not_fibered());
  for (const auto& e : rep.verdicts) EXPECT_EQ(e.verdict.order, P("1"));
}

TEST(Scan, CachedVerdictsMatchRecomputation) {
  const auto g = parse_presentation(fixtures::kTrefoil);
  const auto psi = abelianize(g).psi;
  const auto rep = fibered_obstruction_scan(g, psi, kU1, 4, false);
  for (const auto& e : rep.verdicts) {
    if (e.cached) {
      EXPECT_EQ(twisted_order(g, psi, e.quotient, kU1).order, e.verdict.order);
    }
  }
}

TEST(CrossCheck, Examples) {
  const auto t = parse_presentation(fixtures::kTrefoil);
  const auto cc = subgroup_cross_check(t, abelianize(t).psi, FiniteQuotient(2, {{1, 0}, {1, 0}}), kU1);
  EXPECT_EQ(cc.group.verdict, Verdict::Monic);
  EXPECT_EQ(cc.subgroup.verdict, Verdict::Monic);
  EXPECT_TRUE(cc.agree());

  const auto f = parse_presentation(fixtures::kFiveTwo);
  const auto cf = subgroup_cross_check(f, abelianize(f).psi, trivial_quotient(2), kU1);
  EXPECT_EQ(cf.group.verdict, Verdict::NonMonic);
  EXPECT_TRUE(cf.agree());

  const auto z = parse_presentation(fixtures::kFreeZ);
  const auto cz = subgroup_cross_check(z, abelianize(z).psi, FiniteQuotient(3, {{1, 2, 0}}), kU1);
  EXPECT_EQ(cz.group.verdict, Verdict::Monic);
  EXPECT_EQ(cz.subgroup.verdict, Verdict::Monic);
}

TEST(CrossCheck, AgreesOnSmallQuotients) {
  for (const char* text : {fixtures::kTrefoil, fixtures::kFiveTwo}) {
    const auto g = parse_presentation(text);
    const auto psi = abelianize(g).psi;
    for (const auto& fq : enumerate_quotients(g, 3)) EXPECT_TRUE(subgroup_cross_check(g, psi, fq, kU1).agree());
  }
}

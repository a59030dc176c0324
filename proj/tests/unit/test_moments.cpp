#include "immoments/moments.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace immoments;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Partition ones(int n) { return Partition(std::vector<int>(n, 1)); }
RationalFunction parse(std::string_view s) { return parse_rational_function(s); }
const ComputeOptions serial{.workers = 1};

Subset relabel(Subset a, const Permutation& alpha) {
  Subset out = 0;
  for (int i = 0; i < alpha.degree(); ++i)
    if (a >> i & 1) out |= Subset{1} << (alpha(i + 1) - 1);
  return out;
}

}  // namespace

TEST(Mean, Examples) {
  for (int n = 1; n <= 6; ++n) {
    FactoredLinearPoly falling;
    for (int i = 0; i < n; ++i) falling.multiply_factor(-i);
    EXPECT_EQ(mean(ones(n)), RationalFunction::reciprocal(falling, Rational(factorial(n))));
  }
  EXPECT_EQ(mean(P({2, 1})), parse("6/(d*(d^2-1))"));
  EXPECT_EQ(mean(P({5})), parse("120/(d*(d+1)*(d+2)*(d+3)*(d+4))"));
}

TEST(Mean, EqualsDimensionRatio) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n))
      for (long d = std::max(n, 1); d <= n + 4; ++d)
        EXPECT_EQ(mean(l)(Rational(d)), Rational(dim_symmetric(l), dim_unitary(l, d))) << l;
}

TEST(DetMoment, Examples) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(det_moment(n, 1), mean(ones(n)));
  EXPECT_EQ(det_moment(2, 2), parse("12/(d^2*(d^2-1))"));
  EXPECT_THROW(det_moment(0, 2), std::invalid_argument);
}

TEST(DetMoment, MatchesFourthMomentOfSignImmanantUpTo4) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(det_moment(n, 2), second_moment(ones(n), serial).result) << n;
}

TEST(PermConjecture, Examples) {
  EXPECT_EQ(perm_fourth_conjecture(1), parse("2/(d*(d+1))"));
  EXPECT_EQ(perm_fourth_conjecture(1), second_moment(P({1}), serial).result);
  EXPECT_EQ(perm_fourth_conjecture(2), second_moment(P({2}), serial).result);
  EXPECT_EQ(perm_fourth_conjecture(3), second_moment(P({3}), serial).result);
  EXPECT_THROW(perm_fourth_conjecture(0), std::invalid_argument);
}

TEST(SecondMoment, Examples) {
  EXPECT_EQ(second_moment(P({1}), serial).result, parse("2/(d*(d+1))"));
  EXPECT_EQ(second_moment(P({2}), serial).result, parse("4*(3*d^2-d+2)/(d^2*(d^2-1)*(d+2)*(d+3))"));
}

TEST(SecondMoment, MatchesUnreducedDoubleSumUpTo3) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& l : partitions_of(n)) EXPECT_EQ(second_moment(l, serial).result, oracle::fourth_moment(l)) << l;
}

TEST(SecondMoment, BulkKernelMatchesPerShapeKernelUpTo4) {
  for (int n = 1; n <= 4; ++n) {
    const auto all = second_moments_all(n, serial);
    ASSERT_EQ(all.size(), partitions_of(n).size());
    for (const auto& r : all) {
      const auto single = second_moment(r.lambda, serial);
      EXPECT_EQ(r.result, single.result) << r.lambda;
      EXPECT_EQ(r.coefficients, single.coefficients) << r.lambda;
    }
  }
}

TEST(SecondMoment, ReportRecombinesExactly) {
  for (const auto& l : partitions_of(3)) {
    const auto r = second_moment(l, serial);
    RationalFunction sum;
    for (const auto& [xi, a] : r.coefficients)
      sum += RationalFunction::reciprocal(unitary_numerator(xi), Rational(a, hook_product(xi)));
    EXPECT_EQ(sum, r.result);
    EXPECT_EQ(r.coefficients.size(), partitions_of(6).size());
    EXPECT_GE(r.wall_time_s, 0);
  }
}

TEST(SecondMoment, DominatesSquaredMean) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& r : second_moments_all(n, serial))
      for (int d = n; d <= 3 * n + 4; ++d) {
        const Rational m = mean(r.lambda)(Rational(d));
        EXPECT_GE(r.result(Rational(d)), m * m) << r.lambda << " d=" << d;
      }
}

TEST(SecondMoment, LeadingOrderIsJOverD2n) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& r : second_moments_all(n, serial))
      EXPECT_EQ(r.result.leading_asymptotics(), (Asymptotics{Rational(leading_coefficient(r.lambda)), 2 * n})) << r.lambda;
}

TEST(SecondMoment, ResourceGuard) {
  EXPECT_THROW(second_moment(P({6})), ResourceLimitError);
  EXPECT_THROW(second_moments_all(6), ResourceLimitError);
  EXPECT_THROW(leading_coefficient(P({10})), ResourceLimitError);
  ComputeOptions raised;
  raised.leading_limit = 20;
  EXPECT_THROW(leading_coefficient(P({13}), raised), ResourceLimitError);
}

TEST(FourthMomentTerms, WeightsCoverAllPairsOfHn) {
  // Every (σ, ρ) ∈ H_n × H_n is represented exactly once by weight.
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& t : fourth_moment_terms(n)) total += t.weight;
    EXPECT_EQ(total, BigInt(1) << (2 * n));
  }
  EXPECT_EQ(fourth_moment_terms(5).size(), 20U);
}

TEST(JPair, Examples) {
  EXPECT_EQ(j_pair(P({1}), 0, 0), 1);
  CharacterTable chars;
  for (int n = 1; n <= 3; ++n)
    for (const auto& l : partitions_of(n)) {
      const auto id = Permutation::identity(2 * n);
      EXPECT_EQ(j_pair(l, 0, 0), oracle::j_sum(l, id, id, chars));
      for (int ll = 0; 2 * ll <= n; ++ll)
        for (int k = 0; k <= ll; ++k)
          EXPECT_EQ(j_pair(l, ll, k), oracle::j_sum(l, epsilon(interval(ll), n), epsilon(interval_diff(ll + k, k), n), chars))
              << l << " l=" << ll << " k=" << k;
    }
  EXPECT_THROW(j_pair(P({2, 1}), 1, 2), std::invalid_argument);
  EXPECT_THROW(j_pair(P({2, 1}), 2, 0), std::invalid_argument);
}

TEST(JPair, FactorisedSumMatchesLiteralFourFoldSumUpTo5) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions_of(n))
      for (int ll = 0; 2 * ll <= n; ++ll)
        for (int k = 0; k <= ll; ++k) EXPECT_EQ(j_pair(l, ll, k), oracle::j_pair_literal(l, ll, k)) << l << " " << ll << " " << k;
}

TEST(LeadingCoefficient, Examples) {
  EXPECT_EQ(leading_coefficient(P({2})), 12);
  EXPECT_EQ(leading_coefficient(P({3, 2})), 94560);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(leading_coefficient(ones(n)), factorial(n) * factorial(n + 1)) << n;
}

TEST(LeadingCoefficient, MatchesUnreducedSumUpTo3) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& l : partitions_of(n)) EXPECT_EQ(leading_coefficient(l), oracle::leading_coefficient(l)) << l;
}

TEST(LeadingCoefficient, InvariantUnderConjugationUpTo6) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n)) EXPECT_EQ(leading_coefficient(l), leading_coefficient(conjugate(l))) << l;
}

TEST(LeadingCoefficient, JSymmetriesUpTo3) {
  CharacterTable chars;
  for (int n = 1; n <= 3; ++n) {
    const Subset full = interval(n);
    for (const auto& l : partitions_of(n))
      for (Subset a = 0; a <= full; ++a)
        for (Subset b = 0; b <= full; ++b) {
          const BigInt base = oracle::j_sum(l, epsilon(a, n), epsilon(b, n), chars);
          if (subset_size(a) != subset_size(b)) EXPECT_EQ(base, 0) << l << " " << a << " " << b;
          for (const auto& alpha : all_permutations(n))
            EXPECT_EQ(oracle::j_sum(l, epsilon(relabel(a, alpha), n), epsilon(relabel(b, alpha), n), chars), base);
          EXPECT_EQ(oracle::j_sum(l, epsilon(full & ~a, n), epsilon(full & ~b, n), chars), base);
        }
  }
}

TEST(Dominance, Examples) {
  for (long d = 3; d <= 12; ++d) {
    const auto r = mean_dominance_check(3, d);
    EXPECT_TRUE(r.all_ok());
    EXPECT_EQ(r.pairs.size(), 3U);
    EXPECT_EQ(r.incomparable, 0);
  }
  EXPECT_EQ(mean(ones(2))(Rational(2)), 1);
  EXPECT_EQ(mean(P({2}))(Rational(2)), Rational(1, 3));
  const auto r6 = mean_dominance_check(6, 6);
  EXPECT_GT(r6.incomparable, 0);
  for (const auto& p : r6.pairs) {
    EXPECT_FALSE(p.lower == P({3, 1, 1, 1}) && p.upper == P({2, 2, 2}));
    EXPECT_FALSE(p.lower == P({2, 2, 2}) && p.upper == P({3, 1, 1, 1}));
  }
  EXPECT_THROW(mean_dominance_check(4, 3), std::invalid_argument);
}

#include "immoments/symgroup.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace immoments;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

Subset image_of(const Permutation& alpha, Subset a) {
  Subset out = 0;
  for (int i = 0; i < alpha.degree(); ++i)
    if (a >> i & 1) out |= Subset{1} << (alpha(i + 1) - 1);
  return out;
}

}  // namespace

TEST(Permutation, ValidatesImages) {
  EXPECT_THROW(perm({1, 1}), std::invalid_argument);
  EXPECT_THROW(perm({0, 1}), std::invalid_argument);
  EXPECT_THROW(perm({1, 3}), std::invalid_argument);
  EXPECT_EQ(perm({3, 2, 1, 4}).str(), "[3,2,1,4]");
  EXPECT_EQ(perm({2, 3, 1})(1), 2);
}

TEST(Compose, Examples) {
  const auto b = perm({2, 3, 1, 4});
  EXPECT_EQ(Permutation::identity(4) * b, b);
  EXPECT_TRUE((b * b.inverse()).is_identity());
  // (123)∘(12): 1→2→3, 2→1→2, 3→3→1.
  const auto c = perm({2, 3, 1}) * perm({2, 1, 3});
  EXPECT_EQ(c, perm({3, 2, 1}));
  EXPECT_EQ(cycle_type(c), Partition({2, 1}));
  EXPECT_THROW(compose(perm({1}), perm({1, 2})), std::invalid_argument);
}

TEST(Compose, AssociativeOnS4) {
  const auto all = all_permutations(4);
  for (std::size_t a = 0; a < all.size(); a += 5)
    for (std::size_t b = 0; b < all.size(); b += 3)
      for (std::size_t c = 0; c < all.size(); c += 7) EXPECT_EQ((all[a] * all[b]) * all[c], all[a] * (all[b] * all[c]));
}

TEST(CycleType, Examples) {
  EXPECT_EQ(cycle_type(Permutation::identity(4)), Partition({1, 1, 1, 1}));
  EXPECT_EQ(cycle_type(perm({2, 3, 1})), Partition({3}));
  EXPECT_EQ(cycle_type(epsilon(subset_of({2, 3, 5}), 6)), Partition({2, 2, 2, 1, 1, 1, 1, 1, 1}));
}

TEST(CycleType, SignMatchesInversionParity) {
  for (int m = 1; m <= 6; ++m)
    for (const auto& p : all_permutations(m)) {
      int inv = 0;
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) inv += p(i) > p(j);
      EXPECT_EQ(sign(p), inv % 2 ? -1 : 1);
      EXPECT_EQ(cycle_type(p), cycle_type(p.inverse()));
    }
}

TEST(AllPermutations, CountsAndOrder) {
  EXPECT_EQ(all_permutations(0).size(), 1U);
  EXPECT_EQ(all_permutations(5).size(), 120U);
  const auto s4 = all_permutations(4);
  for (std::size_t i = 1; i < s4.size(); ++i) EXPECT_LT(s4[i - 1].one_line(), s4[i].one_line());
}

TEST(EmbedV, Examples) {
  EXPECT_TRUE(embed_V(Permutation::identity(3), Permutation::identity(3)).is_identity());
  const auto a = perm({2, 3, 1}), b = perm({2, 1, 3});
  const auto v = embed_V(a, b);
  EXPECT_EQ(v, perm({2, 3, 1, 5, 4, 6}));
  std::vector<int> joined = cycle_type(a).vec();
  const auto tb = cycle_type(b);
  for (int x : tb.vec()) joined.push_back(x);
  EXPECT_EQ(cycle_type(v), Partition::from_unsorted(joined));
  EXPECT_THROW(embed_V(perm({1}), perm({1, 2})), std::invalid_argument);
}

TEST(EmbedV, GroupOrdersUpTo4) {
  for (int n = 1; n <= 4; ++n) {
    std::set<Permutation> v;
    for (const auto& a : all_permutations(n))
      for (const auto& b : all_permutations(n)) v.insert(embed_V(a, b));
    EXPECT_EQ(v.size(), static_cast<std::size_t>(factorial(n) * factorial(n)));
    // Closed under composition.
    for (const auto& x : v)
      for (const auto& y : v) ASSERT_TRUE(v.count(x * y));
  }
}

TEST(Epsilon, Examples) {
  EXPECT_TRUE(epsilon(0, 4).is_identity());
  EXPECT_EQ(epsilon(subset_of({2, 3, 5}), 6), perm({1, 8, 9, 4, 11, 6, 7, 2, 3, 10, 5, 12}));
  for (Subset a = 0; a < 16; ++a) EXPECT_TRUE((epsilon(a, 4) * epsilon(a, 4)).is_identity());
  EXPECT_THROW(epsilon(subset_of({5}), 4), std::invalid_argument);
  EXPECT_THROW(subset_of({0}), std::invalid_argument);
}

TEST(Epsilon, GroupOrdersAndSymmetricDifference) {
  for (int n = 1; n <= 8; ++n) {
    std::set<Permutation> h;
    for (Subset a = 0; a < (Subset{1} << n); ++a) h.insert(epsilon(a, n));
    EXPECT_EQ(h.size(), std::size_t{1} << n);
    for (Subset a = 0; a < (Subset{1} << n); a += 3)
      for (Subset b = 0; b < (Subset{1} << n); b += 5) EXPECT_EQ(epsilon(a, n) * epsilon(b, n), epsilon(a ^ b, n));
  }
}

TEST(Epsilon, ConjugationByDiagonalActionRelabels) {
  const int n = 4;
  for (const auto& alpha : all_permutations(n)) {
    const auto diag = embed_V(alpha, alpha);
    for (Subset a = 0; a < (Subset{1} << n); ++a)
      EXPECT_EQ(diag * epsilon(a, n) * diag.inverse(), epsilon(image_of(alpha, a), n));
  }
}

TEST(Intervals, Examples) {
  EXPECT_EQ(interval(0), 0U);
  EXPECT_EQ(interval(3), subset_of({1, 2, 3}));
  EXPECT_EQ(interval_diff(5, 2), subset_of({3, 4, 5}));
  for (int l = 0; l <= 6; ++l)
    for (int j = 0; j <= l; ++j)
      for (int k = 0; l + k <= 8; ++k) EXPECT_EQ(subset_size(interval_diff(l + k, l - j)), k + j);
  EXPECT_THROW(interval_diff(2, 3), std::invalid_argument);
}

TEST(Theta, Examples) {
  EXPECT_TRUE(theta(3, 0, 5).is_identity());
  EXPECT_EQ(theta(2, 1, 4), perm({3, 2, 1, 4}));
  EXPECT_THROW(theta(1, 2, 4), std::invalid_argument);
  EXPECT_THROW(theta(3, 2, 4), std::invalid_argument);
}

TEST(Theta, IsAnInvolutionUpTo6) {
  for (int n = 0; n <= 6; ++n)
    for (int l = 0; l <= n; ++l)
      for (int k = 0; k <= l && l + k <= n; ++k) {
        const auto t = theta(l, k, n);
        EXPECT_TRUE((t * t).is_identity());
        EXPECT_EQ(n - cycle_type(t).length(), k);
      }
}

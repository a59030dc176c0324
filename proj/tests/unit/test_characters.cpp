#include "immoments/characters.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <sstream>

using namespace immoments;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Character of the permutation representation on k-subsets of [m], minus the
// one on (k−1)-subsets: χ^{(m−k,k)} for 2k ≤ m.
long two_row_character(int m, int k, const Permutation& p) {
  auto fixed_subsets = [&](int size) {
    long count = 0;
    for (Subset s = 0; s < (Subset{1} << m); ++s) {
      if (subset_size(s) != size) continue;
      Subset img = 0;
      for (int i = 0; i < m; ++i)
        if (s >> i & 1) img |= Subset{1} << (p(i + 1) - 1);
      count += img == s;
    }
    return count;
  };
  return fixed_subsets(k) - (k > 0 ? fixed_subsets(k - 1) : 0);
}

}  // namespace

TEST(Character, Examples) {
  CharacterTable t;
  EXPECT_EQ(t.character(P({2, 1}), P({1, 1, 1})), 2);
  EXPECT_EQ(t.character(P({2, 1}), P({2, 1})), 0);
  EXPECT_EQ(t.character(P({2, 1}), P({3})), -1);
  for (const auto& c : partitions_of(6)) EXPECT_EQ(t.character(P({6}), c), 1);
  EXPECT_THROW(t.character(P({2, 1}), P({2})), std::invalid_argument);
  EXPECT_EQ(t.character(Partition{}, Partition{}), 1);
}

TEST(Character, IdentityGivesDimensionAndSignRowIsSign) {
  CharacterTable t;
  for (int m = 1; m <= 9; ++m) {
    const Partition id(std::vector<int>(m, 1));
    for (const auto& l : partitions_of(m)) EXPECT_EQ(BigInt(t.character(l, id)), dim_symmetric(l)) << l;
    for (const auto& c : partitions_of(m)) EXPECT_EQ(t.character(id, c), sign_of(c)) << c;
  }
}

TEST(Character, MatchesPermutationRepresentationsForTwoRowShapes) {
  CharacterTable t;
  for (int m = 2; m <= 7; ++m)
    for (const auto& p : all_permutations(m))
      for (int k = 0; 2 * k <= m; ++k) {
        std::vector<int> parts{m - k};
        if (k) parts.push_back(k);
        ASSERT_EQ(t.character_of_perm(Partition(parts), p), two_row_character(m, k, p)) << m << " " << k << " " << p.str();
      }
}

TEST(Character, RowOrthogonalityUpTo8) {
  for (int m = 1; m <= 8; ++m) {
    const FrozenCharacterTable t(m);
    const auto& cls = t.partitions();
    for (int a = 0; a < t.size(); ++a)
      for (int b = 0; b < t.size(); ++b) {
        BigInt s = 0;
        for (int c = 0; c < t.size(); ++c) s += class_size(cls[c]) * t(a, c) * t(b, c);
        EXPECT_EQ(s, a == b ? factorial(m) : BigInt(0)) << m << " " << cls[a] << " " << cls[b];
      }
  }
}

TEST(Character, ColumnOrthogonalityUpTo8) {
  for (int m = 1; m <= 8; ++m) {
    const FrozenCharacterTable t(m);
    for (int c = 0; c < t.size(); ++c)
      for (int e = 0; e < t.size(); ++e) {
        BigInt s = 0;
        for (int a = 0; a < t.size(); ++a) s += BigInt(t(a, c)) * t(a, e);
        EXPECT_EQ(s, c == e ? factorial(m) / class_size(t.partitions()[c]) : BigInt(0));
      }
  }
}

TEST(Character, ConjugateShapeTwistsBySignUpTo8) {
  CharacterTable t;
  for (int m = 1; m <= 8; ++m)
    for (const auto& l : partitions_of(m))
      for (const auto& c : partitions_of(m)) EXPECT_EQ(t.character(l, c), t.character(conjugate(l), c) * sign_of(c));
}

TEST(Character, ConvolutionIdentityUpTo5) {
  for (int n = 1; n <= 5; ++n) {
    CharacterTable t;
    const auto perms = all_permutations(n);
    const auto shapes = partitions_of(n);
    for (const auto& l : shapes) {
      std::vector<std::int64_t> chi;
      for (const auto& p : perms) chi.push_back(t.character_of_perm(l, p));
      for (const auto& xi : shapes) {
        BigInt s = 0;
        for (std::size_t a = 0; a < perms.size(); ++a)
          for (std::size_t b = 0; b < perms.size(); ++b)
            s += BigInt(chi[a] * chi[b]) * t.character_of_perm(xi, perms[a] * perms[b].inverse());
        const BigInt expected = xi == l ? factorial(n) * factorial(n) / dim_symmetric(xi) : BigInt(0);
        EXPECT_EQ(s, expected) << l << " " << xi;
      }
    }
  }
}

TEST(HatCharacter, Examples) {
  CharacterTable t;
  const auto id = Permutation::identity(3);
  const auto c3 = Permutation({2, 3, 1});
  const auto tr = Permutation({2, 1, 3});
  EXPECT_EQ(t.hat_character(P({2, 1}), id, id), 4);
  EXPECT_EQ(t.hat_character(P({2, 1}), c3, c3), 1);
  for (const auto& q : all_permutations(3)) EXPECT_EQ(t.hat_character(P({2, 1}), tr, q), 0);
  EXPECT_THROW(t.hat_character(P({2, 1}), id, Permutation::identity(2)), std::invalid_argument);
}

TEST(CharacterOfPerm, DependsOnlyOnCycleType) {
  CharacterTable t;
  for (const auto& p : all_permutations(5)) {
    EXPECT_EQ(t.character_of_perm(P({1, 1, 1, 1, 1}), p), sign(p));
    EXPECT_EQ(t.character_of_perm(P({3, 2}), p), t.character(P({3, 2}), cycle_type(p)));
  }
  EXPECT_THROW(t.character_of_perm(P({2}), Permutation::identity(3)), std::invalid_argument);
}

TEST(FrozenTable, Size18BuildsQuickly) {
  const auto start = std::chrono::steady_clock::now();
  const FrozenCharacterTable t(18);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(t.size(), 385);
  EXPECT_LT(secs, 60.0);
  // Spot-check a few rows: trivial, sign, and the dimension column.
  const Partition id(std::vector<int>(18, 1));
  EXPECT_EQ(t(P({18}), P({5, 4, 4, 3, 2})), 1);
  EXPECT_EQ(t(id, P({2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})), 1);
  EXPECT_EQ(t(id, P({2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})), -1);
  EXPECT_EQ(BigInt(t(P({9, 6, 3}), id)), dim_symmetric(P({9, 6, 3})));
}

TEST(FrozenTable, CsvHasHeaderAndOneRowPerIrrep) {
  const FrozenCharacterTable t(3);
  std::ostringstream os;
  t.write_csv(os);
  const std::string csv = os.str();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_NE(csv.find("\"2,1\",-1,0,2"), std::string::npos) << csv;
}

TEST(ClassSize, SumsToFactorial) {
  for (int m = 1; m <= 10; ++m) {
    BigInt s = 0;
    for (const auto& c : partitions_of(m)) s += class_size(c);
    EXPECT_EQ(s, factorial(m));
  }
  EXPECT_EQ(class_size(P({2, 1})), 3);
}

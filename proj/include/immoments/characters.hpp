#pragma once

// Irreducible characters of the symmetric groups by the Murnaghan–Nakayama
// rule, with memoization over (shape, remaining cycle lengths).
//
// Values are held in 64-bit integers: |χ^λ(c)| <= dim λ <= sqrt(m!), which
// stays below 2^63 for every m this library accepts (m <= kMaxCharacterDegree).

#include "immoments/partitions.hpp"
#include "immoments/symgroup.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace immoments {

inline constexpr int kMaxCharacterDegree = 30;

class CharacterTable {
 public:
  std::int64_t character(const Partition& lambda, const CycleType& c) {
    if (lambda.weight() != c.weight()) throw std::invalid_argument("character: weight mismatch between " + lambda.paren() + " and " + c.paren());
    if (lambda.weight() > kMaxCharacterDegree) throw std::invalid_argument("character: degree exceeds supported range");
    return eval(lambda.vec(), c.vec(), 0);
  }

  std::int64_t character_of_perm(const Partition& lambda, const Permutation& p) {
    if (lambda.weight() != p.degree()) throw std::invalid_argument("character_of_perm: degree mismatch");
    return character(lambda, cycle_type(p));
  }

  /// χ̂^λ(π⁺ ⊕ π⁻) = χ^λ(π⁺) χ^λ(π⁻).
  std::int64_t hat_character(const Partition& lambda, const Permutation& plus, const Permutation& minus) {
    if (plus.degree() != lambda.weight() || minus.degree() != lambda.weight())
      throw std::invalid_argument("hat_character: degree mismatch");
    return character_of_perm(lambda, plus) * character_of_perm(lambda, minus);
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  // Removes border strips of length mu[pos], mu[pos+1], ... from lambda.
  std::int64_t eval(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t pos) {
    if (pos == mu.size()) return lambda.empty() ? 1 : 0;
    Key key{lambda, std::vector<int>(mu.begin() + static_cast<long>(pos), mu.end())};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = mu[pos];
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + len - 1 - i;
    auto occupied = [&beta](int v) { return std::find(beta.begin(), beta.end(), v) != beta.end(); };

    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
      const int target = beta[i] - r;
      if (target < 0 || occupied(target)) continue;
      int between = 0;
      for (int b : beta)
        if (b > target && b < beta[i]) ++between;
      std::vector<int> nb = beta;
      nb[i] = target;
      std::sort(nb.begin(), nb.end(), std::greater<>());
      std::vector<int> shape;
      for (int k = 0; k < len; ++k) {
        const int part = nb[k] - (len - 1 - k);
        if (part > 0) shape.push_back(part);
      }
      const std::int64_t sub = eval(shape, mu, pos + 1);
      total += (between % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::map<Key, std::int64_t> memo_;
};

/// Dense, immutable character table of S_m: rows are irreps and columns are
/// classes, both in partitions_of(m) order. Safe to share across threads.
class FrozenCharacterTable {
 public:
  explicit FrozenCharacterTable(int m) : FrozenCharacterTable(m, nullptr) {}
  FrozenCharacterTable(int m, CharacterTable* shared) : index_(m) {
    CharacterTable local;
    CharacterTable& t = shared ? *shared : local;
    const int k = index_.size();
    values_.resize(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) values_[static_cast<std::size_t>(i) * k + j] = t.character(index_[i], index_[j]);
  }

  int degree() const { return index_.n(); }
  int size() const { return index_.size(); }
  const PartitionIndex& partitions() const { return index_; }
  std::int64_t operator()(int irrep, int cls) const {
    return values_[static_cast<std::size_t>(irrep) * index_.size() + cls];
  }
  std::int64_t operator()(const Partition& irrep, const CycleType& cls) const {
    return (*this)(index_.index_of(irrep), index_.index_of(cls));
  }

  /// CSV with a header row of class labels and one row per irrep.
  void write_csv(std::ostream& os) const {
    os << "lambda";
    for (const auto& c : index_.all()) os << ",\"" << c.str() << '"';
    os << '\n';
    for (int i = 0; i < size(); ++i) {
      os << '"' << index_[i].str() << '"';
      for (int j = 0; j < size(); ++j) os << ',' << (*this)(i, j);
      os << '\n';
    }
  }

 private:
  PartitionIndex index_;
  std::vector<std::int64_t> values_;
};

/// Number of permutations of cycle type c: m! / ∏ k^{a_k} a_k!.
inline BigInt class_size(const CycleType& c) {
  BigInt denom = 1;
  std::map<int, int> mult;
  for (int p : c.vec()) ++mult[p];
  for (const auto& [k, a] : mult) {
    for (int i = 0; i < a; ++i) denom *= k;
    denom *= factorial(a);
  }
  return factorial(c.weight()) / denom;
}

}  // namespace immoments

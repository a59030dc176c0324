#pragma once

// Permutations and the Young-subgroup combinatorics of the fourth-moment
// sums. Points of the 2n-symbol array are flattened as +i -> i and
// -i -> n+i (1-based), so the column-preserving subgroup V_n is
// block-diagonal and the row-preserving subgroup H_n is generated by the
// swaps i <-> n+i.

#include "immoments/partitions.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace immoments {

/// Subsets of {1..n} as bitmasks; bit (i-1) stands for element i.
using Subset = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;
  /// One-line notation, 1-based images.
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int v : img_) {
      if (v < 1 || v > degree() || seen[v]) throw std::invalid_argument("images do not form a permutation");
      seen[v] = true;
    }
    for (int& v : img_) --v;
  }
  static Permutation identity(int m) {
    Permutation p;
    p.img_.resize(m);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
  }
  /// From 0-based images (unchecked beyond size).
  static Permutation from_zero_based(std::vector<int> images) {
    for (auto& v : images) ++v;
    return Permutation(std::move(images));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  /// 1-based application.
  int operator()(int i) const { return img_.at(i - 1) + 1; }
  /// 0-based images.
  const std::vector<int>& zero_based() const { return img_; }
  std::vector<int> one_line() const {
    std::vector<int> out(img_);
    for (auto& v : out) ++v;
    return out;
  }
  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r = *this;
    for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  /// "[3,2,1,4]"
  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < degree(); ++i) s += (i ? "," : "") + std::to_string(img_[i] + 1);
    return s + "]";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<int> img_;
};

/// (a∘b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> out(a.degree());
  for (int i = 0; i < a.degree(); ++i) out[i] = a.zero_based()[b.zero_based()[i]];
  return Permutation::from_zero_based(std::move(out));
}

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

using CycleType = Partition;

inline CycleType cycle_type(const Permutation& p) {
  const auto& img = p.zero_based();
  std::vector<bool> seen(img.size(), false);
  std::vector<int> lens;
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  return Partition::from_unsorted(std::move(lens));
}

/// Sign of a class: (-1)^(m - #cycles).
inline int sign_of(const CycleType& c) { return ((c.weight() - c.length()) % 2 == 0) ? 1 : -1; }
inline int sign(const Permutation& p) { return sign_of(cycle_type(p)); }

/// π⁺ ⊕ π⁻ in S_2n: π⁺ acts on {1..n}, π⁻ on {n+1..2n}.
inline Permutation embed_V(const Permutation& plus, const Permutation& minus) {
  if (plus.degree() != minus.degree()) throw std::invalid_argument("embed_V: degree mismatch");
  const int n = plus.degree();
  std::vector<int> out(2 * n);
  for (int i = 0; i < n; ++i) {
    out[i] = plus.zero_based()[i];
    out[n + i] = n + minus.zero_based()[i];
  }
  return Permutation::from_zero_based(std::move(out));
}

/// x ⊕ y in S_(a+b): x on {1..a}, y on {a+1..a+b}.
inline Permutation direct_sum(const Permutation& x, const Permutation& y) {
  const int a = x.degree(), b = y.degree();
  std::vector<int> out(a + b);
  for (int i = 0; i < a; ++i) out[i] = x.zero_based()[i];
  for (int i = 0; i < b; ++i) out[a + i] = a + y.zero_based()[i];
  return Permutation::from_zero_based(std::move(out));
}

inline Subset subset_of(std::initializer_list<int> elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > 32) throw std::invalid_argument("subset element out of range");
    s |= Subset{1} << (e - 1);
  }
  return s;
}

inline int subset_size(Subset s) { return __builtin_popcount(s); }

/// ε_A in S_2n: swaps +i and -i for every i in A.
inline Permutation epsilon(Subset a, int n) {
  if (n < 0 || n > 16) throw std::invalid_argument("epsilon: n out of range");
  if (n < 32 && (a >> n) != 0) throw std::invalid_argument("epsilon: subset element exceeds n");
  std::vector<int> out(2 * n);
  for (int i = 0; i < n; ++i) {
    const bool swap = (a >> i) & 1U;
    out[i] = swap ? n + i : i;
    out[n + i] = swap ? i : n + i;
  }
  return Permutation::from_zero_based(std::move(out));
}

/// [ℓ] = {1..ℓ}
inline Subset interval(int l) {
  if (l < 0 || l > 31) throw std::invalid_argument("interval: out of range");
  return (Subset{1} << l) - 1;
}

/// [ℓ∖m] = {m+1..ℓ}
inline Subset interval_diff(int l, int m) {
  if (m < 0 || m > l) throw std::invalid_argument("interval_diff requires 0 <= m <= l");
  return interval(l) & ~interval(m);
}

/// The involution exchanging {1..k} with {ℓ+1..ℓ+k} pointwise.
inline Permutation theta(int l, int k, int n) {
  if (k < 0 || k > l || l + k > n) throw std::invalid_argument("theta requires 0 <= k <= l and l + k <= n");
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) {
    int v = i;
    if (i <= k) v = i + l;
    else if (i >= l + 1 && i <= l + k) v = i - l;
    out[i - 1] = v;
  }
  return Permutation(std::move(out));
}

/// Every permutation of degree m in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  std::vector<int> cur(m);
  std::iota(cur.begin(), cur.end(), 0);
  do {
    out.push_back(Permutation::from_zero_based(cur));
  } while (std::next_permutation(cur.begin(), cur.end()));
  return out;
}

}  // namespace immoments

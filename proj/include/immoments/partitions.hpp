#pragma once

// Integer partitions, Young diagrams and the dimension formulas of the
// irreducible representations of the symmetric group and of U(d) that
// they label.

#include "immoments/bigint.hpp"
#include "immoments/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace immoments {

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be non-increasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  /// Sorts arbitrary positive parts into canonical order.
  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int operator[](int i) const { return parts_.at(i); }
  /// Part i (0-based), or 0 beyond the length.
  int part_or_zero(int i) const { return i < length() ? parts_[i] : 0; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

  /// Compact form "6,4,1"; the empty partition renders as "".
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }
  /// Parenthesised form "(6,4,1)".
  std::string paren() const { return "(" + str() + ")"; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.paren(); }

/// Parses "6,4,1", "2,1^3", "[6,4,1]" or "(3,2^2)". Exponents expand
/// repeated parts; the result must already be non-increasing.
inline Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
    const char close = s.front() == '[' ? ']' : ')';
    if (s.back() != close) throw std::invalid_argument("unbalanced brackets in partition '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  if (s.empty()) return Partition{};
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int value = 0, count = 1;
    const auto caret = item.find('^');
    try {
      std::size_t used = 0;
      value = std::stoi(item.substr(0, caret), &used);
      if (used != item.substr(0, caret).size()) throw std::invalid_argument("trailing");
      if (caret != std::string::npos) {
        const std::string e = item.substr(caret + 1);
        count = std::stoi(e, &used);
        if (used != e.size() || count < 0) throw std::invalid_argument("exponent");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid partition syntax '" + std::string(text) + "'");
    }
    parts.insert(parts.end(), count, value);
  }
  return Partition(std::move(parts));
}

/// The transpose of the Young diagram.
inline Partition conjugate(const Partition& p) {
  std::vector<int> out;
  if (p.empty()) return {};
  for (int j = 0; j < p[0]; ++j) {
    int col = 0;
    while (col < p.length() && p[col] > j) ++col;
    out.push_back(col);
  }
  return Partition(std::move(out));
}

/// Hook lengths laid out row by row over the diagram.
inline std::vector<std::vector<int>> hook_lengths(const Partition& p) {
  const Partition c = conjugate(p);
  std::vector<std::vector<int>> h(p.length());
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) h[i].push_back(p[i] + c[j] - i - j - 1);
  return h;
}

inline BigInt hook_product(const Partition& p) {
  BigInt r = 1;
  for (const auto& row : hook_lengths(p))
    for (int h : row) r *= h;
  return r;
}

/// n!/H^λ, the dimension of the symmetric-group irrep.
inline BigInt dim_symmetric(const Partition& p) {
  const BigInt h = hook_product(p);
  const BigInt nf = factorial(p.weight());
  if (nf % h != 0) throw std::logic_error("hook product does not divide n!");
  return nf / h;
}

/// A scalar times a product of linear factors (d + c)^m with integer offsets.
class FactoredLinearPoly {
 public:
  FactoredLinearPoly() = default;
  explicit FactoredLinearPoly(BigInt scalar) : scalar_(std::move(scalar)) {
    if (scalar_ <= 0) throw std::invalid_argument("factored polynomial scalar must be positive");
  }

  void multiply_factor(long offset, int multiplicity = 1) {
    if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
    if (multiplicity == 0) return;
    factors_[offset] += multiplicity;
  }
  /// Removes one copy of (d + offset); it must be present.
  void remove_factor(long offset) {
    auto it = factors_.find(offset);
    if (it == factors_.end()) throw std::logic_error("factor not present");
    if (--it->second == 0) factors_.erase(it);
  }
  void multiply_scalar(const BigInt& k) {
    if (k <= 0) throw std::invalid_argument("factored polynomial scalar must be positive");
    scalar_ *= k;
  }
  void set_scalar(BigInt k) {
    if (k <= 0) throw std::invalid_argument("factored polynomial scalar must be positive");
    scalar_ = std::move(k);
  }

  const BigInt& scalar() const { return scalar_; }
  /// offset -> multiplicity, ascending offsets, all multiplicities >= 1.
  const std::map<long, int>& factors() const { return factors_; }
  int multiplicity(long offset) const {
    auto it = factors_.find(offset);
    return it == factors_.end() ? 0 : it->second;
  }
  int degree() const {
    int deg = 0;
    for (const auto& [c, m] : factors_) deg += m;
    return deg;
  }

  Polynomial expand() const {
    Polynomial p = scalar_;
    for (const auto& [c, m] : factors_)
      for (int k = 0; k < m; ++k) p.mul_linear(c);
    return p;
  }
  Rational operator()(const Rational& d) const {
    Rational r = Rational(scalar_);
    for (const auto& [c, m] : factors_)
      for (int k = 0; k < m; ++k) r *= d + c;
    return r;
  }

  friend FactoredLinearPoly operator*(FactoredLinearPoly a, const FactoredLinearPoly& b) {
    a.scalar_ *= b.scalar_;
    for (const auto& [c, m] : b.factors_) a.factors_[c] += m;
    return a;
  }

  friend bool operator==(const FactoredLinearPoly&, const FactoredLinearPoly&) = default;

  /// e.g. "d^2*(d-1)*(d+1)^2"; scalar prefixed when not 1.
  std::string str() const {
    std::string s;
    auto append = [&s](const std::string& t) {
      if (!s.empty()) s += '*';
      s += t;
    };
    if (scalar_ != 1) append(scalar_.str());
    for (const auto& [c, m] : factors_) {
      std::string f = c == 0 ? "d" : (c > 0 ? "(d+" + std::to_string(c) + ")" : "(d-" + std::to_string(-c) + ")");
      if (m > 1) f += "^" + std::to_string(m);
      append(f);
    }
    return s.empty() ? "1" : s;
  }

 private:
  BigInt scalar_ = 1;
  std::map<long, int> factors_;
};

/// N^λ(d) = product over boxes (i,j) of (d + j - i).
inline FactoredLinearPoly unitary_numerator(const Partition& p) {
  FactoredLinearPoly f;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) f.multiply_factor(j - i);
  return f;
}

/// N^λ(d)/H^λ at integer d >= 0. Zero whenever len(λ) > d.
inline BigInt dim_unitary(const Partition& p, long d) {
  if (d < 0) throw std::invalid_argument("dim_unitary requires d >= 0");
  BigInt num = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) num *= d + j - i;
  const BigInt h = hook_product(p);
  if (num % h != 0) throw std::logic_error("hook product does not divide N(d)");
  return num / h;
}

enum class Dominance { less, equal, greater, incomparable };

inline const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::less: return "less";
    case Dominance::equal: return "equal";
    case Dominance::greater: return "greater";
    case Dominance::incomparable: return "incomparable";
  }
  return "?";
}

/// Compares a and b in the dominance order: `less` means a ◁ b.
inline Dominance dominates(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) throw std::invalid_argument("dominance requires partitions of equal weight");
  if (a == b) return Dominance::equal;
  bool le = true, ge = true;
  long sa = 0, sb = 0;
  const int k = std::min(a.length(), b.length());
  for (int i = 0; i < k; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) le = false;
    if (sa < sb) ge = false;
  }
  if (le) return Dominance::less;
  if (ge) return Dominance::greater;
  return Dominance::incomparable;
}

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of requires n >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Dense index over partitions_of(n).
class PartitionIndex {
 public:
  explicit PartitionIndex(int n) : n_(n), list_(partitions_of(n)) {
    for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], static_cast<int>(i));
  }
  int n() const { return n_; }
  int size() const { return static_cast<int>(list_.size()); }
  const Partition& operator[](int i) const { return list_.at(i); }
  const std::vector<Partition>& all() const { return list_; }
  int index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("partition " + p.paren() + " is not a partition of " + std::to_string(n_));
    return it->second;
  }

 private:
  int n_;
  std::vector<Partition> list_;
  std::map<Partition, int> index_;
};

}  // namespace immoments

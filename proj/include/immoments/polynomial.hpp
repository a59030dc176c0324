#pragma once

#include "immoments/bigint.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <vector>

namespace immoments {

/// Dense univariate polynomial in d with arbitrary-precision integer
/// coefficients, stored lowest degree first. The zero polynomial has no
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(const BigInt& constant) {  // NOLINT: implicit from integer is convenient
    if (constant != 0) coeffs_.push_back(constant);
  }
  Polynomial(int constant) : Polynomial(BigInt(constant)) {}  // NOLINT

  /// The monic linear factor (d + offset).
  static Polynomial linear(long offset) { return Polynomial(std::vector<BigInt>{BigInt(offset), BigInt(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : BigInt(0);
  }
  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  }
  BigInt operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Multiplies by (d + offset) in place.
  void mul_linear(long offset) {
    if (is_zero()) return;
    coeffs_.push_back(0);
    for (std::size_t i = coeffs_.size() - 1; i > 0; --i) coeffs_[i] = coeffs_[i - 1] + coeffs_[i] * offset;
    coeffs_[0] *= offset;
  }

  /// Exact division by an integer; throws if some coefficient is not divisible.
  Polynomial divided_exactly(const BigInt& k) const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) {
      if (c % k != 0) throw std::logic_error("polynomial not divisible by integer");
      c /= k;
    }
    return r;
  }

  /// True if (d + offset) divides this polynomial; on success writes the quotient.
  bool try_divide_linear(long offset, Polynomial& quotient) const {
    if (is_zero()) {
      quotient = {};
      return true;
    }
    // Synthetic division at root -offset.
    const BigInt root = -offset;
    std::vector<BigInt> q(coeffs_.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
      carry = coeffs_[i] + carry * root;
      q[i - 1] = carry;
    }
    if (coeffs_[0] + carry * root != 0) return false;
    quotient = Polynomial(std::move(q));
    return true;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline Polynomial pow(Polynomial base, unsigned exp) {
  Polynomial r = 1;
  while (exp) {
    if (exp & 1U) r *= base;
    base *= base;
    exp >>= 1U;
  }
  return r;
}

}  // namespace immoments

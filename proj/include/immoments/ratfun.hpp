#pragma once

// Exact rational functions of d whose denominators split into integer
// linear factors. The canonical form is
//
//     prefactor * Q(d) / ∏ (d + c)^m
//
// with Q primitive (content 1) and a positive leading coefficient, and no
// (d + c) dividing both Q and the denominator. Two values are equal iff their
// canonical forms are identical.

#include "immoments/bigint.hpp"
#include "immoments/partitions.hpp"
#include "immoments/polynomial.hpp"

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace immoments {

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Asymptotics {
  Rational coefficient;
  int order = 0;  // f(d) = coefficient / d^order + O(1/d^(order+1))
  friend bool operator==(const Asymptotics&, const Asymptotics&) = default;
};

class RationalFunction {
 public:
  RationalFunction() = default;  // zero
  RationalFunction(const Rational& c) {  // NOLINT
    if (c != 0) {
      prefactor_ = c;
      numer_ = 1;
    }
  }
  RationalFunction(const BigInt& c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(int c) : RationalFunction(Rational(c)) {}  // NOLINT

  /// numerator / denominator, reduced to canonical form.
  RationalFunction(const Polynomial& numerator, const FactoredLinearPoly& denominator) {
    assign(numerator, Rational(1), denominator);
  }

  /// c / denominator
  static RationalFunction reciprocal(const FactoredLinearPoly& denominator, const Rational& c = 1) {
    RationalFunction r;
    r.assign(Polynomial(1), c, denominator);
    return r;
  }

  bool is_zero() const { return prefactor_ == 0; }
  const Rational& prefactor() const { return prefactor_; }
  /// Primitive numerator polynomial Q (1 for a pure constant over factors; 0 for zero).
  const Polynomial& numerator() const { return numer_; }
  const FactoredLinearPoly& denominator() const { return denom_; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.prefactor_ == b.prefactor_ && a.numer_ == b.numer_ && a.denom_ == b.denom_;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    FactoredLinearPoly l;
    for (const auto& [c, m] : a.denom_.factors()) l.multiply_factor(c, m);
    for (const auto& [c, m] : b.denom_.factors())
      if (m > l.multiplicity(c)) l.multiply_factor(c, m - l.multiplicity(c));
    const BigInt scale = lcm(boost::multiprecision::denominator(a.prefactor_), boost::multiprecision::denominator(b.prefactor_));
    auto lifted = [&](const RationalFunction& f) {
      const BigInt k = boost::multiprecision::numerator(f.prefactor_) * (scale / boost::multiprecision::denominator(f.prefactor_));
      Polynomial p = f.numer_ * Polynomial(k);
      for (const auto& [c, m] : l.factors())
        for (int i = f.denom_.multiplicity(c); i < m; ++i) p.mul_linear(c);
      return p;
    };
    RationalFunction r;
    l.set_scalar(scale);
    r.assign(lifted(a) + lifted(b), Rational(1), l);
    return r;
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.prefactor_ = -r.prefactor_;
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RationalFunction r;
    r.assign(a.numer_ * b.numer_, a.prefactor_ * b.prefactor_, a.denom_ * b.denom_);
    return r;
  }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  /// Exact value at a rational point; throws PoleError on a denominator root.
  Rational operator()(const Rational& d) const {
    if (is_zero()) return 0;
    for (const auto& [c, m] : denom_.factors())
      if (d + c == 0) throw PoleError("pole at d = " + to_string(d));
    return prefactor_ * numer_(d) / denom_(d);
  }
  Rational evaluate(const Rational& d) const { return (*this)(d); }
  double evaluate_double(double d) const {
    // Exact path when d is an integer; otherwise plain floating arithmetic.
    if (d == static_cast<double>(static_cast<long long>(d))) return static_cast<double>((*this)(Rational(static_cast<long long>(d))));
    double num = 0;
    const auto& cs = numer_.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) num = num * d + static_cast<double>(*it);
    double den = 1;
    for (const auto& [c, m] : denom_.factors())
      for (int i = 0; i < m; ++i) den *= d + static_cast<double>(c);
    return static_cast<double>(prefactor_) * num / den;
  }

  Asymptotics leading_asymptotics() const {
    if (is_zero()) throw std::domain_error("leading_asymptotics of zero");
    return {prefactor_ * Rational(numer_.leading()), denom_.degree() - numer_.degree()};
  }

  std::string to_display() const;
  std::string to_machine() const;

 private:
  void assign(Polynomial num, Rational scale, const FactoredLinearPoly& den) {
    if (num.is_zero() || scale == 0) {
      *this = RationalFunction();
      return;
    }
    FactoredLinearPoly reduced;
    for (const auto& [c, m] : den.factors()) {
      int keep = m;
      Polynomial q;
      while (keep > 0 && num.try_divide_linear(c, q)) {
        num = std::move(q);
        --keep;
      }
      reduced.multiply_factor(c, keep);
    }
    BigInt g = num.content();
    if (num.leading() < 0) g = -g;
    numer_ = num.divided_exactly(g);
    prefactor_ = scale * Rational(g) / Rational(den.scalar());
    denom_ = std::move(reduced);
  }

  Rational prefactor_ = 0;
  Polynomial numer_;
  FactoredLinearPoly denom_;
};

namespace detail {

inline std::string superscript(int k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(k), out;
  for (char c : s) out += digits[c - '0'];
  return out;
}

inline std::string pow_suffix(int k, bool machine) {
  if (k == 1) return "";
  return machine ? "^" + std::to_string(k) : superscript(k);
}

/// Descending powers, e.g. "3d²−d+2" or "3*d^2-d+2".
inline std::string poly_text(const Polynomial& p, bool machine) {
  const std::string minus = machine ? "-" : "−";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    BigInt c = p.coeff(k);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty()) s += neg ? minus : "";
    else s += neg ? minus : "+";
    if (k == 0) s += c.str();
    else {
      if (c != 1) s += c.str() + (machine ? "*" : "");
      s += "d" + pow_suffix(k, machine);
    }
  }
  return s.empty() ? "0" : s;
}

inline std::string linear_text(long c, bool machine) {
  const std::string minus = machine ? "-" : "−";
  if (c == 0) return "d";
  return "(d" + (c > 0 ? "+" + std::to_string(c) : minus + std::to_string(-c)) + ")";
}

inline int count_terms(const Polynomial& p) {
  int n = 0;
  for (const auto& c : p.coeffs()) n += c != 0;
  return n;
}

}  // namespace detail

inline std::string RationalFunction::to_display() const {
  if (is_zero()) return "0";
  // A fractional prefactor p/q is shown as p in the numerator and q in the denominator.
  const BigInt pn = boost::multiprecision::numerator(prefactor_), pd = boost::multiprecision::denominator(prefactor_);
  auto signed_text = [](const BigInt& v) { return v < 0 ? "−" + to_string(BigInt(-v)) : to_string(v); };
  const bool unit_q = numer_ == Polynomial(1);
  const bool has_den = pd != 1 || !denom_.factors().empty();
  std::string num;
  if (unit_q) num = signed_text(pn);
  else {
    const std::string q = detail::poly_text(numer_, false);
    const bool wrap = detail::count_terms(numer_) > 1;
    const std::string wq = wrap && (has_den || pn != 1) ? "(" + q + ")" : q;
    if (pn == 1) num = wq;
    else if (pn == -1) num = "−" + (wrap ? "(" + q + ")" : q);
    else num = signed_text(pn) + " " + (wrap ? "(" + q + ")" : q);
  }
  if (!has_den) return num;

  std::vector<std::string> parts;
  if (pd != 1) parts.push_back(to_string(pd));
  // Regroup (d−c)(d+c) into (d²−c²).
  std::map<long, int> linear = denom_.factors();
  if (auto it = linear.find(0); it != linear.end()) {
    parts.push_back("d" + detail::pow_suffix(it->second, false));
    linear.erase(it);
  }
  for (auto& [c, m] : linear) {
    if (c <= 0) continue;
    auto neg = linear.find(-c);
    if (neg == linear.end() || neg->second == 0) continue;
    const int pair = std::min(m, neg->second);
    parts.push_back("(d²−" + std::to_string(c * c) + ")" + detail::pow_suffix(pair, false));
    m -= pair;
    neg->second -= pair;
  }
  for (const auto& [c, m] : linear)
    if (m > 0) parts.push_back(detail::linear_text(c, false) + detail::pow_suffix(m, false));

  std::string den;
  for (std::size_t i = 0; i < parts.size(); ++i) den += (i ? " " : "") + parts[i];
  if (parts.size() > 1) den = "(" + den + ")";
  return num + " / " + den;
}

inline std::string RationalFunction::to_machine() const {
  if (is_zero()) return "0";
  const BigInt pn = boost::multiprecision::numerator(prefactor_), pd = boost::multiprecision::denominator(prefactor_);
  std::string num;
  if (numer_ == Polynomial(1)) num = to_string(pn);
  else {
    const std::string q = "(" + detail::poly_text(numer_, true) + ")";
    if (pn == 1) num = q;
    else if (pn == -1) num = "-" + q;
    else num = to_string(pn) + "*" + q;
  }
  std::vector<std::string> parts;
  if (pd != 1) parts.push_back(to_string(pd));
  for (const auto& [c, m] : denom_.factors()) parts.push_back(detail::linear_text(c, true) + detail::pow_suffix(m, true));
  if (parts.empty()) return num;
  std::string den;
  for (std::size_t i = 0; i < parts.size(); ++i) den += (i ? "*" : "") + parts[i];
  return num + "/" + (parts.size() > 1 ? "(" + den + ")" : den);
}

namespace detail {

/// Splits p into sign * content * d^k * ∏(d + c); fails when p has a root
/// that is not an integer.
inline bool split_linear(Polynomial p, FactoredLinearPoly& out, int& sign) {
  if (p.is_zero()) return false;
  sign = p.leading() < 0 ? -1 : 1;
  const BigInt content = p.content();
  p = p.divided_exactly(content * sign);
  if (p.leading() != 1) return false;
  FactoredLinearPoly f(content);
  Polynomial q;
  while (p.degree() > 0 && p.coeff(0) == 0 && p.try_divide_linear(0, q)) {
    p = q;
    f.multiply_factor(0);
  }
  for (BigInt r = 1; p.degree() > 0; ++r) {
    if (r > boost::multiprecision::abs(p.coeff(0))) return false;
    for (int s : {1, -1}) {
      const long offset = static_cast<long>(-s * r);  // root s*r <=> factor (d - s*r)
      while (p.degree() > 0 && p.try_divide_linear(offset, q)) {
        p = q;
        f.multiply_factor(offset);
      }
    }
  }
  out = f;
  return true;
}

struct Fraction {
  Polynomial num = 0, den = 1;
};

class Parser {
 public:
  Parser(std::string_view text, bool strict) : s_(text), strict_(strict) {}

  Fraction parse() {
    Fraction f = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("rational function parse error at offset " + std::to_string(pos_) + ": " + what + " in '" + std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  bool eat_minus() { return eat("-") || eat("−"); }
  bool eat_times() { return eat("*") || eat("·") || eat("×"); }

  // Superscript digits, or -1 if none at the cursor.
  int superscript_number() {
    static const std::string_view digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    int value = -1;
    for (;;) {
      bool hit = false;
      for (int k = 0; k < 10; ++k) {
        if (s_.substr(pos_, digits[k].size()) == digits[k]) {
          value = (value < 0 ? 0 : value * 10) + k;
          pos_ += digits[k].size();
          hit = true;
          break;
        }
      }
      if (!hit) return value;
    }
  }

  bool starts_primary() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'd' || c == '(';
  }

  Fraction expr() {
    Fraction acc = term();
    for (;;) {
      if (eat("+")) acc = add(acc, term(), false);
      else if (eat_minus()) acc = add(acc, term(), true);
      else return acc;
    }
  }

  Fraction term() {
    Fraction acc = unary();
    for (;;) {
      if (eat_times()) acc = mul(acc, unary());
      else if (eat("/")) acc = div(acc, unary());
      else if (starts_primary()) {
        if (strict_) fail("implicit multiplication is not allowed in machine format");
        acc = mul(acc, unary());
      } else return acc;
    }
  }

  Fraction unary() {
    if (eat_minus()) {
      Fraction f = unary();
      f.num = -f.num;
      return f;
    }
    if (eat("+")) return unary();
    return power();
  }

  Fraction power() {
    Fraction base = primary();
    for (;;) {
      int e = superscript_number();
      if (e < 0 && eat("^")) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        e = std::stoi(std::string(s_.substr(start, pos_ - start)));
      }
      if (e < 0) return base;
      base = {pow(base.num, static_cast<unsigned>(e)), pow(base.den, static_cast<unsigned>(e))};
    }
  }

  Fraction primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return {Polynomial(BigInt(std::string(s_.substr(start, pos_ - start)))), Polynomial(1)};
    }
    if (c == 'd') {
      ++pos_;
      return {Polynomial::linear(0), Polynomial(1)};
    }
    if (eat("(")) {
      Fraction f = expr();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    fail("unexpected character");
  }

  static Fraction add(const Fraction& a, const Fraction& b, bool subtract) {
    Polynomial rhs = b.num * a.den;
    if (subtract) rhs = -rhs;
    return {a.num * b.den + rhs, a.den * b.den};
  }
  static Fraction mul(const Fraction& a, const Fraction& b) { return {a.num * b.num, a.den * b.den}; }
  Fraction div(const Fraction& a, const Fraction& b) {
    if (b.num.is_zero()) fail("division by zero");
    return {a.num * b.den, a.den * b.num};
  }

  std::string_view s_;
  bool strict_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text grammar (integers, d, + - * / ^ and parentheses). With
/// strict = false, display forms are also accepted: juxtaposition means
/// multiplication, and Unicode minus, middle dot and superscript exponents
/// are recognised. The denominator must split into integer linear factors.
inline RationalFunction parse_rational_function(std::string_view text, bool strict = false) {
  detail::Fraction f = detail::Parser(text, strict).parse();
  FactoredLinearPoly den;
  int sign = 1;
  if (!detail::split_linear(f.den, den, sign))
    throw ParseError("denominator does not split into integer linear factors in '" + std::string(text) + "'");
  return RationalFunction(f.num * Polynomial(sign), den);
}

}  // namespace immoments

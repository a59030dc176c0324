#pragma once

// The unitary Weingarten function and the Haar monomial integral built on it.

#include "immoments/characters.hpp"
#include "immoments/partitions.hpp"
#include "immoments/ratfun.hpp"
#include "immoments/symgroup.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace immoments {

/// W(ρ, d) = (1/(m!)²) Σ_{ξ⊢m} (dim S_m ξ)² / dim U(d) ξ · χ^ξ(ρ), symbolic in d.
inline RationalFunction weingarten_w(const CycleType& rho, CharacterTable& chars) {
  const int m = rho.weight();
  if (m < 1) throw std::invalid_argument("weingarten_w requires m >= 1");
  const BigInt mf = factorial(m);
  RationalFunction w;
  for (const auto& xi : partitions_of(m)) {
    const std::int64_t chi = chars.character(xi, rho);
    if (chi == 0) continue;
    const BigInt ds = dim_symmetric(xi);
    // 1/dim U(d) = H / N(d)
    w += RationalFunction::reciprocal(unitary_numerator(xi), Rational(ds * ds * hook_product(xi) * chi, mf * mf));
  }
  return w;
}

inline RationalFunction weingarten_w(const CycleType& rho) {
  CharacterTable chars;
  return weingarten_w(rho, chars);
}

/// W(·, d) for every class of S_m, built once and then read-only.
class WeingartenTable {
 public:
  explicit WeingartenTable(int m) : index_(m) {
    CharacterTable chars;
    for (const auto& c : index_.all()) values_.push_back(weingarten_w(c, chars));
  }
  int degree() const { return index_.n(); }
  const RationalFunction& operator()(const CycleType& c) const { return values_.at(index_.index_of(c)); }
  const RationalFunction& operator()(const Permutation& p) const { return (*this)(cycle_type(p)); }

 private:
  PartitionIndex index_;
  std::vector<RationalFunction> values_;
};

/// Index sequences for ∫ U_{i1 j1}⋯U_{im jm} U*_{k1 l1}⋯U*_{km lm} dU (1-based entries).
struct IndexSequences {
  std::vector<int> i, j, k, l;

  int length() const { return static_cast<int>(i.size()); }
  void validate(int d) const {
    const std::size_t m = i.size();
    if (j.size() != m || k.size() != m || l.size() != m) throw std::invalid_argument("index sequences must have equal lengths");
    for (const auto* seq : {&i, &j, &k, &l})
      for (int v : *seq)
        if (v < 1 || v > d) throw std::invalid_argument("index out of range 1..d");
  }
};

inline constexpr int kMaxMonomialDegree = 6;

/// Exact Haar average of the monomial at integer d. U factors are paired
/// with U* factors by row (σ) and by column (τ):
///   Σ_{σ,τ∈S_m} [i_s = k_σ(s)] [j_s = l_τ(s)] W(στ⁻¹, d).
inline Rational monomial_integral(const IndexSequences& s, int d) {
  const int m = s.length();
  if (m > kMaxMonomialDegree) throw std::invalid_argument("monomial_integral: m too large (cost is (m!)^2)");
  if (d < m) throw std::invalid_argument("monomial_integral requires d >= m");
  s.validate(d);
  if (m == 0) return 1;
  const WeingartenTable table(m);
  std::map<CycleType, Rational> at_d;
  auto w = [&](const Permutation& p) -> const Rational& {
    const CycleType c = cycle_type(p);
    auto it = at_d.find(c);
    if (it == at_d.end()) it = at_d.emplace(c, table(c)(Rational(d))).first;
    return it->second;
  };
  auto matches = [m](const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<Permutation> out;
    for (const auto& p : all_permutations(m)) {
      bool ok = true;
      for (int t = 0; t < m && ok; ++t) ok = u[t] == v[p.zero_based()[t]];
      if (ok) out.push_back(p);
    }
    return out;
  };
  const auto sigmas = matches(s.i, s.k);
  const auto taus = matches(s.j, s.l);
  Rational total = 0;
  for (const auto& sg : sigmas)
    for (const auto& tau : taus) total += w(compose(sg, tau.inverse()));
  return total;
}

}  // namespace immoments

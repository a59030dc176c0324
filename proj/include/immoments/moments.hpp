#pragma once

// Exact moments of |Imm^λ M|² for n×n submatrices M of Haar unitaries:
// the mean, the fourth moment assembled from symmetry-reduced T-sums, the
// determinant and permanent closed forms, and the large-d coefficient J^λ.

#include "immoments/bigint.hpp"
#include "immoments/characters.hpp"
#include "immoments/partitions.hpp"
#include "immoments/ratfun.hpp"
#include "immoments/symgroup.hpp"
#include "immoments/tsum.hpp"

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace immoments {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ComputeOptions {
  unsigned workers = 0;        // 0: hardware concurrency
  int second_moment_limit = 5;
  int leading_limit = 9;
};

/// n!/N^λ(d)
inline RationalFunction mean(const Partition& lambda) {
  return RationalFunction::reciprocal(unitary_numerator(lambda), Rational(factorial(lambda.weight())));
}

/// 1/dim U(d) of the rectangle (t^n): the 2t-th moment of |Det M|.
inline RationalFunction det_moment(int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("det_moment requires n >= 1 and t >= 1");
  const Partition rect(std::vector<int>(n, t));
  return RationalFunction::reciprocal(unitary_numerator(rect), Rational(hook_product(rect)));
}

/// Closed-form candidate for E|Perm M|⁴, a sum over two-row shapes (2n-2k, 2k).
inline RationalFunction perm_fourth_conjecture(int n) {
  if (n < 1) throw std::invalid_argument("perm_fourth_conjecture requires n >= 1");
  const BigInt nf = factorial(n);
  RationalFunction total;
  for (int k = 0; 2 * k <= n; ++k) {
    const Rational inner(BigInt(2 * n - 4 * k + 1) * factorial(n - k), factorial(k) * factorial(2 * n - 2 * k + 1));
    const Rational coeff = Rational(nf * nf * (BigInt(1) << (2 * n - 4 * k))) * inner * inner;
    std::vector<int> parts{2 * n - 2 * k};
    if (k > 0) parts.push_back(2 * k);
    const Partition shape(parts);
    total += RationalFunction::reciprocal(unitary_numerator(shape), coeff * Rational(hook_product(shape)));
  }
  return total;
}

/// One (ℓ, j, k) term of the symmetry-reduced fourth-moment sum:
/// weight · T(ε_[ℓ], ε_[ℓ+k ∖ ℓ-j]).
struct FourthMomentTerm {
  int l, j, k;
  Subset sigma, rho;
  BigInt weight;
};

inline std::vector<FourthMomentTerm> fourth_moment_terms(int n) {
  std::vector<FourthMomentTerm> out;
  for (int l = 0; l <= n; ++l)
    for (int j = 0; j <= l; ++j)
      for (int k = 0; k <= std::min(n - l - j, l - j); ++k) {
        const int zeta = 4 / ((1 + (k == n - l - j)) * (1 + (k == l - j)));
        out.push_back({l, j, k, interval(l), interval_diff(l + k, l - j),
                       binomial(n, l) * binomial(l, j) * binomial(n - l, k) * zeta});
      }
  return out;
}

struct SecondMomentReport {
  Partition lambda;
  RationalFunction result;
  /// A_ξ with result = Σ_ξ A_ξ / (H^ξ N^ξ(d)), over ξ ⊢ 2n in partitions_of order.
  std::vector<std::pair<Partition, BigInt>> coefficients;
  double wall_time_s = 0;
};

/// Σ_ξ A_ξ/(H^ξ N^ξ(d)) with A_ξ = Σ_c hist(c) χ^ξ(c).
inline SecondMomentReport assemble_fourth_moment(const Partition& lambda, const TSumAccumulator& hist) {
  const FrozenCharacterTable chars(hist.degree());
  SecondMomentReport r{lambda, {}, {}, 0};
  for (int xi = 0; xi < chars.size(); ++xi) {
    const Partition& shape = chars.partitions()[xi];
    const BigInt a = hist.contract(chars, xi);
    r.coefficients.emplace_back(shape, a);
    if (a != 0) r.result += RationalFunction::reciprocal(unitary_numerator(shape), Rational(a, hook_product(shape)));
  }
  return r;
}

inline void check_limit(int n, int limit, const char* what) {
  if (n > limit) throw ResourceLimitError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the configured limit " + std::to_string(limit));
}

/// E|Imm^λ M|⁴ as an exact rational function of d.
inline SecondMomentReport second_moment(const Partition& lambda, const ComputeOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const int n = lambda.weight();
  check_limit(n, opt.second_moment_limit, "second_moment");
  const TSumEngine engine(n, opt.workers);
  TSumAccumulator total(2 * n);
  for (const auto& term : fourth_moment_terms(n)) total.add_scaled(engine.t_histogram(lambda, term.sigma, term.rho), term.weight);
  auto r = assemble_fourth_moment(lambda, total);
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Fourth moments of every λ ⊢ n from one λ-independent sweep.
inline std::vector<SecondMomentReport> second_moments_all(int n, const ComputeOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  check_limit(n, opt.second_moment_limit, "second_moment");
  const TSumEngine engine(n, opt.workers);
  const auto& shapes = engine.characters().partitions().all();
  std::vector<TSumAccumulator> totals(shapes.size(), TSumAccumulator(2 * n));
  for (const auto& term : fourth_moment_terms(n)) {
    const ClassPairCounts counts = engine.class_pair_counts(term.sigma, term.rho);
    for (std::size_t li = 0; li < shapes.size(); ++li)
      totals[li].add_scaled(counts.histogram(engine.class_characters(shapes[li]), 2 * n), term.weight);
  }
  std::vector<SecondMomentReport> out;
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (std::size_t li = 0; li < shapes.size(); ++li) {
    out.push_back(assemble_fourth_moment(shapes[li], totals[li]));
    out.back().wall_time_s = elapsed;
  }
  return out;
}

/// J^λ(ε_[ℓ], ε_[ℓ+k∖k]): the sum over α±, β± of four characters at
/// θ_{ℓ,k}(x ⊕ y). With F(x, y) = χ^λ(θ (x ⊕ y)) for x ∈ S_ℓ, y ∈ S_{n-ℓ}
/// the sum equals ‖F Fᵀ‖²_F, which is how it is evaluated.
inline BigInt j_pair(const Partition& lambda, int l, int k) {
  const int n = lambda.weight();
  if (k < 0 || k > l || l + k > n || 2 * l > n)
    throw std::invalid_argument("j_pair requires 0 <= k <= l, l + k <= n and 2l <= n");
  const SymmetricGroupTable left(l), right(n - l);
  const CycleKeyIndex keys(n);
  const FrozenCharacterTable chars(n);
  const int li = chars.partitions().index_of(lambda);
  std::vector<std::int64_t> chi(chars.size());
  for (int c = 0; c < chars.size(); ++c) chi[c] = chars(li, c);
  const auto th = theta(l, k, n).zero_based();

  const int rows = left.size(), cols = right.size();
  std::vector<std::int64_t> f(static_cast<std::size_t>(rows) * cols);
  std::array<std::uint8_t, 16> img{};
  for (int x = 0; x < rows; ++x)
    for (int y = 0; y < cols; ++y) {
      for (int i = 0; i < l; ++i) img[i] = static_cast<std::uint8_t>(th[left[x][i]]);
      for (int i = 0; i < n - l; ++i) img[l + i] = static_cast<std::uint8_t>(th[l + right[y][i]]);
      f[static_cast<std::size_t>(x) * cols + y] = chi[keys.classify(img, n)];
    }
  BigInt total = 0;
  for (int a = 0; a < rows; ++a)
    for (int b = 0; b < rows; ++b) {
      __int128 g = 0;
      for (int y = 0; y < cols; ++y)
        g += static_cast<__int128>(f[static_cast<std::size_t>(a) * cols + y]) * f[static_cast<std::size_t>(b) * cols + y];
      const BigInt gb = ClassPairCounts::to_bigint(g);
      total += gb * gb;
    }
  return total;
}

/// J^λ, the coefficient of d^{-2n} in E|Imm^λ M|⁴.
inline BigInt leading_coefficient(const Partition& lambda, const ComputeOptions& opt = {}) {
  const int n = lambda.weight();
  check_limit(n, opt.leading_limit, "leading_coefficient");
  if (n > 12) throw ResourceLimitError("leading_coefficient supports n <= 12");
  BigInt total = 0;
  for (int l = 0; 2 * l <= n; ++l) {
    const int outer = (2 * l == n) ? 1 : 2;
    BigInt inner = 0;
    for (int k = 0; k <= l; ++k) inner += binomial(l, k) * binomial(n - l, k) * j_pair(lambda, l, k);
    total += outer * binomial(n, l) * inner;
  }
  return total;
}

struct DominancePair {
  Partition lower, upper;  // lower ◁ upper
  Rational mean_lower, mean_upper;
  bool ok = false;
};

struct DominanceReport {
  int n = 0;
  long d = 0;
  std::vector<DominancePair> pairs;
  int incomparable = 0;
  bool all_ok() const {
    for (const auto& p : pairs)
      if (!p.ok) return false;
    return true;
  }
};

/// Checks mean(λ)(d) > mean(μ)(d) for every comparable pair λ ◁ μ of n.
inline DominanceReport mean_dominance_check(int n, long d) {
  if (d < n) throw std::invalid_argument("mean_dominance_check requires d >= n");
  DominanceReport rep{n, d, {}, 0};
  const auto all = partitions_of(n);
  std::vector<Rational> means;
  for (const auto& p : all) means.push_back(mean(p)(Rational(d)));
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      const Dominance rel = dominates(all[a], all[b]);
      if (rel == Dominance::incomparable) {
        ++rep.incomparable;
        continue;
      }
      const std::size_t lo = rel == Dominance::less ? a : b, hi = rel == Dominance::less ? b : a;
      rep.pairs.push_back({all[lo], all[hi], means[lo], means[hi], means[lo] > means[hi]});
    }
  return rep;
}

}  // namespace immoments

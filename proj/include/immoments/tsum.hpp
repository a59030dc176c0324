#pragma once

// Cycle-type histograms of σπργ over π, γ in V_n, for σ = ε_A and ρ = ε_B.
//
// The histogram does not depend on the irrep ξ of S_2n; contracting it with
// χ^ξ afterwards gives T^{λ,ξ}(σ,ρ) for every ξ at once. Two reductions keep
// the (n!)^4 loop tractable:
//   * π is taken up to conjugation by the subgroup of V_n ∪ {column swap}
//     that centralises both ε_A and ε_B; each orbit contributes its size.
//   * in the per-λ kernel, column permutations whose character vanishes are
//     skipped on both π and γ (the non-vanishing set is a product set).

#include "immoments/bigint.hpp"
#include "immoments/characters.hpp"
#include "immoments/partitions.hpp"
#include "immoments/symgroup.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <thread>
#include <vector>

namespace immoments {

inline constexpr int kMaxTSumDegree = 7;

/// Maps a cycle-type key (4-bit count per cycle length) to its index in
/// partitions_of(m) through a collision-free modular table.
class CycleKeyIndex {
 public:
  explicit CycleKeyIndex(int m) : index_(m) {
    if (m < 0 || m > 15) throw std::invalid_argument("CycleKeyIndex supports degree <= 15");
    std::vector<std::uint64_t> keys;
    for (const auto& p : index_.all()) {
      std::uint64_t k = 0;
      for (int len : p.vec()) k += std::uint64_t{1} << (4 * (len - 1));
      keys.push_back(k);
    }
    for (modulus_ = std::max<std::uint64_t>(1, keys.size());; ++modulus_) {
      table_.assign(modulus_, -1);
      bool ok = true;
      for (std::size_t i = 0; i < keys.size() && ok; ++i) {
        auto& slot = table_[keys[i] % modulus_];
        if (slot >= 0) ok = false;
        slot = static_cast<std::int16_t>(i);
      }
      if (ok) break;
    }
  }

  const PartitionIndex& partitions() const { return index_; }
  int size() const { return index_.size(); }

  /// Class index of the permutation with 0-based images img[0..m).
  template <class Img>
  int classify(const Img& img, int m) const {
    std::uint32_t unseen = (m == 32) ? ~0U : ((1U << m) - 1);
    std::uint64_t key = 0;
    while (unseen) {
      const int start = __builtin_ctz(unseen);
      int j = start, len = 0;
      do {
        unseen &= ~(1U << j);
        j = img[j];
        ++len;
      } while (j != start);
      key += std::uint64_t{1} << (4 * (len - 1));
    }
    return table_[key % modulus_];
  }

 private:
  PartitionIndex index_;
  std::uint64_t modulus_ = 1;
  std::vector<std::int16_t> table_;
};

/// S_n in lexicographic order with classes and ranks.
class SymmetricGroupTable {
 public:
  using Perm = std::array<std::uint8_t, 16>;

  explicit SymmetricGroupTable(int n) : n_(n), keys_(n) {
    if (n < 0 || n > 10) throw std::invalid_argument("SymmetricGroupTable supports n <= 10");
    Perm p{};
    for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
    do {
      perms_.push_back(p);
      classes_.push_back(keys_.classify(p, n));
    } while (std::next_permutation(p.begin(), p.begin() + n));
    fact_.assign(n + 1, 1);
    for (int i = 1; i <= n; ++i) fact_[i] = fact_[i - 1] * i;
  }

  int degree() const { return n_; }
  int size() const { return static_cast<int>(perms_.size()); }
  const Perm& operator[](int r) const { return perms_[r]; }
  int class_of(int r) const { return classes_[r]; }
  int num_classes() const { return keys_.size(); }
  const PartitionIndex& classes() const { return keys_.partitions(); }

  int rank(const Perm& p) const {
    int r = 0;
    for (int i = 0; i < n_; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n_; ++j) smaller += p[j] < p[i];
      r += smaller * fact_[n_ - 1 - i];
    }
    return r;
  }

  /// rank of g p g^-1 for every p.
  std::vector<int> conjugation_action(const Perm& g) const {
    Perm ginv{};
    for (int i = 0; i < n_; ++i) ginv[g[i]] = static_cast<std::uint8_t>(i);
    std::vector<int> out(perms_.size());
    for (std::size_t r = 0; r < perms_.size(); ++r) {
      Perm q{};
      for (int i = 0; i < n_; ++i) q[i] = g[perms_[r][ginv[i]]];
      out[r] = rank(q);
    }
    return out;
  }

  Perm transposition(int x, int y) const {
    Perm t{};
    for (int i = 0; i < n_; ++i) t[i] = static_cast<std::uint8_t>(i);
    std::swap(t[x], t[y]);
    return t;
  }

 private:
  int n_;
  CycleKeyIndex keys_;
  std::vector<Perm> perms_;
  std::vector<int> classes_;
  std::vector<int> fact_;
};

/// Weights per cycle type of S_2n, indexed like partitions_of(2n).
class TSumAccumulator {
 public:
  TSumAccumulator() = default;
  explicit TSumAccumulator(int m) : index_(std::make_shared<PartitionIndex>(m)), weights_(index_->size()) {}

  int degree() const { return index_ ? index_->n() : 0; }
  const PartitionIndex& classes() const { return *index_; }
  const std::vector<BigInt>& weights() const { return weights_; }
  std::vector<BigInt>& weights() { return weights_; }
  const BigInt& operator[](const CycleType& c) const { return weights_.at(index_->index_of(c)); }
  BigInt total() const {
    BigInt t = 0;
    for (const auto& w : weights_) t += w;
    return t;
  }

  /// T^{λ,ξ} = Σ_c weight(c) χ^ξ(c).
  BigInt contract(const FrozenCharacterTable& chars, int xi) const {
    if (chars.degree() != degree()) throw std::invalid_argument("contract: degree mismatch");
    BigInt t = 0;
    for (int c = 0; c < static_cast<int>(weights_.size()); ++c) t += weights_[c] * chars(xi, c);
    return t;
  }

  TSumAccumulator& add_scaled(const TSumAccumulator& o, const BigInt& k) {
    for (std::size_t c = 0; c < weights_.size(); ++c) weights_[c] += o.weights_[c] * k;
    return *this;
  }

  friend bool operator==(const TSumAccumulator& a, const TSumAccumulator& b) { return a.weights_ == b.weights_; }

 private:
  std::shared_ptr<const PartitionIndex> index_;
  std::vector<BigInt> weights_;
};

/// Counts of (class π⁺, class π⁻, class γ⁺, class γ⁻, cycle type of σπργ),
/// valid for every λ ⊢ n simultaneously.
class ClassPairCounts {
 public:
  ClassPairCounts(int k, int c) : k_(k), c_(c), counts_(static_cast<std::size_t>(k) * k * k * k * c, 0) {}

  std::uint64_t& at(int pa, int pb, int ga, int gb, int cls) {
    return counts_[((((static_cast<std::size_t>(pa) * k_ + pb) * k_ + ga) * k_ + gb) * c_) + cls];
  }
  std::uint64_t at(int pa, int pb, int ga, int gb, int cls) const {
    return counts_[((((static_cast<std::size_t>(pa) * k_ + pb) * k_ + ga) * k_ + gb) * c_) + cls];
  }
  int num_classes() const { return k_; }
  int num_cycle_types() const { return c_; }
  std::vector<std::uint64_t>& raw() { return counts_; }

  ClassPairCounts& operator+=(const ClassPairCounts& o) {
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += o.counts_[i];
    return *this;
  }

  /// Histogram for the irrep whose character on S_n classes is `chi`.
  TSumAccumulator histogram(const std::vector<std::int64_t>& chi, int m) const {
    TSumAccumulator acc(m);
    std::vector<__int128> sum(c_, 0);
    for (int pa = 0; pa < k_; ++pa)
      for (int pb = 0; pb < k_; ++pb) {
        const __int128 wp = static_cast<__int128>(chi[pa]) * chi[pb];
        if (wp == 0) continue;
        for (int ga = 0; ga < k_; ++ga)
          for (int gb = 0; gb < k_; ++gb) {
            const __int128 w = wp * chi[ga] * chi[gb];
            if (w == 0) continue;
            for (int cls = 0; cls < c_; ++cls) sum[cls] += w * static_cast<__int128>(at(pa, pb, ga, gb, cls));
          }
      }
    for (int cls = 0; cls < c_; ++cls) acc.weights()[cls] = to_bigint(sum[cls]);
    return acc;
  }

  static BigInt to_bigint(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-r) : r;
  }

 private:
  int k_, c_;
  std::vector<std::uint64_t> counts_;
};

class TSumEngine {
 public:
  struct Orbit {
    int plus, minus;  // S_n ranks of the representative's columns
    std::int64_t size;
  };

  explicit TSumEngine(int n, unsigned workers = 0)
      : n_(n), sym_(check_degree(n)), keys_(2 * n), chars_(n), workers_(workers ? workers : std::max(1U, std::thread::hardware_concurrency())) {}

  int degree() const { return n_; }
  const SymmetricGroupTable& symmetric_group() const { return sym_; }
  const FrozenCharacterTable& characters() const { return chars_; }
  unsigned workers() const { return workers_; }

  /// χ^λ on each class of S_n.
  std::vector<std::int64_t> class_characters(const Partition& lambda) const {
    const int li = chars_.partitions().index_of(lambda);
    std::vector<std::int64_t> chi(sym_.num_classes());
    for (int c = 0; c < sym_.num_classes(); ++c) chi[c] = chars_(li, c);
    return chi;
  }

  /// Orbits of {(π⁺,π⁻) : allowed[π⁺] && allowed[π⁻]} under conjugation by
  /// the centraliser of ε_A and ε_B in V_n extended by the column swap.
  std::vector<Orbit> orbits(Subset a, Subset b, const std::vector<char>& allowed) const {
    const int nf = sym_.size();
    struct Gen {
      std::vector<int> plus, minus;
    };
    std::vector<Gen> gens;
    std::vector<int> identity(nf);
    for (int r = 0; r < nf; ++r) identity[r] = r;
    auto block_gens = [&](Subset block, bool both) {
      std::vector<int> elems;
      for (int i = 0; i < n_; ++i)
        if ((block >> i) & 1U) elems.push_back(i);
      for (std::size_t t = 0; t + 1 < elems.size(); ++t) {
        const auto act = sym_.conjugation_action(sym_.transposition(elems[t], elems[t + 1]));
        if (both) gens.push_back({act, act});
        else {
          gens.push_back({act, identity});
          gens.push_back({identity, act});
        }
      }
    };
    const Subset all = interval(n_);
    block_gens(a & b, true);
    block_gens(a & ~b & all, true);
    block_gens(b & ~a & all, true);
    block_gens(~(a | b) & all, false);

    std::vector<char> seen(static_cast<std::size_t>(nf) * nf, 0);
    std::vector<Orbit> out;
    std::vector<int> stack;
    for (int p = 0; p < nf; ++p) {
      if (!allowed[p]) continue;
      for (int q = 0; q < nf; ++q) {
        if (!allowed[q] || seen[static_cast<std::size_t>(p) * nf + q]) continue;
        std::int64_t size = 0;
        stack.assign(1, p * nf + q);
        seen[static_cast<std::size_t>(p) * nf + q] = 1;
        while (!stack.empty()) {
          const int e = stack.back();
          stack.pop_back();
          ++size;
          const int ep = e / nf, em = e % nf;
          auto visit = [&](int np, int nm) {
            const std::size_t id = static_cast<std::size_t>(np) * nf + nm;
            if (!seen[id]) {
              seen[id] = 1;
              stack.push_back(static_cast<int>(id));
            }
          };
          for (const auto& g : gens) visit(g.plus[ep], g.minus[em]);
          visit(em, ep);  // column swap
        }
        out.push_back({p, q, size});
      }
    }
    return out;
  }

  /// Cycle-type histogram of σπργ weighted by χ̂^λ(π)χ̂^λ(γ).
  TSumAccumulator t_histogram(const Partition& lambda, Subset a, Subset b) const {
    check_subsets(a, b);
    const auto chi = class_characters(lambda);
    std::vector<std::int64_t> w(sym_.size());
    std::vector<char> allowed(sym_.size());
    std::vector<int> support;
    for (int r = 0; r < sym_.size(); ++r) {
      w[r] = chi[sym_.class_of(r)];
      allowed[r] = w[r] != 0;
      if (allowed[r]) support.push_back(r);
    }
    const auto orbs = orbits(a, b, allowed);
    const int nc = keys_.size();

    struct Partial {
      std::vector<__int128> hist;
    };
    auto work = [&](std::size_t begin, std::size_t end, Partial& out) {
      out.hist.assign(nc, 0);
      std::vector<std::int64_t> inner(nc);
      for (std::size_t o = begin; o < end; ++o) {
        std::fill(inner.begin(), inner.end(), 0);
        sweep(a, b, orbs[o], support, [&](int ga, int gb, int cls) { inner[cls] += w[ga] * w[gb]; });
        const __int128 scale = static_cast<__int128>(orbs[o].size) * w[orbs[o].plus] * w[orbs[o].minus];
        for (int c = 0; c < nc; ++c) out.hist[c] += scale * inner[c];
      }
    };
    auto parts = run_sharded<Partial>(orbs.size(), work);
    TSumAccumulator acc(2 * n_);
    for (const auto& p : parts)
      for (int c = 0; c < nc; ++c) acc.weights()[c] += ClassPairCounts::to_bigint(p.hist[c]);
    return acc;
  }

  /// λ-independent class-resolved counts for (ε_A, ε_B).
  ClassPairCounts class_pair_counts(Subset a, Subset b) const {
    check_subsets(a, b);
    const int k = sym_.num_classes(), nc = keys_.size();
    std::vector<char> allowed(sym_.size(), 1);
    std::vector<int> support(sym_.size());
    for (int r = 0; r < sym_.size(); ++r) support[r] = r;
    const auto orbs = orbits(a, b, allowed);

    auto work = [&](std::size_t begin, std::size_t end, ClassPairCounts& out) {
      out = ClassPairCounts(k, nc);
      std::vector<std::uint32_t> inner(static_cast<std::size_t>(k) * k * nc);
      for (std::size_t o = begin; o < end; ++o) {
        std::fill(inner.begin(), inner.end(), 0);
        sweep(a, b, orbs[o], support, [&](int ga, int gb, int cls) {
          ++inner[(static_cast<std::size_t>(sym_.class_of(ga)) * k + sym_.class_of(gb)) * nc + cls];
        });
        const int pa = sym_.class_of(orbs[o].plus), pb = sym_.class_of(orbs[o].minus);
        const auto size = static_cast<std::uint64_t>(orbs[o].size);
        for (int ga = 0; ga < k; ++ga)
          for (int gb = 0; gb < k; ++gb)
            for (int c = 0; c < nc; ++c)
              out.at(pa, pb, ga, gb, c) += size * inner[(static_cast<std::size_t>(ga) * k + gb) * nc + c];
      }
    };
    std::vector<ClassPairCounts> parts = run_sharded<ClassPairCounts>(orbs.size(), work, ClassPairCounts(k, nc));
    ClassPairCounts total(k, nc);
    for (const auto& p : parts) total += p;
    return total;
  }

 private:
  static int check_degree(int n) {
    if (n < 1 || n > kMaxTSumDegree) throw std::invalid_argument("T-sum degree must be in 1.." + std::to_string(kMaxTSumDegree));
    return n;
  }
  void check_subsets(Subset a, Subset b) const {
    if ((a | b) & ~interval(n_)) throw std::invalid_argument("subset element exceeds n");
  }

  // Visits every γ = γ⁺ ⊕ γ⁻ with both columns in `support`, reporting the
  // class of σπργ for the orbit representative π.
  template <class Visit>
  void sweep(Subset a, Subset b, const Orbit& orbit, const std::vector<int>& support, Visit&& visit) const {
    const int n = n_, m = 2 * n_;
    std::array<std::uint8_t, 16> sigma{}, rho{}, pi{}, x{}, y{};
    for (int i = 0; i < n; ++i) {
      const bool sa = (a >> i) & 1U, sb = (b >> i) & 1U;
      sigma[i] = static_cast<std::uint8_t>(sa ? n + i : i);
      sigma[n + i] = static_cast<std::uint8_t>(sa ? i : n + i);
      rho[i] = static_cast<std::uint8_t>(sb ? n + i : i);
      rho[n + i] = static_cast<std::uint8_t>(sb ? i : n + i);
      pi[i] = sym_[orbit.plus][i];
      pi[n + i] = static_cast<std::uint8_t>(n + sym_[orbit.minus][i]);
    }
    for (int i = 0; i < m; ++i) x[i] = sigma[pi[rho[i]]];
    for (int ga : support) {
      const auto& gp = sym_[ga];
      for (int i = 0; i < n; ++i) y[i] = x[gp[i]];
      for (int gb : support) {
        const auto& gm = sym_[gb];
        for (int i = 0; i < n; ++i) y[n + i] = x[n + gm[i]];
        visit(ga, gb, keys_.classify(y, m));
      }
    }
  }

  template <class Partial, class Work>
  std::vector<Partial> run_sharded(std::size_t count, Work&& work, const Partial& init = Partial{}) const {
    const std::size_t shards = std::max<std::size_t>(1, std::min<std::size_t>(workers_, count));
    std::vector<Partial> parts(shards, init);
    auto range = [&](std::size_t s) {
      return std::pair{count * s / shards, count * (s + 1) / shards};
    };
    if (shards == 1) {
      work(0, count, parts[0]);
      return parts;
    }
    std::vector<std::thread> threads;
    for (std::size_t s = 0; s < shards; ++s)
      threads.emplace_back([&, s] {
        auto [lo, hi] = range(s);
        work(lo, hi, parts[s]);
      });
    for (auto& t : threads) t.join();
    return parts;
  }

  int n_;
  SymmetricGroupTable sym_;
  CycleKeyIndex keys_;
  FrozenCharacterTable chars_;
  unsigned workers_;
};

/// Subset A with σ = ε_A, or throws if σ is not in H_n.
inline Subset hn_subset(const Permutation& p, int n) {
  if (p.degree() != 2 * n) throw std::invalid_argument("element of H_n must have degree 2n");
  Subset s = 0;
  for (int i = 0; i < n; ++i) {
    const int pi = p.zero_based()[i], pn = p.zero_based()[n + i];
    if (pi == i && pn == n + i) continue;
    if (pi == n + i && pn == i) s |= Subset{1} << i;
    else throw std::invalid_argument("permutation " + p.str() + " is not in H_n");
  }
  return s;
}

/// Histogram for σ, ρ given as permutations of 2n that lie in H_n.
inline TSumAccumulator t_histogram(const Partition& lambda, const Permutation& sigma, const Permutation& rho, unsigned workers = 0) {
  const int n = lambda.weight();
  TSumEngine engine(n, workers);
  return engine.t_histogram(lambda, hn_subset(sigma, n), hn_subset(rho, n));
}

}  // namespace immoments

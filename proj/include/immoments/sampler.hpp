#pragma once

// Monte Carlo estimation of E|Imm^λ M|^p over Haar-random unitaries.

#include "immoments/characters.hpp"
#include "immoments/partitions.hpp"
#include "immoments/symgroup.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace immoments {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// splitmix64 finaliser.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent generator for sample `index` of run `seed`; the stream does
/// not depend on which worker draws it.
inline std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(mix64(seed ^ mix64(index)))};
  return std::mt19937_64(seq);
}

/// d×cols matrix of i.i.d. standard complex Gaussians, filled column by column.
template <class Rng>
ComplexMatrix ginibre(int d, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(d, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < d; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  return g;
}

/// Q of a Householder QR of g, with column j multiplied by r_jj/|r_jj| so
/// that the factorisation is unique and the result Haar distributed.
inline ComplexMatrix phase_fixed_q(const ComplexMatrix& g) {
  const Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(g.rows(), g.cols());
  const auto& r = qr.matrixQR();
  for (int j = 0; j < g.cols(); ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= mag > 0 ? rjj / mag : Complex(1.0);
  }
  return q;
}

/// Haar-random element of U(d).
template <class Rng>
ComplexMatrix haar_unitary(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("haar_unitary requires d >= 1");
  return phase_fixed_q(ginibre(d, d, rng));
}

/// First `cols` columns of a Haar unitary, drawing the same random numbers
/// as haar_unitary would for those columns.
template <class Rng>
ComplexMatrix haar_columns(int d, int cols, Rng& rng) {
  if (d < 1 || cols < 0 || cols > d) throw std::invalid_argument("haar_columns requires 0 <= cols <= d");
  return phase_fixed_q(ginibre(d, cols, rng));
}

inline Complex determinant(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1.0;
  return m.partialPivLu().determinant();
}

/// Glynn's formula with Gray-code ordering, O(2^(n-1) n).
inline Complex permanent(const ComplexMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw std::invalid_argument("permanent of non-square matrix");
  if (n == 0) return 1.0;
  if (n > 30) throw std::invalid_argument("permanent: matrix too large");
  std::vector<Complex> colsum(n);
  for (int j = 0; j < n; ++j) colsum[j] = m.col(j).sum();  // all δ = +1
  std::vector<int> delta(n, 1);
  Complex total = 0;
  int sign = 1;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t g = 0; g < steps; ++g) {
    Complex prod = 1;
    for (int j = 0; j < n; ++j) prod *= colsum[j];
    total += static_cast<double>(sign) * prod;
    if (g + 1 == steps) break;
    // flip row (1 + ctz(g+1)); row 0 stays at +1
    const int row = 1 + __builtin_ctzll(g + 1);
    delta[row] = -delta[row];
    for (int j = 0; j < n; ++j) colsum[j] += 2.0 * delta[row] * m(row, j);
    sign = -sign;
  }
  return total / static_cast<double>(steps);
}

/// Σ_π χ^λ(π) ∏ M_{iπ(i)}, evaluated term by term. Terms with vanishing
/// character are dropped at construction.
class ImmanantEvaluator {
 public:
  explicit ImmanantEvaluator(const Partition& lambda) : lambda_(lambda), n_(lambda.weight()) {
    if (n_ > 10) throw std::invalid_argument("general immanant supports n <= 10");
    CharacterTable chars;
    std::vector<int> p(n_);
    std::iota(p.begin(), p.end(), 0);
    do {
      const auto chi = chars.character_of_perm(lambda, Permutation::from_zero_based(p));
      if (chi != 0) terms_.push_back({p, static_cast<double>(chi)});
    } while (std::next_permutation(p.begin(), p.end()));
  }

  const Partition& shape() const { return lambda_; }

  Complex operator()(const ComplexMatrix& m) const {
    if (m.rows() != n_ || m.cols() != n_) throw std::invalid_argument("immanant: matrix side must equal the weight of lambda");
    Complex total = 0;
    for (const auto& t : terms_) {
      Complex prod = t.chi;
      for (int i = 0; i < n_; ++i) prod *= m(i, t.perm[i]);
      total += prod;
    }
    return total;
  }

 private:
  struct Term {
    std::vector<int> perm;
    double chi;
  };
  Partition lambda_;
  int n_;
  std::vector<Term> terms_;
};

/// Picks determinant or Glynn for the one-dimensional irreps and the general
/// sum otherwise.
class Immanant {
 public:
  explicit Immanant(const Partition& lambda) : lambda_(lambda) {
    const int n = lambda.weight();
    if (lambda.length() <= 1) kind_ = Kind::permanent;
    else if (lambda.length() == n) kind_ = Kind::determinant;
    else general_.emplace_back(lambda);
  }
  Complex operator()(const ComplexMatrix& m) const {
    if (m.rows() != lambda_.weight() || m.cols() != lambda_.weight())
      throw std::invalid_argument("immanant: matrix side must equal the weight of lambda");
    switch (kind_) {
      case Kind::permanent: return permanent(m);
      case Kind::determinant: return determinant(m);
      default: return general_.front()(m);
    }
  }

 private:
  enum class Kind { permanent, determinant, general };
  Partition lambda_;
  Kind kind_ = Kind::general;
  std::vector<ImmanantEvaluator> general_;
};

inline Complex immanant(const Partition& lambda, const ComplexMatrix& m) { return Immanant(lambda)(m); }

struct MomentEstimate {
  double mean = 0;
  double standard_error = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  Partition lambda;
  int n = 0, d = 0, power = 2;
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  void add(const CompensatedSum& o) {
    add(o.sum_);
    add(o.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0, comp_ = 0;
};

/// Monte Carlo estimate of E|Imm^λ M|^power with M the top-left n×n block of
/// a Haar unitary in U(d). Deterministic for a given (seed, samples, workers).
inline MomentEstimate estimate_moment(const Partition& lambda, int d, int power, long long samples, std::uint64_t seed,
                                      unsigned workers = 0) {
  const int n = lambda.weight();
  if (d < n) throw std::invalid_argument("estimate_moment requires d >= n");
  if (power != 2 && power != 4) throw std::invalid_argument("estimate_moment supports power 2 or 4");
  if (samples < 2) throw std::invalid_argument("estimate_moment requires at least 2 samples");
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<long long>(workers, samples));

  const Immanant imm(lambda);
  struct Partial {
    CompensatedSum s1, s2;
  };
  std::vector<Partial> parts(workers);
  auto work = [&](unsigned w) {
    const long long lo = samples * w / workers, hi = samples * (w + 1) / workers;
    for (long long s = lo; s < hi; ++s) {
      auto rng = sample_stream(seed, static_cast<std::uint64_t>(s));
      const ComplexMatrix cols = haar_columns(d, n, rng);
      const double a2 = std::norm(imm(cols.topRows(n)));
      const double v = power == 2 ? a2 : a2 * a2;
      parts[w].s1.add(v);
      parts[w].s2.add(v * v);
    }
  };
  if (workers == 1) work(0);
  else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  CompensatedSum s1, s2;
  for (const auto& p : parts) {
    s1.add(p.s1);
    s2.add(p.s2);
  }
  const auto ns = static_cast<double>(samples);
  const double m = s1.value() / ns;
  const double var = std::max(0.0, (s2.value() - ns * m * m) / (ns - 1));
  return {m, std::sqrt(var / ns), samples, seed, lambda, n, d, power};
}

}  // namespace immoments

// Exact moments of Imm^(2,1) for a 3x3 corner of a Haar unitary, then a
// quick Monte Carlo cross-check at d = 6.

#include "immoments/moments.hpp"
#include "immoments/sampler.hpp"

#include <iostream>

int main() {
  using namespace immoments;
  const Partition lambda = parse_partition("2,1");

  const auto m2 = mean(lambda);
  const auto m4 = second_moment(lambda).result;
  std::cout << "E|Imm|^2 = " << m2.to_display() << '\n';
  std::cout << "E|Imm|^4 = " << m4.to_display() << '\n';
  std::cout << "J = " << to_string(leading_coefficient(lambda)) << '\n';

  const int d = 6;
  std::cout << "at d = " << d << ": " << to_string(m2(Rational(d))) << ", " << to_string(m4(Rational(d))) << '\n';

  auto rng = sample_stream(7, 0);
  const ComplexMatrix u = haar_unitary(d, rng);
  std::cout << "one sample: Imm = " << immanant(lambda, u.topLeftCorner(3, 3)) << '\n';

  for (int power : {2, 4}) {
    const auto e = estimate_moment(lambda, d, power, 20000, 7, 0);
    std::cout << "power " << power << ": " << e.mean << " ± " << e.standard_error << '\n';
  }
}

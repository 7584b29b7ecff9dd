#pragma once

#include <random>
#include <vector>

#include "slit/matrix.hpp"
#include "slit/rational_function.hpp"

namespace slit::testing {

inline BigRational rat(long num, long den = 1) { return BigRational(BigInt(num), BigInt(den)); }

inline Polynomial poly(std::initializer_list<long> ascending) {
  std::vector<BigRational> c;
  for (long x : ascending) c.push_back(rat(x));
  return Polynomial(std::move(c));
}

inline RationalFunction rf(std::initializer_list<long> num, std::initializer_list<long> den) {
  return RationalFunction(poly(num), poly(den));
}

inline BigRational random_rational(std::mt19937_64& rng, long max_abs = 5) {
  const long span = 2 * max_abs + 1;
  const long num = static_cast<long>(rng() % static_cast<unsigned long>(span)) - max_abs;
  const long den = 1 + static_cast<long>(rng() % static_cast<unsigned long>(max_abs));
  return rat(num, den);
}

inline BigRational random_nonzero_rational(std::mt19937_64& rng, long max_abs = 5) {
  while (true) {
    BigRational r = random_rational(rng, max_abs);
    if (!r.is_zero()) return r;
  }
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, long max_abs = 3) {
  std::vector<BigRational> c;
  const int deg = static_cast<int>(rng() % static_cast<unsigned long>(max_degree + 1));
  for (int i = 0; i <= deg; ++i) c.push_back(random_rational(rng, max_abs));
  return Polynomial(std::move(c));
}

// Independent determinant oracle: plain cofactor expansion along the first
// row, using only field arithmetic. Exponential, test-only.
inline RationalFunction cofactor_determinant(const FieldMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return RationalFunction::one();
  if (n == 1) return m.at(0, 0);
  RationalFunction acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    RationalFunction term = m.at(0, j) * cofactor_determinant(m.minor_matrix(0, j));
    if (j % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace slit::testing

#include "slit/matrix.hpp"

namespace slit {

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = RationalFunction::one();
  }
  return m;
}

RationalFunction& FieldMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) {
    throw IndexOutOfRange("matrix index out of range");
  }
  return entries_[i * cols_ + j];
}

const RationalFunction& FieldMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw IndexOutOfRange("matrix index out of range");
  }
  return entries_[i * cols_ + j];
}

FieldMatrix FieldMatrix::minor_matrix(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw IndexOutOfRange("minor index out of range");
  }
  FieldMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
      if (j == col) continue;
      m.at(mi, mj) = at(i, j);
      ++mj;
    }
    ++mi;
  }
  return m;
}

RationalFunction determinant(const FieldMatrix& m) {
  if (m.rows() != m.cols()) {
    throw NonSquareMatrix("determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) {
    return RationalFunction::one();
  }

  // Common denominator of all entries.
  Polynomial den = Polynomial::one();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      den = poly_lcm(den, m.at(i, j).denominator());
    }
  }

  // Cleared polynomial matrix: a[i][j] = num * (den / entry_den).
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RationalFunction& f = m.at(i, j);
      a[i][j] = f.numerator() * exact_div(den, f.denominator());
    }
  }

  // Bareiss elimination over the polynomial ring; every division is exact.
  bool negate = false;
  Polynomial prev = Polynomial::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k].is_zero()) ++pivot;
      if (pivot == n) {
        return RationalFunction();  // singular
      }
      std::swap(a[k], a[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = Polynomial::zero();
    }
    prev = a[k][k];
  }

  Polynomial det = a[n - 1][n - 1];
  if (negate) det = -det;

  // det(cleared) = den^n * det(m).
  Polynomial den_power = Polynomial::one();
  for (std::size_t i = 0; i < n; ++i) den_power = den_power * den;
  return RationalFunction(std::move(det), std::move(den_power));
}

}  // namespace slit

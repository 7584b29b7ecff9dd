#pragma once

#include <cstddef>
#include <vector>

#include "slit/rational_function.hpp"

namespace slit {

// Dense row-major matrix over rational functions in t.
class FieldMatrix {
 public:
  FieldMatrix() : rows_(0), cols_(0) {}
  FieldMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static FieldMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  RationalFunction& at(std::size_t i, std::size_t j);
  const RationalFunction& at(std::size_t i, std::size_t j) const;

  // Matrix with the given row and column deleted.
  FieldMatrix minor_matrix(std::size_t row, std::size_t col) const;  // throws IndexOutOfRange

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<RationalFunction> entries_;
};

// Exact determinant. The entries are cleared to a single common polynomial
// denominator and eliminated fraction-free (Bareiss), so the intermediate
// values stay polynomial; the denominator power is divided out at the end.
// Throws NonSquareMatrix.
RationalFunction determinant(const FieldMatrix& m);

}  // namespace slit

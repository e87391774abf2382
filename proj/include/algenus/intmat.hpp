// Dense matrices over arbitrary-precision integers, with the exact linear
// algebra the rest of the library leans on: Bareiss determinants, rank,
// congruence, block sums.
#pragma once

#include "algenus/ints.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace algenus {

class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  // Row-major initializer, e.g. IntMat::from({{ -1, 1 }, { 0, -1 }}).
  static IntMat from(const std::vector<std::vector<Int>>& rows);
  static IntMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMat transpose() const;
  IntMat operator*(const IntMat& rhs) const;
  IntMat operator+(const IntMat& rhs) const;
  IntMat operator-(const IntMat& rhs) const;
  bool operator==(const IntMat& rhs) const = default;

  // Determinant by fraction-free (Bareiss) elimination. Square only.
  Int det() const;

  // Rank over the rationals.
  std::size_t rank() const;

  // Block-diagonal sum.
  static IntMat block_diag(const IntMat& a, const IntMat& b);

  // Columns of this matrix restricted through the bilinear form m:
  // result = this^T * m * this.
  IntMat congruence_of(const IntMat& m) const;

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

}  // namespace algenus

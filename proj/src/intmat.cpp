#include "algenus/intmat.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace algenus {

IntMat IntMat::from(const std::vector<std::vector<Int>>& rows) {
  IntMat out(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < out.rows_; ++i) {
    if (rows[i].size() != out.cols_)
      throw std::invalid_argument("ragged matrix initializer");
    for (std::size_t j = 0; j < out.cols_; ++j) out.at(i, j) = rows[i][j];
  }
  return out;
}

IntMat IntMat::identity(std::size_t n) {
  IntMat out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

IntMat IntMat::transpose() const {
  IntMat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch");
  IntMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

IntMat IntMat::operator+(const IntMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("dimension mismatch");
  IntMat out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

IntMat IntMat::operator-(const IntMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("dimension mismatch");
  IntMat out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

Int IntMat::det() const {
  if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMat w = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = num / prev;  // exact by the Bareiss identity
      }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

std::size_t IntMat::rank() const {
  // Fraction-free row echelon; column pivoting over all columns.
  IntMat w = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && w.at(p, c) == 0) ++p;
    if (p == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(w.at(r, j), w.at(p, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (w.at(i, c) == 0) continue;
      Int a = w.at(r, c), b = w.at(i, c);
      for (std::size_t j = 0; j < cols_; ++j) w.at(i, j) = w.at(i, j) * a - w.at(r, j) * b;
    }
    ++r;
  }
  return r;
}

IntMat IntMat::block_diag(const IntMat& a, const IntMat& b) {
  IntMat out(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) out.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
  return out;
}

IntMat IntMat::congruence_of(const IntMat& m) const {
  return transpose() * m * *this;
}

std::string IntMat::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace algenus

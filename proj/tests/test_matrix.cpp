#include "doctest.h"

#include "algenus/intmat.hpp"
#include "algenus/polydet.hpp"
#include "test_util.hpp"

#include <stdexcept>

using namespace algenus;
using algenus::testing::make_rng;
using algenus::testing::rand_range;

namespace {

// Independent oracle: Laplace expansion written from the definition, no
// shared code with IntMat::det.
Int naive_det(const IntMat& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMat minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Int term = m.at(0, j) * naive_det(minor);
    acc += j % 2 == 0 ? term : -term;
  }
  return acc;
}

IntMat random_matrix(std::mt19937& rng, std::size_t n, int bound) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rand_range(rng, -bound, bound);
  return m;
}

}  // namespace

TEST_CASE("integer determinant matches Laplace expansion") {
  auto rng = make_rng(20240601);
  CHECK(IntMat().det() == 1);
  for (int iter = 0; iter < 300; ++iter) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 1, 5));
    IntMat m = random_matrix(rng, n, 9);
    CHECK(m.det() == naive_det(m));
  }
}

TEST_CASE("determinant pivoting handles zero pivots") {
  IntMat m = IntMat::from({{0, 1}, {1, 0}});
  CHECK(m.det() == -1);
  IntMat z(3, 3);
  CHECK(z.det() == 0);
  IntMat singular = IntMat::from({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  CHECK(singular.det() == 0);
}

TEST_CASE("rank") {
  CHECK(IntMat().rank() == 0);
  CHECK(IntMat::identity(4).rank() == 4);
  CHECK(IntMat::from({{1, 2}, {2, 4}}).rank() == 1);
  CHECK(IntMat::from({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}).rank() == 2);
  IntMat cols(3, 2);
  cols.at(0, 0) = 1;
  cols.at(1, 1) = 1;
  CHECK(cols.rank() == 2);
}

TEST_CASE("polynomial determinant: cofactor and Bareiss agree") {
  auto rng = make_rng(20240602);
  for (int iter = 0; iter < 120; ++iter) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 1, 6));
    IntMat m = random_matrix(rng, n, 4);
    PolyMat pm = alexander_matrix(m);
    CHECK(det_cofactor(pm) == det_bareiss(pm));
  }
}

TEST_CASE("polynomial determinant at t = 1 is the integer determinant of M - M^T") {
  auto rng = make_rng(20240603);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 1, 5));
    IntMat m = random_matrix(rng, n, 4);
    CHECK(alexander_det(m).eval(1) == (m - m.transpose()).det());
  }
}

TEST_CASE("block diagonal and congruence helpers") {
  IntMat a = IntMat::from({{1, 2}, {3, 4}});
  IntMat b = IntMat::from({{5}});
  IntMat d = IntMat::block_diag(a, b);
  CHECK(d.rows() == 3);
  CHECK(d.at(2, 2) == 5);
  CHECK(d.at(0, 2) == 0);

  IntMat v(2, 1);
  v.at(0, 0) = 1;
  v.at(1, 0) = -1;
  IntMat g = v.congruence_of(a);
  // (1,-1) A (1,-1)^T = 1 - 2 - 3 + 4 = 0
  CHECK(g.rows() == 1);
  CHECK(g.at(0, 0) == 0);

  CHECK_THROWS_AS(a * IntMat(3, 3), std::invalid_argument);
}

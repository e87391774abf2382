#include "algenus/twist.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace algenus {

namespace {

long long llabs64(long long v) { return v < 0 ? -v : v; }

// Largest x >= 1 with x*x dividing |v| (v != 0).
long long largest_square_divisor_root(long long v) {
  long long a = llabs64(v);
  auto root = static_cast<long long>(std::sqrt(static_cast<double>(a)));
  while (root * root > a) --root;
  while ((root + 1) * (root + 1) <= a) ++root;
  for (long long x = root; x >= 1; --x)
    if (a % (x * x) == 0) return x;
  return 1;
}

bool is_square64(long long v) {
  if (v < 0) return false;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v;
}

}  // namespace

void TwistSpec::validate() const {
  if (m != -a * x * x || n != a * y * y)
    throw std::invalid_argument("twist spec coefficients are inconsistent");
}

TwistSpec factor_square_pair(long long m, long long n) {
  if (!is_square64(-m * n)) throw std::invalid_argument("twist pair not square-compatible");
  TwistSpec spec;
  spec.m = m;
  spec.n = n;
  if (m == 0 && n == 0) {
    spec.a = 0;
    spec.x = 1;
    spec.y = 1;
    return spec;
  }
  if (m == 0) {
    spec.x = 0;
    spec.y = largest_square_divisor_root(n);
    spec.a = n / (spec.y * spec.y);
    return spec;
  }
  if (n == 0) {
    spec.y = 0;
    spec.x = largest_square_divisor_root(m);
    spec.a = -m / (spec.x * spec.x);
    return spec;
  }
  for (long long x = largest_square_divisor_root(m); x >= 1; --x) {
    if (llabs64(m) % (x * x) != 0) continue;
    long long a = -m / (x * x);
    if (n % a != 0) continue;
    long long ysq = n / a;
    if (!is_square64(ysq)) continue;
    spec.a = a;
    spec.x = x;
    auto y = static_cast<long long>(std::sqrt(static_cast<double>(ysq)));
    while (y * y > ysq) --y;
    while ((y + 1) * (y + 1) <= ysq) ++y;
    spec.y = y;
    spec.validate();
    return spec;
  }
  throw std::invalid_argument("twist pair not square-compatible");
}

SeifertPair apply_twists(const SeifertPair& s, std::size_t i, std::size_t j,
                         long long m, long long n) {
  std::size_t size = s.size();
  if (i >= size || j >= size || i == j)
    throw std::invalid_argument("twist indices out of range or equal");
  if (s.matrix().at(i, i) != 0 || s.matrix().at(j, j) != 0)
    throw std::invalid_argument("matrix not in twist normal position");
  IntMat out = s.matrix();
  out.at(i, i) = -m;
  out.at(j, j) = -n;
  return SeifertPair(std::move(out), s.components());
}

namespace {

// Places src into dst with its upper-left corner at (r0, c0).
void put_block(IntMat& dst, std::size_t r0, std::size_t c0, const IntMat& src) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) dst.at(r0 + i, c0 + j) = src.at(i, j);
}

IntMat scaled_identity(std::size_t n, long long v) {
  IntMat out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = v;
  return out;
}

}  // namespace

std::pair<IntMat, IntMat> twist_identity_sides(const IntMat& a, const IntMat& b,
                                               const IntMat& c, const IntMat& d,
                                               long long coeff_a, long long coeff_x,
                                               long long coeff_y) {
  std::size_t s = a.rows();
  if (!a.is_square() || !d.is_square() || d.rows() != s || b.rows() != s ||
      b.cols() != s || c.rows() != s || c.cols() != s)
    throw std::invalid_argument("incompatible block dimensions");
  std::size_t n = 4 * s;

  IntMat left(n, n);
  put_block(left, 0, 0, IntMat::identity(s));
  put_block(left, s, s, IntMat::identity(s));
  put_block(left, 0, 2 * s, scaled_identity(s, coeff_x));
  put_block(left, s, 2 * s, scaled_identity(s, coeff_y));
  put_block(left, s, 3 * s, scaled_identity(s, coeff_a * coeff_y));
  put_block(left, 2 * s, 2 * s, IntMat::identity(s));
  put_block(left, 3 * s, 3 * s, IntMat::identity(s));

  IntMat mid(n, n);
  put_block(mid, 0, 0, a + scaled_identity(s, coeff_a * coeff_x * coeff_x));
  put_block(mid, 0, s, b);
  put_block(mid, 0, 2 * s, scaled_identity(s, -coeff_a * coeff_x));
  put_block(mid, s, 0, c);
  put_block(mid, s, s, d - scaled_identity(s, coeff_a * coeff_y * coeff_y));
  put_block(mid, 2 * s, 3 * s, IntMat::identity(s));

  IntMat right(n, n);
  put_block(right, 0, 0, IntMat::identity(s));
  put_block(right, s, s, IntMat::identity(s));
  put_block(right, 2 * s, 0, scaled_identity(s, coeff_x));
  put_block(right, 2 * s, s, scaled_identity(s, coeff_y));
  put_block(right, 2 * s, 2 * s, IntMat::identity(s));
  put_block(right, 3 * s, s, scaled_identity(s, coeff_a * coeff_y));
  put_block(right, 3 * s, 3 * s, IntMat::identity(s));

  IntMat expected(n, n);
  put_block(expected, 0, 0, a);
  put_block(expected, 0, s, b);
  put_block(expected, 0, 2 * s, scaled_identity(s, -coeff_a * coeff_x));
  put_block(expected, 0, 3 * s, scaled_identity(s, coeff_x));
  put_block(expected, s, 0, c);
  put_block(expected, s, s, d);
  put_block(expected, s, 3 * s, scaled_identity(s, coeff_y));
  put_block(expected, 2 * s, s, scaled_identity(s, coeff_a * coeff_y));
  put_block(expected, 2 * s, 3 * s, IntMat::identity(s));

  return {left * mid * right, expected};
}

bool verify_twist_identity(const IntMat& a, const IntMat& b, const IntMat& c,
                           const IntMat& d, long long coeff_a, long long coeff_x,
                           long long coeff_y) {
  auto [lhs, rhs] = twist_identity_sides(a, b, c, d, coeff_a, coeff_x, coeff_y);
  return lhs == rhs;
}

SeifertPair untwist_stabilize(const SeifertPair& s, std::size_t i, std::size_t j,
                              const TwistSpec& spec) {
  spec.validate();
  std::size_t n = s.size();
  if (i >= n || j >= n || i == j)
    throw std::invalid_argument("twist indices out of range or equal");
  if (s.matrix().at(i, i) != -spec.m || s.matrix().at(j, j) != -spec.n)
    throw std::invalid_argument("diagonal entries inconsistent with TwistSpec");

  IntMat out(n + 2, n + 2);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = s.matrix().at(r, c);
  out.at(i, i) = 0;
  out.at(j, j) = 0;
  out.at(i, n) = -spec.a * spec.x;
  out.at(i, n + 1) = spec.x;
  out.at(j, n + 1) = spec.y;
  out.at(n, j) = spec.a * spec.y;
  out.at(n, n + 1) = 1;
  return SeifertPair(std::move(out), s.components());
}

}  // namespace algenus

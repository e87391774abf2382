#include "algenus/ints.hpp"

#include <stdexcept>

namespace algenus {

Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative number");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

int sign_of(const Int& n) { return n < 0 ? -1 : (n > 0 ? 1 : 0); }

}  // namespace algenus

// Arbitrary-precision integer/rational aliases and small number helpers
// shared across the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace algenus {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor of the square root of a nonnegative integer.
Int isqrt(const Int& n);

// True iff n is a perfect square (negative numbers are not).
bool is_perfect_square(const Int& n);

// -1, 0 or +1.
int sign_of(const Int& n);

}  // namespace algenus

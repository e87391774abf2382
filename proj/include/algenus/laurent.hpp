// Integer Laurent polynomials in one variable t.
//
// The coefficient map never stores zeros; the zero polynomial is the empty
// map. Values are immutable in spirit: all arithmetic returns new objects.
#pragma once

#include "algenus/ints.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace algenus {

class LaurentPoly {
 public:
  // The zero polynomial.
  LaurentPoly() = default;

  // c * t^k
  static LaurentPoly term(Int c, std::int64_t k);
  static LaurentPoly constant(Int c) { return term(std::move(c), 0); }
  static LaurentPoly variable() { return term(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }

  // True iff the polynomial is +-t^k for some k.
  bool is_unit() const;

  // Smallest/largest exponent with nonzero coefficient. Undefined on zero.
  std::int64_t min_exp() const;
  std::int64_t max_exp() const;

  // Coefficient of t^k (zero when absent).
  Int coeff(std::int64_t k) const;

  std::size_t term_count() const { return coeffs_.size(); }

  // Multiplication by t^k.
  LaurentPoly shifted(std::int64_t k) const;

  // The unique unit multiple +-t^k * p with minimum exponent 0 and positive
  // leading (highest-exponent) coefficient. Throws on the zero polynomial.
  LaurentPoly canonical() const;

  // Evaluation at an integer point.
  Int eval(const Int& x) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  bool operator==(const LaurentPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

  // Quotient of an exact division; throws std::domain_error if rhs does not
  // divide lhs in the Laurent ring.
  friend LaurentPoly exact_div(const LaurentPoly& lhs, const LaurentPoly& rhs);

  // ASCII form, terms in ascending exponent: "1 - t + t^2", "2t", "t^-1 - 1".
  std::string str() const;

  // Parses the grammar emitted by str(), with arbitrary extra whitespace.
  // Throws std::invalid_argument on malformed input.
  static LaurentPoly parse(std::string_view text);

  const std::map<std::int64_t, Int>& terms() const { return coeffs_; }

 private:
  void add_term(std::int64_t k, const Int& c);

  std::map<std::int64_t, Int> coeffs_;
};

}  // namespace algenus

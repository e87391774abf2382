#include "algenus/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace algenus {

LaurentPoly LaurentPoly::term(Int c, std::int64_t k) {
  LaurentPoly p;
  if (c != 0) p.coeffs_.emplace(k, std::move(c));
  return p;
}

bool LaurentPoly::is_unit() const {
  if (coeffs_.size() != 1) return false;
  const Int& c = coeffs_.begin()->second;
  return c == 1 || c == -1;
}

std::int64_t LaurentPoly::min_exp() const { return coeffs_.begin()->first; }

std::int64_t LaurentPoly::max_exp() const { return coeffs_.rbegin()->first; }

Int LaurentPoly::coeff(std::int64_t k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Int(0) : it->second;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + k, c);
  return out;
}

LaurentPoly LaurentPoly::canonical() const {
  if (is_zero())
    throw std::invalid_argument("no canonical unit normalization of zero");
  LaurentPoly out = shifted(-min_exp());
  if (out.coeffs_.rbegin()->second < 0) out = -out;
  return out;
}

Int LaurentPoly::eval(const Int& x) const {
  // Negative exponents only make sense at x = +-1 for integer output.
  Int acc = 0;
  for (const auto& [e, c] : coeffs_) {
    if (e < 0 && !(x == 1 || x == -1))
      throw std::domain_error("integer evaluation of negative exponents requires x = +-1");
    Int p = 1;
    Int base = x;
    std::int64_t n = e < 0 ? -e : e;
    for (std::int64_t i = 0; i < n; ++i) p *= base;
    if (e < 0) {
      // x = +-1 here, so x^-n == x^n.
    }
    acc += c * p;
  }
  return acc;
}

void LaurentPoly::add_term(std::int64_t k, const Int& c) {
  if (c == 0) return;
  auto it = coeffs_.find(k);
  if (it == coeffs_.end()) {
    coeffs_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : lhs.coeffs_)
    for (const auto& [e2, c2] : rhs.coeffs_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPoly exact_div(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero polynomial");
  if (lhs.is_zero()) return LaurentPoly();
  // Shift both operands into Z[t] and do ordinary long division; the shift
  // difference is restored at the end.
  std::int64_t shift = lhs.min_exp() - rhs.min_exp();
  LaurentPoly rem = lhs.shifted(-lhs.min_exp());
  LaurentPoly div = rhs.shifted(-rhs.min_exp());
  const Int& lead = div.coeffs_.rbegin()->second;
  std::int64_t ddeg = div.max_exp();
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exp() >= ddeg) {
    const Int& rc = rem.coeffs_.rbegin()->second;
    if (rc % lead != 0) throw std::domain_error("inexact polynomial division");
    Int q = rc / lead;
    std::int64_t qe = rem.max_exp() - ddeg;
    LaurentPoly qterm = LaurentPoly::term(q, qe);
    quot += qterm;
    rem -= qterm * div;
  }
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return quot.shifted(shift);
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << 't';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  // Unsigned decimal integer.
  Int read_uint() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected integer in polynomial");
    return Int(std::string(text.substr(start, pos - start)));
  }

  std::int64_t read_int() {
    bool neg = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos;
    }
    Int v = read_uint();
    if (v > 1000000) throw std::invalid_argument("polynomial exponent out of range");
    auto x = static_cast<std::int64_t>(v);
    return neg ? -x : x;
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  Cursor cur{text};
  LaurentPoly out;
  cur.skip_ws();
  if (cur.done()) throw std::invalid_argument("empty polynomial");
  bool neg = false;
  if (cur.peek() == '-') {
    neg = true;
    ++cur.pos;
    cur.skip_ws();
  }
  while (true) {
    // One term: [coefficient] ['t' ['^' exponent]]
    Int coef = 1;
    bool saw_coef = false;
    if (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coef = cur.read_uint();
      saw_coef = true;
    }
    std::int64_t expo = 0;
    bool saw_t = false;
    if (!cur.done() && cur.peek() == 't') {
      saw_t = true;
      ++cur.pos;
      expo = 1;
      if (!cur.done() && cur.peek() == '^') {
        ++cur.pos;
        expo = cur.read_int();
      }
    }
    if (!saw_coef && !saw_t)
      throw std::invalid_argument("expected polynomial term");
    out.add_term(expo, neg ? Int(-coef) : coef);

    cur.skip_ws();
    if (cur.done()) break;
    char op = cur.peek();
    if (op != '+' && op != '-')
      throw std::invalid_argument("expected '+' or '-' between polynomial terms");
    neg = op == '-';
    ++cur.pos;
    cur.skip_ws();
    if (cur.done()) throw std::invalid_argument("dangling operator in polynomial");
  }
  return out;
}

}  // namespace algenus

#include "doctest.h"

#include "algenus/laurent.hpp"
#include "test_util.hpp"

#include <stdexcept>

using namespace algenus;
using algenus::testing::make_rng;
using algenus::testing::random_poly;

namespace {

LaurentPoly parse(const char* s) { return LaurentPoly::parse(s); }

}  // namespace

TEST_CASE("addition") {
  CHECK(parse("t - 1") + parse("1") == parse("t"));
  CHECK(LaurentPoly() + parse("t^2 - 3") == parse("t^2 - 3"));
  CHECK(parse("t + t^-1") + parse("t - t^-1") == parse("2t"));
}

TEST_CASE("multiplication") {
  CHECK(parse("t - 1") * parse("t^-1") == parse("1 - t^-1"));
  CHECK(parse("t^3 - 2t") * parse("1") == parse("t^3 - 2t"));
  CHECK(parse("t - 1") * parse("t + 1") == parse("t^2 - 1"));
  CHECK((parse("t - 1") * LaurentPoly()).is_zero());
}

TEST_CASE("canonical form") {
  CHECK(parse("-t^2 + t").canonical() == parse("t - 1"));
  CHECK(parse("t^5").canonical() == parse("1"));
  CHECK(parse("t^-1 - 1 + t").canonical() == parse("1 - t + t^2"));
  CHECK_THROWS_AS(LaurentPoly().canonical(), std::invalid_argument);
}

TEST_CASE("unit detection") {
  CHECK(parse("t^3").is_unit());
  CHECK_FALSE(parse("t - 1").is_unit());
  CHECK(parse("-t^-2").is_unit());
  CHECK_FALSE(LaurentPoly().is_unit());
  CHECK_FALSE(parse("2t").is_unit());
}

TEST_CASE("ring axioms on random triples") {
  auto rng = make_rng(20240501);
  for (int iter = 0; iter < 500; ++iter) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + q == q + p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("canonical is constant on unit multiples and idempotent") {
  auto rng = make_rng(20240502);
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly p = random_poly(rng);
    if (p.is_zero()) continue;
    LaurentPoly c = p.canonical();
    CHECK(c.canonical() == c);
    for (int k = -5; k <= 5; ++k) {
      CHECK(p.shifted(k).canonical() == c);
      CHECK((-p.shifted(k)).canonical() == c);
    }
  }
}

TEST_CASE("rendering") {
  CHECK(parse("t^-1 - 1 + t").canonical().str() == "1 - t + t^2");
  CHECK(LaurentPoly().str() == "0");
  CHECK(parse("2t").str() == "2t");
  CHECK(parse("-1 + t").str() == "-1 + t");
  CHECK(parse("-t^-2").str() == "-t^-2");
  CHECK(LaurentPoly::term(7, 0).str() == "7");
}

TEST_CASE("parser accepts whitespace and rejects junk") {
  CHECK(parse("  1-t   +t^2 ") == parse("1 - t + t^2"));
  CHECK(parse("t^-3") == LaurentPoly::term(1, -3));
  CHECK_THROWS_AS(parse(""), std::invalid_argument);
  CHECK_THROWS_AS(parse("t +"), std::invalid_argument);
  CHECK_THROWS_AS(parse("x + 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse("1 * t"), std::invalid_argument);
}

TEST_CASE("parse inverts rendering") {
  auto rng = make_rng(20240503);
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly p = random_poly(rng);
    CHECK(LaurentPoly::parse(p.str()) == p);
  }
}

TEST_CASE("exact division") {
  auto rng = make_rng(20240504);
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly p = random_poly(rng), q = random_poly(rng);
    if (q.is_zero()) continue;
    CHECK(exact_div(p * q, q) == p);
  }
  CHECK_THROWS_AS(exact_div(parse("t + 1"), parse("t - 1")), std::domain_error);
  CHECK_THROWS_AS(exact_div(parse("1"), LaurentPoly()), std::domain_error);
}

#include "doctest.h"

#include "algenus/seifert.hpp"
#include "algenus/polydet.hpp"
#include "test_util.hpp"

#include <stdexcept>
#include <vector>

using namespace algenus;
using algenus::testing::make_rng;
using algenus::testing::rand_range;
using algenus::testing::random_knot_pair;
using algenus::testing::random_unimodular;
using algenus::testing::trefoil;
using algenus::testing::trefoil_matrix;
using algenus::testing::zero_one_block;

namespace {

LaurentPoly parse(const char* s) { return LaurentPoly::parse(s); }

// Signature oracle: characteristic polynomial + Descartes' rule of signs.
// All roots of a symmetric integer matrix are real, so the count of sign
// variations is exact.
std::vector<Int> char_poly(const IntMat& a) {
  std::size_t n = a.rows();
  PolyMat xm(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      xm[i][j] = LaurentPoly::constant(-a.at(i, j));
      if (i == j) xm[i][j] += LaurentPoly::variable();
    }
  LaurentPoly det = det_cofactor(xm);
  std::vector<Int> coeffs(n + 1, 0);
  for (const auto& [e, c] : det.terms()) coeffs[static_cast<std::size_t>(e)] = c;
  return coeffs;
}

int sign_variations(const std::vector<Int>& coeffs) {
  int vars = 0;
  int last = 0;
  for (const Int& c : coeffs) {
    if (c == 0) continue;
    int s = c > 0 ? 1 : -1;
    if (last != 0 && s != last) ++vars;
    last = s;
  }
  return vars;
}

int signature_oracle(const IntMat& sym) {
  std::vector<Int> p = char_poly(sym);
  std::vector<Int> pneg = p;
  for (std::size_t i = 1; i < pneg.size(); i += 2) pneg[i] = -pneg[i];
  return sign_variations(p) - sign_variations(pneg);
}

}  // namespace

TEST_CASE("alexander polynomial examples") {
  CHECK(alexander_polynomial(trefoil()) == parse("1 - t + t^2"));
  CHECK(alexander_polynomial(SeifertPair()) == parse("1"));
  CHECK(alexander_polynomial(SeifertPair(IntMat::from({{-1}}), 2)) == parse("t - 1"));
}

TEST_CASE("alexander polynomial of a split form is zero") {
  SeifertPair split(IntMat(1, 1), 2);  // annulus spanning the 2-component unlink
  CHECK(alexander_polynomial(split).is_zero());
}

TEST_CASE("signature examples") {
  CHECK(signature(trefoil()) == -2);
  CHECK(signature(SeifertPair()) == 0);
}

TEST_CASE("signature matches the Descartes oracle") {
  auto rng = make_rng(20240701);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t n = static_cast<std::size_t>(rand_range(rng, 1, 6));
    IntMat sym(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Int v = rand_range(rng, -4, 4);
        sym.at(i, j) = v;
        sym.at(j, i) = v;
      }
    CHECK(symmetric_signature(sym) == signature_oracle(sym));
  }
}

TEST_CASE("genus examples") {
  CHECK(trefoil().genus() == 1);
  CHECK(SeifertPair().genus() == 0);
  CHECK(SeifertPair(IntMat::from({{-1}}), 2).genus() == 0);
}

TEST_CASE("congruent transform") {
  auto rng = make_rng(20240702);
  SeifertPair s = trefoil();
  CHECK(congruent_transform(s, UnimodularMatrix(IntMat::identity(2))).matrix() ==
        s.matrix());

  // P^T M P for M = [[0,1],[0,0]], P = [[1,1],[0,1]], recomputed by hand:
  // M P = [[0,1],[0,0]], P^T (M P) = [[0,1],[0,1]].
  SeifertPair z = zero_one_block();
  UnimodularMatrix p(IntMat::from({{1, 1}, {0, 1}}));
  CHECK(congruent_transform(z, p).matrix() == IntMat::from({{0, 1}, {0, 1}}));

  for (int iter = 0; iter < 50; ++iter) {
    SeifertPair knot = random_knot_pair(rng, static_cast<int>(rand_range(rng, 1, 3)));
    UnimodularMatrix u = random_unimodular(rng, knot.size());
    SeifertPair moved = congruent_transform(knot, u);
    CHECK(alexander_polynomial(moved) == alexander_polynomial(knot));
    CHECK(signature(moved) == signature(knot));
  }

  CHECK_THROWS_AS(congruent_transform(s, UnimodularMatrix(IntMat::identity(3))),
                  std::invalid_argument);
}

TEST_CASE("stabilize") {
  SeifertPair stab_unknot = stabilize(SeifertPair());
  CHECK(stab_unknot.matrix() == IntMat::from({{0, 1}, {0, 0}}));
  CHECK(stab_unknot.components() == 1);

  SeifertPair s = trefoil();
  SeifertPair once = stabilize(s);
  CHECK(once.size() == 4);
  CHECK(alexander_polynomial(once) == alexander_polynomial(s));
  SeifertPair twice = stabilize(once);
  CHECK(twice.size() == s.size() + 4);
  CHECK(twice.genus() == s.genus() + 2);
  CHECK(alexander_polynomial(twice) == alexander_polynomial(s));
}

TEST_CASE("block sum") {
  SeifertPair s = trefoil();
  CHECK(block_sum(s, SeifertPair()).matrix() == s.matrix());
  SeifertPair mixed = block_sum(s, zero_one_block());
  CHECK(mixed.size() == 4);
  CHECK(alexander_polynomial(mixed) == parse("1 - t + t^2"));
  SeifertPair doubled = block_sum(s, s);
  CHECK(alexander_polynomial(doubled) ==
        (parse("1 - t + t^2") * parse("1 - t + t^2")).canonical());
  CHECK(block_sum(SeifertPair(IntMat::from({{-1}}), 2), SeifertPair()).components() == 2);
}

TEST_CASE("block sum multiplies Alexander polynomials") {
  auto rng = make_rng(20240703);
  for (int iter = 0; iter < 40; ++iter) {
    SeifertPair a = random_knot_pair(rng, static_cast<int>(rand_range(rng, 0, 2)));
    SeifertPair b = random_knot_pair(rng, static_cast<int>(rand_range(rng, 0, 2)));
    LaurentPoly pa = alexander_polynomial(a), pb = alexander_polynomial(b);
    CHECK(alexander_polynomial(block_sum(a, b)) == (pa * pb).canonical());
  }
}

TEST_CASE("alexander triviality") {
  CHECK(is_alexander_trivial(zero_one_block()));
  CHECK_FALSE(is_alexander_trivial(trefoil()));
  CHECK(is_alexander_trivial(SeifertPair()));
  CHECK_THROWS_AS(is_alexander_trivial_matrix(IntMat::from({{-1}})),
                  std::invalid_argument);
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(SeifertPair(IntMat(2, 2), 2, SeifertPair::Validation::strict),
                  std::invalid_argument);  // n - r + 1 = 1 odd
  CHECK_THROWS_AS(SeifertPair(IntMat(1, 1), 3), std::invalid_argument);  // negative
  CHECK_THROWS_AS(SeifertPair(IntMat(2, 2), 1), std::invalid_argument);  // det 0
  CHECK_THROWS_AS(SeifertPair(IntMat(2, 2), 0), std::invalid_argument);
  CHECK_NOTHROW(SeifertPair(IntMat(2, 2), 1, SeifertPair::Validation::raw));
  CHECK_NOTHROW(SeifertPair(IntMat::from({{-1}}), 2));

  // Every strictly accepted pair with n - r + 1 > 0 has unimodular
  // antisymmetrization by construction.
  auto rng = make_rng(20240704);
  for (int iter = 0; iter < 50; ++iter) {
    SeifertPair s = random_knot_pair(rng, static_cast<int>(rand_range(rng, 1, 3)));
    CHECK((s.matrix() - s.matrix().transpose()).det() == 1);
  }
}

TEST_CASE("unimodular matrix validation") {
  CHECK_THROWS_AS(UnimodularMatrix(IntMat::from({{2}})), std::invalid_argument);
  CHECK_THROWS_AS(UnimodularMatrix(IntMat(2, 3)), std::invalid_argument);
  CHECK_NOTHROW(UnimodularMatrix(IntMat::from({{0, 1}, {1, 0}})));
}

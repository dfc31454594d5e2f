#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "tmod/laurent.hpp"

using namespace tmod;
using tmod::testutil::random_series;

TEST_CASE("windows and coefficient access") {
  const Fq& F = Fq::get(2);
  LaurentSeries s = LaurentSeries::windowed(F, 2, {1, 0, 1, 1, 0, 1}, -3);
  CHECK(s.lead() == 2);
  CHECK(s.floor() == -3);
  CHECK(s.val() == -2);
  CHECK(s.coeff(2) == 1);
  CHECK(s.coeff(1) == 0);
  CHECK(s.coeff(5) == 0);  // above the support: exactly zero
  CHECK_THROWS_AS(s.coeff(-4), PrecisionError);
  CHECK(s.precision() == 6);
}

TEST_CASE("normalization strips unknown-free leading zeros") {
  const Fq& F = Fq::get(2);
  LaurentSeries s = LaurentSeries::windowed(F, 3, {0, 0, 1, 1}, 0);
  CHECK(s.lead() == 1);
  CHECK(s.floor() == 0);
  CHECK(s.precision() == 2);
}

TEST_CASE("valuation arithmetic under multiplication") {
  std::mt19937_64 rng(23);
  for (unsigned q : {2u, 3u}) {
    const Fq& F = Fq::get(q);
    for (int it = 0; it < 100; ++it) {
      LaurentSeries f = random_series(F, static_cast<long>(rng() % 7) - 3, 12, rng);
      LaurentSeries g = random_series(F, static_cast<long>(rng() % 7) - 3, 12, rng);
      LaurentSeries fg = f * g;
      CHECK(fg.val() == f.val() + g.val());
      LaurentSeries sum = f + g;
      if (!sum.vanishes()) CHECK(sum.val() >= std::min(f.val(), g.val()));
    }
  }
}

TEST_CASE("associativity within the common window") {
  std::mt19937_64 rng(29);
  const Fq& F = Fq::get(3);
  for (int it = 0; it < 50; ++it) {
    LaurentSeries f = random_series(F, 1, 10, rng);
    LaurentSeries g = random_series(F, -2, 10, rng);
    LaurentSeries h = random_series(F, 0, 10, rng);
    LaurentSeries a = (f * g) * h;
    LaurentSeries b = f * (g * h);
    long floor = std::max(a.floor(), b.floor());
    CHECK(a.agrees_from(b, floor));
    CHECK(a.floor() == b.floor());
  }
}

TEST_CASE("inversion: f * f^-1 = 1 within the window for 100 random units") {
  std::mt19937_64 rng(31);
  const Fq& F = Fq::get(2);
  for (int it = 0; it < 100; ++it) {
    // random unit of k[[t^-1]]: val 0, nonzero constant term
    LaurentSeries f = random_series(F, 0, 14, rng);
    LaurentSeries inv = f.inverse(14);
    LaurentSeries prod = f * inv;
    CHECK(prod.agrees_from(LaurentSeries::one(F), prod.floor()));
    CHECK(prod.coeff(0) == 1);
  }
}

TEST_CASE("multiplication window is pessimistic") {
  const Fq& F = Fq::get(2);
  // f known to 3 terms only
  LaurentSeries f = LaurentSeries::windowed(F, 0, {1, 1, 1}, -2);
  LaurentSeries g = LaurentSeries::windowed(F, -1, {1, 0, 1, 1}, -4);
  LaurentSeries fg = f * g;
  CHECK(fg.floor() == std::max(-2L + -1L, -4L + 0L));
  CHECK_THROWS_AS(fg.coeff(fg.floor() - 1), PrecisionError);
}

TEST_CASE("exact series know every coefficient") {
  const Fq& F = Fq::get(3);
  FqPoly p(F, {1, 2, 1});
  LaurentSeries s = LaurentSeries::from_poly(p);
  CHECK(s.is_exact());
  CHECK(s.coeff(-1000) == 0);
  CHECK(s.coeff(2) == 1);
  CHECK(s.val() == -2);
  CHECK(s.polynomial_part() == p);
}

TEST_CASE("head and tail split") {
  const Fq& F = Fq::get(2);
  LaurentSeries s = LaurentSeries::windowed(F, 2, {1, 1, 0, 1, 1, 0, 1}, -4);
  LaurentSeries head = s.head_part(0);
  LaurentSeries tail = s.tail_part(0);
  CHECK(head.is_exact());
  CHECK(head.coeff(2) == 1);
  CHECK(head.coeff(0) == 0);
  CHECK(tail.lead() == -1);
  LaurentSeries back = head + tail;
  CHECK(back.agrees_from(s, -4));
}

TEST_CASE("frobenius dilation of a window") {
  const Fq& F = Fq::get(2);
  LaurentSeries s = LaurentSeries::windowed(F, 0, {1, 1}, -1);
  LaurentSeries s2 = s.frobenius_dilate(1);
  CHECK(s2.coeff(0) == 1);
  CHECK(s2.coeff(-1) == 0);  // odd exponents are exactly zero
  CHECK(s2.coeff(-2) == 1);
  CHECK(s2.floor() == -3);   // knowledge floor (lo-1)*q + 1
  // and multiplication agrees: s^2 = dilation in characteristic 2
  LaurentSeries sq = s * s;
  CHECK(sq.agrees_from(s2, sq.floor()));
}

TEST_CASE("hasse derivative on negative exponents") {
  const Fq& F = Fq::get(3);
  // D_1(t^-1) = -t^-2, D_2(t^-1) = C(-1,2) t^-3 = t^-3
  LaurentSeries s = LaurentSeries::monomial(F, 1, -1);
  CHECK(s.hasse_derivative(1).coeff(-2) == F.neg(1));
  CHECK(s.hasse_derivative(2).coeff(-3) == 1);
}

TEST_CASE("monic normalization and congruence") {
  const Fq& F = Fq::get(3);
  LaurentSeries s = LaurentSeries::windowed(F, 1, {2, 1, 0, 2}, -2);
  LaurentSeries m = s.monic();
  CHECK(m.coeff(1) == 1);
  CHECK(m.agrees_mod(m, 2));
}

#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "tmod/binom.hpp"
#include "tmod/fq_poly.hpp"

using namespace tmod;
using tmod::testutil::random_poly;

TEST_CASE("basic polynomial arithmetic") {
  const Fq& F = Fq::get(2);
  FqPoly f(F, {1, 1, 0, 1});  // 1 + t + t^3
  FqPoly g(F, {1, 1});        // 1 + t
  CHECK((f + g).degree() == 3);
  CHECK((f * g).degree() == 4);
  auto [q, r] = f.divmod(g);
  CHECK(q * g + r == f);
  CHECK(r.degree() < g.degree());
  CHECK(FqPoly::zero(F).degree() == kNegInfDeg);
}

TEST_CASE("divmod round trip on random inputs") {
  std::mt19937_64 rng(7);
  const Fq& F = Fq::get(3);
  for (int it = 0; it < 100; ++it) {
    FqPoly a = random_poly(F, 8, rng);
    FqPoly b = random_poly(F, 4, rng);
    if (b.is_zero()) continue;
    auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
  }
}

TEST_CASE("xgcd certificate") {
  std::mt19937_64 rng(11);
  const Fq& F = Fq::get(4);
  for (int it = 0; it < 50; ++it) {
    FqPoly a = random_poly(F, 6, rng);
    FqPoly b = random_poly(F, 5, rng);
    if (a.is_zero() && b.is_zero()) continue;
    FqPoly u(F), v(F);
    FqPoly g = FqPoly::xgcd(a, b, u, v);
    CHECK(u * a + v * b == g);
    CHECK(g.is_monic());
    if (!a.is_zero()) CHECK(a.divisible_by(g));
    if (!b.is_zero()) CHECK(b.divisible_by(g));
  }
}

TEST_CASE("hasse derivative base cases") {
  const Fq& F2 = Fq::get(2);
  FqPoly t2(F2, {0, 0, 1});
  CHECK(t2.hasse_derivative(1).is_zero());       // C(2,1) = 2 = 0 mod 2
  CHECK(t2.hasse_derivative(2) == FqPoly::one(F2));  // C(2,2) = 1
}

TEST_CASE("hasse derivative satisfies the Leibniz convolution rule") {
  std::mt19937_64 rng(13);
  for (unsigned q : {2u, 3u}) {
    const Fq& F = Fq::get(q);
    for (int it = 0; it < 100; ++it) {
      FqPoly f = random_poly(F, 6, rng);
      FqPoly g = random_poly(F, 6, rng);
      for (unsigned j = 0; j <= 4; ++j) {
        FqPoly lhs = (f * g).hasse_derivative(j);
        FqPoly rhs = FqPoly::zero(F);
        for (unsigned a = 0; a <= j; ++a)
          rhs = rhs + f.hasse_derivative(a) * g.hasse_derivative(j - a);
        CHECK(lhs == rhs);
      }
    }
  }
}

// independent oracle: D_j(f) is the epsilon^j coefficient of f(t + eps)
// expanded in k[t][eps]/(eps^(j+1))
TEST_CASE("hasse derivative agrees with nilpotent shift expansion") {
  std::mt19937_64 rng(17);
  const Fq& F = Fq::get(3);
  for (int it = 0; it < 30; ++it) {
    FqPoly f = random_poly(F, 7, rng);
    const unsigned J = 3;
    // coefficients of f(t+eps) as polynomials in t, eps-degree 0..J
    std::vector<FqPoly> shifted(J + 1, FqPoly::zero(F));
    // accumulate term c_m (t+eps)^m via binomials
    for (int m = 0; m <= f.degree(); ++m) {
      fq_t cm = f.coeff(m);
      if (!cm) continue;
      for (unsigned j = 0; j <= std::min<unsigned>(J, static_cast<unsigned>(m)); ++j) {
        unsigned b = binom_mod_p(m, j, F.p());
        if (!b) continue;
        fq_t coef = F.mul(cm, F.from_int(static_cast<long>(b)));
        shifted[j] = shifted[j] + FqPoly::t_pow(F, m - static_cast<int>(j)).mul_scalar(coef);
      }
    }
    for (unsigned j = 0; j <= J; ++j) CHECK(shifted[j] == f.hasse_derivative(j));
  }
}

TEST_CASE("frobenius dilation is the q-power map") {
  const Fq& F = Fq::get(3);
  FqPoly f(F, {1, 2, 0, 1});
  FqPoly f3 = f.frobenius_dilate(1, F.q());
  CHECK(f3 == f * f * f);
}

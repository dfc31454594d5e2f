#include "doctest.h"
#include "tmod/fq.hpp"

using namespace tmod;

TEST_CASE("prime field arithmetic") {
  const Fq& F = Fq::get(3);
  CHECK(F.p() == 3);
  CHECK(F.q() == 3);
  CHECK(F.add(2, 2) == 1);
  CHECK(F.mul(2, 2) == 1);
  CHECK(F.neg(1) == 2);
  CHECK(F.inv(2) == 2);
  CHECK(F.frobenius(2) == F.pow(2, 3));
}

TEST_CASE("extension field F4") {
  const Fq& F = Fq::get(4);
  CHECK(F.p() == 2);
  CHECK(F.f() == 2);
  // x satisfies x^2 = x + 1 for the canonical modulus x^2 + x + 1
  fq_t x = F.from_coeffs({0, 1});
  CHECK(F.mul(x, x) == F.add(x, 1));
  CHECK(F.pow(x, 3) == 1);
  for (unsigned a = 1; a < 4; ++a) CHECK(F.mul(static_cast<fq_t>(a), F.inv(static_cast<fq_t>(a))) == 1);
}

TEST_CASE("field axioms hold on all of F8 and F9") {
  for (unsigned q : {8u, 9u}) {
    const Fq& F = Fq::get(q);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        fq_t fa = static_cast<fq_t>(a), fb = static_cast<fq_t>(b);
        CHECK(F.add(fa, fb) == F.add(fb, fa));
        CHECK(F.mul(fa, fb) == F.mul(fb, fa));
        for (unsigned c = 0; c < q; ++c) {
          fq_t fc = static_cast<fq_t>(c);
          CHECK(F.mul(fa, F.add(fb, fc)) == F.add(F.mul(fa, fb), F.mul(fa, fc)));
        }
      }
    // Frobenius is additive
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b)
        CHECK(F.frobenius(F.add(static_cast<fq_t>(a), static_cast<fq_t>(b))) ==
              F.add(F.frobenius(static_cast<fq_t>(a)), F.frobenius(static_cast<fq_t>(b))));
  }
}

TEST_CASE("interning returns the same instance") {
  CHECK(&Fq::get(2) == &Fq::get(2));
  CHECK(&Fq::get(4) != &Fq::get(2));
}

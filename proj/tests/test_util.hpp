#ifndef TMOD_TEST_UTIL_HPP
#define TMOD_TEST_UTIL_HPP

#include <random>

#include "tmod/fq_poly.hpp"
#include "tmod/laurent.hpp"
#include "tmod/matrix.hpp"

namespace tmod::testutil {

inline FqPoly random_poly(const Fq& F, int maxdeg, std::mt19937_64& rng) {
  std::vector<fq_t> c(static_cast<size_t>(maxdeg) + 1);
  for (auto& x : c) x = static_cast<fq_t>(rng() % F.q());
  return FqPoly(F, std::move(c));
}

inline FqPoly random_monic(const Fq& F, int deg, std::mt19937_64& rng) {
  std::vector<fq_t> c(static_cast<size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) c[static_cast<size_t>(i)] = static_cast<fq_t>(rng() % F.q());
  c[static_cast<size_t>(deg)] = 1;
  return FqPoly(F, std::move(c));
}

inline LaurentSeries random_series(const Fq& F, long lead, long terms, std::mt19937_64& rng) {
  std::vector<fq_t> c(static_cast<size_t>(terms));
  for (auto& x : c) x = static_cast<fq_t>(rng() % F.q());
  if (c[0] == 0) c[0] = 1;
  return LaurentSeries::windowed(F, lead, std::move(c), lead - terms + 1);
}

inline Matrix<FqPoly> random_poly_matrix(const Fq& F, int rows, int cols, int maxdeg,
                                         std::mt19937_64& rng) {
  Matrix<FqPoly> m(rows, cols, FqPoly::zero(F));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_poly(F, maxdeg, rng);
  return m;
}

}  // namespace tmod::testutil

#endif

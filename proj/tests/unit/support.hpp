#pragma once

#include <random>
#include <vector>

#include "cy3/series_matrix.hpp"

namespace cy3::testing {

inline PadicRing padic(unsigned long p, int m, int d) {
  return PadicRing(PadicContext::for_degree(p, m, d));
}

inline long draw(std::mt19937_64& rng, long bound) {
  return static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
}

template <class R>
bool series_equal(const Series<R>& a, const Series<R>& b) {
  if (!a.same_shape(b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.ring().equal(a[i], b[i])) return false;
  }
  return true;
}

template <class R>
bool matrix_equal(const SeriesMatrix<R>& a, const SeriesMatrix<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!series_equal(a(i, j), b(i, j))) return false;
    }
  }
  return true;
}

inline PadicSeries random_series(const PadicRing& r, int n, int d, std::mt19937_64& rng,
                                 long bound) {
  PadicSeries s(r, n, d);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = r.from_int(draw(rng, bound));
  return s;
}

// Block unipotent T with random integral entries above the diagonal blocks,
// constant terms of block (i,j) divisible by p^(j-i).
inline PadicMatrix random_block_T(const PadicRing& r, const std::vector<int>& exps, int n, int d,
                                  std::mt19937_64& rng) {
  const auto size = exps.size();
  auto T = PadicMatrix::identity(r, size, n, d);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (exps[j] <= exps[i]) continue;
      auto s = random_series(r, n, d, rng, 9);
      s[0] = r.mul(s[0], r.power_of_p(exps[j] - exps[i]));
      T(i, j) = s;
    }
  }
  return T;
}

}  // namespace cy3::testing

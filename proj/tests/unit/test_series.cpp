#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "cy3/error.hpp"
#include "cy3/series.hpp"

using namespace cy3;

namespace {

PadicRing padic(unsigned long p, int m, int d) { return PadicRing(PadicContext::for_degree(p, m, d)); }

template <class R>
Series<R> var(const R& r, int n, int d, int j) {
  return Series<R>::variable(r, n, d, j);
}

template <class R>
Series<R> cst(const R& r, int n, int d, long c) {
  return Series<R>::constant(r, n, d, r.from_int(c));
}

template <class R>
bool series_equal(const Series<R>& a, const Series<R>& b) {
  if (!a.same_shape(b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.ring().equal(a[i], b[i])) return false;
  }
  return true;
}

// Random series with integer coefficients in [-bound, bound], optional
// forced constant term.
template <class R>
Series<R> random_series(const R& r, int n, int d, std::mt19937_64& rng, long bound) {
  Series<R> s(r, n, d);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const long c = static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
    s[i] = r.from_int(c);
  }
  return s;
}

}  // namespace

TEST(Series, DifferenceOfSquares) {
  RationalRing q;
  const auto t = var(q, 1, 4, 0);
  const auto one = cst(q, 1, 4, 1);
  const auto prod = (one + t) * (one - t);
  EXPECT_TRUE(series_equal(prod, one - t * t));
}

TEST(Series, GeometricInverse) {
  const auto r = padic(5, 4, 6);
  const auto t = var(r, 1, 6, 0);
  const auto inv = invert(cst(r, 1, 6, 1) - t);
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_TRUE(r.equal(inv[k], r.one())) << k;
}

TEST(Series, InvertNonUnitRejected) {
  const auto r = padic(5, 4, 3);
  const auto t = var(r, 1, 3, 0);
  try {
    invert(cst(r, 1, 3, 5) + t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvertNonUnit);
  }
  // Fraction-field inverse accepts it.
  const auto inv = invert_nonzero(cst(r, 1, 3, 5) + t);
  EXPECT_EQ(r.valuation(inv[0]), -1);
  EXPECT_EQ(r.valuation(inv[3]), -4);
}

TEST(Series, LogExpRoundTrip) {
  const auto r = padic(5, 4, 6);
  const auto pt = var(r, 1, 6, 0) * r.from_int(5);
  EXPECT_TRUE(series_equal(log(exp(pt)), pt));
  EXPECT_TRUE(series_equal(exp(cst(r, 1, 6, 0)), cst(r, 1, 6, 1)));
}

TEST(Series, ExpLogRoundTripWithConstant) {
  const auto r = padic(7, 5, 5);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto a = random_series(r, 2, 5, rng, 30);
    a[0] = r.add(r.one(), r.from_int(7 * static_cast<long>(rng() % 40)));
    const auto back = exp(log(a));
    for (std::size_t k = 0; k < a.size(); ++k) {
      const auto diff = r.sub(back[k], a[k]);
      EXPECT_GE(r.valuation(diff), 5) << k;
    }
  }
}

TEST(Series, DerivativeThetaIntegrate) {
  RationalRing q;
  const auto t = var(q, 1, 6, 0);
  const auto t3 = t * t * t;
  EXPECT_TRUE(series_equal(derivative(t3, 0), t * t * mpq_class(3)));
  EXPECT_TRUE(series_equal(integrate(t * t * mpq_class(3), 0), t3));
  const auto t5 = pow(t, 5);
  EXPECT_TRUE(series_equal(theta(t5, 0), t5 * mpq_class(5)));
}

TEST(Series, FrobeniusSubstitution) {
  const auto r = padic(5, 4, 6);
  const auto t = var(r, 1, 6, 0);
  const auto one = cst(r, 1, 6, 1);
  EXPECT_TRUE(series_equal(substitute(one + t, {pow(t, 5)}), one + pow(t, 5)));
  EXPECT_TRUE(series_equal(substitute(t, {t}), t));
}

TEST(Series, LogFunctionalEquation) {
  // log(1 + ((1+t)^5 - 1)) = 5 log(1+t), checked against independent expansion.
  RationalRing q;
  const int d = 8;
  const auto t = var(q, 1, d, 0);
  const auto one = cst(q, 1, d, 1);
  const auto lhs = substitute(log(one + t), {pow(one + t, 5) - one});
  RationalSeries expected(q, 1, d);
  for (int k = 1; k <= d; ++k) {
    expected[k] = mpq_class(k % 2 == 1 ? 5 : -5, k);
    expected[k].canonicalize();
  }
  EXPECT_TRUE(series_equal(lhs, expected));

  const auto r = padic(5, 6, d);
  const auto tp = var(r, 1, d, 0);
  const auto onep = cst(r, 1, d, 1);
  const auto lhs_p = substitute(log(onep + tp), {pow(onep + tp, 5) - onep});
  const auto rhs_p = log(onep + tp) * r.from_int(5);
  for (std::size_t k = 0; k < lhs_p.size(); ++k) {
    EXPECT_GE(r.valuation(r.sub(lhs_p[k], rhs_p[k])), 6);
  }
}

TEST(Series, SubstituteDomain) {
  const auto r = padic(5, 4, 3);
  const auto t = var(r, 1, 3, 0);
  try {
    substitute(t, {cst(r, 1, 3, 1) + t});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SubstituteDomain);
  }
}

TEST(Series, RevertCatalan) {
  RationalRing q;
  const auto t = var(q, 1, 6, 0);
  const auto g = revert(std::vector<RationalSeries>{t + t * t});
  const long catalan[] = {0, 1, -1, 2, -5, 14, -42};
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(g[0][k], catalan[k]) << k;
}

TEST(Series, RevertLinear) {
  RationalRing q;
  const auto t = var(q, 1, 4, 0);
  const auto g = revert(std::vector<RationalSeries>{t * mpq_class(2)});
  EXPECT_TRUE(series_equal(g[0], t * mpq_class(1, 2)));
  const auto id = revert(std::vector<RationalSeries>{t});
  EXPECT_TRUE(series_equal(id[0], t));
}

TEST(Series, RevertSingular) {
  RationalRing q;
  const auto t = var(q, 1, 4, 0);
  try {
    revert(std::vector<RationalSeries>{t * t});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RevertSingular);
  }
}

// Property tests with hand-rolled generators.

TEST(SeriesProperty, RingAxioms) {
  const auto r = padic(7, 6, 5);
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_series(r, 2, 5, rng, 50);
    const auto b = random_series(r, 2, 5, rng, 50);
    const auto c = random_series(r, 2, 5, rng, 50);
    EXPECT_TRUE(series_equal((a * b) * c, a * (b * c)));
    EXPECT_TRUE(series_equal(a * (b + c), a * b + a * c));
    EXPECT_TRUE(series_equal(a * b, b * a));
  }
}

TEST(SeriesProperty, RationalRingAxioms) {
  RationalRing q;
  std::mt19937_64 rng(102);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_series(q, 3, 3, rng, 9);
    const auto b = random_series(q, 3, 3, rng, 9);
    const auto c = random_series(q, 3, 3, rng, 9);
    EXPECT_TRUE(series_equal((a * b) * c, a * (b * c)));
    EXPECT_TRUE(series_equal(a * (b + c), a * b + a * c));
    EXPECT_TRUE(series_equal(a * b, b * a));
  }
}

TEST(SeriesProperty, InverseIsInverse) {
  const auto r = padic(5, 6, 6);
  std::mt19937_64 rng(103);
  for (int i = 0; i < 100; ++i) {
    auto a = random_series(r, 2, 6, rng, 100);
    if (r.valuation(a[0]) != 0) a[0] = r.add(a[0], r.one());
    if (r.valuation(a[0]) != 0) continue;
    EXPECT_TRUE(series_equal(a * invert(a), cst(r, 2, 6, 1)));
  }
}

TEST(SeriesProperty, SubstitutionIsHomomorphism) {
  const auto r = padic(5, 6, 5);
  std::mt19937_64 rng(104);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_series(r, 2, 5, rng, 20);
    const auto b = random_series(r, 2, 5, rng, 20);
    std::vector<PadicSeries> images;
    for (int j = 0; j < 2; ++j) {
      auto img = random_series(r, 2, 5, rng, 20);
      img[0] = r.zero();
      images.push_back(img);
    }
    Substitution<PadicRing> sub(images, 5);
    EXPECT_TRUE(series_equal(sub.apply(a * b), sub.apply(a) * sub.apply(b)));
    EXPECT_TRUE(series_equal(sub.apply(a + b), sub.apply(a) + sub.apply(b)));
  }
}

// With constant terms of valuation v the dropped source terms of degree > D
// reach output degree k only with valuation >= (D + 1 - k) v.
TEST(SeriesProperty, SubstitutionWithConstantsTruncationBound) {
  const int d = 5;
  const auto r = padic(5, 12, d);
  std::mt19937_64 rng(106);
  for (int i = 0; i < 30; ++i) {
    const auto a = random_series(r, 2, d, rng, 20);
    const auto b = random_series(r, 2, d, rng, 20);
    std::vector<PadicSeries> images;
    for (int j = 0; j < 2; ++j) {
      auto img = random_series(r, 2, d, rng, 20);
      img[0] = r.from_int(5 * (1 + static_cast<long>(rng() % 4)));
      images.push_back(img);
    }
    Substitution<PadicRing> sub(images, d);
    const auto lhs = sub.apply(a * b);
    const auto rhs = sub.apply(a) * sub.apply(b);
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      const int deg = lhs.table().total_degree(k);
      EXPECT_GE(r.valuation(r.sub(lhs[k], rhs[k])), d + 1 - deg) << k;
    }
  }
}

TEST(SeriesProperty, RevertRoundTrip) {
  const auto r = padic(7, 6, 5);
  std::mt19937_64 rng(105);
  int tested = 0;
  while (tested < 30) {
    std::vector<PadicSeries> images;
    for (int j = 0; j < 2; ++j) {
      auto img = random_series(r, 2, 5, rng, 20);
      img[0] = r.zero();
      images.push_back(img);
    }
    // unit determinant of the linear part keeps everything integral
    const auto det = r.sub(r.mul(images[0][1], images[1][2]), r.mul(images[0][2], images[1][1]));
    if (r.valuation(det) != 0) continue;
    ++tested;
    const auto g = revert(images);
    for (int j = 0; j < 2; ++j) {
      const auto x = var(r, 2, 5, j);
      EXPECT_TRUE(series_equal(substitute(images[static_cast<std::size_t>(j)], g), x));
      EXPECT_TRUE(series_equal(substitute(g[static_cast<std::size_t>(j)], images), x));
    }
  }
}

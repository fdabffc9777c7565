#include <gtest/gtest.h>

#include <random>

#include "cy3/error.hpp"
#include "cy3/padic.hpp"
#include "cy3/rational.hpp"
#include "cy3/series.hpp"

using namespace cy3;

namespace {

PadicRing ring_of(unsigned long p, int m, int g = 2) {
  return PadicRing(PadicContext::create(p, m, g, 3 + g));
}

}  // namespace

TEST(Padic, InverseOfTwoModFiveCubed) {
  const auto r = ring_of(5, 3);
  // 2 * 63 = 126 = 1 mod 125
  EXPECT_EQ(r.residue(r.inv(r.from_int(2)), 3), 63);
}

TEST(Padic, ExpOfFive) {
  const auto r = ring_of(5, 3, 4);
  EXPECT_EQ(r.residue(padic_exp(r, r.from_int(5)), 3), 81);
}

TEST(Padic, ExpDomain) {
  const auto r = ring_of(5, 3);
  EXPECT_THROW(padic_exp(r, r.from_int(1)), Error);
  const auto r2 = ring_of(2, 6);
  EXPECT_THROW(padic_exp(r2, r2.from_int(2)), Error);
  EXPECT_NO_THROW(padic_exp(r2, r2.from_int(4)));
}

TEST(Padic, LogExpRoundTripScalar) {
  const auto r = ring_of(7, 6, 6);
  for (long x : {7L, 14L, 49L, -21L, 343L * 3}) {
    const auto v = r.from_int(x);
    EXPECT_TRUE(r.equal(padic_log(r, padic_exp(r, v)), v)) << x;
  }
}

TEST(Padic, Canonicalization) {
  const auto r = ring_of(5, 4);
  const auto a = r.from_int(250);
  EXPECT_EQ(a.exponent(), 3);
  EXPECT_EQ(a.unit(), 2);
  EXPECT_TRUE(r.from_int(0).is_zero());
  EXPECT_EQ(r.from_int(0).exponent(), 0);
  const auto q = r.from_mpq(mpq_class(3, 25));
  EXPECT_EQ(q.exponent(), -2);
}

TEST(Padic, ExponentBound) {
  const auto r = PadicRing(PadicContext::create(5, 3, 0, 2));
  EXPECT_NO_THROW(r.power_of_p(-2));
  EXPECT_THROW(r.power_of_p(-3), Error);
  try {
    r.inv(r.power_of_p(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PrecisionExhausted);
  }
}

TEST(Padic, StringRoundTrip) {
  const auto r = ring_of(5, 4);
  for (const auto& x : {r.from_int(0), r.from_int(17), r.from_mpq(mpq_class(7, 125)),
                        r.from_int(-3)}) {
    EXPECT_TRUE(r.equal(r.parse(r.to_string(x)), x)) << r.to_string(x);
  }
  EXPECT_TRUE(r.equal(r.parse("3/5"), r.from_mpq(mpq_class(3, 5))));
  EXPECT_THROW(r.parse("abc"), Error);
  EXPECT_THROW(r.parse("7^1*2"), Error);
}

TEST(Padic, FieldAxiomsRandom) {
  const auto r = ring_of(7, 5);
  std::mt19937_64 rng(11);
  const auto draw = [&] {
    const long u = static_cast<long>(rng() % 20000) - 10000;
    const int e = static_cast<int>(rng() % 4);
    return r.mul(r.from_int(u), r.power_of_p(e));
  };
  for (int i = 0; i < 200; ++i) {
    const auto a = draw(), b = draw(), c = draw();
    EXPECT_TRUE(r.equal(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))));
    EXPECT_TRUE(r.equal(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))));
    EXPECT_TRUE(r.equal(r.add(a, b), r.add(b, a)));
    if (!a.is_zero()) EXPECT_TRUE(r.equal(r.mul(a, r.inv(a)), r.one()));
  }
}

TEST(Rational, ParseAndPrint) {
  RationalRing q;
  EXPECT_EQ(q.to_string(mpq_class(-6, 4)), "-3/2");
  EXPECT_EQ(q.to_string(mpq_class(5)), "5/1");
  EXPECT_EQ(q.parse("10/4"), mpq_class(5, 2));
  EXPECT_EQ(q.parse("7"), mpq_class(7));
  EXPECT_THROW(q.parse("1/0"), Error);
  EXPECT_THROW(q.parse("x"), Error);
  EXPECT_EQ(valuation(mpq_class(50, 3), 5), 2);
  EXPECT_EQ(valuation(mpq_class(3, 50), 5), -2);
}

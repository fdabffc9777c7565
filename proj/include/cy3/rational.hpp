#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cy3 {

// Exact rationals over arbitrary-precision integers.
class RationalRing {
 public:
  using value_type = mpq_class;

  mpq_class zero() const { return 0; }
  mpq_class one() const { return 1; }
  mpq_class from_int(long v) const { return v; }
  mpq_class from_mpz(const mpz_class& v) const { return mpq_class(v); }
  mpq_class from_mpq(const mpq_class& v) const { return v; }

  bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }
  bool is_unit(const mpq_class& a) const { return sgn(a) != 0; }

  mpq_class add(const mpq_class& a, const mpq_class& b) const { return a + b; }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return a - b; }
  mpq_class neg(const mpq_class& a) const { return -a; }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
  void add_mul(mpq_class& acc, const mpq_class& a, const mpq_class& b) const;
  mpq_class inv(const mpq_class& a) const;
  mpq_class mul_int(const mpq_class& a, long k) const { return a * k; }
  mpq_class div_int(const mpq_class& a, long k) const;

  bool equal(const mpq_class& a, const mpq_class& b) const { return a == b; }

  // "num/den" with den >= 1.
  std::string to_string(const mpq_class& a) const;
  mpq_class parse(std::string_view text) const;

  bool operator==(const RationalRing&) const { return true; }
};

// p-adic valuation of a rational; kInfiniteValuation for zero.
int valuation(const mpq_class& a, unsigned long p);
int valuation(const mpz_class& a, unsigned long p);

}  // namespace cy3

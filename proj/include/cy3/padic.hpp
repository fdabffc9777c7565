#pragma once

#include <climits>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cy3 {

// Valuation reported for the zero element.
inline constexpr int kInfiniteValuation = INT_MAX;

// Precision bookkeeping shared by every p-adic scalar of one computation.
// Arithmetic is carried out on units modulo p^(M+G); externally reported
// values are reduced modulo p^M. Exponents below -E are rejected.
struct PadicContext {
  unsigned long p = 0;
  int precision = 0;       // M
  int guard = 0;           // G
  int exponent_limit = 0;  // E
  mpz_class modulus;         // p^(M+G)
  mpz_class report_modulus;  // p^M

  int working_digits() const { return precision + guard; }

  static std::shared_ptr<const PadicContext> create(unsigned long p, int precision, int guard,
                                                    int exponent_limit);
  // Defaults sized for series work up to total degree `degree`:
  // G = D + ceil(D / (p - 1)), E = 3 + G.
  static std::shared_ptr<const PadicContext> for_degree(unsigned long p, int precision,
                                                        int degree);
  static int default_guard(unsigned long p, int degree);
};

bool is_prime(unsigned long n);

// p^e * u with u a unit modulo p^(M+G), or zero (stored as e = 0, u = 0).
class Padic {
 public:
  Padic() = default;

  int exponent() const { return e_; }
  const mpz_class& unit() const { return u_; }
  bool is_zero() const { return mpz_sgn(u_.get_mpz_t()) == 0; }

 private:
  friend class PadicRing;
  int e_ = 0;
  mpz_class u_;
};

class PadicRing {
 public:
  using value_type = Padic;

  explicit PadicRing(std::shared_ptr<const PadicContext> ctx);

  const PadicContext& context() const { return *ctx_; }
  const std::shared_ptr<const PadicContext>& context_ptr() const { return ctx_; }
  unsigned long prime() const { return ctx_->p; }

  Padic zero() const { return {}; }
  Padic one() const;
  Padic from_int(long v) const;
  Padic from_mpz(const mpz_class& v) const;
  Padic from_mpq(const mpq_class& v) const;
  // p^e * u for an arbitrary integer u (normalized).
  Padic make(int e, const mpz_class& u) const;
  Padic power_of_p(int k) const;

  bool is_zero(const Padic& a) const { return a.is_zero(); }
  int valuation(const Padic& a) const { return a.is_zero() ? kInfiniteValuation : a.e_; }
  bool is_unit(const Padic& a) const { return !a.is_zero() && a.e_ == 0; }

  Padic add(const Padic& a, const Padic& b) const;
  Padic sub(const Padic& a, const Padic& b) const;
  Padic neg(const Padic& a) const;
  Padic mul(const Padic& a, const Padic& b) const;
  // acc += a * b
  void add_mul(Padic& acc, const Padic& a, const Padic& b) const;
  // Field inverse; throws InvertNonUnit on zero and PrecisionExhausted when
  // the exponent leaves [-E, inf).
  Padic inv(const Padic& a) const;
  Padic mul_int(const Padic& a, long k) const;
  Padic div_int(const Padic& a, long k) const;

  bool equal(const Padic& a, const Padic& b) const;

  // Value modulo p^digits as an integer in [0, p^digits); requires e >= 0.
  mpz_class residue(const Padic& a, int digits) const;
  // Exact rational p^e * u (u taken as its least non-negative residue).
  mpq_class to_mpq(const Padic& a) const;

  // "p^e*u", or "0".
  std::string to_string(const Padic& a) const;
  // Accepts "p^e*u", plain integers and "num/den".
  Padic parse(std::string_view text) const;

  bool operator==(const PadicRing& other) const;

 private:
  Padic normalized(int e, mpz_class& u) const;
  void check_exponent(int e) const;

  std::shared_ptr<const PadicContext> ctx_;
};

}  // namespace cy3

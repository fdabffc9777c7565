#include "cy3/rational.hpp"

#include "cy3/error.hpp"
#include "cy3/padic.hpp"

namespace cy3 {

void RationalRing::add_mul(mpq_class& acc, const mpq_class& a, const mpq_class& b) const {
  if (sgn(a) == 0 || sgn(b) == 0) return;
  acc += a * b;
}

mpq_class RationalRing::inv(const mpq_class& a) const {
  if (sgn(a) == 0) raise(ErrorKind::InvertNonUnit, "inverse of zero");
  return 1 / a;
}

mpq_class RationalRing::div_int(const mpq_class& a, long k) const {
  if (k == 0) raise(ErrorKind::InvertNonUnit, "division by zero");
  mpq_class r = a / k;
  return r;
}

std::string RationalRing::to_string(const mpq_class& a) const {
  mpq_class c = a;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class RationalRing::parse(std::string_view text) const {
  mpq_class q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    raise(ErrorKind::ParseError, "bad rational '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

int valuation(const mpz_class& a, unsigned long p) {
  if (a == 0) return kInfiniteValuation;
  mpz_class t = a;
  mpz_class pp(p);
  return static_cast<int>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t()));
}

int valuation(const mpq_class& a, unsigned long p) {
  if (sgn(a) == 0) return kInfiniteValuation;
  return valuation(a.get_num(), p) - valuation(a.get_den(), p);
}

}  // namespace cy3

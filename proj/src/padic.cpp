#include "cy3/padic.hpp"

#include <charconv>

#include "cy3/error.hpp"

namespace cy3 {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int PadicContext::default_guard(unsigned long p, int degree) {
  if (degree <= 0) return 0;
  const int pm1 = static_cast<int>(p - 1);
  return degree + (degree + pm1 - 1) / pm1;
}

std::shared_ptr<const PadicContext> PadicContext::create(unsigned long p, int precision, int guard,
                                                         int exponent_limit) {
  if (!is_prime(p)) raise(ErrorKind::InvalidArgument, "p = " + std::to_string(p) + " is not prime");
  if (precision < 1) raise(ErrorKind::InvalidArgument, "precision must be >= 1");
  if (guard < 0) raise(ErrorKind::InvalidArgument, "guard digits must be >= 0");
  if (exponent_limit < 0) raise(ErrorKind::InvalidArgument, "exponent limit must be >= 0");
  auto ctx = std::make_shared<PadicContext>();
  ctx->p = p;
  ctx->precision = precision;
  ctx->guard = guard;
  ctx->exponent_limit = exponent_limit;
  mpz_ui_pow_ui(ctx->modulus.get_mpz_t(), p, static_cast<unsigned long>(precision + guard));
  mpz_ui_pow_ui(ctx->report_modulus.get_mpz_t(), p, static_cast<unsigned long>(precision));
  return ctx;
}

std::shared_ptr<const PadicContext> PadicContext::for_degree(unsigned long p, int precision,
                                                             int degree) {
  if (p < 2) raise(ErrorKind::InvalidArgument, "p must be prime");
  const int guard = default_guard(p, degree);
  return create(p, precision, guard, 3 + guard);
}

PadicRing::PadicRing(std::shared_ptr<const PadicContext> ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) raise(ErrorKind::InvalidArgument, "null p-adic context");
}

bool PadicRing::operator==(const PadicRing& other) const {
  if (ctx_ == other.ctx_) return true;
  return ctx_->p == other.ctx_->p && ctx_->precision == other.ctx_->precision &&
         ctx_->guard == other.ctx_->guard && ctx_->exponent_limit == other.ctx_->exponent_limit;
}

void PadicRing::check_exponent(int e) const {
  if (e < -ctx_->exponent_limit) {
    raise(ErrorKind::PrecisionExhausted,
          "p-adic exponent " + std::to_string(e) + " below -E = -" +
              std::to_string(ctx_->exponent_limit));
  }
}

Padic PadicRing::normalized(int e, mpz_class& u) const {
  Padic r;
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), ctx_->modulus.get_mpz_t());
  if (mpz_sgn(u.get_mpz_t()) == 0) return r;
  if (mpz_divisible_ui_p(u.get_mpz_t(), ctx_->p)) {
    mpz_class p(ctx_->p);
    e += static_cast<int>(mpz_remove(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t()));
  }
  check_exponent(e);
  r.e_ = e;
  r.u_ = std::move(u);
  return r;
}

Padic PadicRing::one() const { return from_int(1); }

Padic PadicRing::from_int(long v) const {
  mpz_class u(v);
  return normalized(0, u);
}

Padic PadicRing::from_mpz(const mpz_class& v) const {
  if (v == 0) return {};
  mpz_class u = v;
  int e = 0;
  if (mpz_divisible_ui_p(u.get_mpz_t(), ctx_->p)) {
    mpz_class p(ctx_->p);
    e = static_cast<int>(mpz_remove(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t()));
  }
  return normalized(e, u);
}

Padic PadicRing::from_mpq(const mpq_class& v) const {
  Padic num = from_mpz(v.get_num());
  if (v.get_den() == 1) return num;
  return mul(num, inv(from_mpz(v.get_den())));
}

Padic PadicRing::make(int e, const mpz_class& u) const {
  Padic r = from_mpz(u);
  if (r.is_zero()) return r;
  r.e_ += e;
  check_exponent(r.e_);
  return r;
}

Padic PadicRing::power_of_p(int k) const {
  Padic r = one();
  r.e_ = k;
  check_exponent(k);
  return r;
}

Padic PadicRing::add(const Padic& a, const Padic& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Padic& lo = a.e_ <= b.e_ ? a : b;
  const Padic& hi = a.e_ <= b.e_ ? b : a;
  const int shift = hi.e_ - lo.e_;
  // hi is below the relative precision of lo.
  if (shift >= ctx_->working_digits()) return lo;
  mpz_class s;
  if (shift == 0) {
    s = lo.u_ + hi.u_;
  } else {
    mpz_ui_pow_ui(s.get_mpz_t(), ctx_->p, static_cast<unsigned long>(shift));
    s *= hi.u_;
    s += lo.u_;
  }
  return normalized(lo.e_, s);
}

Padic PadicRing::neg(const Padic& a) const {
  if (a.is_zero()) return a;
  Padic r;
  r.e_ = a.e_;
  r.u_ = ctx_->modulus - a.u_;
  return r;
}

Padic PadicRing::sub(const Padic& a, const Padic& b) const { return add(a, neg(b)); }

Padic PadicRing::mul(const Padic& a, const Padic& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  Padic r;
  r.e_ = a.e_ + b.e_;
  check_exponent(r.e_);
  mpz_mul(r.u_.get_mpz_t(), a.u_.get_mpz_t(), b.u_.get_mpz_t());
  mpz_mod(r.u_.get_mpz_t(), r.u_.get_mpz_t(), ctx_->modulus.get_mpz_t());
  return r;
}

void PadicRing::add_mul(Padic& acc, const Padic& a, const Padic& b) const {
  if (a.is_zero() || b.is_zero()) return;
  acc = add(acc, mul(a, b));
}

Padic PadicRing::inv(const Padic& a) const {
  if (a.is_zero()) raise(ErrorKind::InvertNonUnit, "inverse of zero");
  Padic r;
  r.e_ = -a.e_;
  check_exponent(r.e_);
  mpz_invert(r.u_.get_mpz_t(), a.u_.get_mpz_t(), ctx_->modulus.get_mpz_t());
  return r;
}

Padic PadicRing::mul_int(const Padic& a, long k) const { return mul(a, from_int(k)); }

Padic PadicRing::div_int(const Padic& a, long k) const {
  if (k == 0) raise(ErrorKind::InvertNonUnit, "division by zero");
  if (a.is_zero()) return a;
  return mul(a, inv(from_int(k)));
}

// Agreement modulo p^M; the guard digits may differ after cancellation.
bool PadicRing::equal(const Padic& a, const Padic& b) const {
  if (a.e_ == b.e_ && a.u_ == b.u_) return true;
  const Padic d = sub(a, b);
  return d.is_zero() || d.e_ >= ctx_->precision;
}

mpz_class PadicRing::residue(const Padic& a, int digits) const {
  if (a.is_zero()) return 0;
  if (a.e_ < 0) raise(ErrorKind::NotIntegral, "residue of a non-integral p-adic number");
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), ctx_->p, static_cast<unsigned long>(digits));
  if (a.e_ >= digits) return 0;
  mpz_class pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), ctx_->p, static_cast<unsigned long>(a.e_));
  mpz_class r = pe * a.u_;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpq_class PadicRing::to_mpq(const Padic& a) const {
  if (a.is_zero()) return 0;
  mpz_class pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), ctx_->p, static_cast<unsigned long>(a.e_ < 0 ? -a.e_ : a.e_));
  mpq_class r(a.u_);
  if (a.e_ >= 0) {
    r *= pe;
  } else {
    r /= pe;
  }
  r.canonicalize();
  return r;
}

std::string PadicRing::to_string(const Padic& a) const {
  if (a.is_zero()) return "0";
  return std::to_string(ctx_->p) + "^" + std::to_string(a.e_) + "*" + a.u_.get_str();
}

Padic PadicRing::parse(std::string_view text) const {
  const auto bad = [&]() -> Padic {
    raise(ErrorKind::ParseError, "bad p-adic scalar '" + std::string(text) + "'");
  };
  if (text.empty()) return bad();
  const auto caret = text.find('^');
  if (caret != std::string_view::npos) {
    const auto star = text.find('*', caret);
    if (star == std::string_view::npos) return bad();
    unsigned long base = 0;
    int e = 0;
    const auto base_sv = text.substr(0, caret);
    const auto exp_sv = text.substr(caret + 1, star - caret - 1);
    if (std::from_chars(base_sv.data(), base_sv.data() + base_sv.size(), base).ec != std::errc{} ||
        std::from_chars(exp_sv.data(), exp_sv.data() + exp_sv.size(), e).ec != std::errc{}) {
      return bad();
    }
    if (base != ctx_->p) {
      raise(ErrorKind::ParseError, "scalar '" + std::string(text) + "' uses prime " +
                                       std::to_string(base) + ", context has " +
                                       std::to_string(ctx_->p));
    }
    mpz_class u;
    if (u.set_str(std::string(text.substr(star + 1)), 10) != 0) return bad();
    return make(e, u);
  }
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) return bad();
  if (q.get_den() == 0) return bad();
  q.canonicalize();
  return from_mpq(q);
}

}  // namespace cy3

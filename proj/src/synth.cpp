#include <random>
#include <string>

#include "cy3/cy3.hpp"
#include "cy3/error.hpp"

namespace cy3 {

namespace {

// Residues mod p^M drawn straight from the generator (modulo bias is
// irrelevant here; determinism is what matters).
class Draw {
 public:
  Draw(std::uint64_t seed, const PadicRing& r) : rng_(seed), ring_(r) {
    modulus_ = 1;
    for (int i = 0; i < r.context().precision; ++i) modulus_ *= r.prime();
  }
  Padic residue() { return ring_.from_int(static_cast<long>(rng_() % modulus_)); }
  long small(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 rng_;
  const PadicRing& ring_;
  std::uint64_t modulus_;
};

PadicSeries random_polynomial(Draw& draw, const PadicRing& r, int n, int degree, int cap) {
  PadicSeries s(r, n, cap);
  const auto& table = s.table();
  for (std::size_t k = 0; k < table.degree_begin(degree + 1); ++k) s[k] = draw.residue();
  return s;
}

void check_options(const SynthOptions& opt) {
  if (opt.p <= 3) raise(ErrorKind::InvalidArgument, "synth needs p > 3");
  for (unsigned long d = 2; d * d <= opt.p; ++d) {
    if (opt.p % d == 0) raise(ErrorKind::InvalidArgument, std::to_string(opt.p) + " is not prime");
  }
  if (opt.h < 0) raise(ErrorKind::InvalidArgument, "h must be non-negative");
  if (opt.precision < 1) raise(ErrorKind::InvalidArgument, "precision must be positive");
  if (opt.degree < 0) raise(ErrorKind::InvalidArgument, "degree must be non-negative");
  if (opt.mode == SynthMode::Generic && opt.shift_valuation < 1) {
    raise(ErrorKind::InvalidArgument, "shift valuation must be at least 1");
  }
}

// Builds the instance from tau_i and Z given at an internal degree above D,
// so the truncation to D is exact after the (at most two) derivatives.
SynthResult assemble(const SynthOptions& opt, std::vector<PadicSeries> tau, const PadicSeries& Z) {
  const auto& r = Z.ring();
  const int h = opt.h, D = opt.degree;
  const auto hs = static_cast<std::size_t>(h);
  PrepotentialData d{Z, PadicMatrix(r, hs, 1, h, Z.degree()), PadicMatrix(r, hs, 1, h, Z.degree()),
                     PadicMatrix(r, hs, hs, h, Z.degree())};
  for (std::size_t i = 0; i < hs; ++i) d.tau23(i, 0) = tau[i];
  if (h > 0) {
    const auto kinv = kodaira_spencer_inverse(d);
    const Padic minus_half = r.neg(r.inv(r.from_int(2)));
    std::vector<PadicSeries> grad;
    for (int i = 0; i < h; ++i) grad.push_back(tau_derivative(Z, kinv, i));
    for (std::size_t i = 0; i < hs; ++i) {
      d.tau13(i, 0) = grad[i] * minus_half;
      for (std::size_t j = 0; j < hs; ++j) {
        d.tau12(i, j) = tau_derivative(grad[i], kinv, static_cast<int>(j)) * minus_half;
      }
    }
    // exact symmetry; the two orders agree anyway up to truncation
    const Padic one_half = r.inv(r.from_int(2));
    auto sym = d.tau12 + d.tau12.transpose();
    sym.scale(one_half);
    d.tau12 = sym;
  }
  const auto T = assemble_T(d).with_degree(D);
  PrepotentialData out{d.Z.with_degree(D), d.tau23.with_degree(D), d.tau13.with_degree(D),
                       d.tau12.with_degree(D)};
  return SynthResult{CY3Crystal::from_T(T, h), std::move(out)};
}

}  // namespace

SynthResult synth_cy3_with_zeta(const SynthOptions& opt, const PadicSeries& zeta) {
  check_options(opt);
  if (zeta.nvars() != opt.h) raise(ErrorKind::ShapeMismatch, "zeta must have h variables");
  const PadicRing r(PadicContext::for_degree(opt.p, opt.precision, opt.degree));
  const int inner = opt.degree + 3;
  PadicSeries Z(r, opt.h, inner);
  for (std::size_t k = 0; k < zeta.size() && k < Z.size(); ++k) {
    Z[k] = r.mul(r.from_mpq(zeta.ring().to_mpq(zeta[k])), r.power_of_p(3));
  }
  std::vector<PadicSeries> tau;
  for (int i = 0; i < opt.h; ++i) {
    tau.push_back(log(PadicSeries::constant(r, opt.h, inner, r.one()) +
                      PadicSeries::variable(r, opt.h, inner, i)));
  }
  return assemble(opt, std::move(tau), Z);
}

SynthResult synth_cy3(const SynthOptions& opt) {
  check_options(opt);
  const PadicRing r(PadicContext::for_degree(opt.p, opt.precision, opt.degree));
  const int h = opt.h, inner = opt.degree + 3;
  Draw draw(opt.seed, r);
  auto Z = random_polynomial(draw, r, h, opt.degree, inner);
  Z = Z * r.power_of_p(3);
  const auto one = PadicSeries::constant(r, h, inner, r.one());
  std::vector<PadicSeries> tau;
  if (opt.mode == SynthMode::CanonicalChart) {
    for (int i = 0; i < h; ++i) tau.push_back(log(one + PadicSeries::variable(r, h, inner, i)));
    return assemble(opt, std::move(tau), Z);
  }
  // generic: t -> u(t) with linear part L = lower unitriangular * upper
  // triangular with unit diagonal, plus random higher terms
  const auto hs = static_cast<std::size_t>(h);
  std::vector<long> lower(hs * hs, 0), upper(hs * hs, 0);
  const long p = static_cast<long>(opt.p);
  for (std::size_t i = 0; i < hs; ++i) {
    for (std::size_t j = 0; j < hs; ++j) {
      if (j < i) lower[i * hs + j] = draw.small(0, p - 1);
      if (j == i) lower[i * hs + j] = 1;
      if (j == i) upper[i * hs + j] = draw.small(1, p - 1);
      if (j > i) upper[i * hs + j] = draw.small(0, p - 1);
    }
  }
  for (std::size_t i = 0; i < hs; ++i) {
    PadicSeries u(r, h, inner);
    for (std::size_t j = 0; j < hs; ++j) {
      long lin = 0;
      for (std::size_t k = 0; k < hs; ++k) lin += lower[i * hs + k] * upper[k * hs + j];
      u += PadicSeries::variable(r, h, inner, static_cast<int>(j)) * r.from_int(lin);
    }
    auto higher = random_polynomial(draw, r, h, opt.degree, inner);
    const auto& table = higher.table();
    for (std::size_t k = 0; k < table.degree_begin(2); ++k) higher[k] = r.zero();
    u += higher;
    auto t = log(one + u);
    t[0] = r.mul(r.from_int(draw.small(1, p - 1)), r.power_of_p(opt.shift_valuation));
    tau.push_back(std::move(t));
  }
  return assemble(opt, std::move(tau), Z);
}

}  // namespace cy3

#include "cy3/mirror.hpp"

#include "cy3/error.hpp"

namespace cy3 {

namespace {

const RationalRing kQ{};

RationalSeries polynomial_series(const std::vector<mpz_class>& c, int degree) {
  RationalSeries s(kQ, 1, degree);
  for (std::size_t k = 0; k < c.size() && k <= static_cast<std::size_t>(degree); ++k) {
    s[k] = mpq_class(c[k]);
  }
  return s;
}

// P_i(s) = sum_k c_{k,i} s^k and its derivative in s.
struct IndicialTable {
  std::vector<std::vector<mpz_class>> by_power;  // [i][k] = c_{k,i}

  explicit IndicialTable(const FamilySpec& spec) {
    std::size_t len = 0;
    for (const auto& c : spec.pf_operator) len = std::max(len, c.size());
    by_power.assign(len, std::vector<mpz_class>(5, 0));
    for (std::size_t k = 0; k < 5; ++k) {
      for (std::size_t i = 0; i < spec.pf_operator[k].size(); ++i) {
        by_power[i][k] = spec.pf_operator[k][i];
      }
    }
  }
  mpz_class value(std::size_t i, long s) const {
    mpz_class acc = 0;
    for (int k = 4; k >= 0; --k) acc = acc * s + by_power[i][static_cast<std::size_t>(k)];
    return acc;
  }
  mpz_class slope(std::size_t i, long s) const {
    mpz_class acc = 0;
    for (int k = 4; k >= 1; --k) acc = acc * s + by_power[i][static_cast<std::size_t>(k)] * k;
    return acc;
  }
};

void check_shape(const FamilySpec& spec) {
  if (spec.pf_operator.size() != 5) {
    raise(ErrorKind::InvalidArgument, "the operator needs exactly 5 coefficient polynomials");
  }
  if (spec.degree < 1) raise(ErrorKind::InvalidArgument, "degree must be at least 1");
}

mpz_class coeff_at(const std::vector<mpz_class>& c, std::size_t i) {
  return i < c.size() ? c[i] : mpz_class(0);
}

// s(m) = sum_{d | m} b_d d^3, m = 1..n (index 0 unused)
std::vector<mpq_class> divisor_sums(const std::vector<mpq_class>& b, std::size_t n) {
  std::vector<mpq_class> s(n + 1, 0);
  for (std::size_t d = 1; d <= std::min(n, b.size()); ++d) {
    const mpq_class term = b[d - 1] * static_cast<long>(d * d * d);
    for (std::size_t m = d; m <= n; m += d) s[m] += term;
  }
  return s;
}

int valuation_of_index(long m, unsigned long p) {
  int v = 0;
  while (m % static_cast<long>(p) == 0) {
    m /= static_cast<long>(p);
    ++v;
  }
  return v;
}

std::vector<mpz_class> int_coeffs(const json& j, const std::string& what) {
  if (!j.is_array()) raise(ErrorKind::ParseError, what + " must be an array");
  std::vector<mpz_class> out;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      out.emplace_back(std::to_string(x.get<long long>()));
    } else if (x.is_string()) {
      mpz_class v;
      if (v.set_str(x.get<std::string>(), 10) != 0) {
        raise(ErrorKind::ParseError, "bad integer '" + x.get<std::string>() + "' in " + what);
      }
      out.push_back(v);
    } else {
      raise(ErrorKind::ParseError, what + " must hold integers");
    }
  }
  return out;
}

json int_coeffs_json(const std::vector<mpz_class>& c) {
  json out = json::array();
  for (const auto& x : c) {
    if (x.fits_slong_p()) {
      out.push_back(x.get_si());
    } else {
      out.push_back(x.get_str());
    }
  }
  return out;
}

}  // namespace

FamilySpec quintic_family(int degree, std::vector<unsigned long> primes) {
  FamilySpec s;
  s.name = "quintic";
  // 5 (5x+1)(5x+2)(5x+3)(5x+4) = 3125x^4 + 6250x^3 + 4375x^2 + 1250x + 120
  s.pf_operator = {{0, -120}, {0, -1250}, {0, -4375}, {0, -6250}, {1, -3125}};
  s.kappa_num = {5};
  s.kappa_den = {0, 0, 0, 1, -3125};
  s.normalization = 5;
  s.primes = std::move(primes);
  s.degree = degree;
  return s;
}

FamilySpec family_from_json(const json& j) {
  try {
    if (!j.is_object()) raise(ErrorKind::ParseError, "family spec must be a JSON object");
    FamilySpec s;
    s.name = j.at("name").get<std::string>();
    const auto& op = j.at("pf_operator");
    if (!op.is_array() || op.size() != 5) {
      raise(ErrorKind::ParseError, "\"pf_operator\" must list c_0(t)..c_4(t)");
    }
    for (const auto& c : op) s.pf_operator.push_back(int_coeffs(c, "\"pf_operator\" entry"));
    s.kappa_num = int_coeffs(j.at("kappa").at("num"), "\"kappa.num\"");
    s.kappa_den = int_coeffs(j.at("kappa").at("den"), "\"kappa.den\"");
    s.normalization = j.at("normalization").get<long>();
    for (const auto& p : j.at("primes")) {
      const auto v = p.get<long>();
      if (v < 2 || !is_prime(static_cast<unsigned long>(v))) {
        raise(ErrorKind::ParseError, std::to_string(v) + " in \"primes\" is not prime");
      }
      s.primes.push_back(static_cast<unsigned long>(v));
    }
    s.degree = j.at("degree").get<int>();
    if (s.degree < 1) raise(ErrorKind::ParseError, "\"degree\" must be at least 1");
    bool den_zero = true;
    for (const auto& x : s.kappa_den) den_zero = den_zero && x == 0;
    if (den_zero) raise(ErrorKind::ParseError, "\"kappa.den\" is zero");
    return s;
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

json to_json(const FamilySpec& spec) {
  json op = json::array();
  for (const auto& c : spec.pf_operator) op.push_back(int_coeffs_json(c));
  return json{{"name", spec.name},
              {"pf_operator", op},
              {"kappa", {{"num", int_coeffs_json(spec.kappa_num)}, {"den", int_coeffs_json(spec.kappa_den)}}},
              {"normalization", spec.normalization},
              {"primes", spec.primes},
              {"degree", spec.degree}};
}

FrobeniusBasis frobenius_solutions(const FamilySpec& spec) {
  check_shape(spec);
  const IndicialTable P(spec);
  for (std::size_t k = 0; k < 4; ++k) {
    if (coeff_at(spec.pf_operator[k], 0) != 0) {
      raise(ErrorKind::NotMUM, "indicial polynomial is not c theta^4: c_" + std::to_string(k) +
                                   "(0) != 0");
    }
  }
  const mpz_class lead = coeff_at(spec.pf_operator[4], 0);
  if (lead == 0) raise(ErrorKind::NotMUM, "c_4(0) = 0");

  const int D = spec.degree;
  RationalSeries f0(kQ, 1, D), g1(kQ, 1, D);
  f0[0] = 1;
  for (long n = 1; n <= D; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    mpq_class sa = 0, sb = 0;
    for (std::size_t i = 1; i < P.by_power.size() && i <= nn; ++i) {
      const long s = n - static_cast<long>(i);
      sa += mpq_class(P.value(i, s)) * f0[nn - i];
      sb += mpq_class(P.value(i, s)) * g1[nn - i] + mpq_class(P.slope(i, s)) * f0[nn - i];
    }
    const mpq_class p0 = mpq_class(P.value(0, n));
    f0[nn] = -sa / p0;
    sb += mpq_class(P.slope(0, n)) * f0[nn];
    g1[nn] = -sb / p0;
  }
  return FrobeniusBasis{std::move(f0), std::move(g1)};
}

bool annihilates(const FamilySpec& spec, const FrobeniusBasis& basis) {
  check_shape(spec);
  const int D = basis.f0.degree();
  RationalSeries plain(kQ, 1, D), on_f0(kQ, 1, D);
  // theta^k (f0 log t) = (theta^k f0) log t + k theta^(k-1) f0
  RationalSeries th_f0 = basis.f0, th_g1 = basis.g1, th_prev = basis.f0;
  for (int k = 0; k <= 4; ++k) {
    const auto c = polynomial_series(spec.pf_operator[static_cast<std::size_t>(k)], D);
    on_f0 += c * th_f0;
    plain += c * th_g1;
    if (k > 0) plain += c * th_prev * mpq_class(k);
    th_prev = th_f0;
    th_f0 = theta(th_f0, 0);
    th_g1 = theta(th_g1, 0);
  }
  return on_f0.is_zero() && plain.is_zero();
}

RationalSeries compose_with_mirror(const RationalSeries& a, const FrobeniusBasis& basis) {
  const int D = std::min(a.degree(), basis.f0.degree());
  const auto L = basis.g1 * invert(basis.f0);
  // q = t / u with u = exp(-L); [q^n] A(t(q)) = (1/n) [t^(n-1)] A'(t) u^n
  std::vector<mpq_class> jl(static_cast<std::size_t>(D) + 1, 0);
  for (int j = 1; j <= D; ++j) jl[static_cast<std::size_t>(j)] = -L[static_cast<std::size_t>(j)] * j;
  RationalSeries out(kQ, 1, D);
  out[0] = a[0];
  std::vector<mpq_class> e(static_cast<std::size_t>(D) + 1);
  for (long n = 1; n <= D; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    // u^n = exp(n log u): k e_k = n sum_j j (log u)_j e_(k-j)
    e[0] = 1;
    for (std::size_t k = 1; k < nn; ++k) {
      mpq_class acc = 0;
      for (std::size_t j = 1; j <= k; ++j) acc += jl[j] * e[k - j];
      e[k] = acc * n / static_cast<long>(k);
    }
    mpq_class acc = 0;
    for (std::size_t j = 0; j < nn; ++j) acc += a[j + 1] * static_cast<long>(j + 1) * e[nn - 1 - j];
    out[nn] = acc / n;
  }
  return out;
}

MirrorMap mirror_map(const FrobeniusBasis& basis) {
  const int D = basis.f0.degree();
  const auto L = basis.g1 * invert(basis.f0);
  const auto t = RationalSeries::variable(kQ, 1, D, 0);
  return MirrorMap{t * exp(L), compose_with_mirror(t, basis)};
}

RationalSeries yukawa_q(const FamilySpec& spec, const FrobeniusBasis& basis, const MirrorMap&) {
  const int D = basis.f0.degree();
  const auto order = [](const std::vector<mpz_class>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0) return static_cast<int>(i);
    }
    return -1;
  };
  const int on = order(spec.kappa_num), od = order(spec.kappa_den);
  if (od < 0) raise(ErrorKind::InvalidArgument, "kappa denominator is zero");
  if (on < 0) raise(ErrorKind::NormalizationMismatch, "kappa is zero");
  const int shift = on - od + 3;
  if (shift < 0) raise(ErrorKind::InvalidArgument, "kappa t^3 has a pole at t = 0");
  const std::vector<mpz_class> num(spec.kappa_num.begin() + on, spec.kappa_num.end());
  const std::vector<mpz_class> den(spec.kappa_den.begin() + od, spec.kappa_den.end());
  // Y as a function of t: kappa t^3 / (f0^2 (theta log q)^3), theta log q = 1 + theta L
  const auto L = basis.g1 * invert(basis.f0);
  auto theta_log_q = theta(L, 0);
  theta_log_q[0] += 1;
  const auto w = invert(theta_log_q);
  const auto f0_inv = invert(basis.f0);
  auto y_t = polynomial_series(num, D) * invert(polynomial_series(den, D)) * f0_inv * f0_inv * w *
             w * w;
  if (shift > 0) {
    RationalSeries shifted(kQ, 1, D);
    for (int k = D; k >= shift; --k) {
      shifted[static_cast<std::size_t>(k)] = y_t[static_cast<std::size_t>(k - shift)];
    }
    y_t = shifted;
  }
  auto Y = compose_with_mirror(y_t, basis);
  if (Y[0] != spec.normalization) {
    raise(ErrorKind::NormalizationMismatch,
          "Y(0) = " + kQ.to_string(Y[0]) + ", expected " + std::to_string(spec.normalization));
  }
  return Y;
}

std::vector<mpq_class> lambert_extract(const RationalSeries& Y, long normalization) {
  if (normalization == 0 || Y[0] != normalization) {
    raise(ErrorKind::InvalidArgument, "Y(0) must equal the (nonzero) normalization");
  }
  const auto D = static_cast<std::size_t>(Y.degree());
  std::vector<mpq_class> b(D, 0);
  // c_m = sum_{d | m} b_d d^3; peel off the proper divisors
  std::vector<mpq_class> proper(D + 1, 0);
  for (std::size_t m = 1; m <= D; ++m) {
    const mpq_class c = Y[m] / normalization;
    const auto m3 = static_cast<long>(m * m * m);
    b[m - 1] = (c - proper[m]) / m3;
    const mpq_class term = b[m - 1] * m3;
    for (std::size_t k = 2 * m; k <= D; k += m) proper[k] += term;
  }
  return b;
}

RationalSeries lambert_series(const std::vector<mpq_class>& b, long normalization, int degree) {
  const auto s = divisor_sums(b, static_cast<std::size_t>(degree));
  RationalSeries Y(kQ, 1, degree);
  Y[0] = normalization;
  for (std::size_t m = 1; m <= static_cast<std::size_t>(degree); ++m) Y[m] = s[m] * normalization;
  return Y;
}

IntegralityResult prepotential_integrality(const std::vector<mpq_class>& b, unsigned long p,
                                           int m_max, long normalization) {
  if (p < 2 || !is_prime(p)) raise(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (m_max < 0 || static_cast<std::size_t>(m_max) > b.size()) {
    raise(ErrorKind::InvalidArgument, "need b_1..b_" + std::to_string(m_max));
  }
  const auto s = divisor_sums(b, static_cast<std::size_t>(m_max));
  IntegralityResult r;
  for (long m = 1; m <= m_max; ++m) {
    mpq_class x = s[static_cast<std::size_t>(m)];
    if (m % static_cast<long>(p) == 0) x -= s[static_cast<std::size_t>(m / static_cast<long>(p))];
    x *= normalization;
    const int v = valuation(x, p);
    if (v != kInfiniteValuation && v < 3 * valuation_of_index(m, p)) {
      r.pass = false;
      r.first_failure = static_cast<int>(m);
      return r;
    }
  }
  return r;
}

std::vector<mpq_class> prepotential_coeffs(const std::vector<mpq_class>& b, long normalization) {
  const auto s = divisor_sums(b, b.size());
  std::vector<mpq_class> z(b.size());
  for (std::size_t m = 1; m <= b.size(); ++m) {
    z[m - 1] = s[m] * normalization / static_cast<long>(m * m * m);
  }
  return z;
}

bool check_prepotential_coeffs(const std::vector<mpq_class>& z, const RationalSeries& Y) {
  RationalSeries Z(kQ, 1, Y.degree());
  for (std::size_t m = 1; m <= z.size() && m <= static_cast<std::size_t>(Y.degree()); ++m) {
    Z[m] = z[m - 1];
  }
  auto lhs = theta(theta(theta(Z, 0), 0), 0);
  auto rhs = Y;
  rhs[0] = 0;
  return (lhs - rhs).is_zero();
}

MirrorRun run_family(const FamilySpec& spec) {
  for (auto p : spec.primes) {
    if (p < 2 || !is_prime(p)) raise(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  }
  auto basis = frobenius_solutions(spec);
  auto mirror = mirror_map(basis);
  auto Y = yukawa_q(spec, basis, mirror);
  auto b = lambert_extract(Y, spec.normalization);
  std::vector<std::pair<unsigned long, IntegralityResult>> integrality;
  for (auto p : spec.primes) {
    integrality.emplace_back(p, prepotential_integrality(b, p, spec.degree, spec.normalization));
  }
  return MirrorRun{spec, std::move(basis), std::move(mirror), std::move(Y), std::move(b),
                   std::move(integrality)};
}

json mirror_report(const MirrorRun& run) {
  json q = json::array(), b = json::array(), integ = json::object();
  for (std::size_t k = 0; k < run.mirror.q_of_t.size(); ++k) q.push_back(kQ.to_string(run.mirror.q_of_t[k]));
  for (const auto& x : run.b) b.push_back(kQ.to_string(x));
  for (const auto& [p, r] : run.integrality) {
    integ[std::to_string(p)] = json{{"pass", r.pass},
                                    {"first_failure", r.first_failure ? json(*r.first_failure) : json()}};
  }
  return json{{"family", run.spec.name}, {"mirror_map", q}, {"b", b}, {"integrality", integ}};
}

}  // namespace cy3

#include "cy3/cy3.hpp"

#include <algorithm>
#include <string>

#include "cy3/error.hpp"

namespace cy3 {

namespace {

std::size_t last(int h) { return static_cast<std::size_t>(2 * h + 1); }
std::size_t hh(int h) { return static_cast<std::size_t>(h); }

Padic half(const PadicRing& r) { return r.inv(r.from_int(2)); }

PadicMatrix zero_like(const PadicMatrix& m) {
  return PadicMatrix(m.ring(), m.rows(), m.cols(), m.nvars(), m.degree());
}

}  // namespace

std::vector<int> cy3_hodge_numbers(int h) {
  if (h < 0) raise(ErrorKind::InvalidArgument, "h must be non-negative");
  return {1, h, h, 1};
}

PadicMatrix gramm_matrix(const PadicRing& ring, int h) {
  const auto n = last(h) + 1;
  PadicMatrix J(ring, n, n, 0, 0);
  J(0, last(h))[0] = ring.from_int(-1);
  J(last(h), 0)[0] = ring.one();
  for (std::size_t i = 0; i < hh(h); ++i) {
    J(1 + i, 1 + hh(h) + i)[0] = ring.one();
    J(1 + hh(h) + i, 1 + i)[0] = ring.from_int(-1);
  }
  return J;
}

PadicMatrix assemble_T(const PrepotentialData& d) {
  const int h = static_cast<int>(d.tau23.rows());
  const auto& r = d.Z.ring();
  const int n = d.Z.nvars(), deg = d.Z.degree();
  auto A = PadicMatrix::identity(r, last(h) + 1, n, deg);
  auto B = A;
  for (std::size_t i = 0; i < hh(h); ++i) {
    A(0, 1 + i) = d.tau23(i, 0);
    A(1 + hh(h) + i, last(h)) = d.tau23(i, 0);
    B(0, 1 + hh(h) + i) = -d.tau13(i, 0);
    B(1 + i, last(h)) = d.tau13(i, 0);
    for (std::size_t j = 0; j < hh(h); ++j) B(1 + i, 1 + hh(h) + j) = d.tau12(i, j);
  }
  B(0, last(h)) = d.Z;
  return A * B;
}

Verdict check_riemann(const PadicMatrix& T, int h) {
  Verdict v("riemann_relations");
  if (T.rows() != last(h) + 1 || T.cols() != T.rows()) {
    v.fail(T.ring().context().precision, json{{"shape", "not (2h+2) square"}});
    return v;
  }
  const int D = T.degree();
  const auto tau01 = T.block(0, 1, 1, hh(h));
  const auto tau02 = T.block(0, 1 + hh(h), 1, hh(h));
  const auto tau12 = T.block(1, 1 + hh(h), hh(h), hh(h));
  const auto tau13 = T.block(1, last(h), hh(h), 1);
  const auto tau23 = T.block(1 + hh(h), last(h), hh(h), 1);
  Verdict a("tau01"), b("tau12_symmetric"), c("tau02");
  compare_matrices(a, tau01, tau23.transpose(), D, json{{"relation", "tau01 = tau23^*"}});
  compare_matrices(b, tau12, tau12.transpose(), D, json{{"relation", "tau12 = tau12^*"}});
  compare_matrices(c, tau02, tau23.transpose() * tau12 - tau13.transpose(), D,
                   json{{"relation", "tau02 = tau23^* tau12 - tau13^*"}});
  for (const auto* s : {&a, &b, &c}) {
    v.details[s->name] = s->pass;
    v.absorb(*s);
  }
  return v;
}

PrepotentialData factor_T(const PadicMatrix& T, int h) {
  const auto v = check_riemann(T, h);
  if (!v.pass) raise(ErrorKind::RiemannViolation, v.location.dump());
  PrepotentialData d{T(0, last(h)), T.block(1 + hh(h), last(h), hh(h), 1),
                     T.block(1, last(h), hh(h), 1), T.block(1, 1 + hh(h), hh(h), hh(h))};
  if (h > 0) d.Z -= (d.tau23.transpose() * d.tau13)(0, 0);
  return d;
}

CY3Crystal CY3Crystal::from_T(PadicMatrix T, int h) {
  auto J = gramm_matrix(T.ring(), h);
  return from_T(std::move(T), h, std::move(J));
}

CY3Crystal CY3Crystal::from_T(PadicMatrix T, int h, PadicMatrix J) {
  if (T.nvars() != h) {
    raise(ErrorKind::ShapeMismatch, "a CY3 crystal with h = " + std::to_string(h) + " needs " +
                                        std::to_string(h) + " parameters, T has " +
                                        std::to_string(T.nvars()));
  }
  if (J.rows() != T.rows() || J.cols() != T.cols() || J.nvars() != 0) {
    raise(ErrorKind::ShapeMismatch, "Gramm matrix must be constant and match T");
  }
  auto fc = FCrystal::from_T(std::move(T), cy3_hodge_numbers(h));
  return CY3Crystal{h, std::move(fc), std::move(J)};
}

Verdict check_pairing(const CY3Crystal& c, const PadicMatrix& m_phi) {
  return check_pairing(c, m_phi, uniform_precision(c.ring().context().precision));
}

Verdict check_pairing(const CY3Crystal& c, const PadicMatrix& m_phi, const DegreePrecision& prec) {
  Verdict v("pairing");
  const auto& r = c.ring();
  const int D = c.degree();
  const auto J = c.J.embed(c.nvars(), D);
  Verdict skew("connection_skew"), frob("frobenius_p3"), gramm("gramm_e_basis");
  for (std::size_t j = 0; j < c.crystal.connection.size(); ++j) {
    const auto& m = c.crystal.connection[j];
    compare_matrices(skew, m.transpose() * J + J * m, zero_like(J), D - 1,
                     json{{"direction", j}});
  }
  auto p3J = J;
  p3J.scale(r.power_of_p(3));
  compare_matrices(frob, m_phi.transpose() * J * m_phi, p3J, D, prec, json::object());
  compare_matrices(gramm, c.crystal.T.transpose() * J * c.crystal.T, J, D, json::object());
  for (const auto* s : {&skew, &frob, &gramm}) {
    v.details[s->name] = s->pass;
    v.absorb(*s);
  }
  return v;
}

PadicMatrix kodaira_spencer(const PrepotentialData& d) {
  const auto h = d.tau23.rows();
  if (static_cast<std::size_t>(d.Z.nvars()) != h) {
    raise(ErrorKind::ShapeMismatch, "Kodaira-Spencer matrix needs n = h");
  }
  PadicMatrix ks(d.Z.ring(), h, h, d.Z.nvars(), d.Z.degree());
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) ks(i, j) = derivative(d.tau23(i, 0), static_cast<int>(j));
  }
  return ks;
}

PadicMatrix kodaira_spencer_inverse(const PrepotentialData& d) {
  const auto ks = kodaira_spencer(d);
  try {
    return inverse(ks);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvertNonUnit) throw;
    raise(ErrorKind::KodairaSpencerSingular, std::string("(dtau_i/dt_j) is singular: ") + e.what());
  }
}

PadicSeries tau_derivative(const PadicSeries& s, const PadicMatrix& ks_inverse, int i) {
  PadicSeries out(s.ring(), s.nvars(), s.degree());
  for (int l = 0; l < s.nvars(); ++l) {
    const auto& w = ks_inverse(static_cast<std::size_t>(l), static_cast<std::size_t>(i));
    if (w.is_zero()) continue;
    out += w * derivative(s, l);
  }
  return out;
}

Verdict check_gradient_relations(const PrepotentialData& d) {
  Verdict v("gradient_relations");
  const int h = static_cast<int>(d.tau23.rows());
  if (h == 0) return v;
  const auto& r = d.Z.ring();
  const int D = d.Z.degree();
  const auto M = uniform_precision(r.context().precision);
  const Padic minus_half = r.neg(half(r));
  Verdict dt13("dtau13"), dz("dZ"), grad("tau13_gradient"), hess("tau12_hessian");
  for (int l = 0; l < h; ++l) {
    PadicMatrix dtau13(r, hh(h), 1, h, D), dtau23(r, hh(h), 1, h, D);
    for (std::size_t i = 0; i < hh(h); ++i) {
      dtau13(i, 0) = derivative(d.tau13(i, 0), l);
      dtau23(i, 0) = derivative(d.tau23(i, 0), l);
    }
    compare_matrices(dt13, dtau13, d.tau12 * dtau23, D - 1, M, json{{"direction", l}});
    auto rhs = (d.tau13.transpose() * dtau23)(0, 0) * r.from_int(-2);
    compare_series(dz, derivative(d.Z, l), rhs, D - 1, M, json{{"direction", l}});
  }
  const auto kinv = kodaira_spencer_inverse(d);
  std::vector<PadicSeries> g;
  for (int i = 0; i < h; ++i) g.push_back(tau_derivative(d.Z, kinv, i));
  for (int i = 0; i < h; ++i) {
    compare_series(grad, d.tau13(hh(i), 0), g[hh(i)] * minus_half, D - 1, M, json{{"index", i}});
    for (int j = 0; j < h; ++j) {
      compare_series(hess, d.tau12(hh(i), hh(j)), tau_derivative(g[hh(i)], kinv, j) * minus_half,
                     D - 2, M, json{{"index", {i, j}}});
    }
  }
  for (const auto* s : {&dt13, &dz, &grad, &hess}) {
    v.details[s->name] = s->pass;
    v.absorb(*s);
  }
  return v;
}

YukawaCubic yukawa_cubic(const CY3Crystal& c, const PrepotentialData& d) {
  YukawaCubic y;
  const int h = c.h;
  y.h = h;
  if (h == 0) return y;
  const auto& r = c.ring();
  const int D = c.degree();
  const auto M = uniform_precision(r.context().precision);
  const auto kinv = kodaira_spencer_inverse(d);
  const Padic minus_half = r.neg(half(r));

  std::vector<PadicSeries> g1, g2, g3;
  for (int k = 0; k < h; ++k) g1.push_back(tau_derivative(d.Z, kinv, k));
  for (int j = 0; j < h; ++j) {
    for (int k = 0; k < h; ++k) g2.push_back(tau_derivative(g1[hh(k)], kinv, j));
  }
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < h; ++j) {
      for (int k = 0; k < h; ++k) {
        g3.push_back(tau_derivative(g2[hh(j * h + k)], kinv, i) * minus_half);
      }
    }
  }
  y.Y = g3;

  // nabla in direction d/dtau_i applied to a column vector
  const auto& conn = c.crystal.connection;
  auto d_tau = [&](const PadicMatrix& x, int i) {
    PadicMatrix out = zero_like(x);
    for (int l = 0; l < h; ++l) {
      const auto& w = kinv(hh(l), hh(i));
      if (w.is_zero()) continue;
      auto term = derivative(x, l) + conn[hh(l)] * x;
      term.scale(w);
      out += term;
    }
    return out;
  };
  PadicMatrix e(r, c.rank(), 1, h, D);
  e(last(h), 0)[0] = r.one();
  std::vector<PadicMatrix> x1, x2;
  for (int k = 0; k < h; ++k) x1.push_back(d_tau(e, k));
  for (int j = 0; j < h; ++j) {
    for (int k = 0; k < h; ++k) x2.push_back(d_tau(x1[hh(k)], j));
  }
  const auto J = c.J.embed(h, D);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < h; ++j) {
      for (int k = 0; k < h; ++k) {
        const auto x3 = d_tau(x2[hh(j * h + k)], i);
        PadicMatrix eT(r, 1, c.rank(), h, D);
        eT(0, last(h))[0] = r.one();
        const auto pairing = (eT * J * x3)(0, 0);
        compare_series(y.two_route, pairing, y.at(i, j, k), D - 3, M,
                       json{{"index", {i, j, k}}});
        compare_series(y.symmetry, y.at(i, j, k), y.at(j, i, k), D - 3, M,
                       json{{"index", {i, j, k}}, {"swap", "ij"}});
        compare_series(y.symmetry, y.at(i, j, k), y.at(i, k, j), D - 3, M,
                       json{{"index", {i, j, k}}, {"swap", "jk"}});
      }
    }
  }
  return y;
}

CanonicalCoords canonical_coordinates(const PrepotentialData& d) {
  CanonicalCoords cc;
  const int h = static_cast<int>(d.tau23.rows());
  if (h == 0) return cc;
  const auto& r = d.Z.ring();
  const auto p = r.prime();
  std::vector<PadicSeries> s;
  for (int i = 0; i < h; ++i) {
    const auto& tau = d.tau23(hh(i), 0);
    if (r.valuation(tau[0]) < 1) {
      raise(ErrorKind::NotIntegral, "tau_" + std::to_string(i + 1) + "(0) = " +
                                        r.to_string(tau[0]) + " is not in pZ_p");
    }
    auto q = exp(tau);
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (r.valuation(q[k]) < 0) {
        raise(ErrorKind::NotIntegral,
              "q_" + std::to_string(i + 1) + " has coefficient " + r.to_string(q[k]) + " at " +
                  exponent_key(q.table().exponents(k)) + "; the crystal is not divisible");
      }
    }
    auto si = q;
    si[0] = r.zero();
    s.push_back(std::move(si));
    cc.q.push_back(std::move(q));
  }
  cc.t_of_q = revert(s);
  std::vector<PadicSeries> images;
  for (int i = 0; i < h; ++i) {
    auto img = pow(cc.q[hh(i)], static_cast<unsigned>(p));
    img[0] = r.sub(img[0], cc.q[hh(i)][0]);
    images.push_back(std::move(img));
  }
  const Substitution<PadicRing> sub(images, d.Z.degree());
  for (int i = 0; i < h; ++i) {
    cc.phi_can.push_back(sub.apply(cc.t_of_q[hh(i)]));
    cc.shift_valuation = std::min(cc.shift_valuation, r.valuation(cc.phi_can.back()[0]));
  }
  return cc;
}

DegreePrecision canonical_precision(const CanonicalCoords& coords, int precision, int degree) {
  const int v = coords.shift_valuation;
  if (v == kInfiniteValuation) return uniform_precision(precision);
  return [v, precision, degree](int k) {
    const long digits = static_cast<long>(degree + 1 - k) * v - 3;
    return static_cast<int>(std::min<long>(precision, digits));
  };
}

PadicMatrix matcanfrob_closed_form(const PrepotentialData& d, const Lift& phi_can, int h) {
  const auto& r = d.Z.ring();
  const int n = d.Z.nvars(), D = d.Z.degree();
  const Substitution<PadicRing> sub(phi_can, D);
  auto phi = [&](const PadicSeries& s) { return sub.apply(s); };
  auto L = PadicMatrix::identity(r, last(h) + 1, n, D);
  const Padic pm1 = r.power_of_p(-1), pm2 = r.power_of_p(-2), pm3 = r.power_of_p(-3);
  for (std::size_t i = 0; i < hh(h); ++i) {
    const auto& t13 = d.tau13(i, 0);
    const auto t13phi = phi(t13);
    L(0, 1 + hh(h) + i) = t13 - t13phi * pm2;
    L(1 + i, last(h)) = t13phi * pm2 - t13;
    for (std::size_t j = 0; j < hh(h); ++j) {
      L(1 + i, 1 + hh(h) + j) = phi(d.tau12(i, j)) * pm1 - d.tau12(i, j);
    }
  }
  L(0, last(h)) = phi(d.Z) * pm3 - d.Z;
  const auto exps = hodge_exponents(cy3_hodge_numbers(h));
  return L * p_matrix(r, exps, n, D);
}

CanonicalFrobenius compare_canonical_frobenius(const CY3Crystal& c, const PrepotentialData& d,
                                               const CanonicalCoords& coords) {
  CanonicalFrobenius out{frobenius_matrix(c.crystal, coords.phi_can),
                         matcanfrob_closed_form(d, coords.phi_can, c.h), Verdict("matcanfrob_two_route")};
  const int M = c.ring().context().precision;
  const auto prec = canonical_precision(coords, M, c.degree());
  compare_matrices(out.verdict, out.via_T, out.closed_form, c.degree(), prec, json::object());
  if (coords.shift_valuation != kInfiniteValuation) {
    json digits = json::array();
    for (int k = 0; k <= c.degree(); ++k) digits.push_back(std::max(0, prec(k)));
    out.verdict.details["shift_valuation"] = coords.shift_valuation;
    out.verdict.details["digits_by_degree"] = digits;
  }
  return out;
}

PadicMatrix canonical_frobenius_matrix(const CY3Crystal& c, const PrepotentialData& d,
                                       const CanonicalCoords& coords) {
  auto cf = compare_canonical_frobenius(c, d, coords);
  if (!cf.verdict.pass) raise(ErrorKind::MatcanfrobMismatch, cf.verdict.location.dump());
  return std::move(cf.via_T);
}

Verdict check_yukinnerproduct(const PadicMatrix& m_can, const PadicMatrix& J, const PadicSeries& Z,
                              const Lift& phi_can, const DegreePrecision& prec) {
  Verdict v("yukinnerproduct");
  const auto& r = Z.ring();
  const auto n = m_can.rows();
  const auto top = n - 1;
  PadicSeries lhs(r, Z.nvars(), Z.degree());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& w = J(top, k)[0];
    if (r.is_zero(w)) continue;
    lhs += m_can(k, top) * w;
  }
  const Substitution<PadicRing> sub(phi_can, Z.degree());
  const auto rhs = sub.apply(Z) - Z * r.power_of_p(3);
  compare_series(v, lhs, rhs, Z.degree(), prec, json::object());
  return v;
}

Verdict check_yukinteger(const PadicSeries& Z, const Lift& phi_can, const DegreePrecision& known) {
  Verdict v("yukinteger");
  const auto& r = Z.ring();
  const Substitution<PadicRing> sub(phi_can, Z.degree());
  const auto w = sub.apply(Z) * r.power_of_p(-3) - Z;
  require_valuation(v, w, 0, Z.degree(), known, json::object());
  return v;
}

Verdict check_qprops(const std::vector<PadicSeries>& q) {
  Verdict v("qprops");
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto& r = q[i].ring();
    require_valuation(v, q[i], 0, q[i].degree(), json{{"coordinate", i}});
    const int val = r.valuation(r.sub(q[i][0], r.one()));
    if (val < 1) v.fail(1 - val, json{{"coordinate", i}, {"exponent", "constant"}, {"q0", r.to_string(q[i][0])}});
  }
  return v;
}

std::vector<Verdict> integrality_verdicts(const CY3Crystal& c, const PrepotentialData& d,
                                          const CanonicalCoords& coords, const PadicMatrix& m_can) {
  const int M = c.ring().context().precision;
  const auto prec = canonical_precision(coords, M, c.degree());
  std::vector<Verdict> out;
  out.push_back(check_yukinnerproduct(m_can, c.J, d.Z, coords.phi_can, prec));
  out.push_back(check_yukinteger(d.Z, coords.phi_can, prec));
  out.push_back(check_qprops(coords.q));
  return out;
}

OmegaBasis omega_layer(const CY3Crystal& c, const PrepotentialData& d, const PadicSeries& f,
                       const Lift& phi) {
  const auto& r = c.ring();
  const int h = c.h, D = c.degree();
  if (r.valuation(f[0]) != 0) {
    raise(ErrorKind::NotUnit, "f(0) = " + r.to_string(f[0]) + " is not a unit");
  }
  const auto finv = invert(f);
  PadicMatrix S(r, c.rank(), c.rank(), h, D);
  S(0, 0) = finv;
  S(last(h), last(h)) = f;
  if (h > 0) {
    const auto ks = kodaira_spencer(d);
    const auto kinv = kodaira_spencer_inverse(d);
    const auto kinvT = kinv.transpose();
    for (std::size_t i = 0; i < hh(h); ++i) {
      for (std::size_t j = 0; j < hh(h); ++j) {
        S(1 + i, 1 + j) = kinvT(i, j) * finv;
        S(1 + hh(h) + i, 1 + hh(h) + j) = ks(i, j) * f;
      }
    }
  }
  const Padic a = f[0];
  auto f_tilde = finv * a;
  auto TS = c.crystal.T * S;
  const auto TS_inv = inverse(TS);
  std::vector<PadicMatrix> conn;
  for (int l = 0; l < h; ++l) conn.push_back(TS_inv * derivative(TS, l));
  const Substitution<PadicRing> sub(phi, D);
  const auto P = p_matrix(r, c.crystal.exponents, h, D);
  auto frob = TS_inv * (P * apply(sub, TS));
  OmegaBasis out{f, a, std::move(f_tilde), S, std::move(TS), std::move(conn), std::move(frob),
                 Verdict("omega_duality")};
  out.duality = check_omega_duality(out.S, c.J);
  return out;
}

Verdict check_omega_duality(const PadicMatrix& S, const PadicMatrix& J) {
  Verdict v("omega_duality");
  const auto Je = J.embed(S.nvars(), S.degree());
  compare_matrices(v, S.transpose() * Je * S, Je, S.degree() - 1, json::object());
  return v;
}

SolutionColumn solution_column(const CY3Crystal& c, const OmegaBasis& omega) {
  SolutionColumn out;
  const auto& r = c.ring();
  const int D = c.degree();
  const auto M = uniform_precision(r.context().precision);
  const auto col = last(c.h);
  for (std::size_t i = 0; i < c.rank(); ++i) out.entries.push_back(omega.TS(i, col));
  compare_series(out.verdict, out.entries.back(), omega.f, D, M, json{{"check", "last entry = f"}});
  const auto finv = invert(omega.f);
  for (std::size_t i = 0; i < c.rank(); ++i) {
    compare_series(out.verdict, out.entries[i] * finv, c.crystal.T(i, col), D, M,
                   json{{"row", i}});
  }
  return out;
}

namespace {

// Laplace expansion along the first column; fine for the 4 x 4 case.
PadicSeries determinant(const PadicMatrix& m) {
  const auto n = m.rows();
  if (n == 1) return m(0, 0);
  PadicSeries acc(m.ring(), m.nvars(), m.degree());
  for (std::size_t i = 0; i < n; ++i) {
    PadicMatrix minor(m.ring(), n - 1, n - 1, m.nvars(), m.degree());
    for (std::size_t r = 0, mr = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 1; c < n; ++c) minor(mr, c - 1) = m(r, c);
      ++mr;
    }
    const auto term = m(i, 0) * determinant(minor);
    if (i % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace

Verdict picard_fuchs_spot_check(const CY3Crystal& c, const OmegaBasis& omega) {
  Verdict v("picard_fuchs");
  if (c.h != 1) raise(ErrorKind::InvalidArgument, "the Picard-Fuchs spot check is for h = 1");
  const auto& r = c.ring();
  const int D = c.degree();
  const auto& m = c.crystal.connection[0];
  std::vector<PadicMatrix> vs;
  PadicMatrix v0(r, 4, 1, 1, D);
  v0(3, 0) = omega.f;
  vs.push_back(v0);
  for (int k = 0; k < 4; ++k) vs.push_back(derivative(vs.back(), 0) + m * vs.back());
  PadicMatrix V(r, 4, 4, 1, D);
  for (std::size_t k = 0; k < 4; ++k) V.set_block(0, k, vs[k]);
  // Operator d L = d d^4 + sum_k (d a_k) d^k with d = det V, where by Cramer
  // d a_k = -det(V with column k replaced by v_4). No division, so a small
  // Yukawa coupling costs no precision.
  const auto d = determinant(V);
  if (d.is_zero()) {
    v.fail(r.context().precision, json{{"operator", "omega_0 is not a cyclic vector"}});
    return v;
  }
  std::vector<PadicSeries> da;
  for (std::size_t k = 0; k < 4; ++k) {
    auto Vk = V;
    Vk.set_block(0, k, vs[4]);
    da.push_back(-determinant(Vk));
  }
  // d = p^v u with u a unit series, so L f = 0 mod p^M iff d L f = 0 mod p^(M+v)
  int dv = kInfiniteValuation;
  for (std::size_t k = 0; k < d.table().degree_begin(std::max(D - 4, 0) + 1); ++k) {
    dv = std::min(dv, r.valuation(d[k]));
  }
  if (dv == kInfiniteValuation) dv = r.valuation(d[0]);
  v.details["determinant_valuation"] = dv;
  const int need = std::min(r.context().precision + dv, r.context().working_digits());
  const auto sol = solution_column(c, omega);
  for (std::size_t i = 0; i < sol.entries.size(); ++i) {
    std::vector<PadicSeries> ders{sol.entries[i]};
    for (int k = 0; k < 4; ++k) ders.push_back(derivative(ders.back(), 0));
    PadicSeries lf = d * ders[4];
    for (std::size_t k = 0; k < 4; ++k) lf += da[k] * ders[k];
    compare_series(v, lf, PadicSeries(r, 1, D), D - 4, uniform_precision(need),
                   json{{"solution", i}});
  }
  return v;
}

}  // namespace cy3

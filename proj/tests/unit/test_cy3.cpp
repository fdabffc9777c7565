#include <gtest/gtest.h>

#include "cy3/cy3.hpp"
#include "cy3/error.hpp"
#include "support.hpp"

using namespace cy3;
using namespace cy3::testing;

namespace {

SynthOptions options(int h, unsigned long p, std::uint64_t seed = 1,
                     SynthMode mode = SynthMode::CanonicalChart) {
  SynthOptions o;
  o.seed = seed;
  o.h = h;
  o.p = p;
  o.precision = 8;
  o.degree = 6;
  o.mode = mode;
  return o;
}

// zeta = t, h = 1
SynthResult worked_example(unsigned long p = 5) {
  const auto opt = options(1, p);
  const PadicRing r(PadicContext::for_degree(p, opt.precision, opt.degree));
  return synth_cy3_with_zeta(opt, PadicSeries::variable(r, 1, opt.degree, 0));
}

PadicSeries one_plus_t(const PadicRing& r, int d) {
  return PadicSeries::constant(r, 1, d, r.one()) + PadicSeries::variable(r, 1, d, 0);
}

int code(ErrorKind k) { return static_cast<int>(k); }

template <class F>
int error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return code(e.kind());
  }
  return -1;
}

}  // namespace

TEST(Gramm, BlockForm) {
  const auto r = padic(5, 4, 0);
  const auto J = gramm_matrix(r, 2);
  EXPECT_EQ(r.residue(J(0, 5)[0], 4), 624);  // -1
  EXPECT_TRUE(r.equal(J(5, 0)[0], r.one()));
  EXPECT_TRUE(r.equal(J(1, 3)[0], r.one()));
  EXPECT_TRUE(r.equal(J(4, 2)[0], r.from_int(-1)));
  EXPECT_TRUE(J(1, 4)[0].is_zero());
}

TEST(FactorT, Identity) {
  const auto r = padic(5, 6, 4);
  const auto d = factor_T(PadicMatrix::identity(r, 6, 2, 4), 2);
  EXPECT_TRUE(d.Z.is_zero());
  EXPECT_TRUE(d.tau23.is_zero());
  EXPECT_TRUE(d.tau13.is_zero());
  EXPECT_TRUE(d.tau12.is_zero());
}

TEST(FactorT, WorkedExample) {
  const auto s = worked_example();
  const auto& r = s.crystal.ring();
  const int D = 6;
  const auto d = factor_T(s.crystal.crystal.T, 1);
  const auto t = PadicSeries::variable(r, 1, D, 0);
  const Padic p3 = r.power_of_p(3);
  const Padic m_half_p3 = r.mul(p3, r.neg(r.inv(r.from_int(2))));
  EXPECT_TRUE(series_equal(d.Z, t * p3));
  EXPECT_TRUE(series_equal(d.tau23(0, 0), log(one_plus_t(r, D))));
  EXPECT_TRUE(series_equal(d.tau13(0, 0), one_plus_t(r, D) * m_half_p3));
  EXPECT_TRUE(series_equal(d.tau12(0, 0), one_plus_t(r, D) * m_half_p3));
  // assemble inverts factor
  EXPECT_TRUE(matrix_equal(assemble_T(d), s.crystal.crystal.T));
}

TEST(FactorT, RiemannViolation) {
  auto s = synth_cy3(options(2, 7, 4));
  auto T = s.crystal.crystal.T;
  T(1, 4) += PadicSeries::variable(T.ring(), 2, 6, 0);  // tau12 no longer symmetric
  EXPECT_EQ(error_kind([&] { factor_T(T, 2); }), code(ErrorKind::RiemannViolation));
  const auto v = check_riemann(T, 2);
  EXPECT_FALSE(v.pass);
  EXPECT_FALSE(v.details["tau12_symmetric"].get<bool>());
}

TEST(Pairing, IdentityTWithP) {
  const auto r = padic(5, 6, 3);
  const auto c = CY3Crystal::from_T(PadicMatrix::identity(r, 6, 2, 3), 2);
  const auto P = p_matrix(r, c.crystal.exponents, 2, 3);
  EXPECT_TRUE(check_pairing(c, P).pass);
}

TEST(Pairing, GeneratedInstancesAndFlippedBlock) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto s = synth_cy3(options(2, 5, seed));
    const auto& c = s.crystal;
    const auto m = frobenius_matrix(c.crystal, standard_lift(c.ring(), 2, 6));
    const auto v = check_pairing(c, m);
    EXPECT_TRUE(v.pass) << v.to_json().dump();
    auto J = c.J;
    for (std::size_t i = 0; i < 2; ++i) J(1 + i, 3 + i)[0] = c.ring().from_int(-1);
    const auto flipped = CY3Crystal::from_T(c.crystal.T, 2, J);
    const auto bad = check_pairing(flipped, m);
    EXPECT_FALSE(bad.pass);
    EXPECT_FALSE(bad.details["frobenius_p3"].get<bool>());
  }
}

TEST(Pairing, ConnectionMutation) {
  auto s = synth_cy3(options(1, 7, 2));
  auto c = s.crystal;
  const int M = 8;
  // (1,2) is self-paired for h = 1, so mutate the tau01 entry
  c.crystal.connection[0](0, 1)[2] =
      c.ring().add(c.crystal.connection[0](0, 1)[2], c.ring().power_of_p(M - 1));
  const auto m = frobenius_matrix(c.crystal, standard_lift(c.ring(), 1, 6));
  const auto v = check_pairing(c, m);
  EXPECT_FALSE(v.pass);
  EXPECT_FALSE(v.details["connection_skew"].get<bool>());
}

TEST(Gradient, GeneratedAndMutated) {
  auto s = synth_cy3(options(2, 7, 9, SynthMode::Generic));
  EXPECT_TRUE(check_gradient_relations(s.data).pass);
  auto d = s.data;
  d.tau13(1, 0)[3] = d.Z.ring().add(d.tau13(1, 0)[3], d.Z.ring().power_of_p(7));
  const auto v = check_gradient_relations(d);
  EXPECT_FALSE(v.pass);
  EXPECT_FALSE(v.details["tau13_gradient"].get<bool>());
}

TEST(Yukawa, ZeroPrepotential) {
  const auto r = padic(5, 6, 5);
  auto T = PadicMatrix::identity(r, 4, 1, 5);
  const auto tau = log(one_plus_t(r, 5));
  T(0, 1) = tau;
  T(2, 3) = tau;
  const auto c = CY3Crystal::from_T(T, 1);
  const auto y = yukawa_cubic(c, factor_T(T, 1));
  EXPECT_TRUE(y.at(0, 0, 0).is_zero());
  EXPECT_TRUE(y.two_route.pass);
}

TEST(Yukawa, WorkedExample) {
  const auto s = worked_example();
  const auto& r = s.crystal.ring();
  const auto y = yukawa_cubic(s.crystal, s.data);
  const Padic m_half_p3 = r.mul(r.power_of_p(3), r.neg(r.inv(r.from_int(2))));
  // determined up to degree D-3 by the truncated chart
  EXPECT_TRUE(series_equal(y.at(0, 0, 0).truncated_to(3), (one_plus_t(r, 6) * m_half_p3)));
  EXPECT_TRUE(y.two_route.pass) << y.two_route.to_json().dump();
}

TEST(Yukawa, SymmetricOnRandomH2) {
  for (std::uint64_t seed = 10; seed < 14; ++seed) {
    const auto s = synth_cy3(options(2, 7, seed, SynthMode::Generic));
    const auto y = yukawa_cubic(s.crystal, s.data);
    EXPECT_TRUE(y.symmetry.pass);
    EXPECT_TRUE(y.two_route.pass) << y.two_route.to_json().dump();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          Verdict v("sym");
          compare_series(v, y.at(i, j, k), y.at(k, i, j), 3, uniform_precision(8), json{});
          EXPECT_TRUE(v.pass);
        }
      }
    }
  }
}

TEST(Yukawa, MutatedZFailsTwoRoute) {
  auto s = synth_cy3(options(1, 5, 6));
  auto d = s.data;
  d.Z[2] = d.Z.ring().add(d.Z[2], d.Z.ring().power_of_p(7));  // t^2, shows up in d^3 via log chart
  d.Z[3] = d.Z.ring().add(d.Z[3], d.Z.ring().power_of_p(7));
  const auto y = yukawa_cubic(s.crystal, d);
  EXPECT_FALSE(y.two_route.pass);
}

TEST(Yukawa, KodairaSpencerSingular) {
  const auto r = padic(5, 6, 4);
  auto T = PadicMatrix::identity(r, 4, 1, 4);
  const auto c = CY3Crystal::from_T(T, 1);
  EXPECT_EQ(error_kind([&] { yukawa_cubic(c, factor_T(T, 1)); }),
            code(ErrorKind::KodairaSpencerSingular));
}

TEST(Canonical, LogChart) {
  const auto s = worked_example(7);
  const auto& r = s.crystal.ring();
  const auto cc = canonical_coordinates(s.data);
  EXPECT_TRUE(series_equal(cc.q[0], one_plus_t(r, 6)));
  EXPECT_TRUE(series_equal(cc.t_of_q[0], PadicSeries::variable(r, 1, 6, 0)));
  EXPECT_TRUE(series_equal(cc.phi_can[0], pow(one_plus_t(r, 6), 7) - PadicSeries::constant(r, 1, 6, r.one())));
  EXPECT_EQ(cc.shift_valuation, kInfiniteValuation);
}

TEST(Canonical, ShiftedConstant) {
  const auto r = padic(5, 3, 4);
  PrepotentialData d{PadicSeries(r, 1, 4), PadicMatrix(r, 1, 1, 1, 4), PadicMatrix(r, 1, 1, 1, 4),
                     PadicMatrix(r, 1, 1, 1, 4)};
  d.tau23(0, 0) = log(one_plus_t(r, 4)) + PadicSeries::constant(r, 1, 4, r.from_int(5));
  const auto cc = canonical_coordinates(d);
  EXPECT_EQ(r.residue(cc.q[0][0], 3), 81);
  EXPECT_EQ(cc.shift_valuation, 1);
  // phi_can(q) = q^p
  const Substitution<PadicRing> sub(cc.phi_can, 4);
  Verdict v("qp");
  compare_series(v, sub.apply(cc.q[0]), pow(cc.q[0], 5), 4,
                 [](int k) { return std::min(3, 5 - k); }, json{});
  EXPECT_TRUE(v.pass) << v.to_json().dump();
}

TEST(Canonical, NotIntegral) {
  const auto r = padic(5, 4, 6);
  PrepotentialData d{PadicSeries(r, 1, 6), PadicMatrix(r, 1, 1, 1, 6), PadicMatrix(r, 1, 1, 1, 6),
                     PadicMatrix(r, 1, 1, 1, 6)};
  d.tau23(0, 0) = PadicSeries::variable(r, 1, 6, 0);
  EXPECT_EQ(error_kind([&] { canonical_coordinates(d); }), code(ErrorKind::NotIntegral));
}

TEST(Canonical, IdentityH0GivesP) {
  const auto r = padic(5, 8, 6);
  const auto c = CY3Crystal::from_T(PadicMatrix::identity(r, 2, 0, 6), 0);
  const auto d = factor_T(c.crystal.T, 0);
  const auto cc = canonical_coordinates(d);
  const auto cf = compare_canonical_frobenius(c, d, cc);
  EXPECT_TRUE(cf.verdict.pass);
  EXPECT_TRUE(matrix_equal(cf.via_T, p_matrix(r, {0, 3}, 0, 6)));
}

TEST(Canonical, TwoRouteAgreement) {
  {
    const auto s = worked_example();
    const auto cc = canonical_coordinates(s.data);
    EXPECT_NO_THROW(canonical_frobenius_matrix(s.crystal, s.data, cc));
  }
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto s = synth_cy3(options(2, 7, seed));
    const auto cc = canonical_coordinates(s.data);
    const auto cf = compare_canonical_frobenius(s.crystal, s.data, cc);
    EXPECT_TRUE(cf.verdict.pass) << cf.verdict.to_json().dump();
  }
}

TEST(Canonical, GenericModeAtDeterminedPrecision) {
  const auto s = synth_cy3(options(2, 5, 21, SynthMode::Generic));
  const auto cc = canonical_coordinates(s.data);
  EXPECT_EQ(cc.shift_valuation, 2);
  const auto cf = compare_canonical_frobenius(s.crystal, s.data, cc);
  EXPECT_TRUE(cf.verdict.pass) << cf.verdict.to_json().dump();
  EXPECT_EQ(cf.verdict.details["digits_by_degree"], json({8, 8, 7, 5, 3, 1, 0}));
}

TEST(Canonical, MismatchDetected) {
  const auto s = worked_example();
  auto d = s.data;
  d.tau12(0, 0)[1] = d.Z.ring().add(d.tau12(0, 0)[1], d.Z.ring().power_of_p(6));
  const auto cc = canonical_coordinates(s.data);
  EXPECT_EQ(error_kind([&] { canonical_frobenius_matrix(s.crystal, d, cc); }),
            code(ErrorKind::MatcanfrobMismatch));
}

TEST(Integrality, WorkedExampleAndZero) {
  const auto s = worked_example();
  const auto cc = canonical_coordinates(s.data);
  const auto m = canonical_frobenius_matrix(s.crystal, s.data, cc);
  for (const auto& v : integrality_verdicts(s.crystal, s.data, cc, m)) {
    EXPECT_TRUE(v.pass) << v.name << v.to_json().dump();
  }
  // p^-3 phi(Z) - Z = (1+t)^p - 1 - p^3 t
  const auto& r = s.crystal.ring();
  const Substitution<PadicRing> sub(cc.phi_can, 6);
  const auto w = sub.apply(s.data.Z) * r.power_of_p(-3) - s.data.Z;
  const auto expect = pow(one_plus_t(r, 6), 5) - PadicSeries::constant(r, 1, 6, r.one()) -
                      PadicSeries::variable(r, 1, 6, 0) * r.power_of_p(3);
  EXPECT_TRUE(series_equal(w, expect));

  const auto zero = PadicSeries(r, 1, 6);
  EXPECT_TRUE(check_yukinteger(zero, cc.phi_can, uniform_precision(8)).pass);
}

TEST(Integrality, MutatedZFails) {
  const auto s = worked_example();
  const auto cc = canonical_coordinates(s.data);
  auto Z = s.data.Z;
  const auto& r = Z.ring();
  Z[2] = r.add(Z[2], r.power_of_p(-1));
  const auto v = check_yukinteger(Z, cc.phi_can, uniform_precision(8));
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.location["exponent"], "[2]");
  // t^2: p^-2 - p^-1; worst at t^6, where p^-4 * 210 t^6 comes from phi(t)^2
  EXPECT_EQ(v.worst_valuation_deficit, 3);
}

TEST(Integrality, InnerProductAndQpropsMutations) {
  const auto s = worked_example();
  const auto& r = s.crystal.ring();
  const auto cc = canonical_coordinates(s.data);
  auto m = canonical_frobenius_matrix(s.crystal, s.data, cc);
  m(0, 3)[4] = r.add(m(0, 3)[4], r.power_of_p(7));
  EXPECT_FALSE(check_yukinnerproduct(m, s.crystal.J, s.data.Z, cc.phi_can, uniform_precision(8)).pass);
  auto q = cc.q;
  q[0][3] = r.add(q[0][3], r.power_of_p(-1));
  EXPECT_FALSE(check_qprops(q).pass);
  q = cc.q;
  q[0][0] = r.add(q[0][0], r.one());
  EXPECT_FALSE(check_qprops(q).pass);
}

TEST(Omega, TrivialF) {
  const auto s = synth_cy3(options(2, 7, 5, SynthMode::Generic));
  const auto& r = s.crystal.ring();
  const auto f = PadicSeries::constant(r, 2, 6, r.one());
  const auto om = omega_layer(s.crystal, s.data, f, standard_lift(r, 2, 6));
  EXPECT_TRUE(om.duality.pass);
  const auto ks = kodaira_spencer(s.data);
  EXPECT_TRUE(matrix_equal(om.S.block(3, 3, 2, 2), ks));
  EXPECT_TRUE(matrix_equal(om.S.block(1, 1, 2, 2), kodaira_spencer_inverse(s.data).transpose()));
}

TEST(Omega, WorkedExampleDualityAndColumns) {
  const auto s = worked_example();
  const auto& r = s.crystal.ring();
  const auto f = one_plus_t(r, 6);
  const auto om = omega_layer(s.crystal, s.data, f, standard_lift(r, 1, 6));
  EXPECT_TRUE(om.duality.pass);
  // <check omega_1, omega_1> = 1 exactly
  const auto J = s.crystal.J.embed(1, 6);
  const auto pairing = (om.S.transpose() * J * om.S)(1, 2);
  EXPECT_TRUE(series_equal(pairing.truncated_to(5), PadicSeries::constant(r, 1, 6, r.one())));
  EXPECT_TRUE(r.equal(om.a, r.one()));
  EXPECT_TRUE(series_equal(om.f_tilde * f, PadicSeries::constant(r, 1, 6, r.one())));
  const auto col = solution_column(s.crystal, om);
  EXPECT_TRUE(col.verdict.pass);
  EXPECT_TRUE(series_equal(col.entries[3], f));
  const auto pf = picard_fuchs_spot_check(s.crystal, om);
  EXPECT_TRUE(pf.pass) << pf.to_json().dump();
}

TEST(Omega, SolutionColumnIdentity) {
  const auto r = padic(5, 6, 3);
  const auto c = CY3Crystal::from_T(PadicMatrix::identity(r, 4, 1, 3), 1);
  PrepotentialData d = factor_T(c.crystal.T, 1);
  d.tau23(0, 0) = PadicSeries::variable(r, 1, 3, 0);  // KS invertible
  const auto om = omega_layer(c, d, PadicSeries::constant(r, 1, 3, r.one()), standard_lift(r, 1, 3));
  const auto col = solution_column(c, om);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(col.entries[i].is_zero());
  EXPECT_TRUE(series_equal(col.entries[3], PadicSeries::constant(r, 1, 3, r.one())));
}

TEST(Omega, NotUnit) {
  const auto s = worked_example();
  const auto& r = s.crystal.ring();
  const auto f = PadicSeries::variable(r, 1, 6, 0) + PadicSeries::constant(r, 1, 6, r.from_int(5));
  EXPECT_EQ(error_kind([&] { omega_layer(s.crystal, s.data, f, standard_lift(r, 1, 6)); }),
            code(ErrorKind::NotUnit));
}

TEST(Omega, MutationsDetected) {
  const auto s = worked_example();
  const auto& r = s.crystal.ring();
  const auto f = one_plus_t(r, 6);
  auto om = omega_layer(s.crystal, s.data, f, standard_lift(r, 1, 6));
  om.TS(1, 3)[2] = r.add(om.TS(1, 3)[2], r.power_of_p(7));
  EXPECT_FALSE(solution_column(s.crystal, om).verdict.pass);
  EXPECT_FALSE(picard_fuchs_spot_check(s.crystal, om).pass);
  auto S = om.S;
  S(1, 1)[1] = r.add(S(1, 1)[1], r.power_of_p(7));
  EXPECT_FALSE(check_omega_duality(S, s.crystal.J).pass);
}

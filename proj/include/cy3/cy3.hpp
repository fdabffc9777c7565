#pragma once

#include <cstdint>
#include <vector>

#include "cy3/crystal.hpp"

namespace cy3 {

// Hodge numbers (1, h, h, 1); basis order e_0 | e_1..e_h | e_{h+1}..e_{2h} | e_{2h+1}.
std::vector<int> cy3_hodge_numbers(int h);

// Constant Gramm matrix of the pairing in the e-basis (nvars = 0).
PadicMatrix gramm_matrix(const PadicRing& ring, int h);

struct PrepotentialData {
  PadicSeries Z;
  PadicMatrix tau23;  // h x 1, the tau_i
  PadicMatrix tau13;  // h x 1
  PadicMatrix tau12;  // h x h
};

// T = A(tau23) * B(tau13, tau12, Z)
PadicMatrix assemble_T(const PrepotentialData& d);
// Reads the blocks of T, checks tau01 = tau23^*, tau12 symmetric,
// tau02 = tau23^* tau12 - tau13^* (RiemannViolation otherwise) and returns
// Z = tau03 - tau23^* tau13.
PrepotentialData factor_T(const PadicMatrix& T, int h);

struct CY3Crystal {
  int h = 0;
  FCrystal crystal;
  PadicMatrix J;

  static CY3Crystal from_T(PadicMatrix T, int h);
  static CY3Crystal from_T(PadicMatrix T, int h, PadicMatrix J);

  const PadicRing& ring() const { return crystal.ring(); }
  int degree() const { return crystal.degree(); }
  int nvars() const { return crystal.nvars(); }
  std::size_t rank() const { return crystal.rank(); }
};

// (i) M^(j)* J + J M^(j) = 0 to degree D-1, (ii) M_phi^* J M_phi = p^3 J,
// (iii) T^* J T = J. Sub-results in details.
Verdict check_pairing(const CY3Crystal& c, const PadicMatrix& m_phi);
Verdict check_pairing(const CY3Crystal& c, const PadicMatrix& m_phi, const DegreePrecision& prec);

// Riemann relations (taurel) read straight off T.
Verdict check_riemann(const PadicMatrix& T, int h);

// (d tau_i / d t_j); KodairaSpencerSingular unless invertible.
PadicMatrix kodaira_spencer(const PrepotentialData& d);
PadicMatrix kodaira_spencer_inverse(const PrepotentialData& d);
// d/d tau_i = sum_l (KS^-1)_{l i} d/dt_l
PadicSeries tau_derivative(const PadicSeries& s, const PadicMatrix& ks_inverse, int i);

// dtau13 = tau12 dtau23, dZ = -2 tau13^* dtau23, tau13 = -1/2 grad_tau Z,
// tau12 = -1/2 Hess_tau Z.
Verdict check_gradient_relations(const PrepotentialData& d);

struct YukawaCubic {
  int h = 0;
  std::vector<PadicSeries> Y;  // Y[(i*h + j)*h + k] = -1/2 d^3 Z / dtau_i dtau_j dtau_k
  Verdict two_route{"yukawa_two_route"};
  Verdict symmetry{"yukawa_symmetry"};
  const PadicSeries& at(int i, int j, int k) const {
    return Y[static_cast<std::size_t>((i * h + j) * h + k)];
  }
};
// The second route is <e_{2h+1}, nabla(d^3/dtau_i dtau_j dtau_k) e_{2h+1}>
// computed from the connection, compared up to degree D-3.
YukawaCubic yukawa_cubic(const CY3Crystal& c, const PrepotentialData& d);

struct CanonicalCoords {
  std::vector<PadicSeries> q;       // exp(tau_i)
  std::vector<PadicSeries> t_of_q;  // g with g(q - q(0)) = t
  Lift phi_can;                     // t -> g(q^p - q(0))
  // least valuation of the constant terms of phi_can; kInfiniteValuation when
  // they all vanish (q(0) = 1)
  int shift_valuation = kInfiniteValuation;
};
// NotIntegral when some q_i has a non-integral coefficient or q_i(0) != 1 mod p.
CanonicalCoords canonical_coordinates(const PrepotentialData& d);

// Digits to which phi_can-based quantities are determined in degree k by a
// degree-D instance: min(M, (D+1-k)v - 3), full M when v is infinite.
DegreePrecision canonical_precision(const CanonicalCoords& coords, int precision, int degree);

// Closed form L P with the p^-i phi(tau) - tau correction blocks.
PadicMatrix matcanfrob_closed_form(const PrepotentialData& d, const Lift& phi_can, int h);

struct CanonicalFrobenius {
  PadicMatrix via_T;
  PadicMatrix closed_form;
  Verdict verdict{"matcanfrob_two_route"};
};
CanonicalFrobenius compare_canonical_frobenius(const CY3Crystal& c, const PrepotentialData& d,
                                               const CanonicalCoords& coords);
// Route (a); MatcanfrobMismatch when the closed form disagrees.
PadicMatrix canonical_frobenius_matrix(const CY3Crystal& c, const PrepotentialData& d,
                                       const CanonicalCoords& coords);

// <e_{2h+1}, F phi^* e_{2h+1}> = phi(Z) - p^3 Z
Verdict check_yukinnerproduct(const PadicMatrix& m_can, const PadicMatrix& J, const PadicSeries& Z,
                              const Lift& phi_can, const DegreePrecision& prec);
// p^-3 phi(Z) - Z integral (coefficients known to fewer than 0 digits skipped)
Verdict check_yukinteger(const PadicSeries& Z, const Lift& phi_can, const DegreePrecision& known);
// q_i integral, q_i(0) = 1 mod p
Verdict check_qprops(const std::vector<PadicSeries>& q);

std::vector<Verdict> integrality_verdicts(const CY3Crystal& c, const PrepotentialData& d,
                                          const CanonicalCoords& coords, const PadicMatrix& m_can);

struct OmegaBasis {
  PadicSeries f;
  Padic a;               // f = a * f_tilde^-1
  PadicSeries f_tilde;   // f_tilde(0) = 1
  PadicMatrix S;
  PadicMatrix TS;
  std::vector<PadicMatrix> connection;  // (TS)^-1 d(TS)
  PadicMatrix frobenius;                // (TS)^-1 P phi(TS)
  Verdict duality{"omega_duality"};
};
// NotUnit when f(0) is not a unit.
OmegaBasis omega_layer(const CY3Crystal& c, const PrepotentialData& d, const PadicSeries& f,
                       const Lift& phi);

// S^* J S = J up to degree D-1: <check omega_i, omega_j> = delta_ij and
// <check omega_0, omega_0> = -1.
Verdict check_omega_duality(const PadicMatrix& S, const PadicMatrix& J);

struct SolutionColumn {
  std::vector<PadicSeries> entries;  // last column of TS
  Verdict verdict{"solution_column"};
};
SolutionColumn solution_column(const CY3Crystal& c, const OmegaBasis& omega);

// h = 1: the fourth-order operator annihilating omega_0, derived from the
// connection (denominators cleared), must kill every entry of the solution
// column (to degree D-4).
Verdict picard_fuchs_spot_check(const CY3Crystal& c, const OmegaBasis& omega);

enum class SynthMode { CanonicalChart, Generic };

struct SynthOptions {
  std::uint64_t seed = 0;
  int h = 1;
  unsigned long p = 5;
  int precision = 8;
  int degree = 6;
  SynthMode mode = SynthMode::CanonicalChart;
  int shift_valuation = 2;  // generic mode: tau_i(0) = p^v c_i
};

struct SynthResult {
  CY3Crystal crystal;
  PrepotentialData data;
};

SynthResult synth_cy3(const SynthOptions& opt);
// Same construction with a prescribed zeta (Z = p^3 zeta), canonical chart.
SynthResult synth_cy3_with_zeta(const SynthOptions& opt, const PadicSeries& zeta);

}  // namespace cy3

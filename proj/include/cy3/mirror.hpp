#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cy3/series.hpp"
#include "cy3/verdict.hpp"

namespace cy3 {

// One-parameter family: operator sum_k c_k(t) theta^k (theta = t d/dt), the
// unnormalized coupling kappa = num/den and the expected Y(0).
struct FamilySpec {
  std::string name;
  std::vector<std::vector<mpz_class>> pf_operator;  // pf_operator[k] = coefficients of c_k
  std::vector<mpz_class> kappa_num;
  std::vector<mpz_class> kappa_den;
  long normalization = 0;
  std::vector<unsigned long> primes;
  int degree = 0;
};

// theta^4 - t (5 theta + 1)(5 theta + 2)(5 theta + 3)(5 theta + 4),
// kappa = 5 / (t^3 (1 - 5^5 t)), Y(0) = 5.
FamilySpec quintic_family(int degree, std::vector<unsigned long> primes);

FamilySpec family_from_json(const json& j);
json to_json(const FamilySpec& spec);

// f1 = f0 log t + g1
struct FrobeniusBasis {
  RationalSeries f0;
  RationalSeries g1;
};
// NotMUM unless c_k(0) = 0 for k < 4 and c_4(0) != 0.
FrobeniusBasis frobenius_solutions(const FamilySpec& spec);

// Applies the operator to f0 and to f0 log t + g1 (log part and power-series
// part separately) and checks everything vanishes up to the degree.
bool annihilates(const FamilySpec& spec, const FrobeniusBasis& basis);

struct MirrorMap {
  RationalSeries q_of_t;  // t exp(g1 / f0)
  RationalSeries t_of_q;
};
MirrorMap mirror_map(const FrobeniusBasis& basis);

// A(t(q)) where t(q) inverts q = t exp(g1/f0), by Lagrange inversion.
RationalSeries compose_with_mirror(const RationalSeries& a, const FrobeniusBasis& basis);

// Y(q) = kappa(t) q^3 (dt/dq)^3 / f0(t)^2 at t = t(q). NormalizationMismatch
// when Y(0) differs from the spec.
RationalSeries yukawa_q(const FamilySpec& spec, const FrobeniusBasis& basis, const MirrorMap& mirror);

// b_1..b_D with (Y - Y(0)) / Y(0) = sum_m (sum_{d | m} b_d d^3) q^m.
std::vector<mpq_class> lambert_extract(const RationalSeries& Y, long normalization);
// Inverse of lambert_extract: Y(0) (1 + sum_n b_n n^3 q^n / (1 - q^n)) to degree D.
RationalSeries lambert_series(const std::vector<mpq_class>& b, long normalization, int degree);

struct IntegralityResult {
  bool pass = true;
  std::optional<int> first_failure;
};
// For m <= m_max: v_p(N (s(m) - [p | m] s(m/p))) >= 3 v_p(m),
// s(m) = sum_{d | m} b_d d^3. Needs at least m_max entries of b.
IntegralityResult prepotential_integrality(const std::vector<mpq_class>& b, unsigned long p,
                                           int m_max, long normalization = 5);

// z_m = (N / m^3) sum_{d | m} b_d d^3, m = 1..size(b).
std::vector<mpq_class> prepotential_coeffs(const std::vector<mpq_class>& b, long normalization = 5);
// theta_q^3 (sum z_m q^m) = Y - Y(0) up to the degree of Y.
bool check_prepotential_coeffs(const std::vector<mpq_class>& z, const RationalSeries& Y);

struct MirrorRun {
  FamilySpec spec;
  FrobeniusBasis basis;
  MirrorMap mirror;
  RationalSeries Y;
  std::vector<mpq_class> b;
  std::vector<std::pair<unsigned long, IntegralityResult>> integrality;
};
// Full pipeline; integrality is tested for m up to the degree.
MirrorRun run_family(const FamilySpec& spec);
// {"family", "mirror_map", "b", "integrality"}
json mirror_report(const MirrorRun& run);

}  // namespace cy3

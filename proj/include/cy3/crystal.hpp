#pragma once

#include <vector>

#include "cy3/series_matrix.hpp"
#include "cy3/verdict.hpp"

namespace cy3 {

// A lift of Frobenius given by the images phi(t_j).
using Lift = std::vector<PadicSeries>;

// t_j -> t_j^p
Lift standard_lift(const PadicRing& ring, int nvars, int degree);
// t_j -> t_j^p + c p t_j
Lift shifted_lift(const PadicRing& ring, int nvars, int degree, long c);
// Integral images with phi(t_j) = t_j^p mod p; InvalidArgument otherwise.
void validate_lift(const Lift& lift, const PadicRing& ring, int nvars, int degree);

// diag exponents of P: i repeated h^i times
std::vector<int> hodge_exponents(const std::vector<int>& hodge_numbers);
PadicMatrix p_matrix(const PadicRing& ring, const std::vector<int>& exponents, int nvars,
                     int degree);

// Connection matrices M^(j) = T^-1 d_j T; accurate to degree D - 1.
std::vector<PadicMatrix> connection_from_T(const PadicMatrix& T);

struct FCrystal {
  std::vector<int> hodge_numbers;
  std::vector<int> exponents;
  PadicMatrix T;
  PadicMatrix T_inverse;
  std::vector<PadicMatrix> connection;

  static FCrystal from_T(PadicMatrix T, std::vector<int> hodge_numbers);

  const PadicRing& ring() const { return T.ring(); }
  int nvars() const { return T.nvars(); }
  int degree() const { return T.degree(); }
  int level() const { return static_cast<int>(hodge_numbers.size()) - 1; }
  std::size_t rank() const { return T.rows(); }
};

// M_psi = T^-1 P psi(T)
PadicMatrix frobenius_matrix(const FCrystal& c, const Lift& psi);

// T block upper triangular, identity diagonal blocks, block (i,j) constant
// term divisible by p^(j-i).
Verdict check_structure(const FCrystal& c);
// d_j M^(k) - d_k M^(j) + M^(j) M^(k) - M^(k) M^(j) = 0 up to degree D - 2.
Verdict check_integrability(const FCrystal& c);
// Griffiths transversality / nilpotence proxy: M^(j) integral and nonzero
// only in the blocks (i, i+1).
Verdict check_transversality(const FCrystal& c);
// M_phi * sum_j phi(M^(j)) d_k phi(t_j) = M^(k) M_phi + d_k M_phi, up to D - 1.
Verdict check_horizontality(const FCrystal& c, const Lift& phi, const PadicMatrix& m_phi);
// M_psi from M_phi by the Taylor formula for F(psi) psi^*.
PadicMatrix taylor_transport(const FCrystal& c, const Lift& phi, const Lift& psi,
                             const PadicMatrix& m_phi);
// M_phi P^-1 integral.
Verdict check_divisibility(const PadicMatrix& m_phi, const std::vector<int>& exponents,
                           int max_degree);

// prod_{m >= 1} P^-m L0 P^m (m = 1 rightmost), truncated at m = M + G.
// L0 and the result are constant (nvars = 0) matrices.
PadicMatrix t0_product(const PadicMatrix& l0, const std::vector<int>& exponents);
// T0 = P^-1 T0 L0 P mod p^M
Verdict check_t0_fixed_point(const PadicMatrix& t0, const PadicMatrix& l0,
                             const std::vector<int>& exponents);

// The T with dT = T M and T(0) = T0, built degree by degree.
PadicMatrix solve_T(const std::vector<PadicMatrix>& connection, const PadicMatrix& t0, int nvars,
                    int degree);

// Elementary-divisor exponents of a constant matrix (sorted ascending).
std::vector<int> newton_hodge_profile(const PadicMatrix& m0);

// F(phi)phi^* e = e implies nabla e = 0 and F(psi)psi^* e = e.
// e is a column (rank x 1). Sub-results are stored in details.
Verdict check_flat_section(const FCrystal& c, const PadicMatrix& e, const Lift& phi,
                           const PadicMatrix& m_phi, const Lift& psi, const PadicMatrix& m_psi);

}  // namespace cy3

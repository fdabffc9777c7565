#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "cy3/monomials.hpp"
#include "cy3/padic.hpp"
#include "cy3/rational.hpp"

namespace cy3 {

// Multivariate power series in t_1..t_n truncated at total degree D, with
// coefficients in one of the two scalar rings (PadicRing, RationalRing).
// Coefficients are stored densely in MonomialTable order.
template <class Ring>
class Series {
 public:
  using ring_type = Ring;
  using scalar_type = typename Ring::value_type;

  Series(Ring ring, int nvars, int degree);

  static Series constant(Ring ring, int nvars, int degree, scalar_type c);
  static Series variable(Ring ring, int nvars, int degree, int var);
  static Series monomial(Ring ring, int nvars, int degree, std::span<const int> exps,
                         scalar_type c);

  const Ring& ring() const { return ring_; }
  int nvars() const { return table_->nvars(); }
  int degree() const { return table_->degree(); }
  const MonomialTable& table() const { return *table_; }
  std::size_t size() const { return coeffs_.size(); }

  const scalar_type& operator[](std::size_t idx) const { return coeffs_[idx]; }
  scalar_type& operator[](std::size_t idx) { return coeffs_[idx]; }
  const scalar_type& coeff(std::span<const int> exps) const;
  void set_coeff(std::span<const int> exps, scalar_type c);
  const scalar_type& constant_term() const { return coeffs_.front(); }

  bool is_zero() const;
  // Lowest total degree carrying a nonzero coefficient; kInfiniteValuation for 0.
  int order() const;
  // Same series with another degree cap (truncating or zero-extending).
  Series with_degree(int degree) const;
  // Keeps only the terms of total degree <= d (cap unchanged).
  Series truncated_to(int d) const;
  Series homogeneous_part(int d) const;

  bool same_shape(const Series& other) const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Series& other);
  Series& scale(const scalar_type& c);
  Series operator-() const;

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const scalar_type& c) { return a.scale(c); }
  friend Series operator*(const scalar_type& c, Series a) { return a.scale(c); }

 private:
  Ring ring_;
  std::shared_ptr<const MonomialTable> table_;
  std::vector<scalar_type> coeffs_;
};

template <class Ring>
Series<Ring> operator*(const Series<Ring>& a, const Series<Ring>& b);

// Multiplicative inverse; the constant term must be a unit of the ring of
// integers (p-adic: exponent 0) or nonzero (rational).
template <class Ring>
Series<Ring> invert(const Series<Ring>& a);
// Inverse in the fraction field of the coefficient ring: only requires a
// nonzero constant term (p-adic exponents may become negative, bounded by E).
template <class Ring>
Series<Ring> invert_nonzero(const Series<Ring>& a);

template <class Ring>
Series<Ring> exp(const Series<Ring>& a);
template <class Ring>
Series<Ring> log(const Series<Ring>& a);

template <class Ring>
Series<Ring> pow(const Series<Ring>& a, unsigned k);

// d/dt_var
template <class Ring>
Series<Ring> derivative(const Series<Ring>& a, int var);
// t_var * d/dt_var
template <class Ring>
Series<Ring> theta(const Series<Ring>& a, int var);
// Antiderivative in t_var with zero constant term in t_var; terms pushed past
// the degree cap are dropped.
template <class Ring>
Series<Ring> integrate(const Series<Ring>& a, int var);

// Scalar exponential / logarithm on the p-adic side (exp needs v(x) >= 1,
// v(x) >= 2 for p = 2; log needs x = 1 mod p).
Padic padic_exp(const PadicRing& ring, const Padic& x);
Padic padic_log(const PadicRing& ring, const Padic& x);

// Composition a(images_1, ..., images_n). The power table of the images is
// built once, so one Substitution can be applied to many series.
template <class Ring>
class Substitution {
 public:
  // images: n series sharing one shape (m variables, degree D'); source
  // series must have n variables and degree <= source_degree.
  Substitution(std::vector<Series<Ring>> images, int source_degree);

  Series<Ring> apply(const Series<Ring>& a) const;
  const std::vector<Series<Ring>>& images() const { return images_; }

 private:
  std::vector<Series<Ring>> images_;
  std::shared_ptr<const MonomialTable> source_table_;
  std::vector<Series<Ring>> powers_;
};

template <class Ring>
Series<Ring> substitute(const Series<Ring>& a, const std::vector<Series<Ring>>& images);

// Compositional inverse g of images (n series in n variables, zero constant
// terms, invertible linear part): images(g(s)) = s and g(images(t)) = t.
template <class Ring>
std::vector<Series<Ring>> revert(const std::vector<Series<Ring>>& images);

using PadicSeries = Series<PadicRing>;
using RationalSeries = Series<RationalRing>;

extern template class Series<PadicRing>;
extern template class Series<RationalRing>;
extern template class Substitution<PadicRing>;
extern template class Substitution<RationalRing>;

}  // namespace cy3

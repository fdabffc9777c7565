#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cy3/series.hpp"

namespace cy3 {

// Dense rows x cols matrix of series sharing one shape. Constant matrices are
// represented with nvars = 0.
template <class Ring>
class SeriesMatrix {
 public:
  using series_type = Series<Ring>;
  using scalar_type = typename Ring::value_type;

  SeriesMatrix(Ring ring, std::size_t rows, std::size_t cols, int nvars, int degree);

  static SeriesMatrix identity(Ring ring, std::size_t n, int nvars, int degree);
  // Row-major scalars placed in the constant terms.
  static SeriesMatrix from_scalars(Ring ring, std::size_t rows, std::size_t cols, int nvars,
                                   int degree, const std::vector<scalar_type>& values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }

  const series_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  series_type& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool same_shape(const SeriesMatrix& other) const;
  bool is_zero() const;

  SeriesMatrix& operator+=(const SeriesMatrix& other);
  SeriesMatrix& operator-=(const SeriesMatrix& other);
  SeriesMatrix operator-() const;
  SeriesMatrix& scale(const scalar_type& c);
  SeriesMatrix& scale(const series_type& s);

  SeriesMatrix transpose() const;
  // Constant terms as an nvars = 0 matrix.
  SeriesMatrix constant_part() const;
  // Constant (nvars = 0) matrix viewed inside series of the given shape.
  SeriesMatrix embed(int nvars, int degree) const;
  SeriesMatrix with_degree(int degree) const;
  SeriesMatrix truncated_to(int d) const;
  SeriesMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const SeriesMatrix& b);

  SeriesMatrix map(const std::function<series_type(const series_type&)>& fn) const;

  friend SeriesMatrix operator+(SeriesMatrix a, const SeriesMatrix& b) { return a += b; }
  friend SeriesMatrix operator-(SeriesMatrix a, const SeriesMatrix& b) { return a -= b; }

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  int nvars_;
  int degree_;
  std::vector<series_type> entries_;
};

template <class Ring>
SeriesMatrix<Ring> operator*(const SeriesMatrix<Ring>& a, const SeriesMatrix<Ring>& b);

// Inverse over the fraction field of the coefficients; pivots are chosen by
// least valuation of the constant term. Throws InvertNonUnit when singular.
template <class Ring>
SeriesMatrix<Ring> inverse(const SeriesMatrix<Ring>& m);

template <class Ring>
SeriesMatrix<Ring> derivative(const SeriesMatrix<Ring>& m, int var);

template <class Ring>
SeriesMatrix<Ring> apply(const Substitution<Ring>& sub, const SeriesMatrix<Ring>& m);

// Determinant by cofactor-free elimination (small sizes only).
template <class Ring>
Series<Ring> determinant(const SeriesMatrix<Ring>& m);

using PadicMatrix = SeriesMatrix<PadicRing>;
using RationalMatrix = SeriesMatrix<RationalRing>;

extern template class SeriesMatrix<PadicRing>;
extern template class SeriesMatrix<RationalRing>;

}  // namespace cy3

#include "cy3/series_matrix.hpp"

#include <string>
#include <type_traits>
#include <utility>

#include "cy3/error.hpp"

namespace cy3 {

namespace {

template <class Ring>
void require_same_shape(const SeriesMatrix<Ring>& a, const SeriesMatrix<Ring>& b, const char* op) {
  if (!a.same_shape(b)) {
    raise(ErrorKind::ShapeMismatch,
          std::string(op) + ": matrix shapes differ (" + std::to_string(a.rows()) + "x" +
              std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
              std::to_string(b.cols()) + ")");
  }
}

template <class Ring>
int constant_valuation(const Series<Ring>& s) {
  const auto& c = s.constant_term();
  if (s.ring().is_zero(c)) return kInfiniteValuation;
  if constexpr (std::is_same_v<Ring, PadicRing>) {
    return s.ring().valuation(c);
  } else {
    return 0;
  }
}

}  // namespace

template <class Ring>
SeriesMatrix<Ring>::SeriesMatrix(Ring ring, std::size_t rows, std::size_t cols, int nvars,
                                 int degree)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), nvars_(nvars), degree_(degree) {
  entries_.assign(rows * cols, series_type(ring_, nvars, degree));
}

template <class Ring>
SeriesMatrix<Ring> SeriesMatrix<Ring>::identity(Ring ring, std::size_t n, int nvars, int degree) {
  SeriesMatrix m(ring, n, n, nvars, degree);
  for (std::size_t i = 0; i < n; ++i) m(i, i)[0] = ring.one();
  return m;
}

template <class Ring>
SeriesMatrix<Ring> SeriesMatrix<Ring>::from_scalars(Ring ring, std::size_t rows, std::size_t cols,
                                                    int nvars, int degree,
                                                    const std::vector<scalar_type>& values) {
  if (values.size() != rows * cols) raise(ErrorKind::ShapeMismatch, "from_scalars: wrong count");
  SeriesMatrix m(std::move(ring), rows, cols, nvars, degree);
  for (std::size_t k = 0; k < values.size(); ++k) m.entries_[k][0] = values[k];
  return m;
}

template <class Ring>
bool SeriesMatrix<Ring>::same_shape(const SeriesMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && nvars_ == other.nvars_ &&
         degree_ == other.degree_ && ring_ == other.ring_;
}

template <class Ring>
bool SeriesMatrix<Ring>::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

template <class Ring>
SeriesMatrix<Ring>& SeriesMatrix<Ring>::operator+=(const SeriesMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

template <class Ring>
SeriesMatrix<Ring>& SeriesMatrix<Ring>::operator-=(const SeriesMatrix& other) {
  require_same_shape(*this, other, "sub");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

template <class Ring>
SeriesMatrix<Ring> SeriesMatrix<Ring>::operator-() const {
  SeriesMatrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

template <class Ring>
SeriesMatrix<Ring>& SeriesMatrix<Ring>::scale(const scalar_type& c) {
  for (auto& e : entries_) e.scale(c);
  return *this;
}

template <class Ring>
SeriesMatrix<Ring>& SeriesMatrix<Ring>::scale(const series_type& s) {
  for (auto& e : entries_) {
    if (!e.is_zero()) e = e * s;
  }
  return *this;
}

template <class Ring>
SeriesMatrix<Ring> SeriesMatrix<Ring>::transpose() const {
  SeriesMatrix r(ring_, cols_, rows_, nvars_, degree_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

template <class Ring>
SeriesMatrix<Ring> SeriesMatrix<Ring>::constant_part() const {
  SeriesMatrix r(ring_, rows_, cols_, 0, 0);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k][0] = entries_[k][0];
  return r;
}

template <class Ring>
SeriesMatrix<Ring> SeriesMatrix<Ring>::embed(int nvars, int degree) const {
  SeriesMatrix r(ring_, rows_, cols_, nvars, degree);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k][0] = entries_[k][0];
  return r;
}

template <class Ring>
SeriesMatrix<Ring> SeriesMatrix<Ring>::with_degree(int degree) const {
  SeriesMatrix r(ring_, rows_, cols_, nvars_, degree);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].with_degree(degree);
  return r;
}

template <class Ring>
SeriesMatrix<Ring> SeriesMatrix<Ring>::truncated_to(int d) const {
  SeriesMatrix r = *this;
  for (auto& e : r.entries_) e = e.truncated_to(d);
  return r;
}

template <class Ring>
SeriesMatrix<Ring> SeriesMatrix<Ring>::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                             std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) raise(ErrorKind::ShapeMismatch, "block out of range");
  SeriesMatrix r(ring_, nr, nc, nvars_, degree_);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  }
  return r;
}

template <class Ring>
void SeriesMatrix<Ring>::set_block(std::size_t r0, std::size_t c0, const SeriesMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    raise(ErrorKind::ShapeMismatch, "set_block out of range");
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
}

template <class Ring>
SeriesMatrix<Ring> SeriesMatrix<Ring>::map(
    const std::function<series_type(const series_type&)>& fn) const {
  if (entries_.empty()) return *this;
  std::vector<series_type> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(fn(e));
  SeriesMatrix r(ring_, rows_, cols_, out.front().nvars(), out.front().degree());
  r.entries_ = std::move(out);
  return r;
}

template <class Ring>
SeriesMatrix<Ring> operator*(const SeriesMatrix<Ring>& a, const SeriesMatrix<Ring>& b) {
  if (a.cols() != b.rows() || a.nvars() != b.nvars() || a.degree() != b.degree()) {
    raise(ErrorKind::ShapeMismatch, "mul: incompatible matrices " + std::to_string(a.rows()) +
                                        "x" + std::to_string(a.cols()) + " * " +
                                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  SeriesMatrix<Ring> r(a.ring(), a.rows(), b.cols(), a.nvars(), a.degree());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto& y = b(k, j);
        if (y.is_zero()) continue;
        r(i, j) += x * y;
      }
    }
  }
  return r;
}

template <class Ring>
SeriesMatrix<Ring> inverse(const SeriesMatrix<Ring>& m) {
  if (m.rows() != m.cols()) raise(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  SeriesMatrix<Ring> a = m;
  auto inv = SeriesMatrix<Ring>::identity(m.ring(), n, m.nvars(), m.degree());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    int best = kInfiniteValuation;
    for (std::size_t r = col; r < n; ++r) {
      const int v = constant_valuation(a(r, col));
      if (v < best) {
        best = v;
        pivot = r;
      }
    }
    if (pivot == n) {
      raise(ErrorKind::InvertNonUnit,
            "matrix is singular at its constant term (column " + std::to_string(col) + ")");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const auto pinv = invert_nonzero(a(col, col));
    for (std::size_t c = 0; c < n; ++c) {
      if (!a(col, c).is_zero()) a(col, c) = a(col, c) * pinv;
      if (!inv(col, c).is_zero()) inv(col, c) = inv(col, c) * pinv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const auto f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

template <class Ring>
SeriesMatrix<Ring> derivative(const SeriesMatrix<Ring>& m, int var) {
  return m.map([var](const Series<Ring>& s) { return derivative(s, var); });
}

template <class Ring>
SeriesMatrix<Ring> apply(const Substitution<Ring>& sub, const SeriesMatrix<Ring>& m) {
  if (sub.images().empty()) return m;
  const auto& img = sub.images().front();
  SeriesMatrix<Ring> r(m.ring(), m.rows(), m.cols(), img.nvars(), img.degree());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) r(i, j) = sub.apply(m(i, j));
    }
  }
  return r;
}

namespace {

template <class Ring>
Series<Ring> laplace(const SeriesMatrix<Ring>& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return Series<Ring>::constant(m.ring(), m.nvars(), m.degree(), m.ring().one());
  Series<Ring> acc(m.ring(), m.nvars(), m.degree());
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      const auto minor = laplace(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      if (sign > 0) {
        acc += m(row, c) * minor;
      } else {
        acc -= m(row, c) * minor;
      }
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

template <class Ring>
Series<Ring> determinant(const SeriesMatrix<Ring>& m) {
  if (m.rows() != m.cols()) raise(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return laplace(m, cols, 0);
}

#define CY3_INSTANTIATE_MATRIX(R)                                                         \
  template class SeriesMatrix<R>;                                                         \
  template SeriesMatrix<R> operator*(const SeriesMatrix<R>&, const SeriesMatrix<R>&);    \
  template SeriesMatrix<R> inverse(const SeriesMatrix<R>&);                               \
  template SeriesMatrix<R> derivative(const SeriesMatrix<R>&, int);                       \
  template SeriesMatrix<R> apply(const Substitution<R>&, const SeriesMatrix<R>&);         \
  template Series<R> determinant(const SeriesMatrix<R>&);

CY3_INSTANTIATE_MATRIX(PadicRing)
CY3_INSTANTIATE_MATRIX(RationalRing)

#undef CY3_INSTANTIATE_MATRIX

}  // namespace cy3

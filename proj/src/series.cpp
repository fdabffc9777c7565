#include "cy3/series.hpp"

#include <string>
#include <type_traits>
#include <utility>

#include "cy3/error.hpp"

namespace cy3 {

namespace {

template <class Ring>
constexpr bool is_padic = std::is_same_v<Ring, PadicRing>;

template <class Ring>
void require_same_shape(const Series<Ring>& a, const Series<Ring>& b, const char* op) {
  if (!a.same_shape(b)) {
    raise(ErrorKind::ShapeMismatch, std::string(op) + ": series shapes differ (" +
                                        std::to_string(a.nvars()) + " vars/deg " +
                                        std::to_string(a.degree()) + " vs " +
                                        std::to_string(b.nvars()) + " vars/deg " +
                                        std::to_string(b.degree()) + ")");
  }
}

// Exponential of a series with zero constant term via the Euler recurrence
// |alpha| E_alpha = sum_{beta + gamma = alpha} |beta| b_beta E_gamma.
template <class Ring>
Series<Ring> exp_no_constant(const Series<Ring>& b) {
  const auto& ring = b.ring();
  const auto& table = b.table();
  Series<Ring> e(ring, b.nvars(), b.degree());
  e[0] = ring.one();
  // weighted[i] = |beta_i| * b_i
  std::vector<typename Ring::value_type> weighted(b.size());
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (!ring.is_zero(b[i])) weighted[i] = ring.mul_int(b[i], table.total_degree(i));
  }
  for (int d = 1; d <= b.degree(); ++d) {
    const auto lo = table.degree_begin(d);
    const auto hi = table.degree_begin(d + 1);
    for (std::size_t gamma = 0; gamma < table.degree_begin(d); ++gamma) {
      if (ring.is_zero(e[gamma])) continue;
      const int need = d - table.total_degree(gamma);
      for (std::size_t beta = table.degree_begin(need); beta < table.degree_begin(need + 1);
           ++beta) {
        if (ring.is_zero(weighted[beta])) continue;
        const auto alpha = table.product_index(beta, gamma);
        ring.add_mul(e[alpha], weighted[beta], e[gamma]);
      }
    }
    for (std::size_t alpha = lo; alpha < hi; ++alpha) {
      if (!ring.is_zero(e[alpha])) e[alpha] = ring.div_int(e[alpha], d);
    }
  }
  return e;
}

// Euler operator sum_j t_j d/dt_j, i.e. multiply the degree-d part by d.
template <class Ring>
Series<Ring> euler(const Series<Ring>& a) {
  Series<Ring> r = a;
  r[0] = a.ring().zero();
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (!a.ring().is_zero(a[i])) r[i] = a.ring().mul_int(a[i], a.table().total_degree(i));
  }
  return r;
}

// Inverse of a small scalar matrix (row-major n x n) by Gauss-Jordan; pivots
// on the entry of least valuation on the p-adic side.
template <class Ring>
std::vector<typename Ring::value_type> invert_scalar_matrix(
    const Ring& ring, std::vector<typename Ring::value_type> m, std::size_t n) {
  using S = typename Ring::value_type;
  std::vector<S> inv(n * n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = ring.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    int best = kInfiniteValuation;
    for (std::size_t r = col; r < n; ++r) {
      const auto& x = m[r * n + col];
      if (ring.is_zero(x)) continue;
      int v = 0;
      if constexpr (is_padic<Ring>) v = ring.valuation(x);
      if (pivot == n || v < best) {
        pivot = r;
        best = v;
      }
    }
    if (pivot == n) raise(ErrorKind::RevertSingular, "singular linear part");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m[pivot * n + c], m[col * n + c]);
        std::swap(inv[pivot * n + c], inv[col * n + c]);
      }
    }
    const S pinv = ring.inv(m[col * n + col]);
    for (std::size_t c = 0; c < n; ++c) {
      m[col * n + c] = ring.mul(m[col * n + c], pinv);
      inv[col * n + c] = ring.mul(inv[col * n + c], pinv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || ring.is_zero(m[r * n + col])) continue;
      const S f = m[r * n + col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r * n + c] = ring.sub(m[r * n + c], ring.mul(f, m[col * n + c]));
        inv[r * n + c] = ring.sub(inv[r * n + c], ring.mul(f, inv[col * n + c]));
      }
    }
  }
  return inv;
}

}  // namespace

template <class Ring>
Series<Ring>::Series(Ring ring, int nvars, int degree)
    : ring_(std::move(ring)), table_(MonomialTable::get(nvars, degree)) {
  coeffs_.assign(table_->size(), ring_.zero());
}

template <class Ring>
Series<Ring> Series<Ring>::constant(Ring ring, int nvars, int degree, scalar_type c) {
  Series s(std::move(ring), nvars, degree);
  s.coeffs_[0] = std::move(c);
  return s;
}

template <class Ring>
Series<Ring> Series<Ring>::variable(Ring ring, int nvars, int degree, int var) {
  if (var < 0 || var >= nvars) raise(ErrorKind::InvalidArgument, "variable index out of range");
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  exps[static_cast<std::size_t>(var)] = 1;
  auto one = ring.one();
  return monomial(std::move(ring), nvars, degree, exps, std::move(one));
}

template <class Ring>
Series<Ring> Series<Ring>::monomial(Ring ring, int nvars, int degree, std::span<const int> exps,
                                    scalar_type c) {
  Series s(std::move(ring), nvars, degree);
  const auto idx = s.table_->index_of(exps);
  if (idx != MonomialTable::npos) s.coeffs_[idx] = std::move(c);
  return s;
}

template <class Ring>
const typename Series<Ring>::scalar_type& Series<Ring>::coeff(std::span<const int> exps) const {
  static const scalar_type zero{};
  const auto idx = table_->index_of(exps);
  return idx == MonomialTable::npos ? zero : coeffs_[idx];
}

template <class Ring>
void Series<Ring>::set_coeff(std::span<const int> exps, scalar_type c) {
  const auto idx = table_->index_of(exps);
  if (idx == MonomialTable::npos) {
    raise(ErrorKind::InvalidArgument, "exponent vector outside the degree cap");
  }
  coeffs_[idx] = std::move(c);
}

template <class Ring>
bool Series<Ring>::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!ring_.is_zero(c)) return false;
  }
  return true;
}

template <class Ring>
int Series<Ring>::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!ring_.is_zero(coeffs_[i])) return table_->total_degree(i);
  }
  return kInfiniteValuation;
}

template <class Ring>
Series<Ring> Series<Ring>::with_degree(int degree) const {
  Series r(ring_, nvars(), degree);
  const auto n = std::min(r.size(), size());
  // Graded ordering makes the smaller table a prefix of the larger one.
  for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = coeffs_[i];
  return r;
}

template <class Ring>
Series<Ring> Series<Ring>::truncated_to(int d) const {
  Series r = *this;
  for (std::size_t i = table_->degree_begin(d + 1); i < r.size(); ++i) r.coeffs_[i] = ring_.zero();
  return r;
}

template <class Ring>
Series<Ring> Series<Ring>::homogeneous_part(int d) const {
  Series r(ring_, nvars(), degree());
  for (std::size_t i = table_->degree_begin(d); i < table_->degree_begin(d + 1); ++i) {
    r.coeffs_[i] = coeffs_[i];
  }
  return r;
}

template <class Ring>
bool Series<Ring>::same_shape(const Series& other) const {
  return table_ == other.table_ && ring_ == other.ring_;
}

template <class Ring>
Series<Ring>& Series<Ring>::operator+=(const Series& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!ring_.is_zero(other.coeffs_[i])) coeffs_[i] = ring_.add(coeffs_[i], other.coeffs_[i]);
  }
  return *this;
}

template <class Ring>
Series<Ring>& Series<Ring>::operator-=(const Series& other) {
  require_same_shape(*this, other, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!ring_.is_zero(other.coeffs_[i])) coeffs_[i] = ring_.sub(coeffs_[i], other.coeffs_[i]);
  }
  return *this;
}

template <class Ring>
Series<Ring>& Series<Ring>::operator*=(const Series& other) {
  *this = *this * other;
  return *this;
}

template <class Ring>
Series<Ring>& Series<Ring>::scale(const scalar_type& c) {
  if (ring_.is_zero(c)) {
    for (auto& x : coeffs_) x = ring_.zero();
    return *this;
  }
  for (auto& x : coeffs_) {
    if (!ring_.is_zero(x)) x = ring_.mul(x, c);
  }
  return *this;
}

template <class Ring>
Series<Ring> Series<Ring>::operator-() const {
  Series r = *this;
  for (auto& x : r.coeffs_) {
    if (!ring_.is_zero(x)) x = ring_.neg(x);
  }
  return r;
}

template <class Ring>
Series<Ring> operator*(const Series<Ring>& a, const Series<Ring>& b) {
  require_same_shape(a, b, "mul");
  const auto& ring = a.ring();
  const auto& table = a.table();
  Series<Ring> r(ring, a.nvars(), a.degree());
  const int cap = a.degree();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    const auto jend = table.degree_begin(cap - table.total_degree(i) + 1);
    for (std::size_t j = 0; j < jend; ++j) {
      if (ring.is_zero(b[j])) continue;
      ring.add_mul(r[table.product_index(i, j)], a[i], b[j]);
    }
  }
  return r;
}

namespace {

template <class Ring>
Series<Ring> invert_impl(const Series<Ring>& a) {
  const auto& ring = a.ring();
  const auto& table = a.table();
  const auto c0inv = ring.inv(a.constant_term());
  Series<Ring> r(ring, a.nvars(), a.degree());
  r[0] = c0inv;
  // r_alpha = -c0^{-1} * sum_{beta != 0} a_beta r_{alpha - beta}, degree by degree.
  for (int d = 1; d <= a.degree(); ++d) {
    const auto lo = table.degree_begin(d);
    const auto hi = table.degree_begin(d + 1);
    std::vector<typename Ring::value_type> acc(hi - lo, ring.zero());
    for (std::size_t gamma = 0; gamma < lo; ++gamma) {
      if (ring.is_zero(r[gamma])) continue;
      const int need = d - table.total_degree(gamma);
      for (std::size_t beta = table.degree_begin(need); beta < table.degree_begin(need + 1);
           ++beta) {
        if (ring.is_zero(a[beta])) continue;
        ring.add_mul(acc[table.product_index(beta, gamma) - lo], a[beta], r[gamma]);
      }
    }
    for (std::size_t alpha = lo; alpha < hi; ++alpha) {
      if (!ring.is_zero(acc[alpha - lo])) r[alpha] = ring.neg(ring.mul(acc[alpha - lo], c0inv));
    }
  }
  return r;
}

}  // namespace

template <class Ring>
Series<Ring> invert(const Series<Ring>& a) {
  if (!a.ring().is_unit(a.constant_term())) {
    raise(ErrorKind::InvertNonUnit, "constant term " + a.ring().to_string(a.constant_term()) +
                                        " is not a unit");
  }
  return invert_impl(a);
}

template <class Ring>
Series<Ring> invert_nonzero(const Series<Ring>& a) {
  if (a.ring().is_zero(a.constant_term())) {
    raise(ErrorKind::InvertNonUnit, "constant term is zero");
  }
  return invert_impl(a);
}

Padic padic_exp(const PadicRing& ring, const Padic& x) {
  if (x.is_zero()) return ring.one();
  const auto p = static_cast<long>(ring.prime());
  const int v = ring.valuation(x);
  if (v < 1 || (p == 2 && v < 2)) {
    raise(ErrorKind::ExpDomain, "exp needs valuation >= 1 (>= 2 for p = 2), got " +
                                    std::to_string(v));
  }
  const long digits = ring.context().working_digits();
  Padic sum = ring.one();
  Padic term = ring.one();
  for (long m = 1;; ++m) {
    // Every remaining term has valuation >= m (v - 1/(p-1)).
    if (m * (v * (p - 1) - 1) >= digits * (p - 1)) break;
    term = ring.div_int(ring.mul(term, x), m);
    // v(x^m / m!) >= m v - (m - 1)/(p - 1), and in particular > 0.
    const int vt = ring.valuation(term);
    if (vt != kInfiniteValuation && static_cast<long>(vt) * (p - 1) < m * v * (p - 1) - (m - 1)) {
      raise(ErrorKind::PrecisionExhausted, "exp term valuation below the factorial bound");
    }
    sum = ring.add(sum, term);
  }
  return sum;
}

Padic padic_log(const PadicRing& ring, const Padic& x) {
  const Padic y = ring.sub(x, ring.one());
  if (y.is_zero()) return ring.zero();
  const int v = ring.valuation(y);
  if (v < 1) raise(ErrorKind::LogDomain, "log needs argument = 1 mod p");
  const long p = static_cast<long>(ring.prime());
  const long digits = ring.context().working_digits();
  Padic sum = ring.zero();
  Padic power = ring.one();
  for (long m = 1;; ++m) {
    long logm = 0;
    for (long q = m; q >= p; q /= p) ++logm;
    if (m >= 2 && m * v - logm >= digits + 1) break;
    power = ring.mul(power, y);
    const Padic term = ring.div_int(power, m);
    sum = (m % 2 == 1) ? ring.add(sum, term) : ring.sub(sum, term);
  }
  return sum;
}

template <class Ring>
Series<Ring> exp(const Series<Ring>& a) {
  const auto& ring = a.ring();
  Series<Ring> rest = a;
  rest[0] = ring.zero();
  Series<Ring> e = exp_no_constant(rest);
  if (ring.is_zero(a.constant_term())) return e;
  if constexpr (is_padic<Ring>) {
    return e.scale(padic_exp(ring, a.constant_term()));
  } else {
    raise(ErrorKind::ExpDomain, "rational exp needs a zero constant term");
  }
}

template <class Ring>
Series<Ring> log(const Series<Ring>& a) {
  const auto& ring = a.ring();
  const auto& c = a.constant_term();
  typename Ring::value_type c_log = ring.zero();
  if constexpr (is_padic<Ring>) {
    if (ring.valuation(c) != 0) raise(ErrorKind::LogDomain, "log needs a unit constant term = 1 mod p");
    c_log = padic_log(ring, c);
  } else {
    if (!ring.equal(c, ring.one())) raise(ErrorKind::LogDomain, "rational log needs constant term 1");
  }
  // b = a / a(0) has constant term 1; Euler(log b) = Euler(b) / b.
  Series<Ring> b = a;
  b.scale(ring.inv(c));
  Series<Ring> q = euler(b) * invert(b);
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (!ring.is_zero(q[i])) q[i] = ring.div_int(q[i], q.table().total_degree(i));
  }
  q[0] = c_log;
  return q;
}

template <class Ring>
Series<Ring> pow(const Series<Ring>& a, unsigned k) {
  Series<Ring> result = Series<Ring>::constant(a.ring(), a.nvars(), a.degree(), a.ring().one());
  Series<Ring> base = a;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

template <class Ring>
Series<Ring> derivative(const Series<Ring>& a, int var) {
  if (var < 0 || var >= a.nvars()) raise(ErrorKind::InvalidArgument, "variable index out of range");
  const auto& ring = a.ring();
  const auto& table = a.table();
  Series<Ring> r(ring, a.nvars(), a.degree());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    const int e = table.exponents(i)[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    r[table.shifted(i, var, -1)] = ring.mul_int(a[i], e);
  }
  return r;
}

template <class Ring>
Series<Ring> theta(const Series<Ring>& a, int var) {
  if (var < 0 || var >= a.nvars()) raise(ErrorKind::InvalidArgument, "variable index out of range");
  const auto& ring = a.ring();
  Series<Ring> r = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    const int e = a.table().exponents(i)[static_cast<std::size_t>(var)];
    r[i] = e == 0 ? ring.zero() : ring.mul_int(a[i], e);
  }
  return r;
}

template <class Ring>
Series<Ring> integrate(const Series<Ring>& a, int var) {
  if (var < 0 || var >= a.nvars()) raise(ErrorKind::InvalidArgument, "variable index out of range");
  const auto& ring = a.ring();
  const auto& table = a.table();
  Series<Ring> r(ring, a.nvars(), a.degree());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    const auto target = table.shifted(i, var, 1);
    if (target == MonomialTable::npos) continue;
    const int e = table.exponents(i)[static_cast<std::size_t>(var)];
    r[target] = ring.div_int(a[i], e + 1);
  }
  return r;
}

template <class Ring>
Substitution<Ring>::Substitution(std::vector<Series<Ring>> images, int source_degree)
    : images_(std::move(images)),
      source_table_(MonomialTable::get(static_cast<int>(images_.size()), source_degree)) {
  if (images_.empty()) return;
  const auto& first = images_.front();
  for (const auto& img : images_) {
    require_same_shape(first, img, "substitute");
    const auto& c = img.constant_term();
    if (img.ring().is_zero(c)) continue;
    if constexpr (is_padic<Ring>) {
      if (img.ring().valuation(c) >= 1) continue;
    }
    raise(ErrorKind::SubstituteDomain,
          "image constant term " + img.ring().to_string(c) + " is not topologically nilpotent");
  }
  const auto& table = *source_table_;
  powers_.reserve(table.size());
  powers_.push_back(
      Series<Ring>::constant(first.ring(), first.nvars(), first.degree(), first.ring().one()));
  for (std::size_t idx = 1; idx < table.size(); ++idx) {
    const auto exps = table.exponents(idx);
    int var = 0;
    while (exps[static_cast<std::size_t>(var)] == 0) ++var;
    const auto& prev = powers_[table.shifted(idx, var, -1)];
    if (prev.is_zero()) {
      powers_.push_back(prev);
    } else {
      powers_.push_back(prev * images_[static_cast<std::size_t>(var)]);
    }
  }
}

template <class Ring>
Series<Ring> Substitution<Ring>::apply(const Series<Ring>& a) const {
  if (a.nvars() != static_cast<int>(images_.size())) {
    raise(ErrorKind::ShapeMismatch, "substitute: " + std::to_string(images_.size()) +
                                        " images for a series in " + std::to_string(a.nvars()) +
                                        " variables");
  }
  if (a.degree() > source_table_->degree()) {
    raise(ErrorKind::ShapeMismatch, "substitute: source degree exceeds the prepared power table");
  }
  if (images_.empty()) return a;
  const auto& ring = a.ring();
  const auto& first = images_.front();
  Series<Ring> r(first.ring(), first.nvars(), first.degree());
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    if (ring.is_zero(a[idx])) continue;
    const auto& pw = powers_[idx];
    for (std::size_t k = 0; k < pw.size(); ++k) {
      if (!ring.is_zero(pw[k])) ring.add_mul(r[k], a[idx], pw[k]);
    }
  }
  return r;
}

template <class Ring>
Series<Ring> substitute(const Series<Ring>& a, const std::vector<Series<Ring>>& images) {
  return Substitution<Ring>(images, a.degree()).apply(a);
}

template <class Ring>
std::vector<Series<Ring>> revert(const std::vector<Series<Ring>>& images) {
  const auto n = images.size();
  if (n == 0) return {};
  const auto& first = images.front();
  const auto& ring = first.ring();
  if (first.nvars() != static_cast<int>(n)) {
    raise(ErrorKind::ShapeMismatch, "revert needs n series in n variables");
  }
  for (const auto& img : images) {
    require_same_shape(first, img, "revert");
    if (!ring.is_zero(img.constant_term())) {
      raise(ErrorKind::RevertSingular, "revert needs zero constant terms");
    }
  }
  const int nv = static_cast<int>(n);
  const int deg = first.degree();
  const auto& table = first.table();
  // Linear part A (A[i][j] = coefficient of t_j in images_i) and the rest.
  std::vector<typename Ring::value_type> lin(n * n, ring.zero());
  std::vector<Series<Ring>> nonlinear = images;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t idx = table.degree_begin(1); idx < table.degree_begin(2); ++idx) {
      const auto exps = table.exponents(idx);
      std::size_t j = 0;
      while (exps[j] == 0) ++j;
      lin[i * n + j] = images[i][idx];
      nonlinear[i][idx] = ring.zero();
    }
  }
  const auto lin_inv = invert_scalar_matrix(ring, lin, n);
  std::vector<Series<Ring>> vars;
  for (int j = 0; j < nv; ++j) vars.push_back(Series<Ring>::variable(ring, nv, deg, j));
  const auto apply_inverse = [&](const std::vector<Series<Ring>>& rhs) {
    std::vector<Series<Ring>> out;
    for (std::size_t i = 0; i < n; ++i) {
      Series<Ring> acc(ring, nv, deg);
      for (std::size_t j = 0; j < n; ++j) {
        if (!ring.is_zero(lin_inv[i * n + j])) acc += rhs[j] * lin_inv[i * n + j];
      }
      out.push_back(std::move(acc));
    }
    return out;
  };
  // g <- A^{-1} (s - N(g)); each pass fixes one more degree.
  std::vector<Series<Ring>> g = apply_inverse(vars);
  for (int pass = 2; pass <= deg; ++pass) {
    Substitution<Ring> sub(g, deg);
    std::vector<Series<Ring>> rhs;
    for (std::size_t i = 0; i < n; ++i) rhs.push_back(vars[i] - sub.apply(nonlinear[i]));
    g = apply_inverse(rhs);
  }
  return g;
}

#define CY3_INSTANTIATE_SERIES(R)                                                      \
  template class Series<R>;                                                            \
  template class Substitution<R>;                                                      \
  template Series<R> operator*(const Series<R>&, const Series<R>&);                   \
  template Series<R> invert(const Series<R>&);                                         \
  template Series<R> invert_nonzero(const Series<R>&);                                 \
  template Series<R> exp(const Series<R>&);                                            \
  template Series<R> log(const Series<R>&);                                            \
  template Series<R> pow(const Series<R>&, unsigned);                                  \
  template Series<R> derivative(const Series<R>&, int);                                \
  template Series<R> theta(const Series<R>&, int);                                     \
  template Series<R> integrate(const Series<R>&, int);                                 \
  template Series<R> substitute(const Series<R>&, const std::vector<Series<R>>&);     \
  template std::vector<Series<R>> revert(const std::vector<Series<R>>&);

CY3_INSTANTIATE_SERIES(PadicRing)
CY3_INSTANTIATE_SERIES(RationalRing)

#undef CY3_INSTANTIATE_SERIES

}  // namespace cy3

#include "cy3/crystal.hpp"

#include <algorithm>
#include <string>

#include "cy3/error.hpp"

namespace cy3 {

namespace {

std::vector<int> block_index(const std::vector<int>& exponents) { return exponents; }

PadicSeries constant_series(const PadicRing& ring, int nvars, int degree, const Padic& c) {
  return PadicSeries::constant(ring, nvars, degree, c);
}

bool is_block_unipotent_shape(const PadicMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const auto& ring = m.ring();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const auto& s = m(i, j);
      if (i == j) {
        PadicSeries one = constant_series(ring, m.nvars(), m.degree(), ring.one());
        for (std::size_t k = 0; k < s.size(); ++k) {
          if (!ring.equal(s[k], one[k])) return false;
        }
      } else {
        for (std::size_t k = 0; k < s.size(); ++k) {
          if (!ring.equal(s[k], ring.zero())) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

Lift standard_lift(const PadicRing& ring, int nvars, int degree) {
  Lift lift;
  const auto p = static_cast<int>(ring.prime());
  for (int j = 0; j < nvars; ++j) {
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    exps[static_cast<std::size_t>(j)] = p;
    lift.push_back(PadicSeries::monomial(ring, nvars, degree, exps, ring.one()));
  }
  return lift;
}

Lift shifted_lift(const PadicRing& ring, int nvars, int degree, long c) {
  Lift lift = standard_lift(ring, nvars, degree);
  const auto shift = ring.mul_int(ring.from_int(c), static_cast<long>(ring.prime()));
  for (int j = 0; j < nvars; ++j) {
    lift[static_cast<std::size_t>(j)] += PadicSeries::variable(ring, nvars, degree, j) * shift;
  }
  return lift;
}

void validate_lift(const Lift& lift, const PadicRing& ring, int nvars, int degree) {
  if (static_cast<int>(lift.size()) != nvars) {
    raise(ErrorKind::InvalidArgument, "lift has " + std::to_string(lift.size()) +
                                          " images for " + std::to_string(nvars) + " variables");
  }
  const Lift frob = standard_lift(ring, nvars, degree);
  for (std::size_t j = 0; j < lift.size(); ++j) {
    if (lift[j].nvars() != nvars || lift[j].degree() != degree || !(lift[j].ring() == ring)) {
      raise(ErrorKind::ShapeMismatch, "lift image " + std::to_string(j) + " has the wrong shape");
    }
    const auto diff = lift[j] - frob[j];
    for (std::size_t k = 0; k < diff.size(); ++k) {
      if (ring.valuation(lift[j][k]) < 0 || ring.valuation(diff[k]) < 1) {
        raise(ErrorKind::InvalidArgument,
              "image " + std::to_string(j) + " is not integral or not t^p mod p");
      }
    }
  }
}

std::vector<int> hodge_exponents(const std::vector<int>& hodge_numbers) {
  std::vector<int> exps;
  for (std::size_t i = 0; i < hodge_numbers.size(); ++i) {
    if (hodge_numbers[i] < 0) raise(ErrorKind::InvalidArgument, "negative Hodge number");
    for (int k = 0; k < hodge_numbers[i]; ++k) exps.push_back(static_cast<int>(i));
  }
  return exps;
}

PadicMatrix p_matrix(const PadicRing& ring, const std::vector<int>& exponents, int nvars,
                     int degree) {
  const auto n = exponents.size();
  PadicMatrix m(ring, n, n, nvars, degree);
  for (std::size_t i = 0; i < n; ++i) m(i, i)[0] = ring.power_of_p(exponents[i]);
  return m;
}

std::vector<PadicMatrix> connection_from_T(const PadicMatrix& T) {
  const auto tinv = inverse(T);
  std::vector<PadicMatrix> conn;
  for (int j = 0; j < T.nvars(); ++j) conn.push_back(tinv * derivative(T, j));
  return conn;
}

FCrystal FCrystal::from_T(PadicMatrix T, std::vector<int> hodge_numbers) {
  auto exps = hodge_exponents(hodge_numbers);
  if (exps.size() != T.rows() || T.rows() != T.cols()) {
    raise(ErrorKind::ShapeMismatch, "T is " + std::to_string(T.rows()) + "x" +
                                        std::to_string(T.cols()) + " but the Hodge numbers sum to " +
                                        std::to_string(exps.size()));
  }
  PadicMatrix empty(T.ring(), 0, 0, 0, 0);
  FCrystal c{std::move(hodge_numbers), std::move(exps), std::move(T), std::move(empty), {}};
  c.T_inverse = inverse(c.T);
  for (int j = 0; j < c.T.nvars(); ++j) c.connection.push_back(c.T_inverse * derivative(c.T, j));
  return c;
}

PadicMatrix frobenius_matrix(const FCrystal& c, const Lift& psi) {
  const Substitution<PadicRing> sub(psi, c.degree());
  const auto P = p_matrix(c.ring(), c.exponents, c.nvars(), c.degree());
  return c.T_inverse * (P * apply(sub, c.T));
}

Verdict check_structure(const FCrystal& c) {
  Verdict v("structure");
  const auto& ring = c.ring();
  const auto& b = block_index(c.exponents);
  const auto n = c.rank();
  const auto one = constant_series(ring, c.nvars(), c.degree(), ring.one());
  const auto zero = constant_series(ring, c.nvars(), c.degree(), ring.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const json where = {{"entry", {i, j}}};
      if (b[i] > b[j]) {
        compare_series(v, c.T(i, j), zero, c.degree(), uniform_precision(ring.context().precision),
                       where);
      } else if (b[i] == b[j]) {
        compare_series(v, c.T(i, j), i == j ? one : zero, c.degree(),
                       uniform_precision(ring.context().precision), where);
      } else {
        const int need = b[j] - b[i];
        const int val = ring.valuation(c.T(i, j)[0]);
        if (val < need) {
          json loc = where;
          loc["exponent"] = "constant";
          loc["valuation"] = val;
          loc["required"] = need;
          v.fail(need - val, std::move(loc));
        }
      }
    }
  }
  return v;
}

Verdict check_integrability(const FCrystal& c) {
  Verdict v("integrability");
  const int n = c.nvars();
  const int deg = c.degree() - 2;
  if (deg < 0) return v;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const auto& mj = c.connection[static_cast<std::size_t>(j)];
      const auto& mk = c.connection[static_cast<std::size_t>(k)];
      const auto lhs = derivative(mk, j) - derivative(mj, k) + mj * mk - mk * mj;
      const PadicMatrix zero(c.ring(), lhs.rows(), lhs.cols(), lhs.nvars(), lhs.degree());
      compare_matrices(v, lhs, zero, deg, json{{"pair", {j, k}}});
    }
  }
  return v;
}

Verdict check_transversality(const FCrystal& c) {
  Verdict v("transversality");
  const auto& b = c.exponents;
  const int deg = c.degree() - 1;
  for (std::size_t j = 0; j < c.connection.size(); ++j) {
    const auto& m = c.connection[j];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t col = 0; col < m.cols(); ++col) {
        const json where = {{"direction", j}, {"entry", {r, col}}};
        if (b[col] == b[r] + 1) {
          require_valuation(v, m(r, col), 0, deg, where);
        } else {
          const PadicSeries zero(c.ring(), c.nvars(), c.degree());
          compare_series(v, m(r, col), zero, deg, uniform_precision(c.ring().context().precision),
                         where);
        }
      }
    }
  }
  return v;
}

Verdict check_horizontality(const FCrystal& c, const Lift& phi, const PadicMatrix& m_phi) {
  Verdict v("horizontality");
  const int n = c.nvars();
  if (n == 0) return v;
  const Substitution<PadicRing> sub(phi, c.degree());
  std::vector<PadicMatrix> phi_m;
  for (const auto& m : c.connection) phi_m.push_back(apply(sub, m));
  for (int k = 0; k < n; ++k) {
    PadicMatrix pulled(c.ring(), c.rank(), c.rank(), n, c.degree());
    for (int j = 0; j < n; ++j) {
      const auto dphi = derivative(phi[static_cast<std::size_t>(j)], k);
      if (dphi.is_zero()) continue;
      auto term = phi_m[static_cast<std::size_t>(j)];
      term.scale(dphi);
      pulled += term;
    }
    const auto lhs = m_phi * pulled;
    const auto rhs = c.connection[static_cast<std::size_t>(k)] * m_phi + derivative(m_phi, k);
    compare_matrices(v, lhs, rhs, c.degree() - 1, json{{"direction", k}});
  }
  return v;
}

PadicMatrix taylor_transport(const FCrystal& c, const Lift& phi, const Lift& psi,
                             const PadicMatrix& m_phi) {
  const int n = c.nvars();
  const int deg = c.degree();
  const auto& ring = c.ring();
  if (n == 0) return m_phi;
  const auto table = MonomialTable::get(n, deg);
  const Substitution<PadicRing> sub(phi, deg);
  std::vector<PadicSeries> diffs;
  for (int j = 0; j < n; ++j) {
    diffs.push_back(psi[static_cast<std::size_t>(j)] - phi[static_cast<std::size_t>(j)]);
  }
  const int cutoff = ring.context().working_digits();
  // G_m and the prefactor prod_j (psi_j - phi_j)^{m_j} / m_j!, indexed like the table.
  std::vector<PadicMatrix> g;
  std::vector<PadicSeries> pref;
  std::vector<bool> live;
  g.reserve(table->size());
  g.push_back(PadicMatrix::identity(ring, c.rank(), n, deg));
  pref.push_back(PadicSeries::constant(ring, n, deg, ring.one()));
  live.push_back(true);
  PadicMatrix result = m_phi;
  for (std::size_t idx = 1; idx < table->size(); ++idx) {
    const auto exps = table->exponents(idx);
    int j = 0;
    while (exps[static_cast<std::size_t>(j)] == 0) ++j;
    const auto prev = table->shifted(idx, j, -1);
    if (!live[prev]) {
      g.push_back(g[prev]);
      pref.push_back(pref[prev]);
      live.push_back(false);
      continue;
    }
    const auto& mj = c.connection[static_cast<std::size_t>(j)];
    g.push_back(derivative(g[prev], j) + mj * g[prev]);
    auto pr = pref[prev] * diffs[static_cast<std::size_t>(j)];
    pr = pr * ring.inv(ring.from_int(exps[static_cast<std::size_t>(j)]));
    // Once the prefactor vanishes mod p^(M+G) so does every extension of it.
    int min_val = kInfiniteValuation;
    for (std::size_t k = 0; k < pr.size(); ++k) min_val = std::min(min_val, ring.valuation(pr[k]));
    const bool alive = min_val < cutoff;
    pref.push_back(pr);
    live.push_back(alive);
    if (!alive || g.back().is_zero()) continue;
    auto term = m_phi * apply(sub, g.back());
    term.scale(pr);
    result += term;
  }
  return result;
}

Verdict check_divisibility(const PadicMatrix& m_phi, const std::vector<int>& exponents,
                           int max_degree) {
  Verdict v("divisibility");
  for (std::size_t i = 0; i < m_phi.rows(); ++i) {
    for (std::size_t j = 0; j < m_phi.cols(); ++j) {
      require_valuation(v, m_phi(i, j), exponents[j], max_degree, json{{"entry", {i, j}}});
    }
  }
  return v;
}

PadicMatrix t0_product(const PadicMatrix& l0, const std::vector<int>& exponents) {
  const auto& ring = l0.ring();
  const auto n = l0.rows();
  if (l0.cols() != n || exponents.size() != n || l0.nvars() != 0) {
    raise(ErrorKind::ShapeMismatch, "t0_product needs a constant square matrix matching P");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (exponents[i] > exponents[i + 1]) {
      raise(ErrorKind::InvalidArgument, "P exponents must be non-decreasing");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = l0(i, j)[0];
      const bool ok = i > j ? ring.is_zero(x)
                            : (i == j ? ring.equal(x, ring.one()) : ring.valuation(x) >= 0);
      if (!ok) {
        raise(ErrorKind::NotUnipotent, "L0 entry (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") = " + ring.to_string(x) +
                                           " breaks unipotent integral form");
      }
    }
  }
  auto acc = PadicMatrix::identity(ring, n, 0, 0);
  const int terms = ring.context().working_digits();
  for (int m = 1; m <= terms; ++m) {
    PadicMatrix x = l0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!ring.is_zero(x(i, j)[0])) {
          x(i, j)[0] = ring.mul(x(i, j)[0], ring.power_of_p(m * (exponents[j] - exponents[i])));
        }
      }
    }
    acc = x * acc;
  }
  return acc;
}

Verdict check_t0_fixed_point(const PadicMatrix& t0, const PadicMatrix& l0,
                             const std::vector<int>& exponents) {
  Verdict v("t0_fixed_point");
  const auto& ring = t0.ring();
  const auto P = p_matrix(ring, exponents, 0, 0);
  auto Pinv = PadicMatrix(ring, t0.rows(), t0.cols(), 0, 0);
  for (std::size_t i = 0; i < exponents.size(); ++i) Pinv(i, i)[0] = ring.power_of_p(-exponents[i]);
  const auto rhs = Pinv * t0 * l0 * P;
  compare_matrices(v, t0, rhs, 0, json::object());
  return v;
}

PadicMatrix solve_T(const std::vector<PadicMatrix>& connection, const PadicMatrix& t0, int nvars,
                    int degree) {
  const auto& ring = t0.ring();
  const auto n = t0.rows();
  if (t0.nvars() != 0 || t0.cols() != n) raise(ErrorKind::ShapeMismatch, "T0 must be constant square");
  if (!is_block_unipotent_shape(t0)) raise(ErrorKind::NotUnipotent, "T0 is not unipotent");
  if (static_cast<int>(connection.size()) != nvars) {
    raise(ErrorKind::ShapeMismatch, "connection has the wrong number of directions");
  }
  // Theta = sum_j t_j M^(j); Euler: d T_d = [T Theta]_d.
  PadicMatrix theta(ring, n, n, nvars, degree);
  for (int j = 0; j < nvars; ++j) {
    auto term = connection[static_cast<std::size_t>(j)];
    term.scale(PadicSeries::variable(ring, nvars, degree, j));
    theta += term;
  }
  PadicMatrix T = t0.embed(nvars, degree);
  const auto& table = *MonomialTable::get(nvars, degree);
  for (int d = 1; d <= degree; ++d) {
    const auto prod = T * theta;
    const Padic inv_d = ring.inv(ring.from_int(d));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = table.degree_begin(d); k < table.degree_begin(d + 1); ++k) {
          T(i, j)[k] = ring.mul(prod(i, j)[k], inv_d);
        }
      }
    }
  }
  // dT = T M must now hold in every direction; otherwise M was not integrable.
  for (int j = 0; j < nvars; ++j) {
    Verdict v("integrable");
    compare_matrices(v, derivative(T, j), T * connection[static_cast<std::size_t>(j)], degree - 1,
                     json{{"direction", j}});
    if (!v.pass) {
      raise(ErrorKind::NotIntegrable, "dT = T M fails: " + v.location.dump());
    }
  }
  return T;
}

std::vector<int> newton_hodge_profile(const PadicMatrix& m0) {
  if (m0.rows() != m0.cols()) raise(ErrorKind::ShapeMismatch, "Smith form needs a square matrix");
  const auto& ring = m0.ring();
  const auto n = m0.rows();
  const int M = ring.context().precision;
  std::vector<Padic> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m0(i, j)[0];
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < n; ++k) {
    // full pivoting on least valuation, ties row-major
    std::size_t pr = n, pc = n;
    int best = kInfiniteValuation;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        const int v = ring.valuation(a[i * n + j]);
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (best >= M) {
      raise(ErrorKind::SingularModPM, "rank collapses mod p^" + std::to_string(M) + " after " +
                                          std::to_string(k) + " elementary divisors");
    }
    if (best < 0) raise(ErrorKind::NotIntegral, "Smith form needs an integral matrix");
    for (std::size_t j = 0; j < n; ++j) std::swap(a[pr * n + j], a[k * n + j]);
    for (std::size_t i = 0; i < n; ++i) std::swap(a[i * n + pc], a[i * n + k]);
    const Padic pinv = ring.inv(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (ring.is_zero(a[i * n + k])) continue;
      const Padic f = ring.mul(a[i * n + k], pinv);
      for (std::size_t j = k; j < n; ++j) {
        a[i * n + j] = ring.sub(a[i * n + j], ring.mul(f, a[k * n + j]));
      }
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (ring.is_zero(a[k * n + j])) continue;
      const Padic f = ring.mul(a[k * n + j], pinv);
      for (std::size_t i = k; i < n; ++i) {
        a[i * n + j] = ring.sub(a[i * n + j], ring.mul(f, a[i * n + k]));
      }
    }
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Verdict check_flat_section(const FCrystal& c, const PadicMatrix& e, const Lift& phi,
                           const PadicMatrix& m_phi, const Lift& psi, const PadicMatrix& m_psi) {
  Verdict v("flat_section");
  Verdict fixed("F_fixed"), flat("nabla_zero"), second("second_lift_fixed");
  const int deg = c.degree();
  const Substitution<PadicRing> sub_phi(phi, deg);
  const Substitution<PadicRing> sub_psi(psi, deg);
  compare_matrices(fixed, m_phi * apply(sub_phi, e), e, deg, json{{"lift", "phi"}});
  for (int j = 0; j < c.nvars(); ++j) {
    const auto nab = derivative(e, j) + c.connection[static_cast<std::size_t>(j)] * e;
    const PadicMatrix zero(c.ring(), nab.rows(), nab.cols(), nab.nvars(), nab.degree());
    compare_matrices(flat, nab, zero, deg - 1, json{{"direction", j}});
  }
  compare_matrices(second, m_psi * apply(sub_psi, e), e, deg, json{{"lift", "psi"}});
  for (const auto* sub : {&fixed, &flat, &second}) {
    v.details[sub->name] = sub->pass;
    v.absorb(*sub);
  }
  return v;
}

}  // namespace cy3

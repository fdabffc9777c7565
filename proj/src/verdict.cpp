#include "cy3/verdict.hpp"

#include <algorithm>

namespace cy3 {

void Verdict::fail(int deficit, json where) {
  if (pass) location = std::move(where);
  pass = false;
  worst_valuation_deficit = std::max(worst_valuation_deficit, deficit);
}

void Verdict::absorb(const Verdict& other) {
  if (!other.pass) {
    if (pass) {
      location = other.location;
      if (location.is_object() && !other.name.empty()) location["check"] = other.name;
    }
    pass = false;
  }
  worst_valuation_deficit = std::max(worst_valuation_deficit, other.worst_valuation_deficit);
}

json Verdict::to_json() const {
  json j;
  j["pass"] = pass;
  j["worst_valuation_deficit"] = worst_valuation_deficit;
  j["location"] = location.is_null() ? json::object() : location;
  if (!details.empty()) j["details"] = details;
  return j;
}

DegreePrecision uniform_precision(int digits) {
  return [digits](int) { return digits; };
}

std::string exponent_key(std::span<const int> exps) {
  std::string s = "[";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exps[i]);
  }
  return s + "]";
}

void compare_series(Verdict& v, const PadicSeries& lhs, const PadicSeries& rhs, int max_degree,
                    const DegreePrecision& prec, const json& where) {
  const auto& ring = lhs.ring();
  const auto& table = lhs.table();
  const std::size_t end = table.degree_begin(std::min(max_degree, lhs.degree()) + 1);
  for (std::size_t k = 0; k < end; ++k) {
    const int need = prec(table.total_degree(k));
    if (need <= 0) continue;
    const Padic diff = ring.sub(lhs[k], rhs[k]);
    const int val = ring.valuation(diff);
    if (val >= need) continue;
    json loc = where;
    loc["exponent"] = exponent_key(table.exponents(k));
    loc["lhs"] = ring.to_string(lhs[k]);
    loc["rhs"] = ring.to_string(rhs[k]);
    loc["required_digits"] = need;
    v.fail(need - val, std::move(loc));
  }
}

void compare_matrices(Verdict& v, const PadicMatrix& lhs, const PadicMatrix& rhs, int max_degree,
                      const DegreePrecision& prec, const json& where) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    json loc = where;
    loc["shape"] = "mismatch";
    v.fail(lhs.ring().context().precision, std::move(loc));
    return;
  }
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      json loc = where;
      loc["entry"] = {i, j};
      compare_series(v, lhs(i, j), rhs(i, j), max_degree, prec, loc);
    }
  }
}

void compare_matrices(Verdict& v, const PadicMatrix& lhs, const PadicMatrix& rhs, int max_degree,
                      const json& where) {
  compare_matrices(v, lhs, rhs, max_degree, uniform_precision(lhs.ring().context().precision),
                   where);
}

void require_valuation(Verdict& v, const PadicSeries& s, int min_valuation, int max_degree,
                       const json& where) {
  require_valuation(v, s, min_valuation, max_degree, uniform_precision(kInfiniteValuation), where);
}

void require_valuation(Verdict& v, const PadicSeries& s, int min_valuation, int max_degree,
                       const DegreePrecision& known, const json& where) {
  const auto& ring = s.ring();
  const auto& table = s.table();
  const std::size_t end = table.degree_begin(std::min(max_degree, s.degree()) + 1);
  for (std::size_t k = 0; k < end; ++k) {
    if (known(table.total_degree(k)) < min_valuation) continue;
    const int val = ring.valuation(s[k]);
    if (val >= min_valuation) continue;
    json loc = where;
    loc["exponent"] = exponent_key(table.exponents(k));
    loc["value"] = ring.to_string(s[k]);
    loc["valuation"] = val;
    v.fail(min_valuation - val, std::move(loc));
  }
}

}  // namespace cy3

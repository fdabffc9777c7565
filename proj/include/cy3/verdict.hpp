#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "cy3/series_matrix.hpp"

namespace cy3 {

using json = nlohmann::ordered_json;

// Outcome of one diagnostic. The deficit is how many p-adic digits were
// missing at the worst coefficient (0 when passing); location points at the
// first failing coefficient.
struct Verdict {
  std::string name;
  bool pass = true;
  int worst_valuation_deficit = 0;
  json location;  // null while passing
  json details = json::object();

  explicit Verdict(std::string n = {}) : name(std::move(n)) {}

  void fail(int deficit, json where);
  // Folds a sub-check into this verdict (first failure wins the location).
  void absorb(const Verdict& other);
  json to_json() const;
};

// Required number of digits for coefficients of total degree k.
using DegreePrecision = std::function<int(int)>;
DegreePrecision uniform_precision(int digits);

std::string exponent_key(std::span<const int> exps);

// lhs == rhs coefficientwise for total degree <= max_degree.
void compare_series(Verdict& v, const PadicSeries& lhs, const PadicSeries& rhs, int max_degree,
                    const DegreePrecision& prec, const json& where);
void compare_matrices(Verdict& v, const PadicMatrix& lhs, const PadicMatrix& rhs, int max_degree,
                      const DegreePrecision& prec, const json& where);
void compare_matrices(Verdict& v, const PadicMatrix& lhs, const PadicMatrix& rhs, int max_degree,
                      const json& where);
// Every coefficient up to max_degree has valuation >= min_valuation.
void require_valuation(Verdict& v, const PadicSeries& s, int min_valuation, int max_degree,
                       const json& where);
// Same, but coefficients of degree k are only examined when the value is known
// to at least min_valuation digits (known(k) >= min_valuation).
void require_valuation(Verdict& v, const PadicSeries& s, int min_valuation, int max_degree,
                       const DegreePrecision& known, const json& where);

}  // namespace cy3

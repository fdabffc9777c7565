#pragma once

#include <string>
#include <vector>

#include "cy3/cy3.hpp"
#include "cy3/verdict.hpp"

namespace cy3 {

// Series as {"ring", "p"?, "precision"?, "vars", "degree", "coeffs"}; only
// nonzero coefficients are written. p-adic units are written with all
// working digits so a reload reproduces the value bit for bit.
json to_json(const PadicSeries& s);
json to_json(const RationalSeries& s);
PadicSeries padic_series_from_json(const json& j, const PadicRing& ring);
RationalSeries rational_series_from_json(const json& j);

// Row-major array of rows of series.
json to_json(const PadicMatrix& m);
PadicMatrix padic_matrix_from_json(const json& j, const PadicRing& ring);

// Nonzero entries of a constant integer matrix as [[row, col, sign], ...].
json signed_block_spec(const PadicMatrix& J);
PadicMatrix matrix_from_signed_block_spec(const json& j, const PadicRing& ring, std::size_t n);

// {"p", "precision", "guard", "degree", "level", "hodge_numbers", "T", "P"}
json fcrystal_to_json(const FCrystal& c);
FCrystal fcrystal_from_json(const json& j);

// The FCrystal object plus {"h", "J", "Z", "tau23", "tau13", "tau12"}.
json cy3_to_json(const CY3Crystal& c, const PrepotentialData& d);

struct LoadedCY3 {
  CY3Crystal crystal;
  PrepotentialData data;  // as stored in the file, not re-derived from T
};
LoadedCY3 cy3_from_json(const json& j);

// {name: {"pass", "worst_valuation_deficit", "location"}}
json verdict_report(const std::vector<Verdict>& verdicts);

}  // namespace cy3

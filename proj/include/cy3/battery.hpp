#pragma once

#include <vector>

#include "cy3/cy3.hpp"
#include "cy3/verdict.hpp"

namespace cy3 {

struct BatteryOptions {
  long shift = 1;         // second lift psi(t) = t^p + shift * p * t
  bool omega = true;      // omega layer with f = 1 + t_1 when h >= 1
};

struct BatteryResult {
  std::vector<Verdict> verdicts;
  std::vector<int> newton_hodge_profile;
  int shift_valuation = kInfiniteValuation;  // of the canonical lift constants
  std::vector<int> canonical_digits;         // digits checked per degree for phi_can verdicts

  bool pass() const;
  const Verdict* find(const std::string& name) const;
  json to_json() const;
};

// Every verdict for one instance. `stored` is the prepotential data carried
// next to T (for instance in a file); the factorization verdict checks it
// against T. Errors raised by a check become failed verdicts.
BatteryResult run_battery(const CY3Crystal& c, const PrepotentialData& stored,
                          const BatteryOptions& opt = {});

}  // namespace cy3

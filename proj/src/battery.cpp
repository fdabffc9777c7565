#include "cy3/battery.hpp"

#include <algorithm>
#include <optional>

#include "cy3/error.hpp"

namespace cy3 {

namespace {

Verdict error_verdict(const std::string& name, const Error& e) {
  Verdict v(name);
  v.fail(0, json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
  return v;
}

// Runs fn; on a library error records failed verdicts under every name.
template <class Fn>
void attempt(std::vector<Verdict>& out, std::initializer_list<const char*> names, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    for (const char* n : names) out.push_back(error_verdict(n, e));
  }
}

Verdict check_factorization(const CY3Crystal& c, const PrepotentialData& d) {
  Verdict v("factorization");
  compare_matrices(v, assemble_T(d), c.crystal.T, c.degree(), json{{"matrix", "A(tau23) B"}});
  return v;
}

}  // namespace

bool BatteryResult::pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

const Verdict* BatteryResult::find(const std::string& name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

json BatteryResult::to_json() const {
  json out;
  json vs = json::object();
  for (const auto& v : verdicts) vs[v.name] = v.to_json();
  out["verdicts"] = vs;
  out["newton_hodge_profile"] = newton_hodge_profile;
  out["shift_valuation"] =
      shift_valuation == kInfiniteValuation ? json() : json(shift_valuation);
  out["canonical_digits"] = canonical_digits;
  out["pass"] = pass();
  return out;
}

BatteryResult run_battery(const CY3Crystal& c, const PrepotentialData& stored,
                          const BatteryOptions& opt) {
  BatteryResult res;
  auto& out = res.verdicts;
  const auto& r = c.ring();
  const int h = c.h, D = c.degree(), M = r.context().precision;

  out.push_back(check_structure(c.crystal));
  out.push_back(check_riemann(c.crystal.T, h));
  attempt(out, {"factorization"}, [&] { out.push_back(check_factorization(c, stored)); });
  attempt(out, {"integrability"}, [&] { out.push_back(check_integrability(c.crystal)); });
  out.push_back(check_transversality(c.crystal));

  const auto phi = standard_lift(r, h, D);
  const auto psi = shifted_lift(r, h, D, opt.shift);
  PadicMatrix m_phi(r, 0, 0, 0, 0), m_psi(r, 0, 0, 0, 0);
  bool have_frobenius = false;
  attempt(out, {"horizontality", "divisibility", "pairing", "newton_hodge", "change_of_lift",
                "flat_section"},
          [&] {
            m_phi = frobenius_matrix(c.crystal, phi);
            m_psi = frobenius_matrix(c.crystal, psi);
            have_frobenius = true;
          });
  if (have_frobenius) {
    out.push_back(check_horizontality(c.crystal, phi, m_phi));
    out.push_back(check_divisibility(m_phi, c.crystal.exponents, D));
    attempt(out, {"pairing"}, [&] { out.push_back(check_pairing(c, m_phi)); });
    Verdict nh("newton_hodge");
    try {
      res.newton_hodge_profile = newton_hodge_profile(m_phi.constant_part());
      if (res.newton_hodge_profile != c.crystal.exponents) {
        nh.fail(0, json{{"profile", res.newton_hodge_profile}, {"expected", c.crystal.exponents}});
      }
    } catch (const Error& e) {
      nh = error_verdict("newton_hodge", e);
    }
    out.push_back(nh);
    attempt(out, {"change_of_lift"}, [&] {
      Verdict v("change_of_lift");
      compare_matrices(v, taylor_transport(c.crystal, phi, psi, m_phi), m_psi, D, json::object());
      out.push_back(v);
    });
    attempt(out, {"flat_section"}, [&] {
      const auto e = c.crystal.T_inverse.block(0, 0, c.rank(), 1);
      out.push_back(check_flat_section(c.crystal, e, phi, m_phi, psi, m_psi));
    });
  }

  if (h > 0) {
    attempt(out, {"gradient_relations"}, [&] { out.push_back(check_gradient_relations(stored)); });
    attempt(out, {"yukawa_two_route", "yukawa_symmetry"}, [&] {
      auto y = yukawa_cubic(c, stored);
      out.push_back(y.two_route);
      out.push_back(y.symmetry);
    });
  }
  attempt(out, {"matcanfrob_two_route", "yukinnerproduct", "yukinteger", "qprops"}, [&] {
    const auto coords = canonical_coordinates(stored);
    res.shift_valuation = coords.shift_valuation;
    const auto prec = canonical_precision(coords, M, D);
    for (int k = 0; k <= D; ++k) res.canonical_digits.push_back(std::max(0, prec(k)));
    auto cf = compare_canonical_frobenius(c, stored, coords);
    out.push_back(cf.verdict);
    for (auto& v : integrality_verdicts(c, stored, coords, cf.via_T)) out.push_back(std::move(v));
  });

  if (opt.omega && h > 0 && have_frobenius) {
    std::optional<OmegaBasis> omega;
    attempt(out, {"omega_duality", "solution_column"}, [&] {
      const auto f = PadicSeries::constant(r, h, D, r.one()) + PadicSeries::variable(r, h, D, 0);
      omega = omega_layer(c, stored, f, phi);
      out.push_back(omega->duality);
      out.push_back(solution_column(c, *omega).verdict);
    });
    if (omega && h == 1) {
      attempt(out, {"picard_fuchs"}, [&] { out.push_back(picard_fuchs_spot_check(c, *omega)); });
    }
  }
  return res;
}

}  // namespace cy3

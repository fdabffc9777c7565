#include "cy3/serialize.hpp"

#include "cy3/error.hpp"

namespace cy3 {

namespace {

std::vector<std::string> var_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return names;
}

template <class Ring>
json series_json(const Series<Ring>& s, json head) {
  head["vars"] = var_names(s.nvars());
  head["degree"] = s.degree();
  json coeffs = json::object();
  const auto& table = s.table();
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s.ring().is_zero(s[k])) continue;
    coeffs[exponent_key(table.exponents(k))] = s.ring().to_string(s[k]);
  }
  head["coeffs"] = std::move(coeffs);
  return head;
}

// Fills s from the "coeffs" object; keys are JSON arrays of exponents.
template <class Ring>
void read_coeffs(Series<Ring>& s, const json& coeffs) {
  if (!coeffs.is_object()) raise(ErrorKind::ParseError, "series \"coeffs\" must be an object");
  for (const auto& [key, value] : coeffs.items()) {
    const json exps = json::parse(key, nullptr, false);
    if (!exps.is_array() || exps.size() != static_cast<std::size_t>(s.nvars())) {
      raise(ErrorKind::ParseError, "bad exponent key '" + key + "'");
    }
    std::vector<int> e;
    for (const auto& x : exps) {
      if (!x.is_number_integer()) raise(ErrorKind::ParseError, "bad exponent key '" + key + "'");
      e.push_back(x.get<int>());
    }
    const auto idx = s.table().index_of(e);
    if (idx == MonomialTable::npos) {
      raise(ErrorKind::ParseError, "exponent " + key + " outside the degree cap");
    }
    if (!value.is_string()) raise(ErrorKind::ParseError, "coefficients must be strings");
    s[idx] = s.ring().parse(value.template get<std::string>());
  }
}

int nvars_of(const json& j) {
  const auto& vars = j.at("vars");
  if (!vars.is_array()) raise(ErrorKind::ParseError, "series \"vars\" must be an array");
  return static_cast<int>(vars.size());
}

template <class Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) raise(ErrorKind::ParseError, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(x.get<int>());
  return out;
}

PadicRing ring_from_json(const json& j) {
  const auto p = j.at("p").get<unsigned long>();
  const int precision = j.at("precision").get<int>();
  const int degree = j.at("degree").get<int>();
  if (j.contains("guard")) {
    const int guard = j.at("guard").get<int>();
    return PadicRing(PadicContext::create(p, precision, guard, 3 + guard));
  }
  return PadicRing(PadicContext::for_degree(p, precision, degree));
}

}  // namespace

json to_json(const PadicSeries& s) {
  const auto& ctx = s.ring().context();
  return series_json(s, json{{"ring", "padic"}, {"p", ctx.p}, {"precision", ctx.precision}});
}

json to_json(const RationalSeries& s) { return series_json(s, json{{"ring", "rational"}}); }

PadicSeries padic_series_from_json(const json& j, const PadicRing& ring) {
  return guarded([&] {
    if (j.at("ring") != "padic") raise(ErrorKind::ParseError, "expected a p-adic series");
    if (j.contains("p") && j.at("p").get<unsigned long>() != ring.prime()) {
      raise(ErrorKind::ParseError, "series prime does not match");
    }
    if (j.contains("precision") && j.at("precision").get<int>() != ring.context().precision) {
      raise(ErrorKind::ParseError, "series precision does not match");
    }
    PadicSeries s(ring, nvars_of(j), j.at("degree").get<int>());
    read_coeffs(s, j.at("coeffs"));
    return s;
  });
}

RationalSeries rational_series_from_json(const json& j) {
  return guarded([&] {
    if (j.at("ring") != "rational") raise(ErrorKind::ParseError, "expected a rational series");
    RationalSeries s(RationalRing{}, nvars_of(j), j.at("degree").get<int>());
    read_coeffs(s, j.at("coeffs"));
    return s;
  });
}

json to_json(const PadicMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

PadicMatrix padic_matrix_from_json(const json& j, const PadicRing& ring) {
  return guarded([&] {
    if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty()) {
      raise(ErrorKind::ParseError, "matrix must be a non-empty array of rows");
    }
    const auto rows = j.size(), cols = j.front().size();
    const auto first = padic_series_from_json(j.front().front(), ring);
    PadicMatrix m(ring, rows, cols, first.nvars(), first.degree());
    for (std::size_t r = 0; r < rows; ++r) {
      if (!j[r].is_array() || j[r].size() != cols) raise(ErrorKind::ParseError, "ragged matrix");
      for (std::size_t c = 0; c < cols; ++c) {
        auto s = padic_series_from_json(j[r][c], ring);
        if (!s.same_shape(first)) raise(ErrorKind::ParseError, "matrix entries differ in shape");
        m(r, c) = std::move(s);
      }
    }
    return m;
  });
}

json signed_block_spec(const PadicMatrix& J) {
  const auto& r = J.ring();
  json out = json::array();
  for (std::size_t i = 0; i < J.rows(); ++i) {
    for (std::size_t k = 0; k < J.cols(); ++k) {
      const auto& x = J(i, k).constant_term();
      if (r.is_zero(x)) continue;
      int sign = 0;
      if (r.equal(x, r.one())) sign = 1;
      if (r.equal(x, r.neg(r.one()))) sign = -1;
      if (sign == 0) raise(ErrorKind::InvalidArgument, "Gramm entries must be 0 or +-1");
      out.push_back(json::array({i, k, sign}));
    }
  }
  return out;
}

PadicMatrix matrix_from_signed_block_spec(const json& j, const PadicRing& ring, std::size_t n) {
  return guarded([&] {
    if (!j.is_array()) raise(ErrorKind::ParseError, "\"J\" must be an array of [row, col, sign]");
    PadicMatrix J(ring, n, n, 0, 0);
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != 3) raise(ErrorKind::ParseError, "bad Gramm entry");
      const auto i = e[0].get<std::size_t>(), k = e[1].get<std::size_t>();
      const int sign = e[2].get<int>();
      if (i >= n || k >= n || (sign != 1 && sign != -1)) {
        raise(ErrorKind::ParseError, "bad Gramm entry " + e.dump());
      }
      J(i, k)[0] = ring.from_int(sign);
    }
    return J;
  });
}

json fcrystal_to_json(const FCrystal& c) {
  const auto& ctx = c.ring().context();
  return json{{"p", ctx.p},
              {"precision", ctx.precision},
              {"guard", ctx.guard},
              {"degree", c.degree()},
              {"level", c.level()},
              {"hodge_numbers", c.hodge_numbers},
              {"T", to_json(c.T)},
              {"P", c.exponents}};
}

FCrystal fcrystal_from_json(const json& j) {
  return guarded([&] {
    const auto ring = ring_from_json(j);
    auto T = padic_matrix_from_json(j.at("T"), ring);
    auto hodge = int_list(j.at("hodge_numbers"), "\"hodge_numbers\"");
    auto fc = FCrystal::from_T(std::move(T), hodge);
    if (j.contains("P") && int_list(j.at("P"), "\"P\"") != fc.exponents) {
      raise(ErrorKind::ParseError, "\"P\" does not match the Hodge numbers");
    }
    if (j.contains("level") && j.at("level").get<int>() != fc.level()) {
      raise(ErrorKind::ParseError, "\"level\" does not match the Hodge numbers");
    }
    return fc;
  });
}

json cy3_to_json(const CY3Crystal& c, const PrepotentialData& d) {
  json out = fcrystal_to_json(c.crystal);
  out["h"] = c.h;
  out["J"] = signed_block_spec(c.J);
  out["Z"] = to_json(d.Z);
  out["tau23"] = to_json(d.tau23);
  out["tau13"] = to_json(d.tau13);
  out["tau12"] = to_json(d.tau12);
  return out;
}

LoadedCY3 cy3_from_json(const json& j) {
  return guarded([&] {
    const auto ring = ring_from_json(j);
    const int h = j.at("h").get<int>();
    if (h < 0) raise(ErrorKind::ParseError, "\"h\" must be non-negative");
    auto T = padic_matrix_from_json(j.at("T"), ring);
    const auto n = static_cast<std::size_t>(2 * h + 2);
    if (T.rows() != n || T.cols() != n) raise(ErrorKind::ParseError, "T has the wrong size");
    if (j.contains("hodge_numbers") &&
        int_list(j.at("hodge_numbers"), "\"hodge_numbers\"") != cy3_hodge_numbers(h)) {
      raise(ErrorKind::ParseError, "\"hodge_numbers\" must be (1, h, h, 1)");
    }
    auto J = matrix_from_signed_block_spec(j.at("J"), ring, n);
    // h = 0 keeps 0 x 1 blocks, which have no JSON rows to carry the shape
    const auto block = [&](const char* key, std::size_t rows, std::size_t cols) {
      if (rows == 0) return PadicMatrix(ring, 0, cols, h, T.degree());
      return padic_matrix_from_json(j.at(key), ring);
    };
    const auto hs = static_cast<std::size_t>(h);
    PrepotentialData d{padic_series_from_json(j.at("Z"), ring), block("tau23", hs, 1),
                       block("tau13", hs, 1), block("tau12", hs, hs)};
    return LoadedCY3{CY3Crystal::from_T(std::move(T), h, std::move(J)), std::move(d)};
  });
}

json verdict_report(const std::vector<Verdict>& verdicts) {
  json out = json::object();
  for (const auto& v : verdicts) out[v.name] = v.to_json();
  return out;
}

}  // namespace cy3

#include <cstdio>
#include <random>

#include <gtest/gtest.h>

#include "cy3/battery.hpp"
#include "cy3/error.hpp"
#include "cy3/mirror.hpp"
#include "cy3/report.hpp"
#include "cy3/serialize.hpp"
#include "support.hpp"

namespace cy3 {
namespace {

using testing::matrix_equal;
using testing::padic;
using testing::series_equal;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(SeriesJson, Format) {
  const auto r = padic(5, 4, 3);
  PadicSeries s(r, 2, 3);
  s.set_coeff(std::vector<int>{1, 2}, r.from_int(50));
  const auto j = to_json(s);
  EXPECT_EQ(j["ring"], "padic");
  EXPECT_EQ(j["p"], 5);
  EXPECT_EQ(j["precision"], 4);
  EXPECT_EQ(j["vars"], json::array({"t1", "t2"}));
  EXPECT_EQ(j["degree"], 3);
  EXPECT_EQ(j["coeffs"].size(), 1u);
  EXPECT_EQ(j["coeffs"]["[1,2]"], "5^2*2");

  RationalSeries q(RationalRing{}, 1, 2);
  q[1] = mpq_class(-3, 4);
  const auto jq = to_json(q);
  EXPECT_EQ(jq["ring"], "rational");
  EXPECT_FALSE(jq.contains("p"));
  EXPECT_EQ(jq["coeffs"]["[1]"], "-3/4");
}

TEST(SeriesJson, PadicRoundTripKeepsGuardDigits) {
  std::mt19937_64 rng(3);
  const auto r = padic(7, 5, 4);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = testing::random_series(r, 2, 4, rng, 1000000);
    s[3] = r.mul(r.inv(r.from_int(49)), r.from_int(3));
    const auto back = padic_series_from_json(to_json(s), r);
    ASSERT_TRUE(back.same_shape(s));
    for (std::size_t k = 0; k < s.size(); ++k) {
      EXPECT_EQ(back[k].exponent(), s[k].exponent());
      EXPECT_EQ(back[k].unit(), s[k].unit());
    }
  }
}

TEST(SeriesJson, RationalRoundTrip) {
  RationalSeries q(RationalRing{}, 2, 3);
  q[0] = mpq_class("123456789012345678901234567890/7");
  q[0].canonicalize();
  q[4] = -2;
  EXPECT_TRUE(series_equal(rational_series_from_json(to_json(q)), q));
}

TEST(SeriesJson, Errors) {
  const auto r = padic(5, 4, 3);
  PadicSeries s(r, 1, 3);
  s[1] = r.one();
  auto j = to_json(s);
  EXPECT_EQ(kind_of([&] { padic_series_from_json(j, padic(7, 4, 3)); }), ErrorKind::ParseError);
  auto bad = j;
  bad["coeffs"]["[4]"] = "1";
  EXPECT_EQ(kind_of([&] { padic_series_from_json(bad, r); }), ErrorKind::ParseError);
  bad = j;
  bad["coeffs"]["[1]"] = "5^x*1";
  EXPECT_EQ(kind_of([&] { padic_series_from_json(bad, r); }), ErrorKind::ParseError);
  bad = j;
  bad["coeffs"]["[1,0]"] = "1";
  EXPECT_EQ(kind_of([&] { padic_series_from_json(bad, r); }), ErrorKind::ParseError);
  bad = j;
  bad.erase("degree");
  EXPECT_EQ(kind_of([&] { padic_series_from_json(bad, r); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] { rational_series_from_json(j); }), ErrorKind::ParseError);
}

TEST(GrammJson, SignedBlockSpecRoundTrip) {
  const auto r = padic(5, 8, 6);
  for (int h : {0, 1, 3}) {
    const auto J = gramm_matrix(r, h);
    const auto spec = signed_block_spec(J);
    EXPECT_EQ(spec.size(), static_cast<std::size_t>(2 * h + 2));
    EXPECT_TRUE(matrix_equal(matrix_from_signed_block_spec(spec, r, J.rows()), J));
  }
  EXPECT_EQ(kind_of([&] {
              matrix_from_signed_block_spec(json::array({json::array({0, 9, 1})}), r, 4);
            }),
            ErrorKind::ParseError);
  EXPECT_EQ(kind_of([&] {
              matrix_from_signed_block_spec(json::array({json::array({0, 1, 2})}), r, 4);
            }),
            ErrorKind::ParseError);
}

TEST(CrystalJson, FCrystalRoundTrip) {
  std::mt19937_64 rng(8);
  const auto r = padic(5, 6, 4);
  const std::vector<int> hodge{1, 2, 1};
  auto T = testing::random_block_T(r, hodge_exponents(hodge), 2, 4, rng);
  const auto c = FCrystal::from_T(T, hodge);
  const auto j = fcrystal_to_json(c);
  EXPECT_EQ(j["level"], 2);
  EXPECT_EQ(j["P"], json::array({0, 1, 1, 2}));
  const auto back = fcrystal_from_json(j);
  EXPECT_TRUE(matrix_equal(back.T, c.T));
  EXPECT_EQ(back.exponents, c.exponents);
  auto bad = j;
  bad["P"] = json::array({0, 1, 2, 2});
  EXPECT_EQ(kind_of([&] { fcrystal_from_json(bad); }), ErrorKind::ParseError);
}

TEST(CrystalJson, CY3RoundTripVerifies) {
  for (int h : {0, 1, 2}) {
    SynthOptions o;
    o.seed = 40 + static_cast<unsigned>(h);
    o.h = h;
    o.mode = h == 2 ? SynthMode::Generic : SynthMode::CanonicalChart;
    const auto s = synth_cy3(o);
    const auto j = cy3_to_json(s.crystal, s.data);
    EXPECT_EQ(j["h"], h);
    EXPECT_EQ(j["hodge_numbers"], json::array({1, h, h, 1}));
    // the text form must survive too
    const auto loaded = cy3_from_json(json::parse(j.dump()));
    EXPECT_TRUE(matrix_equal(loaded.crystal.crystal.T, s.crystal.crystal.T)) << "h = " << h;
    EXPECT_TRUE(matrix_equal(loaded.crystal.J, s.crystal.J));
    EXPECT_TRUE(series_equal(loaded.data.Z, s.data.Z));
    const auto res = run_battery(loaded.crystal, loaded.data);
    for (const auto& v : res.verdicts) EXPECT_TRUE(v.pass) << "h = " << h << " " << v.name;
  }
}

TEST(CrystalJson, FlippedGrammSignFailsPairing) {
  SynthOptions o;
  o.seed = 7;
  const auto s = synth_cy3(o);
  auto j = cy3_to_json(s.crystal, s.data);
  for (auto& e : j["J"]) {
    if (e[0] == 1 && e[1] == 2) e[2] = -e[2].get<int>();
  }
  const auto loaded = cy3_from_json(j);
  const auto res = run_battery(loaded.crystal, loaded.data);
  const auto* pairing = res.find("pairing");
  ASSERT_NE(pairing, nullptr);
  EXPECT_FALSE(pairing->pass);
  EXPECT_EQ(pairing->location["check"], "connection_skew");
  EXPECT_FALSE(res.pass());
}

TEST(CrystalJson, StoredDataMustFactorT) {
  SynthOptions o;
  o.seed = 9;
  const auto s = synth_cy3(o);
  auto j = cy3_to_json(s.crystal, s.data);
  j["Z"]["coeffs"]["[4]"] = "5^3*1";
  const auto loaded = cy3_from_json(j);
  const auto res = run_battery(loaded.crystal, loaded.data);
  EXPECT_FALSE(res.find("factorization")->pass);
}

TEST(CrystalJson, MalformedInput) {
  SynthOptions o;
  const auto s = synth_cy3(o);
  const auto good = cy3_to_json(s.crystal, s.data);
  auto bad = good;
  bad["h"] = 2;
  EXPECT_EQ(kind_of([&] { cy3_from_json(bad); }), ErrorKind::ParseError);
  bad = good;
  bad.erase("T");
  EXPECT_EQ(kind_of([&] { cy3_from_json(bad); }), ErrorKind::ParseError);
  bad = good;
  bad["T"][0].erase(0);
  EXPECT_EQ(kind_of([&] { cy3_from_json(bad); }), ErrorKind::ParseError);
}

TEST(VerdictReport, Shape) {
  Verdict a("alpha"), b("beta");
  b.fail(2, json{{"entry", {0, 1}}});
  const auto r = verdict_report({a, b});
  EXPECT_EQ(r["alpha"]["pass"], true);
  EXPECT_EQ(r["alpha"]["worst_valuation_deficit"], 0);
  EXPECT_TRUE(r["alpha"]["location"].is_object());
  EXPECT_EQ(r["beta"]["pass"], false);
  EXPECT_EQ(r["beta"]["worst_valuation_deficit"], 2);
  EXPECT_EQ(r["beta"]["location"]["entry"], json::array({0, 1}));
}

json without_timings(json j) {
  j.erase("timings_ms");
  return j;
}

TEST(Commands, QuinticAndFamilyAgree) {
  RunConfig cfg;
  cfg.command = "quintic";
  cfg.degree = 5;
  cfg.primes = {2, 3, 5, 7};
  const auto q = cmd_quintic(cfg);
  EXPECT_TRUE(q.pass);
  EXPECT_EQ(q.body["checks"]["mirror_map_fixture"], true);
  EXPECT_EQ(q.body["checks"]["b_fixture"], true);

  const std::string path = ::testing::TempDir() + "quintic_spec.json";
  write_text_file(path, to_json(quintic_family(5, {2, 3, 5, 7})).dump());
  RunConfig fam;
  fam.command = "family run";
  fam.inputs = {path};
  const auto f = cmd_family(fam);
  EXPECT_TRUE(f.pass);
  for (const char* key : {"family", "mirror_map", "b", "integrality"}) {
    EXPECT_EQ(f.body[key], q.body[key]) << key;
  }
  std::remove(path.c_str());
}

TEST(Commands, DegreeOneRun) {
  RunConfig cfg;
  cfg.command = "quintic";
  cfg.degree = 1;
  const auto q = cmd_quintic(cfg);
  EXPECT_TRUE(q.pass);
  EXPECT_EQ(q.body["b"], json::array({"575/1"}));
}

TEST(Commands, Deterministic) {
  RunConfig cfg;
  cfg.command = "crystal synth";
  cfg.seed = 12;
  cfg.h = 2;
  const auto a = cmd_crystal_synth(cfg), b = cmd_crystal_synth(cfg);
  EXPECT_EQ(a.body.dump(), b.body.dump());
  EXPECT_EQ(a.body["generator"]["seed"], 12);

  const std::string path = ::testing::TempDir() + "crystal12.json";
  write_text_file(path, a.body.dump());
  RunConfig v;
  v.command = "crystal verify";
  v.inputs = {path};
  const auto r1 = cmd_crystal_verify(v), r2 = cmd_crystal_verify(v);
  EXPECT_TRUE(r1.pass);
  EXPECT_EQ(without_timings(r1.body).dump(), without_timings(r2.body).dump());
  std::remove(path.c_str());

  RunConfig qc;
  qc.command = "quintic";
  qc.degree = 6;
  EXPECT_EQ(without_timings(cmd_quintic(qc).body).dump(),
            without_timings(cmd_quintic(qc).body).dump());
}

TEST(Commands, ConfigErrors) {
  RunConfig cfg;
  cfg.command = "crystal synth";
  cfg.p = 3;
  EXPECT_EQ(exit_code_for(kind_of([&] { cmd_crystal_synth(cfg); })), 2);
  cfg.p = 9;
  EXPECT_EQ(exit_code_for(kind_of([&] { cmd_crystal_synth(cfg); })), 2);
  RunConfig q;
  q.command = "quintic";
  q.primes = {2, 6};
  EXPECT_EQ(exit_code_for(kind_of([&] { cmd_quintic(q); })), 2);
  RunConfig v;
  v.command = "crystal verify";
  v.inputs = {"/nonexistent/crystal.json"};
  EXPECT_EQ(exit_code_for(kind_of([&] { cmd_crystal_verify(v); })), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::NotMUM), 1);
}

}  // namespace
}  // namespace cy3

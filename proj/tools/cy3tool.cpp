#include <iostream>

#include <CLI11.hpp>

#include "cy3/report.hpp"

namespace {

using cy3::RunConfig;

int emit(const cy3::Report& rep, const RunConfig& cfg, bool to_stdout) {
  const auto text = rep.body.dump(2) + "\n";
  if (!cfg.out.empty()) cy3::write_text_file(cfg.out, text);
  if (to_stdout || cfg.out.empty()) std::cout << text;
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"F-crystal and mirror-map verification tool", "cy3tool"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help");
  app.set_version_flag("--version", cy3::kToolVersion);
  RunConfig cfg;
  std::string mode = "canonical_chart";

  const auto add_mirror_flags = [&](CLI::App* sub) {
    sub->add_option("--degree", cfg.degree, "series degree")->check(CLI::PositiveNumber);
    sub->add_option("--primes", cfg.primes, "primes for the integrality test")->delimiter(',');
    sub->add_option("--out", cfg.out, "also write the report here");
    sub->add_flag("-v,--verbose", cfg.verbosity);
  };

  auto* quintic = app.add_subcommand("quintic", "mirror pipeline on the quintic");
  add_mirror_flags(quintic);
  std::string preset;
  quintic->add_option("--preset", preset, "read the quintic FamilySpec from this file");

  auto* family = app.add_subcommand("family", "one-parameter families");
  family->require_subcommand(1);
  auto* family_run = family->add_subcommand("run", "mirror pipeline on a FamilySpec file");
  std::string spec_path;
  family_run->add_option("spec", spec_path, "FamilySpec JSON")->required();
  add_mirror_flags(family_run);

  auto* crystal = app.add_subcommand("crystal", "CY3 crystals");
  crystal->require_subcommand(1);
  auto* synth = crystal->add_subcommand("synth", "generate a CY3 crystal");
  synth->add_option("--seed", cfg.seed);
  synth->add_option("--h", cfg.h);
  synth->add_option("--p", cfg.p);
  synth->add_option("--prec", cfg.precision);
  synth->add_option("--deg", cfg.crystal_degree);
  synth->add_option("--mode", mode)->check(CLI::IsMember({"canonical_chart", "generic"}));
  synth->add_option("--shift-valuation", cfg.shift_valuation, "generic mode: v(tau_i(0))");
  synth->add_option("--out", cfg.out, "write the crystal here instead of stdout");
  auto* verify = crystal->add_subcommand("verify", "run the verdict battery on a crystal file");
  std::string crystal_path;
  verify->add_option("crystal", crystal_path, "CY3 crystal JSON")->required();
  verify->add_option("--out", cfg.out, "also write the report here");
  verify->add_flag("-v,--verbose", cfg.verbosity);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (quintic->parsed()) {
      cfg.command = "quintic";
      if (!preset.empty()) cfg.inputs.push_back(preset);
      cfg.degree_given = quintic->count("--degree") > 0;
      cfg.primes_given = quintic->count("--primes") > 0;
      return emit(cy3::cmd_quintic(cfg), cfg, true);
    }
    if (family_run->parsed()) {
      cfg.command = "family run";
      cfg.inputs.push_back(spec_path);
      cfg.degree_given = family_run->count("--degree") > 0;
      cfg.primes_given = family_run->count("--primes") > 0;
      return emit(cy3::cmd_family(cfg), cfg, true);
    }
    if (synth->parsed()) {
      cfg.command = "crystal synth";
      cfg.mode = mode == "generic" ? cy3::SynthMode::Generic : cy3::SynthMode::CanonicalChart;
      return emit(cy3::cmd_crystal_synth(cfg), cfg, false);
    }
    if (verify->parsed()) {
      cfg.command = "crystal verify";
      cfg.inputs.push_back(crystal_path);
      const auto rep = cy3::cmd_crystal_verify(cfg);
      const int code = emit(rep, cfg, true);
      if (!rep.pass) {
        for (const auto& [name, v] : rep.body["verdicts"].items()) {
          if (!v["pass"].get<bool>()) {
            std::cerr << "cy3tool: " << name << " failed at " << v["location"].dump() << "\n";
          }
        }
      }
      return code;
    }
  } catch (const cy3::Error& e) {
    std::cerr << "cy3tool: " << e.what() << "\n";
    return cy3::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "cy3tool: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

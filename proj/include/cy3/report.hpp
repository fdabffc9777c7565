#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cy3/cy3.hpp"
#include "cy3/error.hpp"
#include "cy3/verdict.hpp"

namespace cy3 {

inline constexpr const char* kToolName = "cy3tool";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
  std::string command;  // "quintic", "family run", "crystal synth", "crystal verify"
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  int h = 1;
  unsigned long p = 5;
  int precision = 8;
  int crystal_degree = 6;
  SynthMode mode = SynthMode::CanonicalChart;
  int shift_valuation = 2;
  int degree = 10;  // mirror pipeline
  bool degree_given = false;
  std::vector<unsigned long> primes{2, 3, 5, 7, 11, 13};
  bool primes_given = false;
  std::string out;
  int verbosity = 0;
};

// InvalidArgument on anything a command cannot run with.
void validate(const RunConfig& cfg);
json config_json(const RunConfig& cfg);

struct Report {
  json body;
  bool pass = false;
};

// Mirror pipeline on the built-in quintic (or inputs[0] as a preset file),
// checked against the known expansions.
Report cmd_quintic(const RunConfig& cfg);
// Mirror pipeline on the FamilySpec in inputs[0]; --degree / --primes override.
Report cmd_family(const RunConfig& cfg);
// body is the serialized CY3Crystal plus the generator record.
Report cmd_crystal_synth(const RunConfig& cfg);
// Loads inputs[0] and runs the verdict battery.
Report cmd_crystal_verify(const RunConfig& cfg);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// 2 for malformed input or configuration, 1 for everything else.
int exit_code_for(ErrorKind kind);

}  // namespace cy3

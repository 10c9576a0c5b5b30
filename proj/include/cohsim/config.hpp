// Scenario configuration: flat INI-style key-value files, one section per
// scenario, exactly one section present per run.
//
// Grammar: `[section]` headers, `key = value` pairs, `#` comments, blank
// lines ignored. List values are comma-separated. Sections: [cphase],
// [spdc], [conservation], [tomo-roundtrip]. Top-level keys before any
// section: seed, out.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cohsim {

enum class Scenario { CPhase, Spdc, Conservation, TomoRoundtrip };

// Default root seed, documented in the README; override with --seed.
inline constexpr std::uint64_t kDefaultSeed = 20170529;

struct RunConfig {
  Scenario scenario = Scenario::CPhase;
  std::uint64_t seed = kDefaultSeed;
  std::string out_dir = ".";

  struct CPhaseBlock {
    std::vector<double> phis_over_pi = {0, 0.05, 0.125, 0.25, 0.5, 0.75, 1};
    double white_noise_weight = 0.0;
    int curve_points = 200;
    // > 0 turns on bootstrap tomography uncertainties per sweep point.
    long tomo_counts_per_setting = 0;
    int tomo_replicates = 50;
  } cphase;

  struct SpdcBlock {
    std::vector<double> displacements_um = {0,  26, 42,  56,  72,
                                            86, 100, 120, 138, 158};
    bool raw_displacements = false;  // subtract bias_um before evaluating
    double fit_offset = 0.029;
    double fit_amplitude = 0.945;
    double fwhm_um = 142.0;
    double triplet_visibility = 0.94;
    double bias_um = 84.0;
    int curve_points = 200;
  } spdc;

  struct ConservationBlock {
    int trials = 10000;
  } conservation;

  struct TomoBlock {
    int states = 50;
    long counts_per_setting = 10000;
    int replicates = 50;
  } tomo;
};

struct Diagnostic {
  int line = 0;
  std::string field;
  std::string message;
};

struct ParseResult {
  RunConfig config;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

// Parses and range-checks a config file without running anything.
ParseResult parse_config_file(const std::string& path);

}  // namespace cohsim

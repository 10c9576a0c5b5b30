#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cohsim/config.hpp"

using namespace cohsim;

namespace {

struct TempConfig {
  std::string path;
  explicit TempConfig(const std::string& body)
      : path("config_test_tmp.ini") {
    std::ofstream out(path);
    out << body;
  }
  ~TempConfig() { std::remove(path.c_str()); }
};

bool has_field(const ParseResult& r, const std::string& field) {
  for (const auto& d : r.diagnostics)
    if (d.field == field) return true;
  return false;
}

}  // namespace

TEST_CASE("default cphase config parses cleanly") {
  TempConfig f("seed = 7\n[cphase]\nwhite_noise_weight = 0.05\n");
  ParseResult r = parse_config_file(f.path);
  CHECK(r.ok());
  CHECK(r.config.scenario == Scenario::CPhase);
  CHECK(r.config.seed == 7);
  CHECK(r.config.cphase.white_noise_weight == doctest::Approx(0.05));
}

TEST_CASE("spdc defaults and range diagnostics") {
  TempConfig ok("[spdc]\n");
  CHECK(parse_config_file(ok.path).ok());

  TempConfig bad("[spdc]\nfwhm_um = -1\n");
  ParseResult r = parse_config_file(bad.path);
  CHECK_FALSE(r.ok());
  CHECK(has_field(r, "fwhm_um"));
}

TEST_CASE("exactly one scenario section") {
  TempConfig two("[cphase]\n[spdc]\n");
  ParseResult r = parse_config_file(two.path);
  CHECK_FALSE(r.ok());
  CHECK(has_field(r, "scenario"));

  TempConfig none("seed = 1\n");
  CHECK(has_field(parse_config_file(none.path), "scenario"));
}

TEST_CASE("malformed input produces line diagnostics") {
  TempConfig f("[cphase]\nphis_over_pi = 0, nope\nmystery = 1\n");
  ParseResult r = parse_config_file(f.path);
  CHECK_FALSE(r.ok());
  CHECK(has_field(r, "phis_over_pi"));
  CHECK(has_field(r, "mystery"));
  for (const auto& d : r.diagnostics) CHECK(d.line > 0);
}

TEST_CASE("missing file") {
  ParseResult r = parse_config_file("definitely_not_here.ini");
  CHECK_FALSE(r.ok());
}

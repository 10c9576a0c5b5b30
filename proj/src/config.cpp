#include "cohsim/config.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace cohsim {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<double> parse_double(const std::string& s) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<std::vector<double>> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto v = parse_double(trim(item));
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::optional<bool> parse_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  return std::nullopt;
}

}  // namespace

ParseResult parse_config_file(const std::string& path) {
  ParseResult res;
  std::ifstream in(path);
  if (!in) {
    res.diagnostics.push_back({0, path, "cannot open config file"});
    return res;
  }

  std::string section;
  std::vector<std::string> sections_seen;
  std::string line;
  int lineno = 0;

  auto diag = [&](const std::string& field, const std::string& msg) {
    res.diagnostics.push_back({lineno, field, msg});
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        diag("", "malformed section header");
        continue;
      }
      section = trim(t.substr(1, t.size() - 2));
      if (section != "cphase" && section != "spdc" &&
          section != "conservation" && section != "tomo-roundtrip") {
        diag(section, "unknown scenario section");
        continue;
      }
      sections_seen.push_back(section);
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos) {
      diag("", "expected key = value");
      continue;
    }
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));

    auto want_double = [&](double& dst) {
      auto v = parse_double(value);
      if (v) dst = *v;
      else diag(key, "expected a number");
    };
    auto want_positive_int = [&](auto& dst) {
      auto v = parse_double(value);
      if (v && *v > 0 && *v == std::floor(*v)) dst = static_cast<std::remove_reference_t<decltype(dst)>>(*v);
      else diag(key, "expected a positive integer");
    };
    auto want_list = [&](std::vector<double>& dst) {
      auto v = parse_list(value);
      if (v) dst = std::move(*v);
      else diag(key, "expected a comma-separated number list");
    };
    auto want_bool = [&](bool& dst) {
      auto v = parse_bool(value);
      if (v) dst = *v;
      else diag(key, "expected true or false");
    };

    RunConfig& c = res.config;
    if (section.empty()) {
      if (key == "seed") {
        auto v = parse_double(value);
        if (v && *v >= 0 && *v == std::floor(*v))
          c.seed = static_cast<std::uint64_t>(*v);
        else diag(key, "expected a non-negative integer");
      } else if (key == "out") {
        c.out_dir = value;
      } else {
        diag(key, "unknown top-level key");
      }
    } else if (section == "cphase") {
      if (key == "phis_over_pi") want_list(c.cphase.phis_over_pi);
      else if (key == "white_noise_weight") want_double(c.cphase.white_noise_weight);
      else if (key == "curve_points") want_positive_int(c.cphase.curve_points);
      else if (key == "tomo_counts_per_setting") want_positive_int(c.cphase.tomo_counts_per_setting);
      else if (key == "tomo_replicates") want_positive_int(c.cphase.tomo_replicates);
      else diag(key, "unknown key in [cphase]");
    } else if (section == "spdc") {
      if (key == "displacements_um") want_list(c.spdc.displacements_um);
      else if (key == "raw_displacements") want_bool(c.spdc.raw_displacements);
      else if (key == "fit_offset") want_double(c.spdc.fit_offset);
      else if (key == "fit_amplitude") want_double(c.spdc.fit_amplitude);
      else if (key == "fwhm_um") want_double(c.spdc.fwhm_um);
      else if (key == "triplet_visibility") want_double(c.spdc.triplet_visibility);
      else if (key == "bias_um") want_double(c.spdc.bias_um);
      else if (key == "curve_points") want_positive_int(c.spdc.curve_points);
      else diag(key, "unknown key in [spdc]");
    } else if (section == "conservation") {
      if (key == "trials") want_positive_int(c.conservation.trials);
      else diag(key, "unknown key in [conservation]");
    } else if (section == "tomo-roundtrip") {
      if (key == "states") want_positive_int(c.tomo.states);
      else if (key == "counts_per_setting") want_positive_int(c.tomo.counts_per_setting);
      else if (key == "replicates") want_positive_int(c.tomo.replicates);
      else diag(key, "unknown key in [tomo-roundtrip]");
    }
  }

  lineno = 0;
  if (sections_seen.empty()) {
    diag("scenario", "no scenario section present");
  } else if (sections_seen.size() > 1) {
    diag("scenario", "exactly one scenario section must be present");
  } else {
    const std::string& s = sections_seen.front();
    RunConfig& c = res.config;
    if (s == "cphase") c.scenario = Scenario::CPhase;
    else if (s == "spdc") c.scenario = Scenario::Spdc;
    else if (s == "conservation") c.scenario = Scenario::Conservation;
    else c.scenario = Scenario::TomoRoundtrip;
  }

  // Range checks on the selected block.
  RunConfig& c = res.config;
  if (sections_seen.size() == 1) {
    if (c.scenario == Scenario::CPhase) {
      if (c.cphase.white_noise_weight < 0 || c.cphase.white_noise_weight > 1)
        diag("white_noise_weight", "must lie in [0, 1]");
      for (double p : c.cphase.phis_over_pi)
        if (!std::isfinite(p)) diag("phis_over_pi", "non-finite phase");
    } else if (c.scenario == Scenario::Spdc) {
      if (c.spdc.fwhm_um <= 0) diag("fwhm_um", "must be positive");
      if (c.spdc.fit_offset < 0 || c.spdc.fit_amplitude < 0 ||
          c.spdc.fit_offset + c.spdc.fit_amplitude > 1 + 1e-6)
        diag("fit_offset", "offset + amplitude must not exceed 1");
      if (c.spdc.triplet_visibility <= 0 || c.spdc.triplet_visibility > 1)
        diag("triplet_visibility", "must lie in (0, 1]");
    } else if (c.scenario == Scenario::TomoRoundtrip) {
      if (c.tomo.replicates < 10) diag("replicates", "must be >= 10");
    }
  }

  return res;
}

}  // namespace cohsim

#include "cohsim/spdc.hpp"

#include <algorithm>
#include <cmath>

#include "cohsim/measures.hpp"

namespace cohsim {

double SpdcConfig::sigma_um() const {
  return fwhm_um / (2.0 * std::sqrt(std::log(2.0)));
}

void SpdcConfig::validate() const {
  if (fwhm_um <= 0.0) throw std::invalid_argument("fwhm_um must be positive");
  if (fit_offset < 0.0 || fit_amplitude < 0.0 ||
      fit_offset + fit_amplitude > 1.0 + 1e-6) {
    throw std::invalid_argument("fit offset + amplitude must not exceed 1");
  }
  if (triplet_visibility <= 0.0 || triplet_visibility > 1.0) {
    throw std::invalid_argument("triplet_visibility outside (0, 1]");
  }
  for (double d : displacements_um) {
    if (!std::isfinite(d)) throw std::invalid_argument("non-finite displacement");
  }
}

double visibility(double d_um, const SpdcConfig& cfg) {
  double r = d_um / cfg.sigma_um();
  return cfg.fit_offset + cfg.fit_amplitude * std::exp(-r * r);
}

double bias_corrected_displacement(double raw_um, const SpdcConfig& cfg) {
  return raw_um - cfg.bias_um;
}

double pump_coherence_s2in(double v) {
  return 0.5 * (1.0 + v * v);
}

SingletMixture singlet_fraction(double v) {
  return {0.5 * (1.0 + v)};
}

TwoQubitState mixture_state(const SingletMixture& m) {
  if (m.p < 0.0 || m.p > 1.0) {
    throw std::invalid_argument("singlet fraction outside [0, 1]");
  }
  const Mat4 minus = bell_psi_minus().density().matrix();
  const Mat4 plus = bell_psi_plus().density().matrix();
  return TwoQubitState(m.p * minus + (1.0 - m.p) * plus);
}

double antibunch_probability(const SingletMixture& m,
                             double interference_visibility) {
  double v = interference_visibility;
  if (v <= 0.0 || v > 1.0) {
    throw std::invalid_argument("interference visibility outside (0, 1]");
  }
  return 0.5 * (1.0 - v) + m.p * v;
}

SingletMixture invert_antibunch(double p_antibunch,
                                double interference_visibility) {
  double v = interference_visibility;
  if (v <= 0.0 || v > 1.0) {
    throw std::invalid_argument("interference visibility outside (0, 1]");
  }
  double p = (p_antibunch - 0.5 * (1.0 - v)) / v;
  if (p < -1e-9 || p > 1.0 + 1e-9) {
    throw OutOfModelError("antibunch probability outside the attainable band",
                          std::clamp(p, 0.0, 1.0));
  }
  return {std::clamp(p, 0.0, 1.0)};
}

std::vector<ScenarioResult> run_spdc_sweep(const SpdcConfig& cfg) {
  cfg.validate();
  std::vector<ScenarioResult> out;
  out.reserve(cfg.displacements_um.size());
  for (double d : cfg.displacements_um) {
    double v = visibility(d, cfg);
    TwoQubitState rho = mixture_state(singlet_fraction(v));
    ScenarioResult r;
    r.x = d;
    r.d_a = std::sqrt(
        std::max(0.0, local_coherence_sq(partial_trace(rho, Subsystem::A))));
    r.d_b = std::sqrt(
        std::max(0.0, local_coherence_sq(partial_trace(rho, Subsystem::B))));
    r.t2 = correlation_T2(rho);
    double d2 = mean_coherence_sq(rho);
    r.s2 = d2 + r.t2;
    double p = purity(rho);
    r.d2_norm = d2 / p;
    r.t2_norm = r.t2 / p;
    r.s2_in = pump_coherence_s2in(v);
    r.abs_diff = std::abs(r.s2 - r.s2_in);
    out.push_back(r);
  }
  return out;
}

}  // namespace cohsim

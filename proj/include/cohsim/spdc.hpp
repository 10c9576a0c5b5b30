// SPDC with a partially coherent pump: Gaussian visibility fit, pump
// coherence, singlet/triplet mixture model and antibunching readout.
//
// Pump coherence is implemented as S2_in = (1 + V^2)/2, the purity of a
// single-qubit state with off-diagonal coherence V/2. The published form
// (1 - V^2)/2 contradicts the reported values (V = 0.974 at d = 0 must
// give S2_in = 0.974, not 0.026), so the sign is corrected here.
#pragma once

#include <vector>

#include "cohsim/scenario.hpp"
#include "cohsim/states.hpp"

namespace cohsim {

struct SpdcConfig {
  // Pump H/V displacements in micrometers, bias-corrected.
  std::vector<double> displacements_um = {0,  26, 42,  56,  72,
                                          86, 100, 120, 138, 158};
  double fit_offset = 0.029;
  double fit_amplitude = 0.945;
  double fwhm_um = 142.0;
  double triplet_visibility = 0.94;
  // Birefringence bias, subtracted only when ingesting raw measured delays.
  double bias_um = 84.0;

  double sigma_um() const;  // fwhm / (2 sqrt(ln 2))
  void validate() const;    // throws std::invalid_argument
};

struct SingletMixture {
  double p;  // weight of |Psi-> in p|Psi-><Psi-| + (1-p)|Psi+><Psi+|
};

// Raised by invert_antibunch when P lies outside the attainable band
// [(1-v)/2, (1+v)/2]; carries the clamped singlet fraction.
struct OutOfModelError : std::runtime_error {
  OutOfModelError(const std::string& what, double clamped_p)
      : std::runtime_error(what), clamped_p(clamped_p) {}
  double clamped_p;
};

// Gaussian interference-visibility fit V(d) = offset + amplitude e^{-(d/sigma)^2}.
double visibility(double d_um, const SpdcConfig& cfg);

double bias_corrected_displacement(double raw_um, const SpdcConfig& cfg);

// (1 + V^2)/2
double pump_coherence_s2in(double v);

// p = (1 + V)/2; the unique linear map for which T^2 of the mixture equals
// the pump coherence (1 + V^2)/2.
SingletMixture singlet_fraction(double v);

TwoQubitState mixture_state(const SingletMixture& m);

// P = (1 - v)/2 + p v: singlet antibunches deterministically, triplet
// bunches, distinguishable photons give the 1/2 baseline.
double antibunch_probability(const SingletMixture& m, double interference_visibility);

// Exact inverse of antibunch_probability.
SingletMixture invert_antibunch(double p_antibunch, double interference_visibility);

std::vector<ScenarioResult> run_spdc_sweep(const SpdcConfig& cfg);

}  // namespace cohsim

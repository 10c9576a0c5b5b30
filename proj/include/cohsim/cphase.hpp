// Tunable controlled-phase gate experiment: |++> input, phase sweep,
// purity-normalized coherence migration.
#pragma once

#include <vector>

#include "cohsim/scenario.hpp"
#include "cohsim/states.hpp"

namespace cohsim {

// Seven phases of the reference sweep, in units of pi.
inline const std::vector<double> kDefaultPhisOverPi = {0,    0.05, 0.125, 0.25,
                                                       0.5,  0.75, 1.0};

struct CPhaseConfig {
  std::vector<double> phis;  // radians
  PureState2Q input = plus_plus();
  // Isotropic admixture rho -> (1-w) rho + w I/4 modeling imperfect purity.
  double white_noise_weight = 0.0;

  void validate() const;  // throws std::invalid_argument
};

// diag(1, 1, 1, e^{i phi}) in the (HH, HV, VH, VV) basis.
Mat4 cphase_unitary(double phi);

// Closed-form D^2 and T^2 for the |++> input, checked against the numeric
// pipeline by the test suite: D^2 = cos^2(phi/2)/2, T^2 = 1 - D^2.
struct IdealCurvePoint {
  double d2;
  double t2;
};
IdealCurvePoint ideal_curves(double phi);

TwoQubitState cphase_output(double phi, const PureState2Q& input,
                            double white_noise_weight);

std::vector<ScenarioResult> run_sweep(const CPhaseConfig& cfg);

}  // namespace cohsim

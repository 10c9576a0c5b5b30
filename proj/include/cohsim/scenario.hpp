#pragma once

namespace cohsim {

// One table row of an experiment sweep. `x` is phi/pi for the c-phase
// experiment and the displacement d in micrometers for the SPDC one.
// Uncertainty columns stay zero unless bootstrap tomography is attached.
// s2_in and abs_diff are populated by the SPDC sweep only.
struct ScenarioResult {
  double x = 0;
  double d_a = 0;
  double d_b = 0;
  double t2 = 0;
  double s2 = 0;
  double d2_norm = 0;  // D^2 / purity
  double t2_norm = 0;  // T^2 / purity
  double dd_a = 0;
  double dd_b = 0;
  double dt2 = 0;
  double ds2 = 0;
  double s2_in = 0;
  double abs_diff = 0;
};

}  // namespace cohsim

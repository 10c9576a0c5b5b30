#include "cohsim/cphase.hpp"

#include <cmath>

#include "cohsim/measures.hpp"

namespace cohsim {

void CPhaseConfig::validate() const {
  if (phis.empty()) throw std::invalid_argument("phase list is empty");
  for (double phi : phis) {
    if (!std::isfinite(phi)) throw std::invalid_argument("non-finite phase");
  }
  if (white_noise_weight < 0.0 || white_noise_weight > 1.0) {
    throw std::invalid_argument("white_noise_weight outside [0, 1]");
  }
}

Mat4 cphase_unitary(double phi) {
  Mat4 u = Mat4::Identity();
  u(3, 3) = std::exp(cplx(0, phi));
  return u;
}

IdealCurvePoint ideal_curves(double phi) {
  double c = std::cos(0.5 * phi);
  double d2 = 0.5 * c * c;
  return {d2, 1.0 - d2};
}

TwoQubitState cphase_output(double phi, const PureState2Q& input,
                            double white_noise_weight) {
  Mat4 u = cphase_unitary(phi);
  Vec4 out = u * input.amplitudes();
  Mat4 rho = out * out.adjoint();
  if (white_noise_weight > 0.0) {
    rho = (1.0 - white_noise_weight) * rho +
          white_noise_weight * 0.25 * Mat4::Identity();
  }
  return TwoQubitState(rho);
}

std::vector<ScenarioResult> run_sweep(const CPhaseConfig& cfg) {
  cfg.validate();
  std::vector<ScenarioResult> out;
  out.reserve(cfg.phis.size());
  for (double phi : cfg.phis) {
    TwoQubitState rho = cphase_output(phi, cfg.input, cfg.white_noise_weight);
    ScenarioResult r;
    r.x = phi / M_PI;
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
    out.push_back(r);
  }
  return out;
}

}  // namespace cohsim

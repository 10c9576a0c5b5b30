// Simulated projective polarization tomography with Poisson shot noise,
// maximum-likelihood (RrhoR) reconstruction and parametric bootstrap
// uncertainties.
//
// Measurement settings are the 9 basis pairs from {H/V, D/A, R/L} per
// qubit; each setting has 4 projective outcomes, giving the standard
// overcomplete 36-projector set. Frequencies are normalized per setting,
// matching coincidence-counting practice.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohsim/states.hpp"

namespace cohsim {

struct Projector {
  std::string label;   // e.g. "HV", "DR"
  Mat4 op;             // rank-1 projector
  int setting;         // 0..8, basis-pair index
};

class ProjectorSet {
 public:
  // Cartesian product of {H, V, D, A, R, L} per qubit.
  static ProjectorSet standard36();

  const std::vector<Projector>& projectors() const { return projs_; }
  int num_settings() const { return 9; }

 private:
  std::vector<Projector> projs_;
};

struct MeasurementRecord {
  std::string label;
  double counts = 0;  // Poisson draws are integral; noiseless expected
                      // frequencies keep the fractional part
  double total_per_setting = 0;
  int setting = 0;
};

// Expected counts N Tr[rho Pi], no shot noise.
std::vector<MeasurementRecord> expected_counts(const TwoQubitState& rho,
                                               const ProjectorSet& set,
                                               long n_per_setting);

// Poisson draw around N Tr[rho Pi] per projector, deterministic per seed.
std::vector<MeasurementRecord> simulate_counts(const TwoQubitState& rho,
                                               const ProjectorSet& set,
                                               long n_per_setting,
                                               std::uint64_t seed);

struct MleOptions {
  double tol = 1e-10;       // max-entry change stopping threshold
  int max_iter = 100000;
  double dilution = 0.1;    // epsilon of the diluted update
};

struct MleResult {
  TwoQubitState state;
  bool converged = false;
  int iterations = 0;
  double log_likelihood = 0;
  // True if the likelihood never decreased by more than 1e-12 per step.
  bool likelihood_monotone = true;
};

// Iterative RrhoR fixed point: R(rho) = sum_k (f_k / Tr[rho Pi_k]) Pi_k,
// rho <- N[R rho R]. Switches to the diluted update
// rho <- N[(1-eps) rho + eps R rho R] when a likelihood decrease or a
// zero-probability projector with nonzero counts is detected. Output is
// projected to an exactly physical state.
MleResult mle_reconstruct(const std::vector<MeasurementRecord>& records,
                          const ProjectorSet& set, MleOptions opts = {});

struct UncertaintyReport {
  double dd_a = 0;
  double dd_b = 0;
  double dt2 = 0;
  double ds2 = 0;
};

// Parametric bootstrap: re-draw Poisson counts around the observed values,
// re-run MLE, report sample standard deviations of D_A, D_B, T^2, S^2.
UncertaintyReport resample_uncertainty(
    const std::vector<MeasurementRecord>& records, const ProjectorSet& set,
    int replicates, std::uint64_t seed, MleOptions opts = {});

// Counts-table CSV, round-trips through read_counts_csv.
void write_counts_csv(const std::string& path,
                      const std::vector<MeasurementRecord>& records);
std::vector<MeasurementRecord> read_counts_csv(const std::string& path);

}  // namespace cohsim

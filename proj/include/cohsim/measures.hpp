// Coherence and correlation measures of two-qubit states and the
// Horodecki/CHSH witness chain.
//
// Conventions: Pauli index 1 = X, 2 = Y, 3 = Z, with Y|H> = i|V> and
// |H> the Z-up eigenstate. Local coherence D_i^2 = Tr[rho_i^2] - 1/2,
// correlation T^2 = (1 + sum_ij t_ij^2)/4 with t_ij = Tr[rho s_i (x) s_j],
// accessible coherence S^2 = (D_A^2 + D_B^2)/2 + T^2. S^2 equals the
// purity of the composite state and is invariant under global unitaries.
//
// T^2 reaches 1/4 for the maximally mixed state; the 1/2 floor usually
// quoted applies to pure product states.
#pragma once

#include "cohsim/states.hpp"

namespace cohsim {

struct CorrelationDecomposition {
  Eigen::Vector3d bloch_a;   // <sigma_i (x) I>
  Eigen::Vector3d bloch_b;   // <I (x) sigma_j>
  Eigen::Matrix3d tensor_t;  // t_ij

  // rho = (1/4)(I(x)I + a.s(x)I + I(x)b.s + sum t_ij s_i(x)s_j)
  Mat4 reconstruct() const;
};

struct WitnessReport {
  double t2 = 0;
  double trace_r = 0;    // Tr R = 4 T^2 - 1, R = t^T t
  double min_eig_r = 0;
  double chsh_b = 0;     // B = 2 sqrt(Tr R - min eig R), B <= 2 sqrt(2)
  double chsh_b_lower_bound = 0;  // 2 sqrt((8 T^2 - 2)/3)
  bool nonlocal_witnessed = false;  // T^2 > 5/8
  bool radicand_clamped = false;    // negative radicand clipped to 0
};

const Mat2& pauli(int i);  // i in {1, 2, 3}

CorrelationDecomposition decompose(const TwoQubitState& rho);

double local_coherence_sq(const SingleQubitState& rho_i);
double mean_coherence_sq(const TwoQubitState& rho);
double correlation_T2(const TwoQubitState& rho);
double accessible_coherence_S2(const TwoQubitState& rho);

WitnessReport witness(const TwoQubitState& rho);

}  // namespace cohsim

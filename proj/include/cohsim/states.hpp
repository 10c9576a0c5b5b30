// Two-qubit polarization states: density matrices, partial trace, purity.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace cohsim {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec4 = Eigen::Vector4cd;

// Absolute tolerances for state validation. Eigenvalues failing PSD by
// more than kPsdTol are rejected; smaller violations are clipped on demand.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

enum class Subsystem { A, B };

class TwoQubitState;

// Pure two-qubit state, amplitudes ordered (|HH>, |HV>, |VH>, |VV>)
// with qubit A as the slow index.
class PureState2Q {
 public:
  explicit PureState2Q(const Vec4& amplitudes);

  const Vec4& amplitudes() const { return amps_; }
  TwoQubitState density() const;

 private:
  Vec4 amps_;
};

class SingleQubitState {
 public:
  explicit SingleQubitState(const Mat2& matrix);

  const Mat2& matrix() const { return m_; }

 private:
  Mat2 m_;
};

// 4x4 Hermitian, unit-trace, PSD (up to kPsdTol) density matrix.
class TwoQubitState {
 public:
  explicit TwoQubitState(const Mat4& matrix);

  // Clips eigenvalues in [-kPsdTol, 0) to zero and renormalizes the trace.
  // Used after MLE reconstruction and long floating-point pipelines.
  static TwoQubitState projected_to_physical(const Mat4& matrix);

  const Mat4& matrix() const { return m_; }

 private:
  struct unchecked_t {};
  TwoQubitState(const Mat4& matrix, unchecked_t) : m_(matrix) {}

  Mat4 m_;
};

TwoQubitState tensor_product(const SingleQubitState& a, const SingleQubitState& b);
SingleQubitState partial_trace(const TwoQubitState& rho, Subsystem keep);

double purity(const TwoQubitState& rho);
double purity(const SingleQubitState& rho);

// Real eigenvalues in ascending order. Throws std::invalid_argument if the
// input is not Hermitian within kHermTol.
std::vector<double> eigenvalues_hermitian(const Mat2& m);
std::vector<double> eigenvalues_hermitian(const Mat4& m);

// <psi|rho|psi>
double fidelity(const TwoQubitState& rho, const PureState2Q& psi);

// Common fixed states.
PureState2Q bell_phi_plus();   // (|HH> + |VV>)/sqrt(2)
PureState2Q bell_psi_plus();   // (|HV> + |VH>)/sqrt(2)
PureState2Q bell_psi_minus();  // (|HV> - |VH>)/sqrt(2)
PureState2Q plus_plus();       // |++>
TwoQubitState maximally_mixed_2q();

}  // namespace cohsim

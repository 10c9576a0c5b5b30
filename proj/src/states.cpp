#include "cohsim/states.hpp"

#include <cmath>

namespace cohsim {

namespace {

void check_hermitian(const Eigen::Ref<const Eigen::MatrixXcd>& m, double tol) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("matrix is not Hermitian within tolerance");
  }
}

}  // namespace

PureState2Q::PureState2Q(const Vec4& amplitudes) : amps_(amplitudes) {
  if (std::abs(amps_.squaredNorm() - 1.0) > 1e-12) {
    throw std::invalid_argument("pure state amplitudes are not normalized");
  }
}

TwoQubitState PureState2Q::density() const {
  return TwoQubitState(amps_ * amps_.adjoint());
}

SingleQubitState::SingleQubitState(const Mat2& matrix) : m_(matrix) {
  check_hermitian(m_, kHermTol);
  if (std::abs(m_.trace().real() - 1.0) > kTraceTol) {
    throw std::invalid_argument("single-qubit state trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Mat2> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTol ||
      es.eigenvalues().maxCoeff() > 1.0 + kPsdTol) {
    throw std::invalid_argument("single-qubit eigenvalues outside [0, 1]");
  }
}

TwoQubitState::TwoQubitState(const Mat4& matrix) : m_(matrix) {
  check_hermitian(m_, kHermTol);
  if (std::abs(m_.trace().real() - 1.0) > kTraceTol) {
    throw std::invalid_argument("two-qubit state trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Mat4> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTol) {
    throw std::invalid_argument("two-qubit state is not positive semidefinite");
  }
}

TwoQubitState TwoQubitState::projected_to_physical(const Mat4& matrix) {
  Mat4 herm = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat4> es(herm);
  Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0);
  double tr = ev.sum();
  if (tr <= 0.0) {
    throw std::invalid_argument("cannot project a non-positive matrix to a state");
  }
  ev /= tr;
  Mat4 out = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  return TwoQubitState(out, unchecked_t{});
}

TwoQubitState tensor_product(const SingleQubitState& a, const SingleQubitState& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a.matrix()(i, j) * b.matrix();
  return TwoQubitState(out);
}

SingleQubitState partial_trace(const TwoQubitState& rho, Subsystem keep) {
  const Mat4& m = rho.matrix();
  Mat2 out = Mat2::Zero();
  if (keep == Subsystem::A) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  } else {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        out(i, j) = m(i, j) + m(i + 2, j + 2);
  }
  return SingleQubitState(out);
}

double purity(const TwoQubitState& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

double purity(const SingleQubitState& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

std::vector<double> eigenvalues_hermitian(const Mat2& m) {
  check_hermitian(m, kHermTol);
  Eigen::SelfAdjointEigenSolver<Mat2> es(m, Eigen::EigenvaluesOnly);
  return {es.eigenvalues()(0), es.eigenvalues()(1)};
}

std::vector<double> eigenvalues_hermitian(const Mat4& m) {
  check_hermitian(m, kHermTol);
  Eigen::SelfAdjointEigenSolver<Mat4> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(4);
  for (int i = 0; i < 4; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

double fidelity(const TwoQubitState& rho, const PureState2Q& psi) {
  return (psi.amplitudes().adjoint() * rho.matrix() * psi.amplitudes())(0).real();
}

PureState2Q bell_phi_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState2Q(Vec4(s, 0, 0, s));
}

PureState2Q bell_psi_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState2Q(Vec4(0, s, s, 0));
}

PureState2Q bell_psi_minus() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState2Q(Vec4(0, s, -s, 0));
}

PureState2Q plus_plus() {
  return PureState2Q(Vec4(0.5, 0.5, 0.5, 0.5));
}

TwoQubitState maximally_mixed_2q() {
  return TwoQubitState(0.25 * Mat4::Identity());
}

}  // namespace cohsim

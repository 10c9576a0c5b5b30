#include "cohsim/random.hpp"

namespace cohsim {

namespace {

Eigen::MatrixXcd ginibre(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  return g;
}

}  // namespace

PureState2Q random_pure_state_2q(std::mt19937_64& rng) {
  Eigen::MatrixXcd g = ginibre(rng, 4, 1);
  Vec4 v = g.col(0);
  return PureState2Q(v / v.norm());
}

PureState2Q random_pure_state_2q(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_pure_state_2q(rng);
}

Mat4 random_global_unitary(std::mt19937_64& rng) {
  Eigen::MatrixXcd g = ginibre(rng, 4, 4);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is exactly Haar.
  for (int j = 0; j < 4; ++j) {
    cplx d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

Mat4 random_global_unitary(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_global_unitary(rng);
}

TwoQubitState random_mixed_state(std::mt19937_64& rng) {
  Eigen::MatrixXcd g = ginibre(rng, 4, 4);
  Mat4 rho = g * g.adjoint();
  rho /= rho.trace().real();
  return TwoQubitState(rho);
}

TwoQubitState random_mixed_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_mixed_state(rng);
}

}  // namespace cohsim

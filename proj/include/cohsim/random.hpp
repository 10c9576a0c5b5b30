// Haar-distributed pure states, global unitaries and induced-measure mixed
// states, deterministic per seed.
#pragma once

#include <cstdint>
#include <random>

#include "cohsim/states.hpp"

namespace cohsim {

PureState2Q random_pure_state_2q(std::mt19937_64& rng);
PureState2Q random_pure_state_2q(std::uint64_t seed);

// Haar measure via QR of a complex Ginibre matrix with phase fixing.
Mat4 random_global_unitary(std::mt19937_64& rng);
Mat4 random_global_unitary(std::uint64_t seed);

// Induced measure: partial trace of a Haar-random pure state on a
// 4x4-dimensional doubled space.
TwoQubitState random_mixed_state(std::mt19937_64& rng);
TwoQubitState random_mixed_state(std::uint64_t seed);

}  // namespace cohsim

#include <doctest.h>

#include <random>

#include "cohsim/measures.hpp"
#include "cohsim/spdc.hpp"

using namespace cohsim;

namespace {
const SpdcConfig kDefault{};
}

TEST_CASE("visibility fit") {
  CHECK(kDefault.sigma_um() == doctest::Approx(85.2797).epsilon(1e-5));
  CHECK(visibility(0.0, kDefault) == doctest::Approx(0.974).epsilon(1e-12));
  CHECK(visibility(1e6, kDefault) == doctest::Approx(0.029).epsilon(1e-12));
  CHECK(visibility(100.0, kDefault) == doctest::Approx(0.26794).epsilon(1e-4));

  // Strictly decreasing in |d|, bounded below by the offset.
  double prev = visibility(0.0, kDefault);
  for (int d = 5; d <= 400; d += 5) {
    double v = visibility(d, kDefault);
    CHECK(v < prev);
    CHECK(v > kDefault.fit_offset);
    prev = v;
  }
}

TEST_CASE("pump coherence") {
  CHECK(pump_coherence_s2in(0.974) == doctest::Approx(0.974).epsilon(5e-4));
  CHECK(pump_coherence_s2in(0.0) == doctest::Approx(0.5));
  CHECK(pump_coherence_s2in(visibility(56.0, kDefault)) ==
        doctest::Approx(0.706).epsilon(2e-3));
}

TEST_CASE("singlet fraction closure") {
  // p = (1+V)/2 is the map that makes T2 of the mixture equal the pump
  // coherence (1+V^2)/2; verified here against the measures module.
  for (int i = 0; i <= 20; ++i) {
    double v = i / 20.0;
    SingletMixture m = singlet_fraction(v);
    CHECK(m.p == doctest::Approx(0.5 * (1.0 + v)));
    TwoQubitState rho = mixture_state(m);
    CHECK(correlation_T2(rho) ==
          doctest::Approx(pump_coherence_s2in(v)).epsilon(1e-12));
  }
  CHECK(singlet_fraction(1.0).p == doctest::Approx(1.0));
  CHECK(singlet_fraction(0.974).p == doctest::Approx(0.987));
  CHECK(correlation_T2(mixture_state(singlet_fraction(0.0))) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("mixture state") {
  Mat4 pure = mixture_state({1.0}).matrix();
  CHECK((pure - bell_psi_minus().density().matrix()).cwiseAbs().maxCoeff() <
        1e-14);

  // At p = 1/2 the Psi-/Psi+ cross terms cancel.
  Mat4 half = mixture_state({0.5}).matrix();
  Mat4 expect = Mat4::Zero();
  expect(1, 1) = 0.5;
  expect(2, 2) = 0.5;
  CHECK((half - expect).cwiseAbs().maxCoeff() < 1e-14);

  for (double p : {0.0, 0.3, 0.7, 1.0}) {
    TwoQubitState rho = mixture_state({p});
    CHECK(local_coherence_sq(partial_trace(rho, Subsystem::A)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(local_coherence_sq(partial_trace(rho, Subsystem::B)) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(mixture_state({1.2}), std::invalid_argument);
}

TEST_CASE("antibunching model") {
  CHECK(antibunch_probability({1.0}, 1.0) == doctest::Approx(1.0));
  CHECK(antibunch_probability({0.0}, 0.94) == doctest::Approx(0.03));
  CHECK(antibunch_probability({0.5}, 0.3) == doctest::Approx(0.5));
  CHECK(antibunch_probability({0.5}, 0.94) == doctest::Approx(0.5));

  CHECK(invert_antibunch(0.97, 0.94).p == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(invert_antibunch(0.5, 0.7).p == doctest::Approx(0.5));

  CHECK_THROWS_AS(antibunch_probability({0.5}, 0.0), std::invalid_argument);
  try {
    invert_antibunch(0.99, 0.5);  // band is [0.25, 0.75]
    FAIL("expected OutOfModelError");
  } catch (const OutOfModelError& e) {
    CHECK(e.clamped_p == doctest::Approx(1.0));
  }
}

TEST_CASE("antibunch inversion round-trip") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    double p = unit(rng);
    double v = 0.05 + 0.95 * unit(rng);
    double back = invert_antibunch(antibunch_probability({p}, v), v).p;
    CHECK(std::abs(back - p) < 1e-12);
  }
}

TEST_CASE("sweep reproduces the pump-coherence column") {
  const std::vector<double> ds = {0,  26, 42,  56,  72,
                                  86, 100, 120, 138, 158};
  const std::vector<double> s2_in = {0.974, 0.896, 0.796, 0.706, 0.620,
                                     0.568, 0.535, 0.512, 0.505, 0.502};
  auto rows = run_spdc_sweep(kDefault);
  REQUIRE(rows.size() == ds.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].x == doctest::Approx(ds[i]));
    CHECK(std::abs(rows[i].s2_in - s2_in[i]) < 0.005);
    CHECK(rows[i].abs_diff < 1e-10);  // model conservation is exact
    CHECK(rows[i].d_a == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rows[i].d_b == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("bias correction") {
  CHECK(bias_corrected_displacement(84.0, kDefault) == doctest::Approx(0.0));
  CHECK(bias_corrected_displacement(184.0, kDefault) ==
        doctest::Approx(100.0));
}

TEST_CASE("config validation") {
  SpdcConfig bad = kDefault;
  bad.fwhm_um = -1.0;
  CHECK_THROWS_AS(run_spdc_sweep(bad), std::invalid_argument);
  bad = kDefault;
  bad.fit_amplitude = 1.2;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

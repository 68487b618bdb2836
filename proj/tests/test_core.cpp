#include <doctest.h>

#include <cmath>

#include "mie/core.hpp"

using namespace mie;

namespace {

PotentialSpec toy_spec() {
  PotentialSpec spec;
  spec.D0 = 1.0;
  spec.r0 = 1.0;
  spec.reduced_mass = 1.0;
  spec.units = UnitSystem::atomic;
  return spec;
}

}  // namespace

TEST_CASE("angular index is l + (N-2)/2") {
  CHECK(angular_index(0, 3) == 0.5);
  CHECK(angular_index(0, 2) == 0.0);
  CHECK(angular_index(2, 2) == 2.0);
  CHECK(angular_index(1, 4) == 2.0);
  CHECK(angular_index(3, 7) == 5.5);
}

TEST_CASE("angular index is shared bit-for-bit across (N,l) -> (N+2,l-1)") {
  for (int dim = 2; dim <= 9; ++dim)
    for (int l = 1; l <= 6; ++l)
      CHECK(angular_index(l, dim) == angular_index(l - 1, dim + 2));
}

TEST_CASE("atomic-unit reduction of the unit well gives gamma_sq = 2") {
  const PotentialSpec spec = toy_spec();
  CHECK(gamma_sq_of(spec) == 2.0);
  CHECK(energy_unit(spec) == 0.5);  // hbar^2/(2 mu r0^2) = 1/2 hartree

  const DimensionlessModel model = reduce(spec);
  CHECK(model.gamma_sq == 2.0);
  CHECK(model.a1_coeff == 4.0);
  CHECK(model.a2_coeff == 2.0);
  CHECK(model.dim_N == 3);
}

TEST_CASE("molecular-unit reduction uses hbar*c and amu conversions") {
  PotentialSpec spec;
  spec.D0 = 4.7446;  // eV
  spec.r0 = 0.7416;  // angstrom
  spec.reduced_mass = 0.50391;  // amu
  spec.units = UnitSystem::molecular;
  const double g2 = gamma_sq_of(spec);
  CHECK(g2 == doctest::Approx(629.11376652709).epsilon(1e-12));
  // same quantity through the atomic-unit route, CODATA self-consistency
  PotentialSpec atomic;
  atomic.D0 = spec.D0 / constants::hartree_ev;
  atomic.r0 = spec.r0 / constants::bohr_angstrom;
  atomic.reduced_mass = spec.reduced_mass / constants::electron_mass_amu;
  atomic.units = UnitSystem::atomic;
  CHECK(gamma_sq_of(atomic) == doctest::Approx(g2).epsilon(1e-8));
}

TEST_CASE("hbar per unit system") {
  CHECK(hbar_of(UnitSystem::atomic) == 1.0);
  CHECK(hbar_of(UnitSystem::molecular) == constants::hbar_c_ev_angstrom);
}

TEST_CASE("reduce rejects exponents without a closed form") {
  PotentialSpec spec = toy_spec();
  spec.exp_m = 4;
  spec.exp_k = 2;
  CHECK_THROWS_AS(reduce(spec), std::domain_error);
}

TEST_CASE("dimensionless potential has its minimum -gamma_sq at x = 1") {
  const DimensionlessModel model = DimensionlessModel::special(2.0);
  CHECK(potential_special(model, 1.0) == -2.0);
  CHECK(potential_special(model, 0.9) > -2.0);
  CHECK(potential_special(model, 1.1) > -2.0);
  // matches the physical potential divided by the energy quantum
  const PotentialSpec spec = toy_spec();
  for (double x : {0.3, 0.7, 1.0, 2.5, 10.0}) {
    CHECK(potential_special(model, x) ==
          doctest::Approx(potential_general(spec, x * spec.r0) / energy_unit(spec))
              .epsilon(1e-14));
  }
}

TEST_CASE("general-exponent potential: well depth at r0, decay at infinity") {
  PotentialSpec lj = toy_spec();
  lj.exp_m = 12;
  lj.exp_k = 6;
  CHECK(potential_general(lj, lj.r0) == doctest::Approx(-lj.D0).epsilon(1e-14));
  CHECK(potential_general(lj, 0.8 * lj.r0) > -lj.D0);
  CHECK(potential_general(lj, 1.5 * lj.r0) > -lj.D0);
  CHECK(std::abs(potential_general(lj, 50.0 * lj.r0)) < 1e-8);
  CHECK(potential_general(lj, 0.5 * lj.r0) > 0.0);  // repulsive core
}

TEST_CASE("harmonic data of the well bottom") {
  const PotentialSpec spec = toy_spec();
  const HarmonicParams hp = harmonic_params(spec);
  CHECK(hp.omega == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(hp.inertia == 1.0);
  CHECK(potential_harmonic(spec, spec.r0) == -spec.D0);
  CHECK(potential_harmonic(spec, 1.1 * spec.r0) ==
        doctest::Approx(-spec.D0 + spec.D0 * 0.01).epsilon(1e-12));
}

TEST_CASE("validation rejects non-physical parameters") {
  PotentialSpec spec = toy_spec();
  spec.D0 = 0.0;
  CHECK_THROWS_AS(spec.validate(), std::domain_error);
  spec = toy_spec();
  spec.r0 = -1.0;
  CHECK_THROWS_AS(spec.validate(), std::domain_error);
  spec = toy_spec();
  spec.exp_m = 1;  // m must exceed k
  CHECK_THROWS_AS(spec.validate(), std::domain_error);

  CHECK_THROWS_AS(DimensionlessModel::special(0.0), std::domain_error);
  CHECK_THROWS_AS(DimensionlessModel::special(-2.0), std::domain_error);
  CHECK_THROWS_AS(DimensionlessModel::special(1.0, 1), std::domain_error);
  CHECK_THROWS_AS(DimensionlessModel::generalized(2.0, -1.0), std::domain_error);

  QuantumState bad{-1, 0, 3};
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

#include <doctest.h>

#include <cmath>
#include <vector>

#include "mie/core.hpp"
#include "mie/errors.hpp"
#include "mie/oracle.hpp"
#include "mie/spectrum.hpp"
#include "mie/wavefunction.hpp"

using namespace mie;

TEST_CASE("extrapolated finite-difference levels match the closed form") {
  const DimensionlessModel model = DimensionlessModel::special(2.0);
  const Grid grid = default_grid(model, 0, 2);
  const OracleResult res = richardson(model, 0, grid, 2);
  REQUIRE(res.richardson.size() == 2);
  CHECK_FALSE(res.truncated);
  for (int n = 0; n < 2; ++n) {
    const double exact = bound_energy(model, {n, 0, 3}).energy_dimensionless;
    const double got = res.richardson[n].value;
    CHECK(std::abs(got - exact) / std::abs(exact) <= 1e-7);
  }
}

TEST_CASE("hydrogen-like levels from the pure-Coulomb reduction") {
  const DimensionlessModel model = DimensionlessModel::generalized(2.0, 0.0);
  const Grid grid = default_grid(model, 0, 3);
  const OracleResult res = richardson(model, 0, grid, 3);
  REQUIRE(res.richardson.size() == 3);
  for (int n = 0; n < 3; ++n) {
    const double exact = -1.0 / ((n + 1.0) * (n + 1.0));
    CHECK(std::abs(res.richardson[n].value - exact) / std::abs(exact) <= 1e-6);
  }
}

TEST_CASE("halving the spacing divides the discretization error by about four") {
  const DimensionlessModel model = DimensionlessModel::special(2.0);
  const double exact = bound_energy(model, {0, 0, 3}).energy_dimensionless;
  const Grid coarse{1e-3, 40.0, 2001};
  const OracleResult r_c = solve_fd(model, 0, coarse, 1);
  const OracleResult r_f = solve_fd(model, 0, coarse.refined(), 1);
  REQUIRE(r_c.eigenvalues.size() == 1);
  REQUIRE(r_f.eigenvalues.size() == 1);
  const double err_c = std::abs(r_c.eigenvalues[0] - exact);
  const double err_f = std::abs(r_f.eigenvalues[0] - exact);
  const double ratio = err_c / err_f;
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);
  // and the extrapolation beats the fine grid on its own
  const double rich = richardson_extrapolate(r_c.eigenvalues[0], r_f.eigenvalues[0]);
  CHECK(std::abs(rich - exact) < err_f / 10.0);
}

TEST_CASE("a box too small for the requested levels sets the truncated flag") {
  const DimensionlessModel model = DimensionlessModel::special(2.0);
  const Grid tiny{1e-3, 3.0, 301};
  const OracleResult res = solve_fd(model, 0, tiny, 5);
  CHECK(res.truncated);
  CHECK(res.eigenvalues.size() < 5);
}

TEST_CASE("attractive inverse-square stronger than -1/4 is refused") {
  // total x^-2 coefficient: a2 + lambda^2 - 1/4 = -1 + 1/4 - 1/4 = -1
  const DimensionlessModel model{1.0, 3, 2.0, -1.0};
  CHECK_THROWS_AS(reduce_to_1d(model, 0), numerical_error);
  const Grid grid{1e-2, 30.0, 1001};
  CHECK_THROWS_AS(solve_fd(model, 0, grid, 1), numerical_error);
}

TEST_CASE("finite-difference eigenvector matches the analytic reduced solution") {
  const DimensionlessModel model = DimensionlessModel::special(2.0);
  const Grid grid{1e-3, 30.0, 6001};
  const OracleResult res = solve_fd(model, 0, grid, 2, /*want_vectors=*/true);
  REQUIRE(res.eigenvectors.size() == 2);
  const double h = grid.spacing();
  for (int n = 0; n < 2; ++n) {
    const RadialFunction rf = radial_bound(model, {n, 0, 3});
    const std::vector<double>& v = res.eigenvectors[n];
    REQUIRE(static_cast<int>(v.size()) == grid.points - 2);
    double worst = 0.0;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
      const double x = grid.x_min + h * (i + 1);
      const double u = x * rf(x);  // u = x^((N-1)/2) R, N = 3
      worst = std::max(worst, std::abs(v[i] - u));
    }
    CHECK(worst <= 2e-4);
  }
}

TEST_CASE("interdimensional degeneracy holds on the grid") {
  // (N=3, l=1) and (N=5, l=0) share lambda = 3/2, hence the same reduced
  // problem; on a common grid the finite-difference spectra coincide.
  const DimensionlessModel m3 = DimensionlessModel::special(5.0, 3);
  const DimensionlessModel m5 = DimensionlessModel::special(5.0, 5);
  const Grid grid = default_grid(m3, 1, 2);
  const OracleResult r3 = richardson(m3, 1, grid, 2);
  const OracleResult r5 = richardson(m5, 0, grid, 2);
  REQUIRE(r3.richardson.size() == 2);
  REQUIRE(r5.richardson.size() == 2);
  for (int n = 0; n < 2; ++n) {
    const double a = r3.richardson[n].value;
    const double b = r5.richardson[n].value;
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
    const double exact = bound_energy(m3, {n, 1, 3}).energy_dimensionless;
    CHECK(std::abs(a - exact) / std::abs(exact) <= 1e-6);
  }
}

TEST_CASE("general-exponent wells produce bound levels near the harmonic estimate") {
  // Around the minimum x=1 the dimensionless well behaves as
  // gamma^2 (-1 + (m k / 2) (x-1)^2 + ...), so the lowest level sits near
  // -gamma^2 + gamma sqrt(m k / 2) * (2n + 1) / sqrt(2)... i.e.
  // E_0 ~ -gamma^2 + gamma sqrt(m k / 2).
  const Grid grid{0.3, 6.0, 4001};

  SUBCASE("m=4, k=2") {
    PotentialSpec spec;
    spec.D0 = 25.0;  // gamma^2 = 50 with r0 = mu = hbar = 1
    spec.r0 = 1.0;
    spec.reduced_mass = 1.0;
    spec.exp_m = 4;
    spec.exp_k = 2;
    const double g2 = gamma_sq_of(spec);
    CHECK(g2 == doctest::Approx(50.0).epsilon(1e-14));
    const OracleResult res = solve_general_mie(spec, 0, 3, grid, 2);
    REQUIRE(res.eigenvalues.size() == 2);
    // harmonic estimate -g2 + gamma*sqrt(mk/2) = -35.86, lowered ~1.4 by
    // the cubic/quartic well shape (second-order perturbation: -6.2 + 4.7)
    const double harmonic0 = -g2 + std::sqrt(g2) * 2.0;
    CHECK(res.eigenvalues[0] > harmonic0 - 4.0);
    CHECK(res.eigenvalues[0] < harmonic0 + 4.0);
    CHECK(res.eigenvalues[1] > res.eigenvalues[0]);
    // grid-converged reference values (stable to ~1e-6 under refinement)
    CHECK(res.eigenvalues[0] == doctest::Approx(-37.29202).epsilon(1e-4));
    CHECK(res.eigenvalues[1] == doctest::Approx(-20.78664).epsilon(1e-4));
  }

  SUBCASE("m=12, k=6 (Lennard-Jones exponents)") {
    PotentialSpec spec;
    spec.D0 = 25.0;
    spec.r0 = 1.0;
    spec.reduced_mass = 1.0;
    spec.exp_m = 12;
    spec.exp_k = 6;
    const OracleResult res = solve_general_mie(spec, 0, 3, grid, 1);
    REQUIRE(res.eigenvalues.size() >= 1);
    // at gamma^2 = 50 this well is strongly anharmonic: the level sits far
    // below the harmonic estimate (-7.57) but safely inside the well
    CHECK(res.eigenvalues[0] > -50.0);
    CHECK(res.eigenvalues[0] < -50.0 + std::sqrt(50.0) * 6.0);
    // grid-converged reference value (stable to ~1e-5 under refinement)
    CHECK(res.eigenvalues[0] == doctest::Approx(-17.49985).epsilon(1e-4));
  }
}

TEST_CASE("special-case exponents reduce identically through both entry points") {
  PotentialSpec spec;
  spec.D0 = 1.0;
  spec.r0 = 1.0;
  spec.reduced_mass = 1.0;
  spec.exp_m = 2;
  spec.exp_k = 1;
  const double g2 = gamma_sq_of(spec);
  const DimensionlessModel model = DimensionlessModel::special(g2);
  const Grid grid{1e-3, 60.0, 6001};
  const OracleResult a = solve_general_mie(spec, 1, 3, grid, 1);
  const OracleResult b = solve_fd(model, 1, grid, 1);
  REQUIRE(a.eigenvalues.size() == 1);
  REQUIRE(b.eigenvalues.size() == 1);
  CHECK(a.eigenvalues[0] == doctest::Approx(b.eigenvalues[0]).epsilon(1e-12));
}

TEST_CASE("automatic grid policy") {
  const DimensionlessModel model = DimensionlessModel::special(2.0);
  const Grid g = default_grid(model, 0, 2);
  CHECK(g.x_min == 1e-3);
  CHECK(g.points >= 4001);
  // box must reach past the outer turning point of the top requested level
  const double beta_top = bound_energy(model, {1, 0, 3}).beta;
  CHECK(g.x_max >= model.a1_coeff / (beta_top * beta_top));

  // shallow two-dimensional s-wave: net attractive inverse-square tail
  const DimensionlessModel shallow = DimensionlessModel::special(0.1, 2);
  const Grid gs = default_grid(shallow, 0, 1);
  CHECK(gs.x_min == 1e-2);

  // pure Coulomb s-wave: no core protects the origin, wall pushed inward
  const DimensionlessModel coulomb = DimensionlessModel::generalized(2.0, 0.0);
  CHECK(default_grid(coulomb, 0, 1).x_min == 1e-7);

  CHECK_THROWS_AS(default_grid(model, 0, 0), std::domain_error);
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS((Grid{0.0, 10.0, 101}.validate()), std::domain_error);
  CHECK_THROWS_AS((Grid{1.0, 0.5, 101}.validate()), std::domain_error);
  CHECK_THROWS_AS((Grid{1e-3, 10.0, 63}.validate()), std::domain_error);
  CHECK_NOTHROW((Grid{1e-3, 10.0, 64}.validate()));
}

TEST_CASE("deep molecular well: oracle tracks the closed form") {
  // gamma^2 comparable to a real diatomic (several hundred)
  const DimensionlessModel model = DimensionlessModel::special(629.113766146387);
  const Grid grid = default_grid(model, 0, 1);
  const OracleResult res = richardson(model, 0, grid, 1);
  REQUIRE(res.richardson.size() == 1);
  const double exact = bound_energy(model, {0, 0, 3}).energy_dimensionless;
  CHECK(std::abs(res.richardson[0].value - exact) / std::abs(exact) <= 1e-6);
}

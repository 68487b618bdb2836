#include <doctest.h>

#include <cmath>

#include "mie/core.hpp"
#include "mie/spectrum.hpp"

using namespace mie;

TEST_CASE("gamma_sq = 2, N = 3 levels in closed form") {
  const DimensionlessModel model = DimensionlessModel::special(2.0);

  const BoundLevel ground = bound_energy(model, {0, 0, 3});
  // lambda = 1/2, root = sqrt(1/4 + 2) = 3/2, q = 1, beta = 2/(1/2+3/2) = 1
  CHECK(ground.q_exponent == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ground.beta == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ground.energy_dimensionless == doctest::Approx(-1.0).epsilon(1e-15));

  const BoundLevel first = bound_energy(model, {1, 0, 3});
  CHECK(first.beta == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(first.energy_dimensionless == doctest::Approx(-4.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("energy equals -beta^2 bit-exactly") {
  for (double g2 : {1.0, 2.0, 10.0, 629.113766146387})
    for (int dim = 2; dim <= 5; ++dim)
      for (int l = 0; l <= 3; ++l)
        for (int n = 0; n <= 4; ++n) {
          const BoundLevel lv =
              bound_energy(DimensionlessModel::special(g2, dim), {n, l, dim});
          CHECK(lv.energy_dimensionless == -(lv.beta * lv.beta));
        }
}

TEST_CASE("interdimensional degeneracy is bit-exact in the closed form") {
  for (double g2 : {2.0, 5.0, 25.0})
    for (int dim = 2; dim <= 5; ++dim)
      for (int l = 1; l <= 3; ++l)
        for (int n = 0; n <= 2; ++n) {
          const BoundLevel a =
              bound_energy(DimensionlessModel::special(g2, dim), {n, l, dim});
          const BoundLevel b = bound_energy(DimensionlessModel::special(g2, dim + 2),
                                            {n, l - 1, dim + 2});
          CHECK(a.energy_dimensionless == b.energy_dimensionless);
          CHECK(a.beta == b.beta);
        }
}

TEST_CASE("hydrogen limit: a1=2, a2=0 reproduces -1/(2 n'^2) hartree") {
  for (int n = 0; n <= 4; ++n)
    for (int l = 0; l + n <= 4; ++l) {
      const int n_principal = n + l + 1;
      const double e_hartree =
          bound_energy_generalized(2.0, 0.0, {n, l, 3}).energy_dimensionless * 0.5;
      const double expected = -0.5 / (n_principal * n_principal);
      CHECK(e_hartree == doctest::Approx(expected).epsilon(1e-15));
    }
  CHECK(coulomb_check(1) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(coulomb_check(2) == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(coulomb_check(5) == doctest::Approx(-0.02).epsilon(1e-15));
}

TEST_CASE("generalized strengths reduce to the single-well case") {
  const DimensionlessModel model = DimensionlessModel::special(7.0, 4);
  for (int n = 0; n <= 2; ++n)
    for (int l = 0; l <= 2; ++l) {
      const BoundLevel via_model = bound_energy(model, {n, l, 4});
      const BoundLevel via_pair = bound_energy_generalized(14.0, 7.0, {n, l, 4});
      CHECK(via_model.energy_dimensionless == via_pair.energy_dimensionless);
    }
}

TEST_CASE("expansion terms for gamma_sq = 2, ground state") {
  const DimensionlessModel model = DimensionlessModel::special(2.0);
  const ExpansionTerms t = expand_energy(model, {0, 0, 3});
  const double gamma = std::sqrt(2.0);
  CHECK(t.terms[0] == -1.0);
  CHECK(t.terms[1] == doctest::Approx(1.0 / gamma).epsilon(1e-15));          // 2*nu/gamma
  CHECK(t.terms[2] == doctest::Approx(0.25 / 2.0).epsilon(1e-15));           // lambda^2/g^2
  CHECK(t.terms[3] == doctest::Approx(-0.75 / 2.0).epsilon(1e-15));          // -3nu^2/g^2
  CHECK(t.terms[4] == doctest::Approx(-0.375 / (2.0 * gamma)).epsilon(1e-15));
  CHECK(t.sum() == doctest::Approx(t.terms[0] + t.terms[1] + t.terms[2] + t.terms[3] +
                                   t.terms[4])
                       .epsilon(1e-15));
  CHECK(t.sum_through(0) == -1.0);
  CHECK(t.sum_through(1) == doctest::Approx(-1.0 + t.terms[1]).epsilon(1e-15));
  CHECK_THROWS_AS(expand_energy(model, {0, 0, 3}, 4), std::domain_error);
  CHECK_THROWS_AS(expand_energy(model, {0, 0, 3}, -1), std::domain_error);
}

TEST_CASE("expansion converges to the exact level as the well deepens") {
  // relative error of the order-3 sum should fall roughly like 1/gamma^3
  double prev = 1.0;
  for (double g2 : {1e2, 1e4, 1e6}) {
    const DimensionlessModel model = DimensionlessModel::special(g2);
    const QuantumState st{1, 1, 3};
    const double exact = bound_energy(model, st).energy_dimensionless;
    const double approx = g2 * expand_energy(model, st).sum();
    const double rel = std::abs(approx - exact) / std::abs(exact);
    CHECK(rel < prev * 0.2);
    prev = rel;
  }
}

TEST_CASE("spectroscopic form equals D0 times the expansion, term by term") {
  PotentialSpec spec;
  spec.D0 = 4.7446;
  spec.r0 = 0.7416;
  spec.reduced_mass = 0.50391;
  spec.units = UnitSystem::molecular;

  const DimensionlessModel model =
      DimensionlessModel::special(gamma_sq_of(spec), 3);
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l) {
      const QuantumState st{n, l, 3};
      const ExpansionTerms t = expand_energy(model, st);
      const SpectroscopicTerms s = spectroscopic_terms(spec, st);
      for (std::size_t i = 0; i < 5; ++i) {
        CHECK(s.terms[i] ==
              doctest::Approx(spec.D0 * t.terms[i]).epsilon(1e-12));
      }
      CHECK(spectroscopic_energy(spec, st) ==
            doctest::Approx(spec.D0 * t.sum()).epsilon(1e-12));
    }
}

TEST_CASE("reflected-spectrum evaluator mirrors the bound formula") {
  const DimensionlessModel model = DimensionlessModel::special(2.0);
  const QuantumState st{1, 0, 3};
  CHECK(positive_energy(model, st) ==
        -bound_energy(model, st).energy_dimensionless);
  CHECK(positive_energy(model, st) > 0.0);
}

TEST_CASE("screened-Coulomb closed form against frozen values") {
  // V0 = 2, sigma = 1: A = 1, B = 2
  CHECK(coulomb_closed_form(2.0, 1.0, 0, 0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(coulomb_closed_form(2.0, 1.0, 1, 0) ==
        doctest::Approx(-2.0 / 9.0).epsilon(1e-15));
  CHECK(coulomb_closed_form(2.0, 1.0, 0, 1) ==
        doctest::Approx(-0.304805898398896).epsilon(1e-12));
  // identical to the generalized-strength route at D0 = V0/2, r0 = sigma:
  // a1 = 2 sigma^2 V0 * (1/sigma) ... expressed dimensionlessly the well has
  // gamma_sq = sigma^2 V0, and physical energies carry 1/(2 sigma^2).
  for (int nr = 0; nr <= 2; ++nr)
    for (int l = 0; l <= 2; ++l) {
      const double g2 = 1.0 * 1.0 * 2.0;  // sigma^2 V0
      const double via_model =
          bound_energy(DimensionlessModel::special(g2), {nr, l, 3})
              .energy_dimensionless *
          0.5;
      CHECK(coulomb_closed_form(2.0, 1.0, nr, l) ==
            doctest::Approx(via_model).epsilon(1e-14));
    }
}

TEST_CASE("spec-aware overload fills the physical energy") {
  PotentialSpec spec;
  spec.D0 = 1.0;
  spec.r0 = 1.0;
  spec.reduced_mass = 1.0;
  const BoundLevel lv = bound_energy(spec, {0, 0, 3});
  REQUIRE(lv.energy_physical.has_value());
  CHECK(*lv.energy_physical == doctest::Approx(-0.5).epsilon(1e-15));  // hartree
}

TEST_CASE("model/state dimension mismatch is rejected") {
  const DimensionlessModel model = DimensionlessModel::special(2.0, 3);
  CHECK_THROWS_AS(bound_energy(model, {0, 0, 4}), std::domain_error);
  CHECK_THROWS_AS(exponent_q(model, {0, 0, 2}), std::domain_error);
}

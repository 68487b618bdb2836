#pragma once

#include <array>
#include <optional>

#include "mie/core.hpp"

namespace mie {

/// One bound level. energy_dimensionless is in units of hbar^2/(2 mu r0^2)
/// and equals -beta^2 exactly; energy_physical is filled only by the
/// spec-aware overloads.
struct BoundLevel {
  QuantumState state;
  double q_exponent = 0.0;  // small-x exponent of the radial function
  double beta = 0.0;        // decay constant, beta = gamma_sq / (n + q + (N-1)/2)
  double energy_dimensionless = 0.0;
  std::optional<double> energy_physical;
};

/// Positive root of the indicial equation:
/// q = -(N-2)/2 + sqrt((l + (N-2)/2)^2 + a2).
double exponent_q(const DimensionlessModel& model, const QuantumState& state);

/// Exact bound level of the dimensionless model,
///   E = -(a1/2)^2 [n + 1/2 + sqrt((l+(N-2)/2)^2 + a2)]^-2.
/// The denominator is computed once and shared with beta so that
/// E == -beta*beta holds bit-exactly.
BoundLevel bound_energy(const DimensionlessModel& model, const QuantumState& state);

/// Spec-aware overload; also fills energy_physical (spec's energy unit).
BoundLevel bound_energy(const PotentialSpec& spec, const QuantumState& state);

/// Decoupled Coulomb + inverse-square strengths (a1 > 0, a2 >= 0), not tied
/// to a single well depth. Reduces exactly to bound_energy when
/// a1 = 2*gamma_sq, a2 = gamma_sq.
BoundLevel bound_energy_generalized(double a1, double a2, const QuantumState& state);

/// The five deep-well expansion terms of E/D0 in powers of 1/gamma
/// (gamma = sqrt(gamma_sq), nu = n + 1/2, lambda = l + (N-2)/2):
///   -1,  2 nu/gamma,  lambda^2/gamma^2,  -3 nu^2/gamma^2,
///   -3 nu lambda^2/gamma^3.
/// Orders above 3 are not defined by this series and are rejected.
struct ExpansionTerms {
  static constexpr std::array<int, 5> orders{0, 1, 2, 2, 3};
  std::array<double, 5> terms{};  // dimensionless, each multiplies D0
  int truncation_order = 3;

  double sum_through(int order) const;
  double sum() const { return sum_through(truncation_order); }
};

ExpansionTerms expand_energy(const DimensionlessModel& model, const QuantumState& state,
                             int order = 3);

/// The same five terms written with the well's harmonic data
/// (omega, I = mu r0^2):
///   -I omega^2/2,  hbar omega nu,  (hbar^2/2I) lambda^2,
///   -(3 hbar^2/2I) nu^2,  -(3 hbar^3/(2 I^2 omega)) nu lambda^2.
/// Term-by-term equal to D0 * ExpansionTerms::terms.
struct SpectroscopicTerms {
  std::array<double, 5> terms{};  // spec's energy unit

  double sum() const;
};

SpectroscopicTerms spectroscopic_terms(const PotentialSpec& spec, const QuantumState& state);

/// Sum of the five spectroscopic terms, in the spec's energy unit.
double spectroscopic_energy(const PotentialSpec& spec, const QuantumState& state);

/// Formula evaluator for the reflected spectrum +beta^2: the same closed
/// form as bound_energy with the sign flipped. Scattering states form a
/// continuum; discrete values from this expression are meaningful only as
/// the verbatim image of the bound formula, so this is an evaluator, not a
/// physical level.
double positive_energy(const DimensionlessModel& model, const QuantumState& state);

/// Pure Coulomb limit in three dimensions (a1 = 2, a2 = 0, atomic units):
/// verifies that every (n, l) with n + l + 1 == n_principal shares one
/// energy and returns it, -1/(2 n_principal^2) hartree.
double coulomb_check(int n_principal);

/// Coulomb closed form parametrized by a screening length sigma and
/// strength V0 (atomic units), A = sigma^2 V0 / 2, B = sigma V0:
///   E = -2 B^2 [2 n_radial + 1 + sqrt((2l+1)^2 + 8 A)]^-2.
/// Algebraically identical to bound_energy_generalized at D0 = V0/2,
/// r0 = sigma.
double coulomb_closed_form(double V0, double sigma, int n_radial, int l);

}  // namespace mie

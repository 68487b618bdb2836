#pragma once

#include <stdexcept>

namespace mie {

/// Unit systems accepted on input.
///  - atomic:    hartree / bohr / electron masses, hbar = 1
///  - molecular: eV / angstrom / amu, with c = 1 so masses are energies
enum class UnitSystem { atomic, molecular };

/// CODATA 2018 values used by the molecular unit system and by the
/// molecule-file loader.
namespace constants {
inline constexpr double hbar_c_ev_angstrom = 1973.269804;    // eV*Angstrom
inline constexpr double amu_ev = 9.3149410242e8;             // eV/c^2 per amu
inline constexpr double hartree_ev = 27.211386245988;        // eV per hartree
inline constexpr double bohr_angstrom = 0.529177210903;      // Angstrom per bohr
inline constexpr double electron_mass_amu = 5.48579909065e-4;
}  // namespace constants

/// Two-term attractive/repulsive potential
///   V(r) = D0 * [ k/(m-k) (r0/r)^m - m/(m-k) (r0/r)^k ],  m > k >= 1,
/// with well depth D0 > 0 at the minimum r = r0.
struct PotentialSpec {
  double D0 = 0.0;            // well depth, > 0
  double r0 = 0.0;            // equilibrium radius, > 0
  double reduced_mass = 0.0;  // > 0
  int exp_m = 2;
  int exp_k = 1;
  UnitSystem units = UnitSystem::atomic;

  void validate() const;
  /// True for the m=2, k=1 member, the only one with closed-form levels.
  bool analytic_case() const { return exp_m == 2 && exp_k == 1; }
};

/// Dimensionless reduction. Lengths are measured in r0 and energies in
/// hbar^2/(2 mu r0^2); the radial problem then reads
///   R'' + (N-1)/x R' + [E + a1/x - (a2 + l(l+N-2))/x^2] R = 0
/// with a1 = 2*gamma_sq and a2 = gamma_sq for the m=2, k=1 potential.
struct DimensionlessModel {
  double gamma_sq = 0.0;  // 2 mu r0^2 D0 / hbar^2, > 0
  int dim_N = 3;          // spatial dimension, >= 2
  double a1_coeff = 0.0;  // Coulomb strength, > 0
  double a2_coeff = 0.0;  // inverse-square strength, >= 0

  static DimensionlessModel special(double gamma_sq, int dim_N = 3);
  static DimensionlessModel generalized(double a1, double a2, int dim_N = 3);
  void validate() const;
};

struct QuantumState {
  int n = 0;      // radial quantum number, >= 0
  int l = 0;      // angular quantum number, >= 0
  int dim_N = 3;  // spatial dimension, >= 2

  void validate() const;
};

/// l + (N-2)/2, the half-integer angular index that controls both the
/// centrifugal barrier and the interdimensional (N,l) -> (N+2,l-1)
/// degeneracy. Every code path computes it through this helper so that
/// degenerate states produce bit-identical energies.
double angular_index(int l, int dim_N);

/// gamma_sq of a spec (any exponents), in the spec's unit system.
double gamma_sq_of(const PotentialSpec& spec);

/// hbar in the given unit system (1 or hbar*c with c = 1).
double hbar_of(UnitSystem units);

/// The energy quantum hbar^2/(2 mu r0^2) expressed in the spec's energy unit;
/// multiplies dimensionless energies back to physical ones. D0 equals
/// gamma_sq in this unit.
double energy_unit(const PotentialSpec& spec);

/// Maps a spec to its dimensionless model. Only the m=2, k=1 potential has
/// an analytic pathway; other exponents are rejected here (use the
/// finite-difference oracle for those).
DimensionlessModel reduce(const PotentialSpec& spec, int dim_N = 3);

/// V(r) for any admissible exponents, in the spec's energy unit.
double potential_general(const PotentialSpec& spec, double r);

/// Dimensionless potential -a1/x + a2/x^2 in units of hbar^2/(2 mu r0^2).
/// For the reduced m=2, k=1 spec this equals potential_general rescaled;
/// its minimum sits at x = 2*a2/a1 = 1 with value -gamma_sq (i.e. -D0).
double potential_special(const DimensionlessModel& model, double x);

struct HarmonicParams {
  double omega;    // sqrt(2 D0 / (mu r0^2)), in energy/hbar units
  double inertia;  // mu r0^2
};

/// Curvature data of the well bottom.
HarmonicParams harmonic_params(const PotentialSpec& spec);

/// Quadratic expansion of the m=2, k=1 potential about its minimum:
/// D0 (r - r0)^2 / r0^2 - D0.
double potential_harmonic(const PotentialSpec& spec, double r);

}  // namespace mie

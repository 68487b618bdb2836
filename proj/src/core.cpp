#include "mie/core.hpp"

#include <cmath>
#include <string>

namespace mie {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

void PotentialSpec::validate() const {
  require(std::isfinite(D0) && D0 > 0.0, "PotentialSpec: D0 must be > 0");
  require(std::isfinite(r0) && r0 > 0.0, "PotentialSpec: r0 must be > 0");
  require(std::isfinite(reduced_mass) && reduced_mass > 0.0,
          "PotentialSpec: reduced_mass must be > 0");
  require(exp_k >= 1 && exp_m > exp_k, "PotentialSpec: need exp_m > exp_k >= 1");
}

DimensionlessModel DimensionlessModel::special(double gamma_sq, int dim_N) {
  DimensionlessModel m{gamma_sq, dim_N, 2.0 * gamma_sq, gamma_sq};
  m.validate();
  return m;
}

DimensionlessModel DimensionlessModel::generalized(double a1, double a2, int dim_N) {
  // gamma_sq set to a1/2 so the quantization pipeline (beta = gamma_sq/denom)
  // applies unchanged; a2 stays independent.
  DimensionlessModel m{a1 / 2.0, dim_N, a1, a2};
  m.validate();
  return m;
}

void DimensionlessModel::validate() const {
  require(std::isfinite(gamma_sq) && gamma_sq > 0.0,
          "DimensionlessModel: gamma_sq must be > 0");
  require(dim_N >= 2, "DimensionlessModel: dim_N must be >= 2");
  require(std::isfinite(a1_coeff) && a1_coeff > 0.0,
          "DimensionlessModel: a1_coeff must be > 0");
  require(std::isfinite(a2_coeff) && a2_coeff >= 0.0,
          "DimensionlessModel: a2_coeff must be >= 0");
}

void QuantumState::validate() const {
  require(n >= 0, "QuantumState: n must be >= 0");
  require(l >= 0, "QuantumState: l must be >= 0");
  require(dim_N >= 2, "QuantumState: dim_N must be >= 2");
}

double angular_index(int l, int dim_N) {
  // Single shared expression; (N,l) and (N+2,l-1) land on the same double.
  return static_cast<double>(l) + 0.5 * static_cast<double>(dim_N - 2);
}

double hbar_of(UnitSystem units) {
  return units == UnitSystem::atomic ? 1.0 : constants::hbar_c_ev_angstrom;
}

namespace {

double mass_in_energy(const PotentialSpec& spec) {
  // atomic: electron masses (hbar=1 makes m itself the right factor);
  // molecular: amu -> eV/c^2 with c=1.
  return spec.units == UnitSystem::atomic ? spec.reduced_mass
                                          : spec.reduced_mass * constants::amu_ev;
}

}  // namespace

double gamma_sq_of(const PotentialSpec& spec) {
  spec.validate();
  const double hbar = hbar_of(spec.units);
  return 2.0 * mass_in_energy(spec) * spec.r0 * spec.r0 * spec.D0 / (hbar * hbar);
}

double energy_unit(const PotentialSpec& spec) {
  spec.validate();
  const double hbar = hbar_of(spec.units);
  return hbar * hbar / (2.0 * mass_in_energy(spec) * spec.r0 * spec.r0);
}

DimensionlessModel reduce(const PotentialSpec& spec, int dim_N) {
  spec.validate();
  if (!spec.analytic_case())
    throw std::domain_error(
        "reduce: closed-form levels exist only for exp_m=2, exp_k=1; "
        "use the finite-difference solver for other exponents");
  return DimensionlessModel::special(gamma_sq_of(spec), dim_N);
}

double potential_general(const PotentialSpec& spec, double r) {
  spec.validate();
  if (!(std::isfinite(r) && r > 0.0))
    throw std::domain_error("potential_general: r must be > 0");
  const double mk = static_cast<double>(spec.exp_m - spec.exp_k);
  const double ratio = spec.r0 / r;
  return spec.D0 * (spec.exp_k / mk * std::pow(ratio, spec.exp_m) -
                    spec.exp_m / mk * std::pow(ratio, spec.exp_k));
}

double potential_special(const DimensionlessModel& model, double x) {
  model.validate();
  if (!(std::isfinite(x) && x > 0.0))
    throw std::domain_error("potential_special: x must be > 0");
  return -model.a1_coeff / x + model.a2_coeff / (x * x);
}

HarmonicParams harmonic_params(const PotentialSpec& spec) {
  spec.validate();
  const double m = mass_in_energy(spec);
  return HarmonicParams{std::sqrt(2.0 * spec.D0 / (m * spec.r0 * spec.r0)),
                        m * spec.r0 * spec.r0};
}

double potential_harmonic(const PotentialSpec& spec, double r) {
  spec.validate();
  const double d = (r - spec.r0) / spec.r0;
  return spec.D0 * d * d - spec.D0;
}

}  // namespace mie

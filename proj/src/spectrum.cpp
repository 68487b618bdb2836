#include "mie/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mie {

namespace {

void check_pair(const DimensionlessModel& model, const QuantumState& state) {
  model.validate();
  state.validate();
  if (model.dim_N != state.dim_N)
    throw std::domain_error("model and state disagree on dim_N");
}

struct Kernel {
  double lambda;  // l + (N-2)/2
  double root;    // sqrt(lambda^2 + a2)
  double q;
  double denom;   // n + 1/2 + root
  double beta;
  double energy;  // -beta^2
};

// Shared closed-form pipeline. The denominator is computed as
// (n + 1/2) + root so that interdimensionally degenerate states, which
// share `root` bit-for-bit, also share beta and the energy bit-for-bit.
Kernel solve_kernel(double a1, double a2, const QuantumState& state) {
  if (!(std::isfinite(a1) && a1 > 0.0))
    throw std::domain_error("bound states require a1 > 0 (no bound state otherwise)");
  if (!(std::isfinite(a2) && a2 >= 0.0))
    throw std::domain_error("a2 must be >= 0");
  Kernel k;
  k.lambda = angular_index(state.l, state.dim_N);
  k.root = std::sqrt(k.lambda * k.lambda + a2);
  k.q = k.root - 0.5 * static_cast<double>(state.dim_N - 2);
  k.denom = (static_cast<double>(state.n) + 0.5) + k.root;
  k.beta = (a1 / 2.0) / k.denom;
  k.energy = -(k.beta * k.beta);
  return k;
}

BoundLevel to_level(const Kernel& k, const QuantumState& state) {
  BoundLevel lv;
  lv.state = state;
  lv.q_exponent = k.q;
  lv.beta = k.beta;
  lv.energy_dimensionless = k.energy;
  return lv;
}

}  // namespace

double exponent_q(const DimensionlessModel& model, const QuantumState& state) {
  check_pair(model, state);
  return solve_kernel(model.a1_coeff, model.a2_coeff, state).q;
}

BoundLevel bound_energy(const DimensionlessModel& model, const QuantumState& state) {
  check_pair(model, state);
  return to_level(solve_kernel(model.a1_coeff, model.a2_coeff, state), state);
}

BoundLevel bound_energy(const PotentialSpec& spec, const QuantumState& state) {
  BoundLevel lv = bound_energy(reduce(spec, state.dim_N), state);
  lv.energy_physical = lv.energy_dimensionless * energy_unit(spec);
  return lv;
}

BoundLevel bound_energy_generalized(double a1, double a2, const QuantumState& state) {
  state.validate();
  return to_level(solve_kernel(a1, a2, state), state);
}

double ExpansionTerms::sum_through(int order) const {
  double s = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (orders[i] <= order) s += terms[i];
  return s;
}

ExpansionTerms expand_energy(const DimensionlessModel& model, const QuantumState& state,
                             int order) {
  check_pair(model, state);
  if (order < 0 || order > 3)
    throw std::domain_error("expand_energy: series is defined through order 3 only");
  const double gamma = std::sqrt(model.gamma_sq);
  const double nu = static_cast<double>(state.n) + 0.5;
  const double lambda = angular_index(state.l, state.dim_N);
  const double l2 = lambda * lambda;
  ExpansionTerms e;
  e.truncation_order = order;
  e.terms = {-1.0,
             2.0 * nu / gamma,
             l2 / model.gamma_sq,
             -3.0 * nu * nu / model.gamma_sq,
             -3.0 * nu * l2 / (model.gamma_sq * gamma)};
  return e;
}

double SpectroscopicTerms::sum() const {
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

SpectroscopicTerms spectroscopic_terms(const PotentialSpec& spec, const QuantumState& state) {
  state.validate();
  const HarmonicParams hp = harmonic_params(spec);
  const double hbar = hbar_of(spec.units);
  const double nu = static_cast<double>(state.n) + 0.5;
  const double lambda = angular_index(state.l, state.dim_N);
  const double l2 = lambda * lambda;
  SpectroscopicTerms t;
  t.terms = {-0.5 * hp.inertia * hp.omega * hp.omega,
             hbar * hp.omega * nu,
             hbar * hbar / (2.0 * hp.inertia) * l2,
             -3.0 * hbar * hbar / (2.0 * hp.inertia) * nu * nu,
             -3.0 * hbar * hbar * hbar / (2.0 * hp.inertia * hp.inertia * hp.omega) * nu * l2};
  return t;
}

double spectroscopic_energy(const PotentialSpec& spec, const QuantumState& state) {
  return spectroscopic_terms(spec, state).sum();
}

double positive_energy(const DimensionlessModel& model, const QuantumState& state) {
  return -bound_energy(model, state).energy_dimensionless;
}

double coulomb_check(int n_principal) {
  if (n_principal < 1) throw std::domain_error("coulomb_check: n_principal must be >= 1");
  // a1 = 2, a2 = 0 is the hydrogen atom in atomic units at r0 = 1 bohr:
  // dimensionless energies sit in units of 1/2 hartree.
  double common = 0.0;
  bool first = true;
  for (int l = 0; l < n_principal; ++l) {
    const QuantumState st{n_principal - 1 - l, l, 3};
    const double e = bound_energy_generalized(2.0, 0.0, st).energy_dimensionless * 0.5;
    if (first) {
      common = e;
      first = false;
    } else if (e != common) {
      throw std::logic_error("coulomb_check: degeneracy across (n,l) violated");
    }
  }
  return common;
}

double coulomb_closed_form(double V0, double sigma, int n_radial, int l) {
  if (!(V0 > 0.0) || !(sigma > 0.0))
    throw std::domain_error("coulomb_closed_form: V0 and sigma must be > 0");
  if (n_radial < 0 || l < 0)
    throw std::domain_error("coulomb_closed_form: quantum numbers must be >= 0");
  const double A = 0.5 * sigma * sigma * V0;
  const double B = sigma * V0;
  const double twol = 2.0 * l + 1.0;
  const double denom = 2.0 * n_radial + 1.0 + std::sqrt(twol * twol + 8.0 * A);
  return -2.0 * B * B / (denom * denom);
}

}  // namespace mie

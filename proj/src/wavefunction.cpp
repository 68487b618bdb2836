#include "mie/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "mie/errors.hpp"
#include "mie/quadrature.hpp"

namespace mie {

double RadialFunction::operator()(double x) const {
  if (!(std::isfinite(x) && x > 0.0))
    throw std::domain_error("radial function: x must be > 0");
  const double lag = laguerre(laguerre_factor, 2.0 * level.beta * x);
  if (lag == 0.0) return 0.0;
  // Log-space evaluation: the prefactor alone overflows for deep wells
  // while the product stays ordinary.
  const double mag =
      log_norm + level.q_exponent * std::log(x) - level.beta * x + std::log(std::abs(lag));
  return std::copysign(std::exp(mag), lag);
}

void RadialFunction::sample(double x_min, double x_max, int points) {
  if (!(x_min > 0.0) || !(x_max > x_min) || points < 2)
    throw std::domain_error("radial sample: need 0 < x_min < x_max and points >= 2");
  samples.clear();
  samples.reserve(points);
  const double h = (x_max - x_min) / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double x = (i == points - 1) ? x_max : x_min + i * h;
    samples.emplace_back(x, (*this)(x));
  }
}

namespace {

double check_r0(double r0) {
  if (!(std::isfinite(r0) && r0 > 0.0))
    throw std::domain_error("normalization: r0 must be > 0");
  return r0;
}

double log_normalization(const DimensionlessModel& model, const QuantumState& state,
                         double r0) {
  check_r0(r0);
  const BoundLevel lv = bound_energy(model, state);
  const double N = static_cast<double>(state.dim_N);
  const double m = 2.0 * lv.q_exponent + N - 2.0;
  const double log_j = log_laguerre_norm_integral(state.n, m);
  return (lv.q_exponent + 0.5 * N) * std::log(2.0 * lv.beta) - 0.5 * N * std::log(r0) -
         0.5 * log_j;
}

}  // namespace

double normalization(const DimensionlessModel& model, const QuantumState& state, double r0) {
  return std::exp(log_normalization(model, state, r0));
}

double normalization_alt(const DimensionlessModel& model, const QuantumState& state,
                         double r0) {
  check_r0(r0);
  const BoundLevel lv = bound_energy(model, state);
  const double N = static_cast<double>(state.dim_N);
  const double g2_over_beta = model.gamma_sq / lv.beta;
  const double exponent = g2_over_beta - state.n - 0.5 * (N - 1.0);
  const double log_value =
      0.5 * N * (std::log(2.0 * lv.beta) - std::log(r0)) +
      exponent * std::log(2.0 * lv.beta) +
      0.5 * (std::lgamma(state.n + 1.0) - std::log(2.0 * g2_over_beta) -
             std::lgamma(2.0 * g2_over_beta - state.n));
  return std::exp(log_value);
}

RadialFunction radial_bound(const DimensionlessModel& model, const QuantumState& state,
                            double r0) {
  check_r0(r0);
  RadialFunction rf;
  rf.level = bound_energy(model, state);
  rf.level.energy_physical.reset();
  const double alpha = 2.0 * rf.level.q_exponent + state.dim_N - 2.0;
  rf.laguerre_factor = LaguerreParams{state.n, alpha};
  rf.laguerre_factor.validate();
  rf.log_norm = log_normalization(model, state, r0);
  rf.norm_constant = std::exp(rf.log_norm);
  rf.r0 = r0;
  return rf;
}

std::vector<double> series_coefficients(const DimensionlessModel& model,
                                        const QuantumState& state, double beta) {
  model.validate();
  state.validate();
  if (model.dim_N != state.dim_N)
    throw std::domain_error("model and state disagree on dim_N");
  if (!(std::isfinite(beta) && beta > 0.0))
    throw std::domain_error("series_coefficients: beta must be > 0");
  const double q = exponent_q(model, state);
  const double N = static_cast<double>(state.dim_N);
  const double g2_over_beta = model.gamma_sq / beta;
  std::vector<double> c;
  c.reserve(state.n + 2);
  c.push_back(1.0);
  for (int i = 0; i <= state.n; ++i) {
    const double numerator = i + q + 0.5 * (N - 1.0) - g2_over_beta;
    const double ratio = 2.0 * beta * numerator / ((i + 1.0) * (i + 2.0 * q + N - 1.0));
    c.push_back(ratio * c.back());
  }
  return c;
}

std::complex<double> radial_continuum(const DimensionlessModel& model, int l,
                                      double kappa_r0, double x) {
  model.validate();
  if (l < 0) throw std::domain_error("radial_continuum: l must be >= 0");
  if (!(std::isfinite(kappa_r0) && kappa_r0 > 0.0))
    throw std::domain_error("radial_continuum: kappa_r0 must be > 0");
  if (!(std::isfinite(x) && x > 0.0))
    throw std::domain_error("radial_continuum: x must be > 0");
  const QuantumState st{0, l, model.dim_N};
  const double q = exponent_q(model, st);
  const double N = static_cast<double>(model.dim_N);
  const std::complex<double> i_unit(0.0, 1.0);
  const std::complex<double> a =
      q + 0.5 * (N - 1.0) - i_unit * (model.gamma_sq / kappa_r0);
  const std::complex<double> c(2.0 * q + N - 1.0, 0.0);
  const double kr = kappa_r0 * x;
  return std::pow(x, q) * std::exp(i_unit * kr) *
         kummer_series(a, c, -2.0 * i_unit * kr);
}

namespace {

// Upper cutoff beyond which the squared radial density is negligible:
// the exponent 2 beta x - A ln x, A = 2q + N - 1 + 2n, is ~40 nats past
// its stationary point.
double density_cut(const RadialFunction& rf) {
  const double beta = rf.level.beta;
  const double a_pow = 2.0 * rf.level.q_exponent + rf.level.state.dim_N - 1.0 +
                       2.0 * rf.level.state.n;
  double cut = (a_pow + 40.0) / (2.0 * beta);
  cut = (a_pow * std::log(std::max(std::exp(1.0), 2.0 * beta * cut)) + 40.0) /
            (2.0 * beta) +
        a_pow / (2.0 * beta);
  return std::max(cut, 10.0 / beta);
}

}  // namespace

double norm_integral(const DimensionlessModel& model, const QuantumState& state) {
  const RadialFunction rf = radial_bound(model, state);
  // R^2 x^(N-1) ~ x^(2S+1) with S >= 0, so the integrand extends
  // continuously to 0 at the origin.
  const auto density = [&rf, &state](double x) {
    if (x <= 0.0) return 0.0;
    const double r = rf(x);
    return r * r * std::pow(x, state.dim_N - 1);
  };
  return integrate_decaying(density, 0.0, density_cut(rf), 1e-12);
}

double overlap_integral(const DimensionlessModel& model, const QuantumState& a,
                        const QuantumState& b) {
  if (a.l != b.l || a.dim_N != b.dim_N)
    throw std::domain_error("overlap_integral: states must share l and dim_N");
  const RadialFunction ra = radial_bound(model, a);
  const RadialFunction rb = radial_bound(model, b);
  const auto density = [&](double x) {
    if (x <= 0.0) return 0.0;
    return ra(x) * rb(x) * std::pow(x, a.dim_N - 1);
  };
  const double cut = std::max(density_cut(ra), density_cut(rb));
  return integrate_decaying(density, 0.0, cut, 1e-12);
}

int count_nodes(const DimensionlessModel& model, const QuantumState& state) {
  const RadialFunction rf = radial_bound(model, state);
  // All roots of L_n^(alpha) lie below 4n + 2 alpha + 2 in its own
  // variable z = 2 beta x; pad beyond that.
  const double alpha = rf.laguerre_factor.alpha;
  const double z_hi = 4.0 * state.n + 2.0 * alpha + 6.0;
  const double x_hi = z_hi / (2.0 * rf.level.beta);
  const double x_lo = std::min(1e-4, x_hi * 1e-6);
  const int points = 10000;
  const double step = std::log(x_hi / x_lo) / (points - 1);
  int flips = 0;
  double prev = 0.0;
  for (int i = 0; i < points; ++i) {
    const double v = rf(x_lo * std::exp(i * step));
    if (v == 0.0) continue;
    if (prev != 0.0 && std::signbit(v) != std::signbit(prev)) ++flips;
    prev = v;
  }
  return flips;
}

}  // namespace mie

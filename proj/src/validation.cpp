#include "mie/validation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mie/spectrum.hpp"

namespace mie {

double ode_residual(const DimensionlessModel& model, const QuantumState& state, double x_lo,
                    double x_hi, double h) {
  if (!(x_lo > 0.0) || !(x_hi > x_lo))
    throw std::domain_error("ode_residual: need 0 < x_lo < x_hi");
  if (!(h > 0.0) || h >= (x_hi - x_lo) / 4.0)
    throw std::domain_error("ode_residual: step too large for the window");

  const RadialFunction rf = radial_bound(model, state);
  const double energy = rf.level.energy_dimensionless;
  const double lam = angular_index(state.l, state.dim_N);
  const double centrifugal = model.a2_coeff + lam * lam - 0.25 * (state.dim_N - 2.0) *
                                                              (state.dim_N - 2.0);
  // a2 + l(l+N-2) == a2 + lambda^2 - ((N-2)/2)^2 with lambda = l + (N-2)/2.
  const int steps = static_cast<int>(std::floor((x_hi - x_lo) / h));
  double worst = 0.0;
  double amplitude = 0.0;
  for (int i = 1; i < steps; ++i) {
    const double x = x_lo + i * h;
    const double r_m = rf(x - h);
    const double r_0 = rf(x);
    const double r_p = rf(x + h);
    const double d2 = (r_p - 2.0 * r_0 + r_m) / (h * h);
    const double d1 = (r_p - r_m) / (2.0 * h);
    const double res = d2 + (state.dim_N - 1.0) / x * d1 +
                       (energy + model.a1_coeff / x - centrifugal / (x * x)) * r_0;
    worst = std::max(worst, std::abs(res));
    amplitude = std::max(amplitude, std::abs(r_0));
  }
  if (!(amplitude > 0.0))
    throw std::domain_error("ode_residual: function vanishes on the window");
  return worst / amplitude;
}

double ode_residual_order(const DimensionlessModel& model, const QuantumState& state,
                          double x_lo, double x_hi, double h) {
  const double coarse = ode_residual(model, state, x_lo, x_hi, h);
  const double fine = ode_residual(model, state, x_lo, x_hi, 0.5 * h);
  if (!(fine > 0.0)) throw std::domain_error("ode_residual_order: zero fine residual");
  return std::log2(coarse / fine);
}

}  // namespace mie

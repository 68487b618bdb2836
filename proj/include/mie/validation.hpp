#pragma once

#include "mie/core.hpp"
#include "mie/wavefunction.hpp"

namespace mie {

/// Max-norm residual of the dimensionless radial equation
///   R'' + (N-1)/x R' + [E + a1/x - (a2 + l(l+N-2))/x^2] R = 0
/// evaluated on analytic samples with O(h^2) central differences over
/// [x_lo, x_hi], normalized by max |R| on the window. Decays as h^2 for a
/// correct eigenfunction.
double ode_residual(const DimensionlessModel& model, const QuantumState& state, double x_lo,
                    double x_hi, double h);

/// Convergence order measured from residuals at h and h/2.
double ode_residual_order(const DimensionlessModel& model, const QuantumState& state,
                          double x_lo, double x_hi, double h);

}  // namespace mie

#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "mie/core.hpp"
#include "mie/special.hpp"
#include "mie/spectrum.hpp"

namespace mie {

/// Bound radial eigenfunction
///   R(x) = N_nl x^q e^(-beta x) L_n^(alpha)(2 beta x),  alpha = 2q + N - 2,
/// with x = r/r0. The normalization satisfies
///   r0^N * int R(x)^2 x^(N-1) dx = 1,
/// so N_nl carries a factor r0^(-N/2). Evaluation goes through log space;
/// deep wells (gamma_sq ~ 1e4) neither overflow nor produce NaN.
struct RadialFunction {
  BoundLevel level;
  LaguerreParams laguerre_factor;
  double norm_constant = 0.0;  // N_nl
  double log_norm = 0.0;       // log N_nl, used for evaluation
  double r0 = 1.0;
  std::vector<std::pair<double, double>> samples;  // filled by sample()

  double operator()(double x) const;
  void sample(double x_min, double x_max, int points);
};

RadialFunction radial_bound(const DimensionlessModel& model, const QuantumState& state,
                            double r0 = 1.0);

/// Normalization constant (2 beta)^(q+N/2) r0^(-N/2) J^(-1/2) with
/// J = Gamma(m+n+1)/Gamma(n+1) (2n+m+1), m = 2q + N - 2.
double normalization(const DimensionlessModel& model, const QuantumState& state,
                     double r0 = 1.0);

/// Algebraically equivalent rearrangement,
///   (2 beta / r0)^(N/2) (2 beta)^(gamma_sq/beta - n - (N-1)/2)
///   [n! / ((2 gamma_sq/beta) Gamma(2 gamma_sq/beta - n))]^(1/2),
/// kept as an independent cross-check of `normalization`.
double normalization_alt(const DimensionlessModel& model, const QuantumState& state,
                         double r0 = 1.0);

/// Power-series coefficients of the polynomial factor h(x) = sum C_i x^i
/// of the bound solution, for an arbitrary decay constant beta:
///   C_0 = 1,
///   C_{i+1} = 2 beta (i + q + (N-1)/2 - gamma_sq/beta)
///             / ((i+1)(i + 2q + N - 1)) * C_i,  i = 0..n.
/// Returns C_0..C_{n+1}; at the quantized beta the last entry vanishes and
/// the polynomial truncates to degree n (a rescaled Laguerre polynomial in
/// 2 beta x).
std::vector<double> series_coefficients(const DimensionlessModel& model,
                                        const QuantumState& state, double beta);

/// Scattering solution at wavenumber kappa (kappa_r0 = kappa * r0):
///   x^q e^(i kappa r) 1F1(q + (N-1)/2 - i gamma_sq/kappa_r0;
///                          2q + N - 1; -2 i kappa r),
/// amplitude fixed to 1. Requires 2 kappa_r0 x <= 50 (series range).
std::complex<double> radial_continuum(const DimensionlessModel& model, int l,
                                      double kappa_r0, double x);

/// Quadrature of r0^N int R^2 x^(N-1) dx; 1 for a correct normalization.
double norm_integral(const DimensionlessModel& model, const QuantumState& state);

/// Quadrature of the cross overlap r0^N int R_a R_b x^(N-1) dx for two
/// states sharing l and N; 0 for exact eigenfunctions.
double overlap_integral(const DimensionlessModel& model, const QuantumState& a,
                        const QuantumState& b);

/// Sign changes of R on a logarithmic grid covering all Laguerre roots;
/// equals n for a correct bound state.
int count_nodes(const DimensionlessModel& model, const QuantumState& state);

}  // namespace mie

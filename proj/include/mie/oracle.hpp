#pragma once

#include <functional>
#include <vector>

#include "mie/core.hpp"

namespace mie {

/// Uniform grid for the finite-difference solver.
struct Grid {
  double x_min = 1e-3;
  double x_max = 50.0;
  int points = 4001;  // >= 64

  void validate() const;
  double spacing() const { return (x_max - x_min) / (points - 1); }
  /// Same interval at half the spacing (nested nodes).
  Grid refined() const { return Grid{x_min, x_max, 2 * (points - 1) + 1}; }
};

/// Effective 1D potential W(x) of the reduced problem -u'' + W u = E u,
/// u = x^((N-1)/2) R. The centrifugal part is
/// Lambda(Lambda+1)/x^2 with Lambda = l + (N-3)/2, i.e.
/// (lambda^2 - 1/4)/x^2 with lambda = l + (N-2)/2.
struct EffectivePotential {
  std::function<double(double)> w;
  double inverse_sq_coeff = 0.0;  // total x^-2 coefficient as x -> 0

  double operator()(double x) const { return w(x); }
};

/// Reduction of the dimensionless model at angular momentum l. Total
/// inverse-square coefficients below -1/4 put the Hamiltonian in the
/// fall-to-center regime and are refused (numerical_error).
EffectivePotential reduce_to_1d(const DimensionlessModel& model, int l);

/// Reduction of a general-exponent potential spec (any m > k >= 1),
/// dimensionless via gamma_sq_of(spec).
EffectivePotential reduce_to_1d(const PotentialSpec& spec, int l, int dim_N);

struct RichardsonEstimate {
  double value = 0.0;  // (4 E_h/2 - E_h) / 3
  double error = 0.0;  // |E_h/2 - E_h| / 3
};

struct OracleResult {
  std::vector<double> eigenvalues;  // ascending, dimensionless; fine grid for richardson()
  Grid grid;
  std::vector<RichardsonEstimate> richardson;   // empty unless extrapolated
  std::vector<std::vector<double>> eigenvectors;  // interior-node u samples, if requested
  bool truncated = false;  // fewer bound states on the grid than requested
};

/// Lowest `count` eigenvalues of the Dirichlet finite-difference problem
/// (3-point stencil) by Sturm-sequence bisection; eigenvectors by inverse
/// iteration when want_vectors is set. Returns fewer values (truncated
/// flag) when the grid supports fewer negative eigenvalues.
OracleResult solve_fd(const EffectivePotential& w, const Grid& grid, int count,
                      bool want_vectors = false);
OracleResult solve_fd(const DimensionlessModel& model, int l, const Grid& grid, int count,
                      bool want_vectors = false);

/// h^2 -> 0 extrapolation from the base grid and its refinement.
OracleResult richardson(const DimensionlessModel& model, int l, const Grid& base, int count);

/// Finite-difference levels for arbitrary exponents (no analytic
/// reference); eigenvalues in units of hbar^2/(2 mu r0^2).
OracleResult solve_general_mie(const PotentialSpec& spec, int l, int dim_N, const Grid& grid,
                               int count);

/// Box sized to hold the lowest `count` analytic levels: x_max covers both
/// 10*count/beta_(count-1) and the outer turning point of the top level;
/// x_min is 1e-3 for a strong repulsive core (inverse-square coefficient
/// >= 2), 1e-7 for a weak or absent core (the Dirichlet wall otherwise
/// biases low-exponent states), 1e-2 for a net-attractive tail; spacing
/// ~1e-2 capped at 40001 points.
Grid default_grid(const DimensionlessModel& model, int l, int count);

/// Plain Richardson step on two eigenvalue estimates at h and h/2.
inline double richardson_extrapolate(double e_h, double e_h2) {
  return (4.0 * e_h2 - e_h) / 3.0;
}

}  // namespace mie

#pragma once

#include <complex>

namespace mie {

struct LaguerreParams {
  int degree_n = 0;    // >= 0
  double alpha = 0.0;  // > -1

  void validate() const;
};

/// Generalized Laguerre polynomial L_n^(alpha)(z) by the three-term degree
/// recurrence (k+1) L_{k+1} = (2k+1+alpha-z) L_k - (k+alpha) L_{k-1}.
/// Stable for the moderate degrees used here; alpha may be non-integer.
double laguerre(const LaguerreParams& p, double z);
double laguerre(int n, double alpha, double z);

/// Confluent hypergeometric 1F1(a; c; z) by power-series summation. The
/// series is truncated once the running term stays below tol*|sum| for
/// three consecutive terms. Arguments with Re z < 0 are routed through the
/// Kummer transformation 1F1(a;c;z) = e^z 1F1(c-a;c;-z), so the summed
/// series never alternates along the real axis. Reliable for |z| <= 50 in
/// double precision; larger |z| is rejected (range error) rather than
/// continued asymptotically. c at a non-positive integer is a pole
/// (domain error). Cancellation grows like e^|Im z| off the real axis, so
/// accuracy degrades smoothly toward the |z| = 50 edge for imaginary z.
std::complex<double> kummer_series(std::complex<double> a, std::complex<double> c,
                                   std::complex<double> z, double tol = 1e-15);
double kummer_series(double a, double c, double z, double tol = 1e-15);

/// Generalized binomial coefficient C(n+alpha, n) via log-Gamma.
double binom_general(int n, double alpha);

/// log of the Laguerre weighted-norm integral
///   J = Gamma(m+n+1)/Gamma(n+1) * (2n+m+1)
///     = int_0^inf z^(m+1) e^-z [L_n^(m)(z)]^2 dz,  m > -1.
/// Kept in log space; J overflows double for deep wells.
double log_laguerre_norm_integral(int n, double m);

}  // namespace mie

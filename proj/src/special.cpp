#include "mie/special.hpp"

#include <cmath>
#include <stdexcept>

namespace mie {

void LaguerreParams::validate() const {
  if (degree_n < 0) throw std::domain_error("laguerre: degree must be >= 0");
  if (!(alpha > -1.0)) throw std::domain_error("laguerre: alpha must be > -1");
}

double laguerre(const LaguerreParams& p, double z) {
  p.validate();
  if (!std::isfinite(z)) throw std::domain_error("laguerre: z must be finite");
  if (p.degree_n == 0) return 1.0;
  double prev = 1.0;                 // L_0
  double cur = 1.0 + p.alpha - z;    // L_1
  for (int k = 1; k < p.degree_n; ++k) {
    const double next =
        ((2.0 * k + 1.0 + p.alpha - z) * cur - (k + p.alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int n, double alpha, double z) { return laguerre({n, alpha}, z); }

namespace {

bool is_nonpositive_integer(std::complex<double> c) {
  if (c.imag() != 0.0) return false;
  const double r = c.real();
  return r <= 0.0 && r == std::nearbyint(r);
}

}  // namespace

std::complex<double> kummer_series(std::complex<double> a, std::complex<double> c,
                                   std::complex<double> z, double tol) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("kummer_series: c at a non-positive integer is a pole");
  if (std::abs(z) > 50.0)
    throw std::domain_error("kummer_series: |z| > 50 outside the reliable series range");
  if (!(tol > 0.0)) throw std::domain_error("kummer_series: tol must be > 0");
  // For Re z < 0 the raw series alternates and cancels catastrophically
  // (error ~ e^|Re z| ulp); the Kummer transformation flips the argument
  // into the benign half-plane. Skip it for terminating series (a a
  // non-positive integer), which are exact polynomials either way.
  if (z.real() < 0.0 && !is_nonpositive_integer(a))
    return std::exp(z) * kummer_series(c - a, c, -z, tol);
  std::complex<double> sum = 1.0;
  std::complex<double> term = 1.0;
  int small_streak = 0;
  constexpr int max_terms = 2000;
  for (int k = 0; k < max_terms; ++k) {
    const double kd = static_cast<double>(k);
    term *= (a + kd) * z / ((c + kd) * (kd + 1.0));
    sum += term;
    // <= so that an exactly-terminated series (term == 0) counts as
    // converged even when the sum sits at a polynomial root (sum == 0)
    if (std::abs(term) <= tol * std::abs(sum)) {
      if (++small_streak == 3) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw std::domain_error("kummer_series: no convergence within term budget");
}

double kummer_series(double a, double c, double z, double tol) {
  return kummer_series(std::complex<double>(a), std::complex<double>(c),
                       std::complex<double>(z), tol)
      .real();
}

double binom_general(int n, double alpha) {
  if (n < 0) throw std::domain_error("binom_general: n must be >= 0");
  return std::exp(std::lgamma(n + alpha + 1.0) - std::lgamma(n + 1.0) -
                  std::lgamma(alpha + 1.0));
}

double log_laguerre_norm_integral(int n, double m) {
  if (n < 0) throw std::domain_error("log_laguerre_norm_integral: n must be >= 0");
  if (!(m > -1.0)) throw std::domain_error("log_laguerre_norm_integral: m must be > -1");
  return std::lgamma(m + n + 1.0) - std::lgamma(n + 1.0) + std::log(2.0 * n + m + 1.0);
}

}  // namespace mie

#include "mie/quadrature.hpp"

#include <cmath>

#include "mie/errors.hpp"

namespace mie {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return (fa + 4.0 * fm + fb) * h / 6.0;
}

double adapt(const std::function<double(double)>& f, double a, double b, double fa,
             double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0) throw numerical_error("integrate_adaptive: recursion limit reached");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  return adapt(f, a, b, fa, fm, fb, whole, abs_tol, 48);
}

double integrate_decaying(const std::function<double(double)>& f, double a, double cut,
                          double abs_tol, double rel_tail) {
  double total = integrate_adaptive(f, a, cut, abs_tol);
  for (int i = 0; i < 12; ++i) {
    const double tail = integrate_adaptive(f, cut, 2.0 * cut, abs_tol);
    cut *= 2.0;
    total += tail;
    if (std::abs(tail) <= rel_tail * std::abs(total) + abs_tol) return total;
  }
  throw numerical_error("integrate_decaying: tail did not settle");
}

}  // namespace mie

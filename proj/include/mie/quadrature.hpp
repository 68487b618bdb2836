#pragma once

#include <functional>

namespace mie {

/// Adaptive Simpson integration of f on [a, b] to the given absolute
/// tolerance. Throws numerical_error if the recursion cannot reach it.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol);

/// Integral of a decaying f over [a, inf): integrates [a, cut] and doubles
/// cut until the added tail contributes below rel_tail of the running
/// total.
double integrate_decaying(const std::function<double(double)>& f, double a, double cut,
                          double abs_tol, double rel_tail = 1e-14);

}  // namespace mie

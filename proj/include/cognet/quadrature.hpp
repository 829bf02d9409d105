#pragma once

#include <cstddef>
#include <functional>

namespace cognet::quadrature {

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // accumulated error estimate
    bool converged = false;
    std::size_t evaluations = 0;
};

// Adaptive Gauss-Kronrod 7/15 over [a, b]. Intervals are bisected until the
// local error estimate fits the proportional share of the absolute budget or
// the relative one, whichever is looser.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, double rel_tol,
                              std::size_t max_intervals = 200000);

// int_0^{2pi} (a + b cos t)^-k dt for integer k >= 1, a > |b|.
// k=1: 2*pi/sqrt(a^2-b^2); higher k by the standard reduction
//   I_{n+1} = ((2n-1) a I_n - (n-1) I_{n-1}) / (n (a^2-b^2)).
double ring_integral_even(double a, double b, int k);

} // namespace cognet::quadrature

#pragma once

#include <functional>

namespace trilin::special {

/// Jacobi elliptic dn(u, m) in the parameter (modulus-squared) convention,
/// m in [0, 1], evaluated by descending Landen transformation / AGM.
double jacobi_dn(double u, double m);

/// ln Gamma(a, x) for integer order a >= 1 and x > 0, via the finite sum
/// Gamma(a, x) = (a-1)! e^{-x} sum_{j<a} x^j / j! evaluated in log space.
double log_upper_gamma(int a, double x);

/// ln(n!) from a cumulative table.
double ln_factorial(int n);

/// Adaptive Simpson integral of f over [a, b] to absolute tolerance abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10);

}  // namespace trilin::special

#pragma once

#include "trilinear/types.hpp"

namespace trilin::parametric {

/// Disentangling parameters of the two-mode squeeze operator.
struct SqueezeParams {
  double gamma;  // tanh(A tau)
  double g;      // ln cosh(A tau)
};

/// N_b = N_c = sinh^2(A tau) for a fixed-amplitude pump.
double occupation(double amplitude, double tau);

SqueezeParams squeeze_params(double amplitude, double tau);

/// Geometric number distribution sech^2(A tau) tanh^{2n}(A tau) of the
/// reduced signal (or idler) mode.  Throws CutoffError when the truncated
/// tail exceeds 1e-12.
NumberDistribution squeezed_distribution(double amplitude, double tau,
                                         int cutoff);

/// Effective temperature omega_b / (2 ln coth(A tau)); 0 at tau = 0.
double temperature(double amplitude, double tau, double omega_b = 1.0);

}  // namespace trilin::parametric

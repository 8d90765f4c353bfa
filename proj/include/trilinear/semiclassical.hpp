#pragma once

#include "trilinear/types.hpp"

namespace trilin::semiclassical {

struct TurningPoints {
  double beta_plus;
  double beta_minus;
};

/// Turning points of the classical pump trajectory,
/// beta_pm = 1/4 [1 + 2 Na0 +- sqrt(1 + 12 Na0 + 4 Na0^2)].
TurningPoints beta_pm(double na0);

/// Elliptic parameter m = (Na0 - beta_-) / (beta_+ - beta_-).
double elliptic_parameter(double na0);

/// Classical pump occupation
/// N_a(tau) = beta_+ + (Na0 - beta_+) dn(sqrt(beta_+ - beta_-) tau, m)^{-2}.
double pump_occupation(double na0, double tau);

/// theta(tau) = integral_0^tau sqrt(max(N_a, 0)) dtau'.  The clamp removes
/// the unphysical dip below zero near depletion.
double theta(double na0, double tau);

/// N_b = N_c = sinh^2(theta(tau)).
double signal_occupation(double na0, double tau);

/// Geometric signal distribution with squeeze parameter theta(tau).  With
/// instantaneous_argument the parameter is sqrt(N_a(tau)) * tau instead;
/// the two coincide only for a constant pump.
NumberDistribution signal_distribution(double na0, double tau, int cutoff,
                                       bool instantaneous_argument = false);

}  // namespace trilin::semiclassical

#pragma once

#include "trilinear/types.hpp"

namespace trilin::info {

/// Von Neumann entropy in nats; 0 ln 0 := 0.
double entropy(const NumberDistribution& rho);
double entropy(const DensityMatrix& rho);

/// Harmonic-oscillator thermal entropy at mean occupation nbar,
/// (nbar+1) ln(nbar+1) - nbar ln(nbar).
double thermal_entropy(double nbar);

/// Temperature whose Bose-Einstein mean equals nbar: omega / ln(1 + 1/nbar).
double effective_temperature(double nbar, double omega_b = 1.0);

/// Geometric distribution of mean nbar truncated to cutoff+1 entries and
/// renormalized on that support.
NumberDistribution thermal_reference(double nbar, int cutoff);

/// Uhlmann fidelity.  The diagonal overload is the Bhattacharyya sum.
double fidelity(const NumberDistribution& rho, const NumberDistribution& sigma);
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Entropy deficit relative to the thermal state of equal mean.
double information(const NumberDistribution& rho);

/// Inverse purity of the thermal state, 2 nbar + 1.
double effective_dimension(double nbar);

/// Signal occupation at which d_a^eff = d_bc^eff given pump-signal
/// conservation n_a = nbar - n_b:  n_b = [-3 + sqrt(9 + 8 nbar)] / 4.
double dimension_crossing_occupation(double nbar);

double mutual_information_pump(double s_a);
double mutual_information_signal_idler(double s_b, double s_a);

struct Squeezing {
  double q_plus;
  double q_minus;
};

/// Quadrature squeezing q_pm = 4 <Delta X_pm^2> - 1 of a single mode.
/// Requires at least two unoccupied Fock levels below the cutoff.
Squeezing squeezing(const DensityMatrix& rho);

}  // namespace trilin::info

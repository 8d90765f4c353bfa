#pragma once

#include "trilinear/fock.hpp"
#include "trilinear/types.hpp"

namespace trilin::shorttime {

/// f_n(k, M) = [M! Gamma(2k+n) / (n! (M-n)! Gamma(2k))]^{1/2}.
/// For k = 1/2 this reduces to sqrt(M!/(M-n)!).
double f_coeff(double k, int m, int n);

/// ln N_M(tau) = ln sum_n f_n^2 tau^{2n}, evaluated in log space.
/// Mathematically equal to ln[e^{1/tau^2} tau^{2M} Gamma(M+1, 1/tau^2)].
double log_normalization(int m, double tau);

/// Unit-norm sector amplitudes f_n tau^n / sqrt(N_M(tau)), n = 0..M.
std::vector<double> sector_amplitudes(int m, double tau);

/// Assembles the tri-mode state at time tau from the pump weights.
fock::TrimodalState evolve(const std::vector<cxd>& weights, double tau);

/// Diagonal signal reduction: probs[i] = sum_{s>=i} P_s amp_s[i]^2.
NumberDistribution rho_signal(const std::vector<double>& p_s, double tau);

/// Pump reduction with surviving off-diagonals.
DensityMatrix rho_pump(const std::vector<cxd>& weights, double tau);

/// tau -> infinity signal distribution: the initial pump distribution.
NumberDistribution longtime_limit(const std::vector<double>& p_s);

/// Formal validity limit tau* = 1/sqrt(k M); +inf for M = 0.
double validity_horizon(double k, int m);

}  // namespace trilin::shorttime

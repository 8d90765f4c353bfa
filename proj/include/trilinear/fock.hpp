#pragma once

#include "trilinear/types.hpp"

namespace trilin::fock {

/// Tri-mode pure state stored per conserved sector.  Sector s has basis
/// {|s-n, n, n> : 0 <= n <= s}; weights[s] is the progenitor amplitude and
/// sectors[s][n] the in-sector amplitude (length s+1).
struct TrimodalState {
  std::vector<cxd> weights;
  std::vector<std::vector<cxd>> sectors;

  int s_max() const { return static_cast<int>(weights.size()) - 1; }
};

struct Occupations {
  double pump = 0.0;
  double signal = 0.0;
  double idler = 0.0;
};

/// Default pump truncation for a coherent state of mean nbar.
int default_pump_cutoff(double nbar);

/// Coherent-state weights a_s = e^{-nbar/2} alpha^s / sqrt(s!) with
/// alpha = sqrt(nbar), renormalized after truncation at s_max.
/// Throws CutoffError if the discarded tail mass is >= tail_tol.
std::vector<cxd> coherent_weights(double nbar, int s_max,
                                  double tail_tol = 1e-12);

/// Fock-state weights delta_{s,m} on 0..s_max.
std::vector<cxd> fock_weights(int m, int s_max);

/// State at tau = 0: every sector sits at its progenitor |s, 0, 0>.
TrimodalState initial_state(std::vector<cxd> weights);

double norm(const TrimodalState& state);

/// Signal-mode reduction; diagonal because tracing pump and idler forces
/// matching indices.  The idler reduction is identical by symmetry.
NumberDistribution reduced_signal(const TrimodalState& state);

/// Pump-mode reduction; off-diagonals survive where idler indices match.
DensityMatrix reduced_pump(const TrimodalState& state);

Occupations mode_occupations(const TrimodalState& state);

/// <N_a^2>, used for the semiclassical factorization diagnostic.
double pump_second_moment(const TrimodalState& state);

/// <a K+ - a† K->; vanishes for vacuum signal/idler initial data and is
/// conserved by the evolution.
cxd interaction_expectation(const TrimodalState& state);

}  // namespace trilin::fock

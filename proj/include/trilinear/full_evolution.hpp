#pragma once

#include "trilinear/fock.hpp"
#include "trilinear/types.hpp"

namespace trilin::full {

/// Ladder couplings g_n = (n+1) sqrt(s-n), n = 0..s-1, of the in-sector
/// generator (dc/dtau)_n = g_{n-1} c_{n-1} - g_n c_{n+1}.
std::vector<double> sector_couplings(int s);

/// Exact in-sector propagator.  The phase transform c_n -> i^n d_n maps the
/// real skew-symmetric generator onto a real symmetric tridiagonal, which is
/// diagonalized once; propagation to any tau is then unitary.
class SectorPropagator {
 public:
  explicit SectorPropagator(int s);

  /// Amplitudes at time tau from the initial condition c_n = delta_{n,0}.
  std::vector<cxd> amplitudes(double tau) const;

  int sector() const { return s_; }

 private:
  int s_;
  Eigen::VectorXd evals_;
  Eigen::MatrixXd evecs_;
};

std::vector<std::vector<cxd>> evolve_sector(int s,
                                            const std::vector<double>& tau_grid);

/// Adaptive step-doubling RK4 cross-check integrator for one sector.
std::vector<std::vector<cxd>> evolve_sector_adaptive(
    int s, const std::vector<double>& tau_grid, double tol);

struct Trajectory {
  std::vector<double> tau_grid;
  std::vector<fock::TrimodalState> states;
};

/// Independent sector propagation of the whole weighted state; sectors may
/// be distributed over jobs threads, assembly is in ascending sector order.
Trajectory evolve_state(const std::vector<cxd>& weights,
                        const std::vector<double>& tau_grid, int jobs = 1);

}  // namespace trilin::full

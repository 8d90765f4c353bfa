#include "trilinear/full_evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

namespace trilin::full {

std::vector<double> sector_couplings(int s) {
  if (s < 0) throw std::domain_error("sector_couplings: s must be >= 0");
  std::vector<double> g(s);
  for (int n = 0; n < s; ++n) g[n] = double(n + 1) * std::sqrt(double(s - n));
  return g;
}

SectorPropagator::SectorPropagator(int s) : s_(s) {
  auto g = sector_couplings(s);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(s + 1);
  Eigen::VectorXd subdiag = Eigen::Map<Eigen::VectorXd>(g.data(), s);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("SectorPropagator: tridiagonal eigensolve failed");
  }
  evals_ = solver.eigenvalues();
  evecs_ = solver.eigenvectors();
}

std::vector<cxd> SectorPropagator::amplitudes(double tau) const {
  int dim = s_ + 1;
  // d(tau) = V e^{-i Lambda tau} V^T e_0
  Eigen::VectorXcd phased(dim);
  for (int k = 0; k < dim; ++k) {
    phased(k) = std::polar(evecs_(0, k), -evals_(k) * tau);
  }
  Eigen::VectorXcd d = evecs_ * phased;
  std::vector<cxd> c(dim);
  static const cxd i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int n = 0; n < dim; ++n) c[n] = i_pow[n % 4] * d(n);
  return c;
}

std::vector<std::vector<cxd>> evolve_sector(
    int s, const std::vector<double>& tau_grid) {
  SectorPropagator prop(s);
  std::vector<std::vector<cxd>> out;
  out.reserve(tau_grid.size());
  for (double tau : tau_grid) out.push_back(prop.amplitudes(tau));
  return out;
}

namespace {

// dc/dtau = L c with L the real skew-symmetric tridiagonal generator.
void apply_generator(const std::vector<double>& g, const std::vector<cxd>& c,
                     std::vector<cxd>& out) {
  std::size_t dim = c.size();
  for (std::size_t n = 0; n < dim; ++n) {
    cxd v(0.0);
    if (n > 0) v += g[n - 1] * c[n - 1];
    if (n + 1 < dim) v -= g[n] * c[n + 1];
    out[n] = v;
  }
}

void rk4_step(const std::vector<double>& g, std::vector<cxd>& c, double h,
              std::vector<cxd>& k1, std::vector<cxd>& k2, std::vector<cxd>& k3,
              std::vector<cxd>& k4, std::vector<cxd>& tmp) {
  std::size_t dim = c.size();
  apply_generator(g, c, k1);
  for (std::size_t n = 0; n < dim; ++n) tmp[n] = c[n] + 0.5 * h * k1[n];
  apply_generator(g, tmp, k2);
  for (std::size_t n = 0; n < dim; ++n) tmp[n] = c[n] + 0.5 * h * k2[n];
  apply_generator(g, tmp, k3);
  for (std::size_t n = 0; n < dim; ++n) tmp[n] = c[n] + h * k3[n];
  apply_generator(g, tmp, k4);
  for (std::size_t n = 0; n < dim; ++n) {
    c[n] += h / 6.0 * (k1[n] + 2.0 * k2[n] + 2.0 * k3[n] + k4[n]);
  }
}

}  // namespace

std::vector<std::vector<cxd>> evolve_sector_adaptive(
    int s, const std::vector<double>& tau_grid, double tol) {
  if (!(tol > 0.0)) throw std::domain_error("evolve_sector_adaptive: tol > 0");
  auto g = sector_couplings(s);
  std::size_t dim = s + 1;
  std::vector<cxd> c(dim, cxd(0.0));
  c[0] = 1.0;
  std::vector<cxd> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);

  std::vector<std::vector<cxd>> out;
  out.reserve(tau_grid.size());
  double t = 0.0;
  double h = std::min(0.01, tol > 1e-12 ? 0.01 : 0.001);
  for (double target : tau_grid) {
    if (target < t) {
      throw std::domain_error("evolve_sector_adaptive: grid must be ascending");
    }
    while (t < target) {
      double step = std::min(h, target - t);
      // step-doubling error estimate
      std::vector<cxd> full = c, half = c;
      rk4_step(g, full, step, k1, k2, k3, k4, tmp);
      rk4_step(g, half, 0.5 * step, k1, k2, k3, k4, tmp);
      rk4_step(g, half, 0.5 * step, k1, k2, k3, k4, tmp);
      double err = 0.0;
      for (std::size_t n = 0; n < dim; ++n) {
        err = std::max(err, std::abs(full[n] - half[n]));
      }
      err /= 15.0;
      if (err <= tol || step < 1e-10) {
        c = half;
        t += step;
        double grow = err > 0.0 ? 0.9 * std::pow(tol / err, 0.2) : 2.0;
        h = step * std::clamp(grow, 0.2, 2.0);
      } else {
        h = step * std::clamp(0.9 * std::pow(tol / err, 0.2), 0.2, 1.0);
        if (h < 1e-12) {
          throw NumericalError("evolve_sector_adaptive: tolerance unachievable");
        }
      }
    }
    out.push_back(c);
  }
  return out;
}

Trajectory evolve_state(const std::vector<cxd>& weights,
                        const std::vector<double>& tau_grid, int jobs) {
  int n_sectors = static_cast<int>(weights.size());
  if (jobs < 1) jobs = 1;
  jobs = std::min(jobs, n_sectors);

  // per-sector amplitudes at every grid point
  std::vector<std::vector<std::vector<cxd>>> per_sector(n_sectors);
  auto worker = [&](int first, int stride) {
    for (int s = first; s < n_sectors; s += stride) {
      per_sector[s] = evolve_sector(s, tau_grid);
    }
  };
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j, jobs);
    for (auto& th : pool) th.join();
  }

  Trajectory traj;
  traj.tau_grid = tau_grid;
  traj.states.reserve(tau_grid.size());
  for (std::size_t g = 0; g < tau_grid.size(); ++g) {
    fock::TrimodalState st;
    st.weights = weights;
    st.sectors.resize(n_sectors);
    for (int s = 0; s < n_sectors; ++s) st.sectors[s] = per_sector[s][g];
    traj.states.push_back(std::move(st));
  }
  return traj;
}

}  // namespace trilin::full

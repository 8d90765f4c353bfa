#include "trilinear/info.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace trilin::info {

namespace {

double entropy_term(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

Eigen::VectorXd spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.elements);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("density matrix eigensolve failed");
  }
  return solver.eigenvalues();
}

}  // namespace

double entropy(const NumberDistribution& rho) {
  double s = 0.0;
  for (double p : rho.probs) {
    if (p < -kPsdEps) {
      throw std::invalid_argument("entropy: negative probability");
    }
    s += entropy_term(p);
  }
  return s;
}

double entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lam : spectrum(rho)) {
    if (lam < -kPsdEps) {
      throw std::invalid_argument("entropy: density matrix not PSD");
    }
    s += entropy_term(lam);
  }
  return s;
}

double thermal_entropy(double nbar) {
  if (nbar < 0.0) throw std::domain_error("thermal_entropy: nbar must be >= 0");
  if (nbar == 0.0) return 0.0;
  return (nbar + 1.0) * std::log1p(nbar) - nbar * std::log(nbar);
}

double effective_temperature(double nbar, double omega_b) {
  if (nbar < 0.0) throw std::domain_error("effective_temperature: nbar >= 0");
  if (nbar == 0.0) return 0.0;
  return omega_b / std::log1p(1.0 / nbar);
}

NumberDistribution thermal_reference(double nbar, int cutoff) {
  if (nbar < 0.0 || cutoff < 0) {
    throw std::domain_error("thermal_reference: bad arguments");
  }
  NumberDistribution d;
  d.probs.resize(cutoff + 1);
  double x = nbar / (1.0 + nbar);
  double p = 1.0;
  double total = 0.0;
  for (int n = 0; n <= cutoff; ++n) {
    d.probs[n] = p;
    total += p;
    p *= x;
  }
  for (auto& q : d.probs) q /= total;
  return d;
}

double fidelity(const NumberDistribution& rho, const NumberDistribution& sigma) {
  if (rho.probs.size() != sigma.probs.size()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  double f = 0.0;
  for (std::size_t n = 0; n < rho.probs.size(); ++n) {
    f += std::sqrt(std::max(rho.probs[n], 0.0) * std::max(sigma.probs[n], 0.0));
  }
  return std::min(f, 1.0);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.elements);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("fidelity: eigensolve failed");
  }
  Eigen::VectorXd lam = solver.eigenvalues().cwiseMax(0.0);
  Eigen::MatrixXcd sqrt_rho = solver.eigenvectors() *
                              lam.cwiseSqrt().asDiagonal() *
                              solver.eigenvectors().adjoint();
  Eigen::MatrixXcd inner = sqrt_rho * sigma.elements * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> inner_solver(inner);
  double f = 0.0;
  for (double mu : inner_solver.eigenvalues()) {
    f += std::sqrt(std::max(mu, 0.0));
  }
  return std::min(f, 1.0);
}

double information(const NumberDistribution& rho) {
  return thermal_entropy(rho.mean()) - entropy(rho);
}

double effective_dimension(double nbar) {
  if (nbar < 0.0) throw std::domain_error("effective_dimension: nbar >= 0");
  return 2.0 * nbar + 1.0;
}

double dimension_crossing_occupation(double nbar) {
  if (nbar < 0.0) throw std::domain_error("dimension_crossing_occupation");
  return 0.25 * (-3.0 + std::sqrt(9.0 + 8.0 * nbar));
}

double mutual_information_pump(double s_a) { return 2.0 * s_a; }

double mutual_information_signal_idler(double s_b, double s_a) {
  return 2.0 * s_b - s_a;
}

Squeezing squeezing(const DensityMatrix& rho) {
  int dim = rho.dim();
  if (dim < 3) throw CutoffError("squeezing: cutoff margin below 2");
  // a^2 couples across two levels; the top two must be unoccupied.
  if (rho.elements(dim - 1, dim - 1).real() > 1e-10 ||
      rho.elements(dim - 2, dim - 2).real() > 1e-10) {
    throw CutoffError("squeezing: population within 2 levels of the cutoff");
  }
  cxd mean_a(0.0), mean_a2(0.0);
  double mean_n = 0.0;
  for (int n = 0; n < dim; ++n) {
    mean_n += double(n) * rho.elements(n, n).real();
    if (n >= 1) mean_a += std::sqrt(double(n)) * rho.elements(n, n - 1);
    if (n >= 2) {
      mean_a2 += std::sqrt(double(n) * double(n - 1)) * rho.elements(n, n - 2);
    }
  }
  double re_a2 = mean_a2.real();
  double xp = 0.25 * (2.0 * re_a2 + 2.0 * mean_n + 1.0);
  double xm = 0.25 * (-2.0 * re_a2 + 2.0 * mean_n + 1.0);
  double mean_xp = mean_a.real();
  double mean_xm = mean_a.imag();
  double var_p = xp - mean_xp * mean_xp;
  double var_m = xm - mean_xm * mean_xm;
  return {4.0 * var_p - 1.0, 4.0 * var_m - 1.0};
}

}  // namespace trilin::info

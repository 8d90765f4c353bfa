#include "trilinear/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "trilinear/special.hpp"

namespace trilin::fock {

int default_pump_cutoff(double nbar) {
  return static_cast<int>(std::ceil(nbar + 10.0 * std::sqrt(nbar) + 10.0));
}

std::vector<cxd> coherent_weights(double nbar, int s_max, double tail_tol) {
  if (nbar < 0.0) throw std::domain_error("coherent_weights: nbar must be >= 0");
  if (s_max < 0) throw std::domain_error("coherent_weights: s_max must be >= 0");
  std::vector<cxd> w(s_max + 1);
  double mass = 0.0;
  for (int s = 0; s <= s_max; ++s) {
    double ln_amp = (nbar > 0.0)
                        ? -0.5 * nbar + 0.5 * s * std::log(nbar) -
                              0.5 * special::ln_factorial(s)
                        : (s == 0 ? 0.0 : -std::numeric_limits<double>::infinity());
    double a = std::exp(ln_amp);
    w[s] = a;
    mass += a * a;
  }
  double tail = 1.0 - mass;
  if (tail >= tail_tol) {
    throw CutoffError("coherent_weights: truncated tail mass " +
                      std::to_string(tail) + " exceeds tolerance");
  }
  double scale = 1.0 / std::sqrt(mass);
  for (auto& a : w) a *= scale;
  return w;
}

std::vector<cxd> fock_weights(int m, int s_max) {
  if (m < 0 || m > s_max) throw std::domain_error("fock_weights: m out of range");
  std::vector<cxd> w(s_max + 1, cxd(0.0));
  w[m] = 1.0;
  return w;
}

TrimodalState initial_state(std::vector<cxd> weights) {
  TrimodalState st;
  st.weights = std::move(weights);
  st.sectors.resize(st.weights.size());
  for (std::size_t s = 0; s < st.sectors.size(); ++s) {
    st.sectors[s].assign(s + 1, cxd(0.0));
    st.sectors[s][0] = 1.0;
  }
  return st;
}

double norm(const TrimodalState& state) {
  double total = 0.0;
  for (std::size_t s = 0; s < state.sectors.size(); ++s) {
    double sec = 0.0;
    for (const cxd& c : state.sectors[s]) sec += std::norm(c);
    total += std::norm(state.weights[s]) * sec;
  }
  return std::sqrt(total);
}

NumberDistribution reduced_signal(const TrimodalState& state) {
  NumberDistribution d;
  d.probs.assign(state.weights.size(), 0.0);
  for (std::size_t s = 0; s < state.sectors.size(); ++s) {
    double ps = std::norm(state.weights[s]);
    for (std::size_t n = 0; n < state.sectors[s].size(); ++n) {
      d.probs[n] += ps * std::norm(state.sectors[s][n]);
    }
  }
  return d;
}

DensityMatrix reduced_pump(const TrimodalState& state) {
  int dim = static_cast<int>(state.weights.size());
  DensityMatrix rho;
  rho.elements = Eigen::MatrixXcd::Zero(dim, dim);
  // rho_a[s-i, r-i] += a_s a_r^* c^(s)_i c^(r)*_i
  for (int i = 0; i < dim; ++i) {
    for (int s = i; s < dim; ++s) {
      cxd left = state.weights[s] * state.sectors[s][i];
      if (left == cxd(0.0)) continue;
      for (int r = i; r < dim; ++r) {
        cxd right = std::conj(state.weights[r] * state.sectors[r][i]);
        rho.elements(s - i, r - i) += left * right;
      }
    }
  }
  return rho;
}

Occupations mode_occupations(const TrimodalState& state) {
  Occupations occ;
  for (std::size_t s = 0; s < state.sectors.size(); ++s) {
    double ps = std::norm(state.weights[s]);
    for (std::size_t n = 0; n < state.sectors[s].size(); ++n) {
      double p = ps * std::norm(state.sectors[s][n]);
      occ.pump += p * double(s - n);
      occ.signal += p * double(n);
      occ.idler += p * double(n);
    }
  }
  return occ;
}

double pump_second_moment(const TrimodalState& state) {
  double m2 = 0.0;
  for (std::size_t s = 0; s < state.sectors.size(); ++s) {
    double ps = std::norm(state.weights[s]);
    for (std::size_t n = 0; n < state.sectors[s].size(); ++n) {
      double na = double(s - n);
      m2 += ps * std::norm(state.sectors[s][n]) * na * na;
    }
  }
  return m2;
}

cxd interaction_expectation(const TrimodalState& state) {
  // <a K+> within sector s: a K+ |s-n,n,n> = (n+1) sqrt(s-n) |s-n-1,n+1,n+1>
  cxd a_kplus(0.0);
  for (std::size_t s = 0; s < state.sectors.size(); ++s) {
    double ps = std::norm(state.weights[s]);
    for (std::size_t n = 0; n + 1 < state.sectors[s].size(); ++n) {
      double g = double(n + 1) * std::sqrt(double(s - n));
      a_kplus += ps * std::conj(state.sectors[s][n + 1]) * g * state.sectors[s][n];
    }
  }
  return a_kplus - std::conj(a_kplus);
}

}  // namespace trilin::fock

#include "trilinear/shorttime.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "trilinear/special.hpp"

namespace trilin::shorttime {

namespace {

double ln_f_coeff(double k, int m, int n) {
  using special::ln_factorial;
  return 0.5 * (ln_factorial(m) + std::lgamma(2.0 * k + n) - ln_factorial(n) -
                ln_factorial(m - n) - std::lgamma(2.0 * k));
}

}  // namespace

double f_coeff(double k, int m, int n) {
  if (n < 0 || n > m) throw std::domain_error("f_coeff: need 0 <= n <= M");
  if (!(k > 0.0)) throw std::domain_error("f_coeff: k must be positive");
  return std::exp(ln_f_coeff(k, m, n));
}

double log_normalization(int m, double tau) {
  if (m < 0) throw std::domain_error("log_normalization: M must be >= 0");
  if (tau < 0.0) throw std::domain_error("log_normalization: tau must be >= 0");
  if (tau == 0.0 || m == 0) return 0.0;
  double lntau = std::log(tau);
  double mx = -std::numeric_limits<double>::infinity();
  for (int n = 0; n <= m; ++n) {
    mx = std::max(mx, 2.0 * ln_f_coeff(0.5, m, n) + 2.0 * n * lntau);
  }
  double acc = 0.0;
  for (int n = 0; n <= m; ++n) {
    acc += std::exp(2.0 * ln_f_coeff(0.5, m, n) + 2.0 * n * lntau - mx);
  }
  return mx + std::log(acc);
}

std::vector<double> sector_amplitudes(int m, double tau) {
  if (m < 0) throw std::domain_error("sector_amplitudes: M must be >= 0");
  if (tau < 0.0) throw std::domain_error("sector_amplitudes: tau must be >= 0");
  std::vector<double> amps(m + 1, 0.0);
  if (tau == 0.0) {
    amps[0] = 1.0;
    return amps;
  }
  double lntau = std::log(tau);
  double half_ln_norm = 0.5 * log_normalization(m, tau);
  for (int n = 0; n <= m; ++n) {
    amps[n] = std::exp(ln_f_coeff(0.5, m, n) + n * lntau - half_ln_norm);
  }
  return amps;
}

fock::TrimodalState evolve(const std::vector<cxd>& weights, double tau) {
  fock::TrimodalState st;
  st.weights = weights;
  st.sectors.resize(weights.size());
  for (std::size_t s = 0; s < weights.size(); ++s) {
    auto amps = sector_amplitudes(static_cast<int>(s), tau);
    st.sectors[s].assign(amps.begin(), amps.end());
  }
  return st;
}

NumberDistribution rho_signal(const std::vector<double>& p_s, double tau) {
  NumberDistribution d;
  d.probs.assign(p_s.size(), 0.0);
  for (std::size_t s = 0; s < p_s.size(); ++s) {
    if (p_s[s] == 0.0) continue;
    auto amps = sector_amplitudes(static_cast<int>(s), tau);
    for (std::size_t i = 0; i <= s; ++i) {
      d.probs[i] += p_s[s] * amps[i] * amps[i];
    }
  }
  return d;
}

DensityMatrix rho_pump(const std::vector<cxd>& weights, double tau) {
  return fock::reduced_pump(evolve(weights, tau));
}

NumberDistribution longtime_limit(const std::vector<double>& p_s) {
  NumberDistribution d;
  d.probs = p_s;
  return d;
}

double validity_horizon(double k, int m) {
  if (m < 0) throw std::domain_error("validity_horizon: M must be >= 0");
  if (m == 0) return std::numeric_limits<double>::infinity();
  return 1.0 / std::sqrt(k * m);
}

}  // namespace trilin::shorttime

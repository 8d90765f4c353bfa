#include "trilinear/parametric.hpp"

#include <cmath>
#include <stdexcept>

namespace trilin::parametric {

namespace {

void check_input(double amplitude, double tau) {
  if (!(amplitude > 0.0)) {
    throw std::domain_error("parametric: amplitude must be positive");
  }
  if (tau < 0.0) throw std::domain_error("parametric: tau must be >= 0");
}

}  // namespace

double occupation(double amplitude, double tau) {
  check_input(amplitude, tau);
  double s = std::sinh(amplitude * tau);
  return s * s;
}

SqueezeParams squeeze_params(double amplitude, double tau) {
  check_input(amplitude, tau);
  double x = amplitude * tau;
  return {std::tanh(x), std::log(std::cosh(x))};
}

NumberDistribution squeezed_distribution(double amplitude, double tau,
                                         int cutoff) {
  check_input(amplitude, tau);
  if (cutoff < 0) throw std::domain_error("squeezed_distribution: bad cutoff");
  double x = amplitude * tau;
  double t2 = std::tanh(x) * std::tanh(x);
  // truncated tail mass is t2^(cutoff+1)
  if (t2 > 0.0 && (cutoff + 1) * std::log(t2) >= std::log(1e-12)) {
    throw CutoffError("squeezed_distribution: cutoff too small for tail 1e-12");
  }
  NumberDistribution d;
  d.probs.resize(cutoff + 1);
  double sech2 = 1.0 - t2;
  double p = sech2;
  for (int n = 0; n <= cutoff; ++n) {
    d.probs[n] = p;
    p *= t2;
  }
  return d;
}

double temperature(double amplitude, double tau, double omega_b) {
  check_input(amplitude, tau);
  if (tau == 0.0) return 0.0;  // boundary: ln coth diverges
  double x = amplitude * tau;
  // ln coth(x) = log1p(e^{-2x}) - log1p(-e^{-2x}), stable for large x
  double e = std::exp(-2.0 * x);
  double lncoth = std::log1p(e) - std::log1p(-e);
  return omega_b / (2.0 * lncoth);
}

}  // namespace trilin::parametric

#include "trilinear/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trilinear/parametric.hpp"
#include "trilinear/special.hpp"

namespace trilin::semiclassical {

namespace {

void check_na0(double na0) {
  if (!(na0 > 0.0)) throw std::domain_error("semiclassical: Na0 must be positive");
}

}  // namespace

TurningPoints beta_pm(double na0) {
  check_na0(na0);
  double root = std::sqrt(1.0 + 12.0 * na0 + 4.0 * na0 * na0);
  return {0.25 * (1.0 + 2.0 * na0 + root), 0.25 * (1.0 + 2.0 * na0 - root)};
}

double elliptic_parameter(double na0) {
  auto [bp, bm] = beta_pm(na0);
  return (na0 - bm) / (bp - bm);
}

double pump_occupation(double na0, double tau) {
  check_na0(na0);
  if (tau < 0.0) throw std::domain_error("semiclassical: tau must be >= 0");
  auto [bp, bm] = beta_pm(na0);
  double m = (na0 - bm) / (bp - bm);
  double dn = special::jacobi_dn(std::sqrt(bp - bm) * tau, m);
  return bp + (na0 - bp) / (dn * dn);
}

double theta(double na0, double tau) {
  check_na0(na0);
  if (tau < 0.0) throw std::domain_error("semiclassical: tau must be >= 0");
  if (tau == 0.0) return 0.0;
  auto integrand = [na0](double t) {
    return std::sqrt(std::max(pump_occupation(na0, t), 0.0));
  };
  return special::integrate(integrand, 0.0, tau, 1e-10);
}

double signal_occupation(double na0, double tau) {
  double s = std::sinh(theta(na0, tau));
  return s * s;
}

NumberDistribution signal_distribution(double na0, double tau, int cutoff,
                                       bool instantaneous_argument) {
  double arg = instantaneous_argument
                   ? std::sqrt(std::max(pump_occupation(na0, tau), 0.0)) * tau
                   : theta(na0, tau);
  return parametric::squeezed_distribution(1.0, arg, cutoff);
}

}  // namespace trilin::semiclassical

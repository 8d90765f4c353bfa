#include <cmath>
#include <iostream>
#include <vector>

#include <doctest.h>

#include "trilinear/fock.hpp"
#include "trilinear/full_evolution.hpp"
#include "trilinear/semiclassical.hpp"

using namespace trilin;

namespace {

// RK4 integration of the decoupled c-number pump equation
// d^2 N/dtau^2 = 2 [3 N^2 - N (4 Na0 + 1) + Na0^2], N(0)=Na0, N'(0)=0.
std::vector<double> ode_pump(double na0, const std::vector<double>& grid,
                             double dt) {
  auto accel = [na0](double n) {
    return 2.0 * (3.0 * n * n - n * (4.0 * na0 + 1.0) + na0 * na0);
  };
  double n = na0, v = 0.0, t = 0.0;
  std::vector<double> out;
  for (double target : grid) {
    while (target - t > 1e-12) {
      double h = std::min(dt, target - t);
      double k1n = v, k1v = accel(n);
      double k2n = v + 0.5 * h * k1v, k2v = accel(n + 0.5 * h * k1n);
      double k3n = v + 0.5 * h * k2v, k3v = accel(n + 0.5 * h * k2n);
      double k4n = v + h * k3v, k4v = accel(n + h * k3n);
      n += h / 6.0 * (k1n + 2.0 * k2n + 2.0 * k3n + k4n);
      v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
      t += h;
    }
    out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("beta_pm") {
  auto b9 = semiclassical::beta_pm(9.0);
  CHECK(b9.beta_plus == doctest::Approx(9.9521630116712).epsilon(1e-12));
  CHECK(b9.beta_minus == doctest::Approx(-0.452163011671203).epsilon(1e-10));
  auto b1 = semiclassical::beta_pm(1.0);
  CHECK(b1.beta_plus == doctest::Approx(1.78077640640442).epsilon(1e-12));
  CHECK(b1.beta_minus == doctest::Approx(-0.280776406404415).epsilon(1e-10));
  auto b0 = semiclassical::beta_pm(1e-9);
  CHECK(b0.beta_plus == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(std::abs(b0.beta_minus) < 1e-6);
}

TEST_CASE("pump_occupation") {
  CHECK(semiclassical::pump_occupation(9.0, 0.0) == 9.0);
  CHECK(semiclassical::elliptic_parameter(9.0) ==
        doctest::Approx(0.908483931632381).epsilon(1e-12));
  auto b = semiclassical::beta_pm(9.0);
  CHECK(std::sqrt(b.beta_plus - b.beta_minus) ==
        doctest::Approx(3.22557375103134).epsilon(1e-12));

  SUBCASE("minimum equals beta_minus") {
    // coarse scan, then ternary refinement around the first minimum
    double best_t = 0.0, best = 9.0;
    for (double t = 0.0; t <= 2.0; t += 1e-3) {
      double n = semiclassical::pump_occupation(9.0, t);
      if (n < best) {
        best = n;
        best_t = t;
      }
    }
    double lo = best_t - 2e-3, hi = best_t + 2e-3;
    for (int it = 0; it < 200; ++it) {
      double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
      if (semiclassical::pump_occupation(9.0, m1) <
          semiclassical::pump_occupation(9.0, m2)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    double min_val = semiclassical::pump_occupation(9.0, 0.5 * (lo + hi));
    CHECK(std::abs(min_val - b.beta_minus) < 1e-8);
  }
}

TEST_CASE("closed form matches the ODE oracle") {
  // this doubles as the dn-convention validator
  for (double na0 : {1.0, 9.0}) {
    std::vector<double> grid;
    for (double t = 0.0; t <= 2.0; t += 0.02) grid.push_back(t);
    auto ref = ode_pump(na0, grid, 1e-5);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      worst = std::max(
          worst, std::abs(semiclassical::pump_occupation(na0, grid[i]) -
                          ref[i]));
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("theta") {
  CHECK(semiclassical::theta(9.0, 0.0) == 0.0);
  SUBCASE("small-time slope sqrt(Na0)") {
    CHECK(semiclassical::theta(9.0, 0.01) ==
          doctest::Approx(0.03).epsilon(1e-4));
  }
  SUBCASE("monotone nondecreasing") {
    // quadrature noise where the integrand clamps at zero, hence 1e-9
    double prev = 0.0;
    for (double t = 0.1; t <= 3.0; t += 0.1) {
      double th = semiclassical::theta(9.0, t);
      CHECK(th >= prev - 1e-9);
      prev = th;
    }
  }
}

TEST_CASE("signal_occupation") {
  CHECK(semiclassical::signal_occupation(9.0, 0.0) == 0.0);
  CHECK(semiclassical::signal_occupation(9.0, 0.02) ==
        doctest::Approx(9.0 * 0.02 * 0.02).epsilon(1e-3));
  SUBCASE("bounded by the parametric growth") {
    for (double t : {0.1, 0.3, 0.6, 1.0}) {
      double s = std::sinh(3.0 * t);
      CHECK(semiclassical::signal_occupation(9.0, t) <= s * s + 1e-9);
    }
  }
}

TEST_CASE("signal_distribution") {
  auto d0 = semiclassical::signal_distribution(9.0, 0.0, 10);
  CHECK(d0.probs[0] == 1.0);
  auto d = semiclassical::signal_distribution(9.0, 0.3, 300);
  CHECK(std::abs(d.mean() - semiclassical::signal_occupation(9.0, 0.3)) <
        1e-9);
  // the literal instantaneous-argument variant differs once the pump moves
  auto alt = semiclassical::signal_distribution(9.0, 0.3, 300, true);
  CHECK(std::abs(alt.mean() - d.mean()) > 1e-3);
}

TEST_CASE("factorization diagnostic against the full solver") {
  // relative pump-number variance; grows near depletion, no fixed bound
  auto weights = fock::coherent_weights(9.0, fock::default_pump_cutoff(9.0));
  std::vector<double> grid = {0.1, 0.3, 0.5, 0.7, 0.9};
  auto traj = full::evolve_state(weights, grid);
  std::cout << "rel pump variance <dNa^2>/<Na>^2:";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    auto occ = fock::mode_occupations(traj.states[i]);
    double m2 = fock::pump_second_moment(traj.states[i]);
    double rel = (m2 - occ.pump * occ.pump) / (occ.pump * occ.pump);
    std::cout << " tau=" << grid[i] << ":" << rel;
    CHECK(rel >= -1e-12);
  }
  std::cout << '\n';
}

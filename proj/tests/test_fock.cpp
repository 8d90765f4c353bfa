#include <cmath>
#include <random>

#include <doctest.h>

#include "oracle.hpp"
#include "trilinear/fock.hpp"
#include "trilinear/full_evolution.hpp"

using namespace trilin;

namespace {

// Deterministic random normalized state on sectors 0..s_max.
fock::TrimodalState random_state(int s_max, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  fock::TrimodalState st;
  st.weights.resize(s_max + 1);
  st.sectors.resize(s_max + 1);
  for (int s = 0; s <= s_max; ++s) {
    st.weights[s] = cxd(uni(rng), uni(rng));
    st.sectors[s].resize(s + 1);
    double sec = 0.0;
    for (auto& c : st.sectors[s]) {
      c = cxd(uni(rng), uni(rng));
      sec += std::norm(c);
    }
    for (auto& c : st.sectors[s]) c /= std::sqrt(sec);
  }
  double total = 0.0;
  for (auto& w : st.weights) total += std::norm(w);
  for (auto& w : st.weights) w /= std::sqrt(total);
  return st;
}

}  // namespace

TEST_CASE("coherent_weights") {
  SUBCASE("vacuum") {
    auto w = fock::coherent_weights(0.0, 5);
    CHECK(std::abs(w[0] - cxd(1.0)) < 1e-14);
    for (int s = 1; s <= 5; ++s) CHECK(std::abs(w[s]) == 0.0);
  }
  SUBCASE("Poisson mass at the mean") {
    auto w = fock::coherent_weights(9.0, 60);
    CHECK(std::norm(w[9]) ==
          doctest::Approx(0.131755640009523).epsilon(1e-10));
  }
  SUBCASE("tail control") {
    CHECK_NOTHROW(fock::coherent_weights(9.0, 40));  // tail < 1e-12
    CHECK_THROWS_AS(fock::coherent_weights(9.0, 12), CutoffError);
  }
  SUBCASE("default cutoff keeps the tail small") {
    for (double nbar : {1.0, 3.0, 6.0, 9.0}) {
      CHECK_NOTHROW(
          fock::coherent_weights(nbar, fock::default_pump_cutoff(nbar)));
    }
  }
}

TEST_CASE("reduced_signal") {
  SUBCASE("initial state is vacuum signal") {
    auto st = fock::initial_state(fock::coherent_weights(3.0, 40));
    auto d = fock::reduced_signal(st);
    CHECK(d.probs[0] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("two-level sector") {
    double tau = 0.7;
    fock::TrimodalState st;
    st.weights = {0.0, 1.0};
    st.sectors = {{1.0}, {std::cos(tau), std::sin(tau)}};
    auto d = fock::reduced_signal(st);
    CHECK(d.probs[0] == doctest::Approx(std::cos(tau) * std::cos(tau)));
    CHECK(d.probs[1] == doctest::Approx(std::sin(tau) * std::sin(tau)));
  }
  SUBCASE("normalization") {
    auto d = fock::reduced_signal(random_state(6, 42));
    CHECK(std::abs(d.total() - 1.0) < 1e-10);
  }
}

TEST_CASE("reduced_pump") {
  SUBCASE("single sector half transfer") {
    double tau = 1.0;
    double n = 1.0 / std::sqrt(1.0 + tau * tau);
    fock::TrimodalState st;
    st.weights = {0.0, 1.0};
    st.sectors = {{1.0}, {n, tau * n}};
    auto rho = fock::reduced_pump(st);
    CHECK(rho.elements(1, 1).real() == doctest::Approx(0.5));
    CHECK(rho.elements(0, 0).real() == doctest::Approx(0.5));
    CHECK(std::abs(rho.elements(0, 1)) < 1e-14);
  }
  SUBCASE("no evolution keeps the pump pure") {
    auto st = fock::initial_state(fock::coherent_weights(4.0, 45));
    auto rho = fock::reduced_pump(st);
    CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("unit trace") {
    auto rho = fock::reduced_pump(random_state(5, 7));
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK((rho.elements - rho.elements.adjoint()).norm() < 1e-12);
  }
}

TEST_CASE("mode_occupations") {
  SUBCASE("initial coherent state") {
    auto st = fock::initial_state(fock::coherent_weights(9.0, 49));
    auto occ = fock::mode_occupations(st);
    CHECK(occ.pump == doctest::Approx(9.0).epsilon(1e-9));
    CHECK(occ.signal == 0.0);
    CHECK(occ.idler == 0.0);
  }
  SUBCASE("two-level full transfer at pi/2") {
    auto amps = full::evolve_sector(1, {M_PI / 2.0});
    fock::TrimodalState st;
    st.weights = {0.0, 1.0};
    st.sectors = {{1.0}, amps[0]};
    auto occ = fock::mode_occupations(st);
    CHECK(occ.pump == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(occ.signal == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(occ.idler == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("Manley-Rowe on a random trajectory") {
    auto weights = fock::coherent_weights(2.0, 20);
    auto traj = full::evolve_state(weights, {0.0, 0.5, 1.0, 1.7});
    auto first = fock::mode_occupations(traj.states.front());
    for (const auto& st : traj.states) {
      auto occ = fock::mode_occupations(st);
      CHECK(std::abs(occ.pump + occ.signal - (first.pump + first.signal)) <
            1e-9);
      CHECK(std::abs(occ.signal - occ.idler) < 1e-12);
    }
  }
}

TEST_CASE("interaction expectation vanishes on trajectories") {
  auto weights = fock::coherent_weights(3.0, 25);
  auto traj = full::evolve_state(weights, {0.0, 0.3, 0.9, 2.0});
  for (const auto& st : traj.states) {
    CHECK(std::abs(fock::interaction_expectation(st)) < 1e-9);
  }
}

TEST_CASE("reductions agree with the dense oracle") {
  for (unsigned seed : {1u, 2u, 3u}) {
    auto st = random_state(4, seed);
    auto dense = oracle::from_trimodal(st, 6, 6, 6);

    auto rho_a = fock::reduced_pump(st);
    auto rho_a_ref = oracle::dense_partial_trace(dense, 0);
    for (int p = 0; p < rho_a.dim(); ++p) {
      for (int q = 0; q < rho_a.dim(); ++q) {
        CHECK(std::abs(rho_a.elements(p, q) - rho_a_ref.elements(p, q)) <
              1e-12);
      }
    }

    auto sig = fock::reduced_signal(st);
    auto rho_b_ref = oracle::dense_partial_trace(dense, 1);
    for (std::size_t n = 0; n < sig.probs.size(); ++n) {
      CHECK(std::abs(sig.probs[n] - rho_b_ref.elements(n, n).real()) < 1e-12);
    }
    // off-diagonals of rho_b must vanish
    for (int p = 0; p < rho_b_ref.dim(); ++p) {
      for (int q = 0; q < rho_b_ref.dim(); ++q) {
        if (p != q) CHECK(std::abs(rho_b_ref.elements(p, q)) < 1e-12);
      }
    }
  }
}

#include "trilinear/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trilinear/fock.hpp"
#include "trilinear/full_evolution.hpp"
#include "trilinear/info.hpp"
#include "trilinear/parametric.hpp"
#include "trilinear/semiclassical.hpp"
#include "trilinear/shorttime.hpp"

namespace trilin::scenario {

namespace fs = std::filesystem;

Solver parse_solver(const std::string& name) {
  if (name == "parametric") return Solver::parametric;
  if (name == "semiclassical") return Solver::semiclassical;
  if (name == "shorttime") return Solver::shorttime;
  if (name == "full") return Solver::full;
  throw ConfigError("solver: unknown value '" + name + "'");
}

Pump parse_pump(const std::string& name) {
  if (name == "coherent") return Pump::coherent;
  if (name == "fock") return Pump::fock;
  throw ConfigError("pump: unknown value '" + name + "'");
}

std::string to_string(Solver s) {
  switch (s) {
    case Solver::parametric: return "parametric";
    case Solver::semiclassical: return "semiclassical";
    case Solver::shorttime: return "shorttime";
    case Solver::full: return "full";
  }
  return "?";
}

std::string to_string(Pump p) {
  return p == Pump::coherent ? "coherent" : "fock";
}

void ScenarioConfig::validate() const {
  if (!(tau_max > 0.0)) throw ConfigError("tau_max: must be positive");
  if (!(d_tau > 0.0)) throw ConfigError("d_tau: must be positive");
  if (n_a0 < 0.0) throw ConfigError("n_a0: must be >= 0");
  if (!(tol > 0.0)) throw ConfigError("tol: must be positive");
  if (jobs < 1) throw ConfigError("jobs: must be >= 1");
  if ((solver == Solver::parametric || solver == Solver::semiclassical) &&
      !(n_a0 > 0.0)) {
    throw ConfigError("n_a0: must be positive for the classical-pump solvers");
  }
  if (pump == Pump::fock &&
      std::abs(n_a0 - std::round(n_a0)) > 1e-9) {
    throw ConfigError("n_a0: must be an integer for pump=fock");
  }
}

namespace {

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
  if (pos != value.size()) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  double v = parse_double(key, value);
  if (std::abs(v - std::round(v)) > 0.0) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
  return static_cast<int>(std::llround(v));
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

std::vector<double> make_grid(double tau_max, double d_tau) {
  auto n = static_cast<std::size_t>(std::floor(tau_max / d_tau + 1e-9));
  std::vector<double> grid(n + 1);
  for (std::size_t i = 0; i <= n; ++i) grid[i] = double(i) * d_tau;
  return grid;
}

std::vector<cxd> pump_weights(const ScenarioConfig& c) {
  if (c.pump == Pump::coherent) {
    int s_max = c.cutoff >= 0 ? c.cutoff : fock::default_pump_cutoff(c.n_a0);
    return fock::coherent_weights(c.n_a0, s_max);
  }
  int m = static_cast<int>(std::llround(c.n_a0));
  int s_max = c.cutoff >= 0 ? c.cutoff : m;
  return fock::fock_weights(m, s_max);
}

DensityMatrix pad_two(const DensityMatrix& rho) {
  DensityMatrix out;
  out.elements = Eigen::MatrixXcd::Zero(rho.dim() + 2, rho.dim() + 2);
  out.elements.topLeftCorner(rho.dim(), rho.dim()) = rho.elements;
  return out;
}

Row analytic_row(const ScenarioConfig& c, double tau) {
  Row row;
  row.tau = tau;
  double na, nb;
  if (c.solver == Solver::parametric) {
    double amp = std::sqrt(c.n_a0);
    nb = parametric::occupation(amp, tau);
    na = c.n_a0 - nb;  // Manley-Rowe bookkeeping; goes negative at depletion
    row.t_eff = parametric::temperature(amp, tau);
  } else {
    na = semiclassical::pump_occupation(c.n_a0, tau);
    nb = semiclassical::signal_occupation(c.n_a0, tau);
    row.t_eff = info::effective_temperature(nb);
  }
  row.na = na;
  row.nb = nb;
  row.nc = nb;
  double s_b = info::thermal_entropy(nb);
  row.s_b = s_b;
  row.f_b = 1.0;  // thermal by construction
  row.i_b = 0.0;
  row.i_a_bc = 0.0;  // classical pump carries no entanglement
  row.i_b_c = info::mutual_information_signal_idler(s_b, 0.0);
  if (na >= 0.0) row.d_eff_a = info::effective_dimension(na);
  double d_b = info::effective_dimension(nb);
  row.d_eff_bc = d_b * d_b;
  return row;
}

Row state_row(const fock::TrimodalState& state, double tau) {
  Row row;
  row.tau = tau;
  auto occ = fock::mode_occupations(state);
  row.na = occ.pump;
  row.nb = occ.signal;
  row.nc = occ.idler;
  auto sig = fock::reduced_signal(state);
  auto rho_a = pad_two(fock::reduced_pump(state));
  double s_a = info::entropy(rho_a);
  double s_b = info::entropy(sig);
  row.s_a = s_a;
  row.s_b = s_b;
  auto ref = info::thermal_reference(occ.signal,
                                     static_cast<int>(sig.probs.size()) - 1);
  row.f_b = info::fidelity(sig, ref);
  row.i_b = info::thermal_entropy(occ.signal) - s_b;
  row.i_a_bc = info::mutual_information_pump(s_a);
  row.i_b_c = info::mutual_information_signal_idler(s_b, s_a);
  auto sq = info::squeezing(rho_a);
  row.q_plus = sq.q_plus;
  row.q_minus = sq.q_minus;
  row.d_eff_a = info::effective_dimension(occ.pump);
  double d_b = info::effective_dimension(occ.signal);
  row.d_eff_bc = d_b * d_b;
  row.t_eff = info::effective_temperature(occ.signal);
  return row;
}

}  // namespace

void apply_key(ScenarioConfig& config, const std::string& key,
               const std::string& value) {
  if (key == "solver") {
    config.solver = parse_solver(value);
  } else if (key == "pump") {
    config.pump = parse_pump(value);
  } else if (key == "n_a0") {
    config.n_a0 = parse_double(key, value);
  } else if (key == "tau_max") {
    config.tau_max = parse_double(key, value);
  } else if (key == "d_tau") {
    config.d_tau = parse_double(key, value);
  } else if (key == "cutoff") {
    config.cutoff = (value == "auto") ? -1 : parse_int(key, value);
  } else if (key == "tol") {
    config.tol = parse_double(key, value);
  } else if (key == "out") {
    config.out = value;
  } else if (key == "jobs") {
    config.jobs = parse_int(key, value);
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key=value");
    }
    apply_key(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

SolverOutput run_scenario(const ScenarioConfig& config) {
  config.validate();
  auto grid = make_grid(config.tau_max, config.d_tau);
  SolverOutput out;
  out.rows.reserve(grid.size());
  switch (config.solver) {
    case Solver::parametric:
    case Solver::semiclassical:
      for (double tau : grid) out.rows.push_back(analytic_row(config, tau));
      break;
    case Solver::shorttime: {
      auto weights = pump_weights(config);
      for (double tau : grid) {
        out.rows.push_back(state_row(shorttime::evolve(weights, tau), tau));
      }
      break;
    }
    case Solver::full: {
      auto traj = full::evolve_state(pump_weights(config), grid, config.jobs);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        out.rows.push_back(state_row(traj.states[i], grid[i]));
      }
      break;
    }
  }
  return out;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string cell(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string{};
}

}  // namespace

void write_csv(const SolverOutput& output, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << "tau,Na,Nb,Nc,S_a,S_b,F_b,I_b,I_a_bc,I_b_c,q_plus,q_minus,"
         "d_eff_a,d_eff_bc,T_eff\n";
  for (const Row& r : output.rows) {
    out << format_number(r.tau) << ',' << cell(r.na) << ',' << cell(r.nb)
        << ',' << cell(r.nc) << ',' << cell(r.s_a) << ',' << cell(r.s_b) << ','
        << cell(r.f_b) << ',' << cell(r.i_b) << ',' << cell(r.i_a_bc) << ','
        << cell(r.i_b_c) << ',' << cell(r.q_plus) << ',' << cell(r.q_minus)
        << ',' << cell(r.d_eff_a) << ',' << cell(r.d_eff_bc) << ','
        << cell(r.t_eff) << '\n';
  }
}

void write_meta(const ScenarioConfig& config, const std::string& csv_path,
                double wall_ms) {
  nlohmann::ordered_json meta;
  meta["schema"] = kCsvSchema;
  meta["version"] = kVersion;
  meta["config"]["solver"] = to_string(config.solver);
  meta["config"]["pump"] = to_string(config.pump);
  meta["config"]["n_a0"] = config.n_a0;
  meta["config"]["tau_max"] = config.tau_max;
  meta["config"]["d_tau"] = config.d_tau;
  meta["config"]["cutoff"] = config.cutoff;
  meta["config"]["tol"] = config.tol;
  meta["config"]["jobs"] = config.jobs;
  meta["wall_ms"] = wall_ms;
  fs::path p(csv_path);
  p.replace_extension("");
  std::ofstream out(p.string() + ".meta.json");
  out << meta.dump(2) << '\n';
}

void run_and_write(const ScenarioConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  auto output = run_scenario(config);
  write_csv(output, config.out);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  write_meta(config, config.out, ms);
}

double crossing_time_shorttime(double nbar) {
  auto weights = fock::coherent_weights(nbar, fock::default_pump_cutoff(nbar));
  auto gap = [&](double tau) {
    auto occ = fock::mode_occupations(shorttime::evolve(weights, tau));
    double d_b = info::effective_dimension(occ.signal);
    return info::effective_dimension(occ.pump) - d_b * d_b;
  };
  double lo = 0.0, hi = 1.0;
  while (gap(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e4) throw NumericalError("crossing_time_shorttime: no crossing");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    double mid = 0.5 * (lo + hi);
    (gap(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

struct FigureWriter {
  std::ofstream out;
  explicit FigureWriter(const fs::path& p) : out(p, std::ios::binary) {
    if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
  }
};

void figure_meta(const fs::path& csv, const nlohmann::ordered_json& config,
                 double wall_ms) {
  nlohmann::ordered_json meta;
  meta["schema"] = kCsvSchema;
  meta["version"] = kVersion;
  meta["config"] = config;
  meta["wall_ms"] = wall_ms;
  fs::path p = csv;
  p.replace_extension("");
  std::ofstream out(p.string() + ".meta.json");
  out << meta.dump(2) << '\n';
}

const std::vector<double> kCoherentSweep = {1.0, 3.0, 6.0, 9.0};

ScenarioConfig base_config(Solver solver, double nbar, double tau_max,
                           double d_tau, int jobs) {
  ScenarioConfig c;
  c.solver = solver;
  c.pump = Pump::coherent;
  c.n_a0 = nbar;
  c.tau_max = tau_max;
  c.d_tau = d_tau;
  c.jobs = jobs;
  return c;
}

void figure2(const fs::path& dir, double d_tau, int jobs) {
  auto t0 = std::chrono::steady_clock::now();
  FigureWriter w(dir / "fig2.csv");
  w.out << "solver,tau,Na,Nb\n";
  for (Solver s : {Solver::parametric, Solver::semiclassical,
                   Solver::shorttime, Solver::full}) {
    auto output = run_scenario(base_config(s, 9.0, 3.0, d_tau, jobs));
    for (const Row& r : output.rows) {
      w.out << to_string(s) << ',' << format_number(r.tau) << ',' << cell(r.na)
            << ',' << cell(r.nb) << '\n';
    }
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  figure_meta(dir / "fig2.csv",
              {{"figure", "fig2"}, {"n_a0", 9.0}, {"tau_max", 3.0},
               {"d_tau", d_tau}},
              ms);
}

void figure3(const fs::path& dir, int jobs) {
  (void)jobs;
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> snapshots = {0.5, 1.0, 2.0, 4.0, 8.0};
  auto weights = fock::coherent_weights(9.0, fock::default_pump_cutoff(9.0));
  FigureWriter w(dir / "fig3.csv");
  w.out << "tau,series,n,value\n";
  for (double tau : snapshots) {
    auto state = shorttime::evolve(weights, tau);
    auto rho_a = fock::reduced_pump(state);
    auto sig = fock::reduced_signal(state);
    auto ref = info::thermal_reference(sig.mean(),
                                       static_cast<int>(sig.probs.size()) - 1);
    for (int n = 0; n < rho_a.dim(); ++n) {
      w.out << format_number(tau) << ",pump," << n << ','
            << format_number(rho_a.elements(n, n).real()) << '\n';
    }
    for (std::size_t n = 0; n < sig.probs.size(); ++n) {
      w.out << format_number(tau) << ",signal," << n << ','
            << format_number(sig.probs[n]) << '\n';
    }
    for (std::size_t n = 0; n < ref.probs.size(); ++n) {
      w.out << format_number(tau) << ",signal_thermal," << n << ','
            << format_number(ref.probs[n]) << '\n';
    }
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  figure_meta(dir / "fig3.csv",
              {{"figure", "fig3"}, {"n_a0", 9.0}, {"snapshots", snapshots}},
              ms);
}

void figure4(const fs::path& dir, double d_tau, int jobs) {
  auto t0 = std::chrono::steady_clock::now();
  FigureWriter w(dir / "fig4.csv");
  FigureWriter wc(dir / "fig4_crossings.csv");
  w.out << "nbar,tau,F_b,I_b\n";
  wc.out << "nbar,tau_cross,Nb_at_cross\n";
  for (double nbar : kCoherentSweep) {
    auto output = run_scenario(base_config(Solver::shorttime, nbar, 8.0,
                                           d_tau, jobs));
    for (const Row& r : output.rows) {
      w.out << format_number(nbar) << ',' << format_number(r.tau) << ','
            << cell(r.f_b) << ',' << cell(r.i_b) << '\n';
    }
    double tau_cross = crossing_time_shorttime(nbar);
    auto weights = fock::coherent_weights(nbar,
                                          fock::default_pump_cutoff(nbar));
    auto occ = fock::mode_occupations(shorttime::evolve(weights, tau_cross));
    wc.out << format_number(nbar) << ',' << format_number(tau_cross) << ','
           << format_number(occ.signal) << '\n';
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  figure_meta(dir / "fig4.csv",
              {{"figure", "fig4"}, {"nbar", kCoherentSweep},
               {"tau_max", 8.0}, {"d_tau", d_tau}},
              ms);
}

void figure5(const fs::path& dir, double d_tau, int jobs) {
  auto t0 = std::chrono::steady_clock::now();
  FigureWriter w(dir / "fig5.csv");
  FigureWriter wc(dir / "fig5_crossings.csv");
  w.out << "nbar,tau,F_b,I_b\n";
  wc.out << "nbar,tau_cross,Nb_at_cross\n";
  for (double nbar : kCoherentSweep) {
    auto output = run_scenario(base_config(Solver::full, nbar, 3.0, d_tau,
                                           jobs));
    double prev_gap = 0.0;
    bool found = false;
    for (std::size_t i = 0; i < output.rows.size(); ++i) {
      const Row& r = output.rows[i];
      w.out << format_number(nbar) << ',' << format_number(r.tau) << ','
            << cell(r.f_b) << ',' << cell(r.i_b) << '\n';
      double d_b = info::effective_dimension(*r.nb);
      double gap = info::effective_dimension(*r.na) - d_b * d_b;
      if (!found && i > 0 && prev_gap > 0.0 && gap <= 0.0) {
        // linear interpolation inside the bracketing grid cell
        double t0c = output.rows[i - 1].tau;
        double frac = prev_gap / (prev_gap - gap);
        double tau_cross = t0c + frac * (r.tau - t0c);
        double nb_cross = *output.rows[i - 1].nb +
                          frac * (*r.nb - *output.rows[i - 1].nb);
        wc.out << format_number(nbar) << ',' << format_number(tau_cross) << ','
               << format_number(nb_cross) << '\n';
        found = true;
      }
      prev_gap = gap;
    }
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  figure_meta(dir / "fig5.csv",
              {{"figure", "fig5"}, {"nbar", kCoherentSweep},
               {"tau_max", 3.0}, {"d_tau", d_tau}},
              ms);
}

void figure6(const fs::path& dir, double d_tau, int jobs) {
  auto t0 = std::chrono::steady_clock::now();
  {
    FigureWriter w(dir / "fig6a.csv");
    w.out << "solver,tau,I_a_bc,I_b_c\n";
    for (Solver s : {Solver::parametric, Solver::semiclassical,
                     Solver::shorttime, Solver::full}) {
      auto output = run_scenario(base_config(s, 9.0, 3.0, d_tau, jobs));
      for (const Row& r : output.rows) {
        w.out << to_string(s) << ',' << format_number(r.tau) << ','
              << cell(r.i_a_bc) << ',' << cell(r.i_b_c) << '\n';
      }
    }
  }
  {
    FigureWriter w(dir / "fig6b.csv");
    w.out << "nbar,tau,q_plus,q_minus\n";
    for (double nbar : kCoherentSweep) {
      auto output = run_scenario(base_config(Solver::full, nbar, 3.0, d_tau,
                                             jobs));
      for (const Row& r : output.rows) {
        w.out << format_number(nbar) << ',' << format_number(r.tau) << ','
              << cell(r.q_plus) << ',' << cell(r.q_minus) << '\n';
      }
    }
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  figure_meta(dir / "fig6a.csv",
              {{"figure", "fig6"}, {"nbar", kCoherentSweep},
               {"tau_max", 3.0}, {"d_tau", d_tau}},
              ms);
}

}  // namespace

void figure(const std::string& name, const std::string& out_dir, double d_tau,
            int jobs) {
  fs::path dir(out_dir);
  fs::create_directories(dir);
  if (name == "fig2") {
    figure2(dir, d_tau, jobs);
  } else if (name == "fig3") {
    figure3(dir, jobs);
  } else if (name == "fig4") {
    figure4(dir, d_tau, jobs);
  } else if (name == "fig5") {
    figure5(dir, d_tau, jobs);
  } else if (name == "fig6") {
    figure6(dir, d_tau, jobs);
  } else {
    throw ConfigError("figure: unknown name '" + name + "'");
  }
}

}  // namespace trilin::scenario

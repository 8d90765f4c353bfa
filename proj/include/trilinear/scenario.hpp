#pragma once

#include <optional>
#include <string>

#include "trilinear/types.hpp"

namespace trilin::scenario {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCsvSchema = "solver-output/v1";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Solver { parametric, semiclassical, shorttime, full };
enum class Pump { coherent, fock };

Solver parse_solver(const std::string& name);
Pump parse_pump(const std::string& name);
std::string to_string(Solver s);
std::string to_string(Pump p);

struct ScenarioConfig {
  Solver solver = Solver::full;
  Pump pump = Pump::coherent;
  double n_a0 = 9.0;
  double tau_max = 3.0;
  double d_tau = 0.01;
  int cutoff = -1;  // -1 = auto
  double tol = 1e-10;
  std::string out = "run.csv";
  int jobs = 1;

  void validate() const;
};

struct Row {
  double tau = 0.0;
  std::optional<double> na, nb, nc, s_a, s_b, f_b, i_b, i_a_bc, i_b_c, q_plus,
      q_minus, d_eff_a, d_eff_bc, t_eff;
};

struct SolverOutput {
  std::vector<Row> rows;
};

/// Applies one key=value setting; throws ConfigError naming unknown keys.
void apply_key(ScenarioConfig& config, const std::string& key,
               const std::string& value);

/// Flat key=value file, UTF-8, '#' comments, unknown keys rejected.
ScenarioConfig load_config_file(const std::string& path,
                                ScenarioConfig base = {});

SolverOutput run_scenario(const ScenarioConfig& config);

void write_csv(const SolverOutput& output, const std::string& path);
void write_meta(const ScenarioConfig& config, const std::string& csv_path,
                double wall_ms);

/// Runs, writes the CSV, and writes the JSON sidecar next to it.
void run_and_write(const ScenarioConfig& config);

/// Canned figure-data scenarios: fig2..fig6.
void figure(const std::string& name, const std::string& out_dir,
            double d_tau = 0.01, int jobs = 1);

/// tau at which d_a^eff = d_bc^eff under the short-time evolution.
double crossing_time_shorttime(double nbar);

std::string format_number(double v);

}  // namespace trilin::scenario

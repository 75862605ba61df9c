// Copyright 2026 The pairwave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pairwave/analytic.hpp"
#include "pairwave/config.hpp"
#include "pairwave/csv.hpp"
#include "pairwave/dynamics.hpp"
#include "pairwave/hamiltonian.hpp"
#include "pairwave/quantum_core.hpp"
#include "pairwave/svg.hpp"
#include "pairwave/sweep.hpp"

namespace {

using namespace pairwave;

std::string load_config_text(const std::string& path) {
  if (path == "default") return default_config_text();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write output file '" + tmp + "'");
    out << content;
    out.flush();
    if (!out) throw ConfigError("write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw ConfigError("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

int resolve_workers(std::optional<int> flag) {
  if (flag && *flag >= 1) return *flag;
  if (const char* env = std::getenv("PAIRWAVE_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct Overrides {
  std::optional<double> c1, omega_mhz, gcs_ratio, dt_ps;
  std::optional<int> n_max;
  bool force = false;
};

void add_override_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--c1", o.c1, "Override the first pair's normalized detuning");
  cmd->add_option("--omega-mhz", o.omega_mhz, "Override the drive frequency Omega/2pi in MHz");
  cmd->add_option("--gcs-ratio", o.gcs_ratio, "Override the crosstalk strength ratio");
  cmd->add_option("--n-max", o.n_max, "Override the per-mode Fock truncation");
  cmd->add_option("--dt-ps", o.dt_ps, "Fixed integrator step in picoseconds");
  cmd->add_flag("--force", o.force, "Run even when hard validation fails");
}

PointOverrides to_point(const Overrides& o, std::optional<double> config_dt) {
  PointOverrides p;
  p.c1 = o.c1;
  p.omega_mhz = o.omega_mhz;
  p.gcs_ratio = o.gcs_ratio;
  p.n_max = o.n_max;
  p.dt_ps = o.dt_ps ? o.dt_ps : config_dt;
  return p;
}

void print_notices(const ParsedConfig& cfg) {
  for (const std::string& n : cfg.notices) std::cerr << "note: " << n << "\n";
}

void print_record(const SweepRecord& rec, bool timing) {
  std::printf("c1          = %.9g\n", rec.c1);
  std::printf("c2          = %.9g\n", rec.c2);
  std::printf("omega_mhz   = %.9g\n", rec.omega_mhz);
  std::printf("gcs_ratio   = %.9g\n", rec.gcs_ratio);
  std::printf("g_mhz       = %.9g, %.9g\n", rec.g1_mhz, rec.g2_mhz);
  std::printf("mu_mhz      = %.9g, %.9g\n", rec.mu1_mhz, rec.mu2_mhz);
  std::printf("t_op_ns     = %.9g\n", rec.t_op_ns);
  std::printf("F_joint     = %.9g\n", rec.f_joint);
  for (std::size_t j = 0; j < rec.f_pair.size(); ++j) {
    std::printf("F_pair%zu     = %.9g\n", j + 1, rec.f_pair[j]);
  }
  std::printf("trace_error = %.3g\n", rec.trace_error);
  std::printf("min_eig     = %.3g\n", rec.min_eig);
  std::printf("steps       = %ld\n", rec.steps);
  std::printf("validity    = %s\n", to_string(rec.validity));
  if (timing) std::printf("wall_s      = %.3g\n", rec.wall_seconds);
}

int cmd_validate(const std::string& config_path, const Overrides& o) {
  const ParsedConfig cfg = parse_config(load_config_text(config_path));
  print_notices(cfg);
  const SystemSpec spec = apply_overrides(cfg.spec, to_point(o, cfg.dt_ps));
  const ValidityReport report = validate(spec);
  std::printf("%-28s %12s  %s\n", "check", "ratio", "status");
  for (const ValidityFinding& f : report.findings) {
    std::printf("%-28s %12.4g  %s\n", f.label.c_str(), f.ratio,
                to_string(f.severity));
  }
  std::printf("overall: %s (fail below %g, warn below %g)\n",
              to_string(report.worst()), report.fail_below, report.warn_below);
  return 0;
}

int cmd_simulate(const std::string& config_path, const Overrides& o,
                 const std::string& csv_path, bool timing) {
  const ParsedConfig cfg = parse_config(load_config_text(config_path));
  print_notices(cfg);
  const SweepRecord rec = run_point(cfg.spec, to_point(o, cfg.dt_ps), o.force);
  print_record(rec, timing);
  if (!csv_path.empty()) {
    write_file_atomic(csv_path, to_csv({rec}, timing));
    std::printf("wrote %s\n", csv_path.c_str());
  }
  return 0;
}

int cmd_sweep(const std::string& config_path, const Overrides& o, bool fig4,
              bool fig5, const std::string& out_path,
              const std::string& svg_path, std::optional<int> workers_flag,
              bool timing) {
  const ParsedConfig cfg = parse_config(load_config_text(config_path));
  print_notices(cfg);
  SystemSpec base = apply_overrides(cfg.spec, to_point(o, cfg.dt_ps));

  std::vector<SweepAxis> axes;
  bool force = o.force;
  if (fig4 && fig5) throw ConfigError("--fig4 and --fig5 are mutually exclusive");
  if (fig4) {
    // Crosstalk-strength curves over the normalized detuning.
    axes.push_back(SweepAxis::list(SweepAxis::Param::gcs_ratio,
                                   {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}));
    axes.push_back(SweepAxis::linear(SweepAxis::Param::c1, 7.0, 17.0, 21));
    force = true;  // the preset region includes hard-validation corners
  } else if (fig5) {
    axes.push_back(SweepAxis::linear(SweepAxis::Param::c1, 7.0, 17.0, 21));
    axes.push_back(
        SweepAxis::linear(SweepAxis::Param::omega_mhz, 50.0, 200.0, 16));
    force = true;
  } else {
    axes = cfg.axes;
  }
  if (axes.empty()) {
    throw ConfigError("no sweep axes: give a config sweep section or --fig4/--fig5");
  }

  const int workers = resolve_workers(workers_flag);
  const std::vector<SweepRecord> table = sweep_grid(base, axes, workers, force);

  for (std::size_t i = 0; i < table.size(); ++i) {
    const SweepRecord& r = table[i];
    if (r.failed) {
      std::cerr << "warning: point " << i << " failed: " << r.error << "\n";
    } else if (!(r.trace_error < 1e-6)) {
      std::cerr << "warning: point " << i << " trace error " << r.trace_error
                << " exceeds 1e-6\n";
    } else if (r.validity == Severity::fail) {
      std::cerr << "warning: point " << i << " ran outside hard validity\n";
    }
  }

  write_file_atomic(out_path, to_csv(table, timing));
  std::printf("wrote %s (%zu rows, %d workers)\n", out_path.c_str(),
              table.size(), workers);
  if (!svg_path.empty()) {
    write_file_atomic(svg_path, heatmap_svg(table, axes));
    std::printf("wrote %s\n", svg_path.c_str());
  }

  try {
    const OptimumResult best = find_optimum(table, axes);
    std::printf("optimum: F_joint = %.9g at c1 = %.9g, omega_mhz = %.9g, "
                "gcs_ratio = %.9g (row %zu)\n",
                best.best.f_joint, best.best.c1, best.best.omega_mhz,
                best.best.gcs_ratio, best.best_index);
  } catch (const std::invalid_argument&) {
    std::printf("optimum: none (all points failed)\n");
  }
  return 0;
}

int cmd_analytic(const std::string& config_path, const Overrides& o,
                 std::optional<double> t_arg, bool at_t_op) {
  const ParsedConfig cfg = parse_config(load_config_text(config_path));
  print_notices(cfg);
  const SystemSpec spec = apply_overrides(cfg.spec, to_point(o, cfg.dt_ps));
  const DerivedQuantities der = derive(spec);
  if (t_arg && at_t_op) throw ConfigError("--t and --t-op are mutually exclusive");
  const double t = t_arg ? *t_arg : der.t_op;

  std::printf("t           = %.9g ns%s\n", t, t_arg ? "" : " (operation time)");
  const PairAmplitudes amps = pair_evolution(der.lambda, t);
  for (int j = 0; j < spec.n_pairs; ++j) {
    std::printf("pair %d: c = %.9g%+.9gi, s = %.9g%+.9gi  (lambda/2pi = %.9g MHz)\n",
                j + 1, amps.c[j].real(), amps.c[j].imag(), amps.s[j].real(),
                amps.s[j].imag(), angular_to_mhz(der.lambda[j]));
  }
  const RestoredState restored = restore_interaction_picture(amps, spec, t);
  std::printf("global phase              = %.9g rad\n", restored.global_phase);
  for (int j = 0; j < spec.n_pairs; ++j) {
    std::printf("pair %d frame phases: c-branch %.9g rad, s-branch %.9g rad\n",
                j + 1, restored.phase_c[j], restored.phase_s[j]);
  }
  const ComplexMatrix rho =
      restored.state * restored.state.adjoint();
  const double f =
      fidelity(rho, epr_target(spec.n_pairs, spec.n_max));
  std::printf("closed-form F_joint       = %.9g\n", f);
  return 0;
}

int cmd_oracle() {
  std::mt19937_64 rng(20260822ull);
  auto rand_matrix = [&](int n) {
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Complex(dist(rng), dist(rng));
    return a;
  };
  bool ok = true;
  auto report = [&](const char* name, double dev, double tol) {
    const bool pass = dev < tol;
    ok = ok && pass;
    std::printf("%-34s max deviation %.3e (tolerance %.0e) %s\n", name, dev,
                tol, pass ? "ok" : "FAILED");
  };

  {
    // Matrix exponential against a long Taylor sum on a scaled matrix.
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
      ComplexMatrix a = rand_matrix(8);
      a *= 0.5 / std::max(1.0, max_abs(a));
      const ComplexMatrix ex = expm_oracle(a);
      ComplexMatrix term = ComplexMatrix::Identity(8, 8), sum = term;
      for (int k = 1; k <= 30; ++k) {
        term = (term * a) / static_cast<double>(k);
        sum += term;
      }
      worst = std::max(worst, max_abs(ex - sum));
    }
    report("expm vs Taylor series", worst, 1e-12);
  }
  {
    // expm(A) expm(-A) = 1.
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
      const ComplexMatrix a = rand_matrix(8);
      const ComplexMatrix prod = expm_oracle(a) * expm_oracle(-a);
      worst = std::max(worst,
                       max_abs(prod - ComplexMatrix::Identity(8, 8)));
    }
    report("expm inverse identity", worst, 1e-10);
  }
  {
    // Dense Lindblad derivative against the vectorized superoperator.
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
      const int d = 6;
      ComplexMatrix h = rand_matrix(d);
      h = ComplexMatrix(0.5 * (h + h.adjoint()));
      LindbladSet l;
      l.collapse.emplace_back(rand_matrix(d), 0.37);
      l.dephasing.emplace_back(rand_matrix(d), 0.11);
      ComplexMatrix rho = rand_matrix(d);
      rho = ComplexMatrix(rho * rho.adjoint());
      rho /= rho.trace().real();
      const ComplexMatrix direct = lindblad_rhs(rho, h, l);
      const ComplexMatrix m = lindblad_superoperator(h, l);
      ComplexVector vec(d * d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) vec(i * d + j) = rho(i, j);
      const ComplexVector dv = m * vec;
      double dev = 0.0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          dev = std::max(dev, std::abs(direct(i, j) - dv(i * d + j)));
      worst = std::max(worst, dev);
    }
    report("Lindblad rhs vs superoperator", worst, 1e-12);
  }
  {
    // Kronecker product on an enumerable case.
    const ComplexMatrix sx = (ComplexMatrix(2, 2) << 0, 1, 1, 0).finished();
    const ComplexMatrix nn = (ComplexMatrix(2, 2) << 0, 0, 0, 1).finished();
    const ComplexMatrix k = kron(sx, nn);
    double dev = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const double expect =
            sx(i / 2, j / 2).real() * nn(i % 2, j % 2).real();
        dev = std::max(dev, std::abs(k(i, j) - Complex(expect, 0.0)));
      }
    }
    report("Kronecker product enumeration", dev, 1e-15);
  }
  {
    // Partial trace of a two-qubit Bell projector gives a maximally mixed qubit.
    HilbertLayout two(std::vector<int>{2, 2});
    ComplexVector bell(4);
    bell << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
    const ComplexMatrix rho = bell * bell.adjoint();
    const ComplexMatrix red = partial_trace(rho, two, {0});
    const ComplexMatrix want = 0.5 * ComplexMatrix::Identity(2, 2);
    report("Bell-state partial trace", max_abs(red - want), 1e-14);
  }

  std::printf("oracle checks: %s\n", ok ? "all ok" : "FAILURES DETECTED");
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous resonator-pair entanglement simulator"};
  app.require_subcommand(1);

  std::string config_path = "default";
  app.add_option("--config", config_path,
                 "Config file path, or 'default' for the built-in baseline")
      ->capture_default_str();

  Overrides o;
  bool timing = false;
  app.add_flag("--timing", timing, "Report wall-clock times (breaks byte-determinism)");

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check parameter validity ratios");
  add_override_flags(validate_cmd, o);

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "Run one parameter point");
  add_override_flags(simulate_cmd, o);
  std::string csv_path;
  simulate_cmd->add_option("--csv", csv_path, "Also write the record as CSV");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run a parameter grid and write CSV");
  add_override_flags(sweep_cmd, o);
  bool fig4 = false, fig5 = false;
  std::string out_path = "sweep.csv", svg_path;
  std::optional<int> workers_flag;
  sweep_cmd->add_flag("--fig4", fig4, "Preset: crosstalk-ratio curves over c1");
  sweep_cmd->add_flag("--fig5", fig5, "Preset: c1 x drive-frequency grid");
  sweep_cmd->add_option("--out", out_path, "Output CSV path")->capture_default_str();
  sweep_cmd->add_option("--svg", svg_path, "Also write an SVG heatmap (2-axis grids)");
  sweep_cmd->add_option("--workers", workers_flag,
                        "Worker threads (default: PAIRWAVE_WORKERS or hardware)");

  CLI::App* analytic_cmd = app.add_subcommand(
      "analytic", "Print closed-form pair amplitudes and fidelity");
  add_override_flags(analytic_cmd, o);
  std::optional<double> t_arg;
  bool at_t_op = false;
  analytic_cmd->add_option("--t", t_arg, "Evaluation time in ns");
  analytic_cmd->add_flag("--t-op", at_t_op, "Evaluate at the operation time (default)");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Run the numerical cross-checks");

  // Let --config/--timing appear after the subcommand name as well.
  for (CLI::App* sub : {validate_cmd, simulate_cmd, sweep_cmd, analytic_cmd, oracle_cmd}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // CLI11 prints the message; help exits 0
    return code == 0 ? 0 : 1;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(config_path, o);
    if (simulate_cmd->parsed()) return cmd_simulate(config_path, o, csv_path, timing);
    if (sweep_cmd->parsed()) {
      return cmd_sweep(config_path, o, fig4, fig5, out_path, svg_path,
                       workers_flag, timing);
    }
    if (analytic_cmd->parsed()) return cmd_analytic(config_path, o, t_arg, at_t_op);
    return cmd_oracle();
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

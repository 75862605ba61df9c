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

#include "pairwave/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pairwave/analytic.hpp"
#include "pairwave/dynamics.hpp"
#include "pairwave/hamiltonian.hpp"
#include "pairwave/quantum_core.hpp"

namespace pairwave {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Static (pre-integration) record fields from the resolved spec.
void fill_parameters(SweepRecord& rec, const SystemSpec& spec) {
  const DerivedQuantities der = derive(spec);
  rec.c1 = der.c.empty() ? kNan : der.c[0];
  rec.c2 = der.c.size() > 1 ? der.c[1] : kNan;
  rec.omega_mhz = angular_to_mhz(spec.Omega);
  rec.gcs_ratio = spec.gcs_ratio;
  rec.g1_mhz = spec.g.empty() ? kNan : angular_to_mhz(spec.g[0]);
  rec.g2_mhz = spec.g.size() > 1 ? angular_to_mhz(spec.g[1]) : kNan;
  rec.mu1_mhz = spec.mu.empty() ? kNan : angular_to_mhz(spec.mu[0]);
  rec.mu2_mhz = spec.mu.size() > 1 ? angular_to_mhz(spec.mu[1]) : kNan;
  rec.t_op_ns =
      spec.t_final_override > 0.0 ? spec.t_final_override : der.t_op;
}

SweepRecord failed_record(const SystemSpec& base, const PointOverrides& o,
                          const std::string& message) {
  SweepRecord rec;
  try {
    fill_parameters(rec, apply_overrides(base, o));
  } catch (const std::exception&) {
    rec.c1 = o.c1.value_or(kNan);
    rec.omega_mhz = o.omega_mhz.value_or(kNan);
    rec.gcs_ratio = o.gcs_ratio.value_or(kNan);
    rec.c2 = rec.g1_mhz = rec.g2_mhz = rec.mu1_mhz = rec.mu2_mhz = kNan;
    rec.t_op_ns = kNan;
  }
  rec.f_joint = kNan;
  rec.f_pair.assign(std::max(1, base.n_pairs), kNan);
  rec.trace_error = kNan;
  rec.min_eig = kNan;
  rec.failed = true;
  rec.error = message;
  return rec;
}

}  // namespace

SweepAxis SweepAxis::linear(Param p, double lo, double hi, int count) {
  if (count < 1) throw std::invalid_argument("SweepAxis::linear: count < 1");
  if (count > 1 && !(hi >= lo)) {
    throw std::invalid_argument("SweepAxis::linear: hi < lo");
  }
  SweepAxis axis;
  axis.param = p;
  axis.values.reserve(count);
  for (int i = 0; i < count; ++i) {
    axis.values.push_back(
        count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (count - 1));
  }
  return axis;
}

SweepAxis SweepAxis::list(Param p, std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("SweepAxis::list: empty values");
  SweepAxis axis;
  axis.param = p;
  axis.values = std::move(values);
  return axis;
}

const char* param_name(SweepAxis::Param p) {
  switch (p) {
    case SweepAxis::Param::c1: return "c1";
    case SweepAxis::Param::gcs_ratio: return "gcs_ratio";
    case SweepAxis::Param::omega_mhz: return "omega_mhz";
    case SweepAxis::Param::n_max: return "n_max";
    case SweepAxis::Param::dt_ps: return "dt_ps";
  }
  return "?";
}

SweepAxis::Param parse_param(const std::string& name) {
  if (name == "c1") return SweepAxis::Param::c1;
  if (name == "gcs_ratio") return SweepAxis::Param::gcs_ratio;
  if (name == "omega_mhz") return SweepAxis::Param::omega_mhz;
  if (name == "n_max") return SweepAxis::Param::n_max;
  if (name == "dt_ps") return SweepAxis::Param::dt_ps;
  throw ConfigError("unknown sweep parameter '" + name +
                    "' (expected c1, gcs_ratio, omega_mhz, n_max, or dt_ps)");
}

SystemSpec apply_overrides(const SystemSpec& base, const PointOverrides& o) {
  SystemSpec spec = base;
  if (o.c1) {
    const MatchingResult m = resolve_matching(spec.delta, *o.c1);
    for (std::size_t j = 0; j < spec.g.size(); ++j) {
      const double ratio =
          base.g[j] != 0.0 ? base.mu[j] / base.g[j] : 1.0;
      spec.mu[j] = ratio * m.g[j];
    }
    spec.g = m.g;
  }
  if (o.omega_mhz) {
    const bool retie = base.Omega_fe == base.Omega;
    spec.Omega = mhz_to_angular(*o.omega_mhz);
    if (retie) spec.Omega_fe = spec.Omega;
  }
  if (o.gcs_ratio) spec.gcs_ratio = *o.gcs_ratio;
  if (o.n_max) spec.n_max = *o.n_max;
  return spec;
}

SweepRecord run_point(const SystemSpec& base, const PointOverrides& overrides,
                      bool force) {
  const SystemSpec spec = apply_overrides(base, overrides);
  spec.check();

  SweepRecord rec;
  const ValidityReport report = validate(spec);
  rec.validity = report.worst();
  if (rec.validity == Severity::fail && !force) {
    std::ostringstream msg;
    msg << "hard validation failed:";
    for (const ValidityFinding& f : report.findings) {
      if (f.severity == Severity::fail) {
        msg << " " << f.label << " = " << f.ratio << ";";
      }
    }
    msg << " pass --force to run anyway";
    throw ValidationFailure(msg.str());
  }

  fill_parameters(rec, spec);
  const double t_final = rec.t_op_ns;

  const HarmonicHamiltonian h = build_full(spec);
  const double dt =
      overrides.dt_ps ? *overrides.dt_ps * 1e-3 : default_dt(h, t_final);

  const ComplexVector psi0 = initial_state(spec);
  const LindbladSet lindblad = build_lindblad(spec);
  const bool open_system = spec.include_dissipation && !lindblad.empty();

  const HilbertLayout layout = spec.layout();
  std::vector<int> keep;
  for (int j = 0; j < spec.n_pairs; ++j) keep.push_back(layout.a_index(j));
  for (int j = 0; j < spec.n_pairs; ++j) keep.push_back(layout.b_index(j));

  PropagationResult res;
  ComplexMatrix rho_red;
  if (open_system) {
    const ComplexMatrix rho0 = psi0 * psi0.adjoint();
    res = evolve_master(h, lindblad, rho0, t_final, dt);
    rho_red = partial_trace(res.rho, layout, keep);
  } else {
    res = propagate_state(h, psi0, t_final, dt);
    const ComplexMatrix rho_full = res.state * res.state.adjoint();
    rho_red = partial_trace(rho_full, layout, keep);
  }

  rec.f_joint = fidelity(rho_red, epr_target(spec.n_pairs, spec.n_max));
  const HilbertLayout reduced =
      HilbertLayout::resonators_only(spec.n_pairs, spec.n_max);
  for (int j = 0; j < spec.n_pairs; ++j) {
    rec.f_pair.push_back(pair_fidelity(rho_red, reduced, j));
  }
  rec.trace_error = res.max_trace_dev;
  rec.min_eig = res.min_eigenvalue;
  rec.steps = res.steps;
  rec.wall_seconds = res.wall_seconds;
  rec.herm_drift = res.herm_drift;
  rec.rehermitizations = res.rehermitizations;
  return rec;
}

std::vector<SweepRecord> sweep_grid(const SystemSpec& base,
                                    const std::vector<SweepAxis>& axes,
                                    int workers, bool force) {
  if (axes.empty()) throw std::invalid_argument("sweep_grid: no axes");
  for (const SweepAxis& axis : axes) {
    if (axis.values.empty()) throw std::invalid_argument("sweep_grid: empty axis");
  }

  std::size_t total = 1;
  for (const SweepAxis& axis : axes) total *= axis.values.size();

  // Row-major order: first declared axis outermost.
  std::vector<PointOverrides> points(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    std::size_t block = total;
    PointOverrides& o = points[flat];
    for (const SweepAxis& axis : axes) {
      block /= axis.values.size();
      const double v = axis.values[(rem / block) % axis.values.size()];
      rem %= block;
      switch (axis.param) {
        case SweepAxis::Param::c1: o.c1 = v; break;
        case SweepAxis::Param::gcs_ratio: o.gcs_ratio = v; break;
        case SweepAxis::Param::omega_mhz: o.omega_mhz = v; break;
        case SweepAxis::Param::n_max: {
          const long n = std::lround(v);
          if (std::abs(v - static_cast<double>(n)) > 1e-9) {
            throw ConfigError("sweep axis n_max requires integer values");
          }
          o.n_max = static_cast<int>(n);
          break;
        }
        case SweepAxis::Param::dt_ps: o.dt_ps = v; break;
      }
    }
  }

  std::vector<SweepRecord> table(total);
  auto run_one = [&](std::size_t i) {
    try {
      table[i] = run_point(base, points[i], force);
    } catch (const std::exception& e) {
      table[i] = failed_record(base, points[i], e.what());
    }
  };

  const int pool = std::max(1, std::min<int>(workers, static_cast<int>(total)));
  if (pool == 1) {
    for (std::size_t i = 0; i < total; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (int w = 0; w < pool; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
          run_one(i);
        }
      });
    }
    for (std::thread& t : threads) t.join();
  }
  return table;
}

namespace {

std::size_t best_index_of(const std::vector<SweepRecord>& table) {
  if (table.empty()) throw std::invalid_argument("find_optimum: empty table");
  std::size_t best = table.size();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const SweepRecord& r = table[i];
    if (r.failed || std::isnan(r.f_joint)) continue;
    if (best == table.size()) {
      best = i;
      continue;
    }
    const SweepRecord& b = table[best];
    if (r.f_joint > b.f_joint ||
        (r.f_joint == b.f_joint &&
         (r.c1 < b.c1 || (r.c1 == b.c1 && r.omega_mhz < b.omega_mhz)))) {
      best = i;
    }
  }
  if (best == table.size()) {
    throw std::invalid_argument("find_optimum: every record failed");
  }
  return best;
}

}  // namespace

OptimumResult find_optimum(const std::vector<SweepRecord>& table,
                           const std::vector<SweepAxis>& axes) {
  std::size_t total = 1;
  for (const SweepAxis& axis : axes) total *= axis.values.size();
  if (total != table.size()) {
    throw std::invalid_argument("find_optimum: table size does not match axes");
  }
  OptimumResult out;
  out.best_index = best_index_of(table);
  out.best = table[out.best_index];

  // Decompose the flat index into per-axis coordinates, then take +-1 steps.
  std::vector<std::size_t> sizes, coords;
  for (const SweepAxis& axis : axes) sizes.push_back(axis.values.size());
  std::size_t rem = out.best_index;
  std::size_t block = total;
  for (std::size_t s : sizes) {
    block /= s;
    coords.push_back(rem / block);
    rem %= block;
  }
  for (std::size_t d = 0; d < sizes.size(); ++d) {
    for (int step : {-1, +1}) {
      const long c = static_cast<long>(coords[d]) + step;
      if (c < 0 || c >= static_cast<long>(sizes[d])) continue;
      std::size_t flat = 0;
      std::size_t b = total;
      for (std::size_t e = 0; e < sizes.size(); ++e) {
        b /= sizes[e];
        flat += (e == d ? static_cast<std::size_t>(c) : coords[e]) * b;
      }
      out.neighborhood.push_back(table[flat]);
    }
  }
  return out;
}

OptimumResult find_optimum(const std::vector<SweepRecord>& table) {
  OptimumResult out;
  out.best_index = best_index_of(table);
  out.best = table[out.best_index];
  if (out.best_index > 0) out.neighborhood.push_back(table[out.best_index - 1]);
  if (out.best_index + 1 < table.size()) {
    out.neighborhood.push_back(table[out.best_index + 1]);
  }
  return out;
}

}  // namespace pairwave

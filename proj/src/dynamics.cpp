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

#include "pairwave/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pairwave/quantum_core.hpp"
#include "sparse_engine.hpp"

namespace pairwave {
namespace {

long snapped_steps(double t_final, double dt) {
  long steps = static_cast<long>(std::ceil(t_final / dt - 1e-9));
  return steps < 1 ? 1 : steps;
}

[[noreturn]] void throw_trace_failure(const char* what, double t, double dev) {
  std::ostringstream msg;
  msg << what << " deviated by " << dev << " at t = " << t
      << " ns (limit 1e-6); the step size is too coarse for this system";
  throw NumericalFailure(msg.str());
}

[[noreturn]] void throw_purity_failure(double t, double excess) {
  std::ostringstream msg;
  msg << "density-matrix purity exceeded tr(rho)^2 by " << excess << " at t = "
      << t << " ns (limit 1e-6); the step size is too coarse for this system";
  throw NumericalFailure(msg.str());
}

Complex expectation(const ComplexMatrix& op, const ComplexMatrix& rho) {
  // tr(O rho) without forming the product.
  return op.cwiseProduct(rho.transpose()).sum();
}

}  // namespace

std::vector<std::pair<ComplexMatrix, double>> LindbladSet::all_ops() const {
  std::vector<std::pair<ComplexMatrix, double>> out;
  out.reserve(collapse.size() + dephasing.size());
  for (const auto& c : collapse) out.push_back(c);
  for (const auto& d : dephasing) out.push_back(d);
  return out;
}

LindbladSet build_lindblad(const SystemSpec& spec) {
  spec.check();
  const HilbertLayout layout = spec.layout();
  const DissipationSpec& d = spec.dissipation;
  d.check(spec.n_pairs);
  const int mode_dim = spec.n_max + 1;

  LindbladSet out;
  const ComplexMatrix a = annihilate(mode_dim);
  for (int j = 0; j < spec.n_pairs; ++j) {
    if (d.kappa_a[j] > 0.0) {
      out.collapse.emplace_back(embed(a, layout.a_index(j), layout), d.kappa_a[j]);
    }
    if (d.kappa_b[j] > 0.0) {
      out.collapse.emplace_back(embed(a, layout.b_index(j), layout), d.kappa_b[j]);
    }
  }
  const int q = layout.qutrit_index();
  auto add_qutrit = [&](const ComplexMatrix& op, double rate,
                        std::vector<std::pair<ComplexMatrix, double>>& dst) {
    if (rate > 0.0) dst.emplace_back(embed(op, q, layout), rate);
  };
  add_qutrit(qutrit_transfer(Level::g, Level::e), d.gamma_eg, out.collapse);
  add_qutrit(qutrit_transfer(Level::e, Level::f), d.gamma_fe, out.collapse);
  add_qutrit(qutrit_transfer(Level::g, Level::f), d.gamma_fg, out.collapse);
  add_qutrit(qutrit_project(Level::e), d.gamma_phi_e, out.dephasing);
  add_qutrit(qutrit_project(Level::f), d.gamma_phi_f, out.dephasing);
  return out;
}

double default_dt(const HarmonicHamiltonian& h, double t_final) {
  if (!(t_final > 0.0)) {
    throw std::invalid_argument("default_dt: t_final must be positive");
  }
  const double nu_max = h.max_frequency();
  const double base = nu_max > 0.0 ? (kTwoPi / nu_max) / 40.0 : t_final / 1000.0;
  return t_final / static_cast<double>(snapped_steps(t_final, base));
}

PropagationResult propagate_state(const HarmonicHamiltonian& h,
                                  const ComplexVector& psi0, double t_final,
                                  double dt, const PropagationOptions& opts) {
  if (!(t_final > 0.0)) throw std::invalid_argument("propagate_state: t_final must be positive");
  if (!(dt > 0.0)) throw std::invalid_argument("propagate_state: dt must be positive");
  const int dim = h.layout().total_dim();
  if (psi0.size() != dim) throw std::invalid_argument("propagate_state: state dimension mismatch");

  const detail::PureEngine engine(h);
  const long steps = snapped_steps(t_final, dt);
  const long stride = std::max<long>(1, steps / std::max(1, opts.sample_count));

  PropagationResult res;
  res.dt = dt;
  res.expectations.resize(opts.observables.size());

  ComplexVector y = psi0;
  ComplexVector k(dim), ystage(dim), acc(dim);
  const double norm0 = y.squaredNorm();

  auto record = [&](double t) {
    res.times.push_back(t);
    for (std::size_t o = 0; o < opts.observables.size(); ++o) {
      res.expectations[o].push_back(y.dot(opts.observables[o] * y));
    }
  };
  record(0.0);

  const auto wall0 = std::chrono::steady_clock::now();
  for (long i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * dt;
    const double hs = (i == steps - 1) ? t_final - t : dt;
    engine.rhs(t, y, k);
    acc = y + (hs / 6.0) * k;
    ystage = y + (hs / 2.0) * k;
    engine.rhs(t + hs / 2.0, ystage, k);
    acc += (hs / 3.0) * k;
    ystage = y + (hs / 2.0) * k;
    engine.rhs(t + hs / 2.0, ystage, k);
    acc += (hs / 3.0) * k;
    ystage = y + hs * k;
    engine.rhs(t + hs, ystage, k);
    acc += (hs / 6.0) * k;
    y.swap(acc);

    const double t_now = (i == steps - 1) ? t_final : static_cast<double>(i + 1) * dt;
    const double dev = std::abs(y.squaredNorm() - norm0);
    if (dev > res.max_trace_dev) res.max_trace_dev = dev;
    // Negated comparison so a NaN norm also aborts.
    if (!(dev <= 1e-6)) throw_trace_failure("state norm", t_now, dev);
    if ((i + 1) % stride == 0 || i == steps - 1) {
      if (res.times.back() != t_now) record(t_now);
    }
  }
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
  res.steps = steps;
  res.state = std::move(y);
  return res;
}

PropagationResult propagate_state(const HarmonicHamiltonian& h,
                                  const ComplexVector& psi0, double t_final,
                                  const PropagationOptions& opts) {
  return propagate_state(h, psi0, t_final, default_dt(h, t_final), opts);
}

PropagationResult evolve_master(const HarmonicHamiltonian& h,
                                const LindbladSet& lindblad,
                                const ComplexMatrix& rho0, double t_final,
                                double dt, const PropagationOptions& opts) {
  if (!(t_final > 0.0)) throw std::invalid_argument("evolve_master: t_final must be positive");
  if (!(dt > 0.0)) throw std::invalid_argument("evolve_master: dt must be positive");
  const int dim = h.layout().total_dim();
  if (rho0.rows() != dim || rho0.cols() != dim) {
    throw std::invalid_argument("evolve_master: density matrix dimension mismatch");
  }
  if (!is_hermitian(rho0, 1e-10)) {
    throw std::invalid_argument("evolve_master: rho0 must be Hermitian");
  }

  const detail::MasterEngine engine(h, lindblad.all_ops());
  const long steps = snapped_steps(t_final, dt);
  const long stride = std::max<long>(1, steps / std::max(1, opts.sample_count));

  PropagationResult res;
  res.dt = dt;
  res.expectations.resize(opts.observables.size());

  // Symmetrize once so the Hermiticity-preserving stepper starts exact.
  ComplexMatrix y = 0.5 * (rho0 + rho0.adjoint());
  ComplexMatrix k(dim, dim), ystage(dim, dim), acc(dim, dim);
  const double tr0 = y.trace().real();

  auto record = [&](double t) {
    res.times.push_back(t);
    for (std::size_t o = 0; o < opts.observables.size(); ++o) {
      res.expectations[o].push_back(expectation(opts.observables[o], y));
    }
  };
  record(0.0);

  const auto wall0 = std::chrono::steady_clock::now();
  for (long i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * dt;
    const double hs = (i == steps - 1) ? t_final - t : dt;
    engine.rhs(t, y, k);
    acc = y + (hs / 6.0) * k;
    ystage = y + (hs / 2.0) * k;
    engine.rhs(t + hs / 2.0, ystage, k);
    acc += (hs / 3.0) * k;
    ystage = y + (hs / 2.0) * k;
    engine.rhs(t + hs / 2.0, ystage, k);
    acc += (hs / 3.0) * k;
    ystage = y + hs * k;
    engine.rhs(t + hs, ystage, k);
    acc += (hs / 6.0) * k;
    y.swap(acc);

    const double t_now = (i == steps - 1) ? t_final : static_cast<double>(i + 1) * dt;
    const double dev = std::abs(y.trace().real() - tr0);
    if (dev > res.max_trace_dev) res.max_trace_dev = dev;
    if (!(dev <= 1e-6)) throw_trace_failure("density-matrix trace", t_now, dev);
    // tr(rho^2) <= tr(rho)^2 for any positive matrix, so excess purity is the
    // density-matrix analogue of state-norm growth.  A purely off-diagonal
    // blowup conserves the trace exactly and only this guard catches it; the
    // negated comparison also aborts on NaN.
    const double purity_excess = y.squaredNorm() - tr0 * tr0;
    if (!(purity_excess <= 1e-6)) throw_purity_failure(t_now, purity_excess);

    if (opts.rehermitize_every > 0 && (i + 1) % opts.rehermitize_every == 0 &&
        i != steps - 1) {
      double drift = 0.0;
      for (int r = 0; r < dim; ++r) {
        for (int c = r; c < dim; ++c) {
          const double dv = std::abs(y(r, c) - std::conj(y(c, r)));
          if (dv > drift) drift = dv;
        }
      }
      if (drift > res.herm_drift) res.herm_drift = drift;
      for (int r = 0; r < dim; ++r) {
        for (int c = r + 1; c < dim; ++c) {
          const Complex v = 0.5 * (y(r, c) + std::conj(y(c, r)));
          y(r, c) = v;
          y(c, r) = std::conj(v);
        }
        y(r, r) = Complex(y(r, r).real(), 0.0);
      }
      ++res.rehermitizations;
    }
    if ((i + 1) % stride == 0 || i == steps - 1) {
      if (res.times.back() != t_now) record(t_now);
    }
  }
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
  res.steps = steps;

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(y, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw NumericalFailure("evolve_master: final eigenvalue check failed to converge");
  }
  res.min_eigenvalue = eig.eigenvalues().minCoeff();
  res.rho = std::move(y);
  return res;
}

PropagationResult evolve_master(const HarmonicHamiltonian& h,
                                const LindbladSet& lindblad,
                                const ComplexMatrix& rho0, double t_final,
                                const PropagationOptions& opts) {
  return evolve_master(h, lindblad, rho0, t_final, default_dt(h, t_final), opts);
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h,
                           const LindbladSet& lindblad) {
  if (rho.rows() != rho.cols() || h.rows() != h.cols() || rho.rows() != h.rows()) {
    throw std::invalid_argument("lindblad_rhs: dimension mismatch");
  }
  ComplexMatrix out = Complex(0.0, -1.0) * (h * rho - rho * h);
  for (const auto& [op, rate] : lindblad.all_ops()) {
    if (op.rows() != rho.rows() || op.cols() != rho.cols()) {
      throw std::invalid_argument("lindblad_rhs: jump operator dimension mismatch");
    }
    const ComplexMatrix opd = op.adjoint();
    const ComplexMatrix pop = opd * op;
    out += rate * (op * rho * opd - 0.5 * (pop * rho + rho * pop));
  }
  return out;
}

ComplexMatrix lindblad_superoperator(const ComplexMatrix& h,
                                     const LindbladSet& lindblad) {
  const int d = static_cast<int>(h.rows());
  if (h.cols() != d) throw std::invalid_argument("lindblad_superoperator: H must be square");
  if (d > 64) {
    throw std::invalid_argument("lindblad_superoperator: dimension capped at 64");
  }
  const auto idx = [d](int i, int j) { return i * d + j; };
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  const Complex mi(0.0, -1.0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        m(idx(i, j), idx(k, j)) += mi * h(i, k);
        m(idx(i, j), idx(i, k)) -= mi * h(k, j);
      }
    }
  }
  for (const auto& [op, rate] : lindblad.all_ops()) {
    if (op.rows() != d || op.cols() != d) {
      throw std::invalid_argument("lindblad_superoperator: jump operator dimension mismatch");
    }
    const ComplexMatrix pop = op.adjoint() * op;
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          for (int l = 0; l < d; ++l) {
            m(idx(i, j), idx(k, l)) += rate * op(i, k) * std::conj(op(j, l));
          }
          m(idx(i, j), idx(k, j)) -= 0.5 * rate * pop(i, k);
          m(idx(i, j), idx(i, k)) -= 0.5 * rate * pop(k, j);
        }
      }
    }
  }
  return m;
}

}  // namespace pairwave

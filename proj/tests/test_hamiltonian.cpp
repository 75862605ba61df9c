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

#include "pairwave/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pairwave/model.hpp"
#include "test_helpers.hpp"

using namespace pairwave;
using pairwave::testing::random_hermitian;
using pairwave::testing::random_matrix;

namespace {

SystemSpec single_pair_spec(double delta_ghz, double g_mhz, double mu_mhz,
                            double omega_mhz, int n_max) {
  SystemSpec s;
  s.n_pairs = 1;
  s.omega_eg = ghz_to_angular(7.5);
  s.omega_fg = ghz_to_angular(12.5);
  s.delta = {ghz_to_angular(delta_ghz)};
  s.g = {mhz_to_angular(g_mhz)};
  s.mu = {mhz_to_angular(mu_mhz)};
  s.Omega = mhz_to_angular(omega_mhz);
  s.Omega_fe = s.Omega;
  s.n_max = n_max;
  s.dissipation = DissipationSpec::none(1);
  return s;
}

std::vector<double> sorted_frequencies_ghz(const HarmonicHamiltonian& h) {
  std::vector<double> nus;
  for (const auto& term : h.terms()) nus.push_back(angular_to_ghz(term.nu));
  std::sort(nus.begin(), nus.end());
  return nus;
}

}  // namespace

TEST_CASE("harmonic container folds, evaluates, and reports frequencies") {
  std::mt19937_64 rng(21);
  const HilbertLayout layout({2, 2});
  HarmonicHamiltonian h(layout);

  CHECK(max_abs(h.static_term()) == 0.0);
  CHECK(h.max_frequency() == 0.0);

  const ComplexMatrix hs = random_hermitian(rng, 4);
  h.add_static(hs);

  const ComplexMatrix op = random_matrix(rng, 4, 4);
  h.add_term(op, 2.5);
  h.add_term(op, -1.25);
  CHECK(h.terms().size() == 2);
  CHECK(h.max_frequency() == doctest::Approx(2.5).epsilon(1e-15));

  // A zero-frequency term folds into the static part Hermitianly.
  HarmonicHamiltonian h0(layout);
  h0.add_term(op, 0.0);
  CHECK(h0.terms().empty());
  CHECK(max_abs(h0.static_term() - (op + op.adjoint())) == 0.0);
  CHECK(is_hermitian(h0.static_term(), 1e-12));

  const double t = 0.37;
  const Complex p1 = std::exp(kImag * (2.5 * t));
  const Complex p2 = std::exp(kImag * (-1.25 * t));
  const ComplexMatrix expect = hs + p1 * op + std::conj(p1) * op.adjoint() +
                               p2 * op + std::conj(p2) * op.adjoint();
  CHECK(max_abs(h.evaluate(t) - expect) < 1e-14);
  CHECK(is_hermitian(h.evaluate(t), 1e-12));
  // At t = 0 both harmonics contribute op + op^dagger at full weight.
  CHECK(max_abs(h.evaluate(0.0) - (hs + 2.0 * (op + op.adjoint()))) < 1e-12);

  // Non-Hermitian statics and shape mismatches are rejected.
  ComplexMatrix nh = ComplexMatrix::Zero(4, 4);
  nh(0, 1) = 1.0;
  CHECK_THROWS_AS(h.add_static(nh), std::invalid_argument);
  CHECK_THROWS_AS(h.add_static(random_hermitian(rng, 3)), std::invalid_argument);
  CHECK_THROWS_AS(h.add_term(random_matrix(rng, 3, 3), 1.0),
                  std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(h.add_term(op, nan), std::invalid_argument);
}

TEST_CASE("full model term census follows the feature flags") {
  SystemSpec bare = baseline_spec();
  bare.include_crosstalk = false;
  bare.include_leakage = false;
  const HarmonicHamiltonian h_bare = build_full(bare);
  CHECK(h_bare.terms().size() == 4);  // (g_j, mu_j) x 2 pairs
  CHECK(h_bare.layout().total_dim() == 243);

  // Static part is the resonant pulse alone.
  const ComplexMatrix sx3 = qutrit_transfer(Level::e, Level::g) +
                            qutrit_transfer(Level::g, Level::e);
  CHECK(max_abs(h_bare.static_term() -
                bare.Omega * embed(sx3, 0, bare.layout())) < 1e-15);

  SystemSpec leak = bare;
  leak.include_leakage = true;
  const HarmonicHamiltonian h_leak = build_full(leak);
  CHECK(h_leak.terms().size() == 5);
  // The extra harmonic is the detuned e<->f drive.
  const HarmonicTerm& lk = h_leak.terms().back();
  CHECK(angular_to_ghz(lk.nu) == doctest::Approx(-2.5).epsilon(1e-12));
  CHECK(max_abs(lk.op - leak.Omega_fe *
                            embed(qutrit_transfer(Level::f, Level::e), 0,
                                  leak.layout())) < 1e-15);

  const HarmonicHamiltonian h_all = build_full(baseline_spec());
  CHECK(h_all.terms().size() == 11);
  const std::vector<double> expect = {-8.25, -7.5, -7.5, -6.75, -2.5, -0.75,
                                      -0.75, 0.75, 0.75,  1.5,  1.5};
  const std::vector<double> got = sorted_frequencies_ghz(h_all);
  REQUIRE(got.size() == expect.size());
  for (size_t i = 0; i < got.size(); ++i)
    CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-9));
  CHECK(angular_to_ghz(h_all.max_frequency()) ==
        doctest::Approx(8.25).epsilon(1e-12));
}

TEST_CASE("crosstalk couples each mode pair at its frequency difference") {
  const SystemSpec spec = baseline_spec();
  const DerivedQuantities der = derive(spec);
  const HarmonicHamiltonian h = build_full(spec);
  const HilbertLayout layout = spec.layout();
  const ComplexMatrix lower = annihilate(spec.n_max + 1);
  const double g_cs = spec.gcs_ratio * der.g_m;
  CHECK(angular_to_mhz(g_cs) ==
        doctest::Approx(0.4 * angular_to_mhz(spec.g[1])).epsilon(1e-12));

  // Find the a_1 b_2 exchange by its unique frequency -2pi * 8.25 GHz.
  const ComplexMatrix expected =
      g_cs * (embed(lower, layout.a_index(0), layout) *
              embed(lower, layout.b_index(1), layout).adjoint());
  bool found = false;
  for (const auto& term : h.terms()) {
    if (std::abs(term.nu - der.delta_ab(0, 1)) < 1e-12) {
      CHECK(max_abs(term.op - expected) < 1e-15);
      found = true;
    }
  }
  CHECK(found);

  // gcs_ratio = 0 produces no crosstalk harmonics at all.
  SystemSpec off = spec;
  off.gcs_ratio = 0.0;
  off.include_leakage = false;
  CHECK(build_full(off).terms().size() == 4);
}

TEST_CASE("excitation charge is conserved without pulse leakage") {
  SystemSpec spec = baseline_spec();
  spec.include_leakage = false;  // crosstalk stays on
  const HarmonicHamiltonian h = build_full(spec);
  const HilbertLayout layout = spec.layout();

  ComplexMatrix charge = embed(qutrit_project(Level::f), 0, layout);
  const ComplexMatrix n_op = number_op(spec.n_max + 1);
  for (int j = 0; j < spec.n_pairs; ++j) {
    charge += embed(n_op, layout.a_index(j), layout);
    charge += embed(n_op, layout.b_index(j), layout);
  }

  for (double t : {0.0, 0.123, 7.7}) {
    const ComplexMatrix ht = h.evaluate(t);
    CHECK(max_abs(ht * charge - charge * ht) < 1e-12);
  }

  // The leakage drive breaks the conservation law.
  const HarmonicHamiltonian h_leak = build_full(baseline_spec());
  const ComplexMatrix ht = h_leak.evaluate(0.0);
  CHECK(max_abs(ht * charge - charge * ht) > 1e-3);
}

TEST_CASE("dispersive reduction has the expected matrix elements") {
  const SystemSpec spec = single_pair_spec(0.75, 50.0, 40.0, 10.0, 2);
  const HarmonicHamiltonian h = build_effective(spec);
  CHECK(h.terms().empty());  // entirely static
  const ComplexMatrix& m = h.static_term();
  REQUIRE(m.rows() == 27);  // 3 x 3 x 3

  const double chi_a = spec.g[0] * spec.g[0] / spec.delta[0];
  const double chi_b = spec.mu[0] * spec.mu[0] / spec.delta[0];
  const double lambda = spec.g[0] * spec.mu[0] / spec.delta[0];
  const HilbertLayout layout = spec.layout();
  const int g_vac = layout.flatten({0, 0, 0});
  const int e_vac = layout.flatten({1, 0, 0});
  const int g_10 = layout.flatten({0, 1, 0});
  const int e_01 = layout.flatten({1, 0, 1});

  // Vacuum Stark shifts from the normal-ordering constant.
  CHECK(m(g_vac, g_vac).real() == doctest::Approx(-chi_a).epsilon(1e-12));
  CHECK(m(e_vac, e_vac).real() == doctest::Approx(-chi_b).epsilon(1e-12));
  // One photon in a_j doubles the |g> shift: a a^+ = n + 1.
  CHECK(m(g_10, g_10).real() == doctest::Approx(-2.0 * chi_a).epsilon(1e-12));
  // Photon-exchange Raman amplitude -lambda.
  CHECK(m(e_01, g_10).real() == doctest::Approx(-lambda).epsilon(1e-12));
  CHECK(std::abs(m(e_01, g_10).imag()) < 1e-15);
  CHECK(m(g_10, e_01).real() == doctest::Approx(-lambda).epsilon(1e-12));
  // Resonant pulse connects |g> and |e> at fixed photon numbers.
  CHECK(m(e_vac, g_vac).real() == doctest::Approx(spec.Omega).epsilon(1e-12));

  // |f> is a spectator: its whole row vanishes.
  const int f_vac = layout.flatten({2, 0, 0});
  CHECK(max_abs(m.row(f_vac)) == 0.0);
  CHECK(is_hermitian(m, 1e-12));
}

TEST_CASE("pair-exchange frame carries the residual Stark harmonics") {
  // Detuned mu: one harmonic per pair at (g^2 - mu^2)/Delta.
  const SystemSpec spec = baseline_spec();  // mu = 0.95 g
  const DerivedQuantities der = derive(spec);
  const HarmonicHamiltonian h = build_pair_exchange(spec);
  REQUIRE(h.terms().size() == 2);
  CHECK(max_abs(h.static_term()) == 0.0);
  for (int j = 0; j < 2; ++j) {
    CHECK(h.terms()[j].nu ==
          doctest::Approx(der.delta_stark[j]).epsilon(1e-12));
    CHECK(h.terms()[j].nu > 0.0);
  }

  // Single-pair element check: -(lambda/2) <g,0,1| a b^+ Sz~ |e,1,0>.
  const SystemSpec sp = single_pair_spec(0.75, 50.0, 40.0, 0.0, 1);
  const HarmonicHamiltonian hp = build_pair_exchange(sp);
  REQUIRE(hp.terms().size() == 1);
  const double lambda = sp.g[0] * sp.mu[0] / sp.delta[0];
  const HilbertLayout lay = sp.layout();
  const ComplexMatrix& op = hp.terms()[0].op;
  CHECK(op(lay.flatten({0, 0, 1}), lay.flatten({1, 1, 0})).real() ==
        doctest::Approx(-0.5 * lambda).epsilon(1e-12));

  // Matched couplings: all harmonics vanish exactly and the static part is
  // bit-for-bit the parallel beam-splitter Hamiltonian.
  SystemSpec matched = spec;
  matched.mu = matched.g;
  const HarmonicHamiltonian hm = build_pair_exchange(matched);
  CHECK(hm.terms().empty());
  CHECK(max_abs(hm.static_term() - build_parallel(matched, true)) == 0.0);
}

TEST_CASE("parallel beam-splitter Hamiltonian on the reduced space") {
  const SystemSpec spec = baseline_spec();
  const ComplexMatrix h = build_parallel(spec, false);
  REQUIRE(h.rows() == 81);  // (n_max + 1)^(2N)
  CHECK(is_hermitian(h, 1e-14));

  // Photon number is conserved by a beam splitter.
  const HilbertLayout layout = HilbertLayout::resonators_only(2, 2);
  ComplexMatrix n_tot = ComplexMatrix::Zero(81, 81);
  for (int k = 0; k < 4; ++k)
    n_tot += embed(number_op(3), k, layout);
  CHECK(max_abs(h * n_tot - n_tot * h) < 1e-13);

  // Single-pair element: <01|H|10> = -lambda/2.
  const SystemSpec sp = single_pair_spec(0.75, 50.0, 40.0, 0.0, 1);
  const ComplexMatrix hp = build_parallel(sp, false);
  REQUIRE(hp.rows() == 4);
  const double lambda = sp.g[0] * sp.mu[0] / sp.delta[0];
  CHECK(hp(1, 2).real() == doctest::Approx(-0.5 * lambda).epsilon(1e-12));
  CHECK(hp(2, 1).real() == doctest::Approx(-0.5 * lambda).epsilon(1e-12));
  CHECK(max_abs(hp.diagonal()) == 0.0);

  // With the qutrit factor the same exchange is dressed by Sz~.
  const ComplexMatrix hq = build_parallel(sp, true);
  REQUIRE(hq.rows() == 12);
}

TEST_CASE("frame generators match their closed forms") {
  const SystemSpec spec = single_pair_spec(0.75, 50.0, 40.0, 10.0, 2);
  const auto [h0, h0p] = frame_generators(spec);
  const HilbertLayout layout = spec.layout();

  CHECK(h0(layout.flatten({1, 0, 0}), layout.flatten({0, 0, 0})).real() ==
        doctest::Approx(spec.Omega).epsilon(1e-12));
  CHECK(is_hermitian(h0, 1e-14));

  const double chi_a = spec.g[0] * spec.g[0] / spec.delta[0];
  const double chi_b = spec.mu[0] * spec.mu[0] / spec.delta[0];
  const int vac = layout.flatten({0, 0, 0});
  const int n11 = layout.flatten({0, 1, 1});
  CHECK(h0p(vac, vac).real() ==
        doctest::Approx(-0.5 * (chi_a + chi_b)).epsilon(1e-12));
  CHECK(h0p(n11, n11).real() ==
        doctest::Approx(-(chi_a + chi_b)).epsilon(1e-12));
  // Diagonal and qutrit-independent.
  CHECK(max_abs(h0p - ComplexMatrix(h0p.diagonal().asDiagonal())) == 0.0);
  const int e11 = layout.flatten({1, 1, 1});
  CHECK(h0p(e11, e11) == h0p(n11, n11));
}

TEST_CASE("rotated qutrit basis diagonalizes the pulse operator") {
  const ComplexMatrix u = rotated_basis_unitary();
  CHECK(max_abs(u * u.adjoint() - identity(3)) < 1e-15);

  const ComplexMatrix sx = qutrit_transfer(Level::e, Level::g) +
                           qutrit_transfer(Level::g, Level::e);
  ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
  expected(0, 0) = 1.0;
  expected(1, 1) = -1.0;
  CHECK(max_abs(u.adjoint() * sx * u - expected) < 1e-15);

  // Column 0 is |+> = (|g> + |e>)/sqrt(2).
  CHECK(u(0, 0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(u(1, 0) == u(0, 0));
}

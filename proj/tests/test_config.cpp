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

#include "pairwave/config.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "pairwave/types.hpp"

using namespace pairwave;
using json = nlohmann::json;

namespace {

json base_doc() { return json::parse(default_config_text()); }

ParsedConfig parse_doc(const json& j) { return parse_config(j.dump()); }

bool has_notice(const ParsedConfig& cfg, const std::string& needle) {
  for (const std::string& n : cfg.notices) {
    if (n.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("embedded default config matches the shipped file byte for byte") {
  std::ifstream in(PAIRWAVE_SOURCE_ROOT "/configs/baseline.json",
                   std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == std::string(default_config_text()));
}

TEST_CASE("parsing the default text reproduces the built-in parameter set") {
  const ParsedConfig cfg = parse_config(default_config_text());
  const SystemSpec& s = cfg.spec;
  const SystemSpec b = baseline_spec();

  CHECK(s.n_pairs == b.n_pairs);
  CHECK(s.omega_eg == b.omega_eg);
  CHECK(s.omega_fg == b.omega_fg);
  CHECK(s.delta == b.delta);
  CHECK(s.g == b.g);  // same matching arithmetic, bitwise identical
  CHECK(s.mu == b.mu);
  CHECK(s.Omega == b.Omega);
  CHECK(s.Omega_fe == b.Omega_fe);
  CHECK(s.gcs_ratio == b.gcs_ratio);
  CHECK(s.n_max == b.n_max);
  CHECK(s.include_crosstalk == b.include_crosstalk);
  CHECK(s.include_leakage == b.include_leakage);
  CHECK(s.include_dissipation == b.include_dissipation);
  CHECK(s.t_final_override == b.t_final_override);
  CHECK(s.dissipation.kappa_a == b.dissipation.kappa_a);
  CHECK(s.dissipation.kappa_b == b.dissipation.kappa_b);
  CHECK(s.dissipation.gamma_eg == b.dissipation.gamma_eg);
  CHECK(s.dissipation.gamma_fe == b.dissipation.gamma_fe);
  CHECK(s.dissipation.gamma_fg == b.dissipation.gamma_fg);
  CHECK(s.dissipation.gamma_phi_e == b.dissipation.gamma_phi_e);
  CHECK(s.dissipation.gamma_phi_f == b.dissipation.gamma_phi_f);

  CHECK_FALSE(cfg.dt_ps.has_value());
  CHECK(cfg.axes.empty());
  // The only defaulted value in the shipped file is the tied leakage drive.
  REQUIRE(cfg.notices.size() == 1);
  CHECK(has_notice(cfg, "omega_fe_mhz"));
}

TEST_CASE("frequency fields convert to internal angular units") {
  const ParsedConfig cfg = parse_config(default_config_text());
  CHECK(cfg.spec.delta[0] == ghz_to_angular(0.75));
  CHECK(cfg.spec.delta[0] == doctest::Approx(4.71238898038469).epsilon(1e-12));
  CHECK(cfg.spec.Omega == mhz_to_angular(100.0));
  CHECK(cfg.spec.g[0] == doctest::Approx(mhz_to_angular(750.0 / 11.0)).epsilon(1e-12));
}

TEST_CASE("coupling schema accepts exactly one of each alternative") {
  json doc = base_doc();
  doc["couplings"] = {{"g_mhz", {70.0, 95.0}}, {"mu_mhz", {66.5, 0.0}}};
  const ParsedConfig cfg = parse_doc(doc);
  CHECK(cfg.spec.g[0] == mhz_to_angular(70.0));
  CHECK(cfg.spec.g[1] == mhz_to_angular(95.0));
  CHECK(cfg.spec.mu[0] == mhz_to_angular(66.5));
  CHECK(cfg.spec.mu[1] == 0.0);

  json both = base_doc();
  both["couplings"]["g_mhz"] = {70.0, 95.0};  // alongside c1
  CHECK_THROWS_WITH_AS(parse_doc(both), doctest::Contains("exactly one"),
                       ConfigError);

  json neither = base_doc();
  neither["couplings"].erase("c1");
  CHECK_THROWS_WITH_AS(parse_doc(neither), doctest::Contains("exactly one"),
                       ConfigError);

  json mu_both = base_doc();
  mu_both["couplings"]["mu_mhz"] = {60.0, 80.0};  // alongside mu_ratio
  CHECK_THROWS_WITH_AS(parse_doc(mu_both),
                       doctest::Contains("mutually exclusive"), ConfigError);

  json short_g = base_doc();
  short_g["couplings"].erase("c1");
  short_g["couplings"]["g_mhz"] = {70.0};  // two resonator pairs declared
  CHECK_THROWS_WITH_AS(parse_doc(short_g),
                       doctest::Contains("one value per resonator pair"),
                       ConfigError);

  json no_ratio = base_doc();
  no_ratio["couplings"].erase("mu_ratio");
  const ParsedConfig defaulted = parse_doc(no_ratio);
  CHECK(defaulted.spec.mu[0] == 0.95 * defaulted.spec.g[0]);
  CHECK(has_notice(defaulted, "mu_ratio defaulted"));
}

TEST_CASE("pulse section wires the leakage amplitude") {
  // Absent leakage amplitude ties it to the main drive (default file path,
  // covered above).  An explicit zero turns the channel off entirely.
  json off = base_doc();
  off["pulse"]["omega_fe_mhz"] = 0.0;
  const ParsedConfig cfg_off = parse_doc(off);
  CHECK(cfg_off.spec.Omega_fe == 0.0);
  CHECK_FALSE(cfg_off.spec.include_leakage);

  json detuned = base_doc();
  detuned["pulse"]["omega_fe_mhz"] = 55.0;
  const ParsedConfig cfg_det = parse_doc(detuned);
  CHECK(cfg_det.spec.include_leakage);
  CHECK(cfg_det.spec.Omega_fe == mhz_to_angular(55.0));
  CHECK(cfg_det.spec.Omega == mhz_to_angular(100.0));

  json missing = base_doc();
  missing["pulse"].erase("omega_mhz");
  CHECK_THROWS_WITH_AS(parse_doc(missing),
                       doctest::Contains("pulse.omega_mhz"), ConfigError);
}

TEST_CASE("optional sections default off with a notice") {
  json doc = base_doc();
  doc.erase("crosstalk");
  doc.erase("dissipation");
  doc.erase("sim");
  const ParsedConfig cfg = parse_doc(doc);
  CHECK_FALSE(cfg.spec.include_crosstalk);
  CHECK(cfg.spec.gcs_ratio == 0.0);
  CHECK_FALSE(cfg.spec.include_dissipation);
  CHECK(cfg.spec.dissipation.gamma_eg == 0.0);
  CHECK(cfg.spec.dissipation.kappa_a == std::vector<double>(2, 0.0));
  CHECK(cfg.spec.n_max == 2);
  CHECK(has_notice(cfg, "crosstalk section absent"));
  CHECK(has_notice(cfg, "dissipation section absent"));
  CHECK(has_notice(cfg, "sim section absent"));

  json ct_off = base_doc();
  ct_off["crosstalk"]["enabled"] = false;
  const ParsedConfig cfg_ct = parse_doc(ct_off);
  CHECK_FALSE(cfg_ct.spec.include_crosstalk);
  CHECK(cfg_ct.spec.gcs_ratio == 0.4);  // value kept, flag off
}

TEST_CASE("dissipation lifetimes, off switches, and zero channels") {
  json off = base_doc();
  off["dissipation"]["enabled"] = false;
  const ParsedConfig cfg_off = parse_doc(off);
  CHECK_FALSE(cfg_off.spec.include_dissipation);
  CHECK(cfg_off.spec.dissipation.gamma_fg == 0.0);
  CHECK(has_notice(cfg_off, "lifetime values ignored"));

  json just_off = base_doc();
  just_off["dissipation"] = {{"enabled", false}};
  CHECK_FALSE(has_notice(parse_doc(just_off), "lifetime values ignored"));

  json zero_kappa = base_doc();
  zero_kappa["dissipation"]["kappa_us"] = 0.0;  // channel off, rest active
  const ParsedConfig cfg_zk = parse_doc(zero_kappa);
  CHECK(cfg_zk.spec.include_dissipation);
  CHECK(cfg_zk.spec.dissipation.kappa_a == std::vector<double>(2, 0.0));
  CHECK(cfg_zk.spec.dissipation.gamma_eg == lifetime_us_to_rate(5.0));

  json partial = base_doc();
  partial["dissipation"].erase("tphi_f_us");
  const ParsedConfig cfg_p = parse_doc(partial);
  CHECK(cfg_p.spec.dissipation.gamma_phi_f == lifetime_us_to_rate(1.5));
  CHECK(has_notice(cfg_p, "tphi_f_us defaulted"));

  json negative = base_doc();
  negative["dissipation"]["t1_fe_us"] = -1.0;
  CHECK_THROWS_WITH_AS(parse_doc(negative), doctest::Contains(">= 0"),
                       ConfigError);
}

TEST_CASE("sim section controls truncation, step size, and window") {
  json doc = base_doc();
  doc["sim"]["dt_ps"] = 20.0;
  doc["sim"]["t_final_ns"] = 5.5;
  const ParsedConfig cfg = parse_doc(doc);
  REQUIRE(cfg.dt_ps.has_value());
  CHECK(*cfg.dt_ps == 20.0);
  CHECK(cfg.spec.t_final_override == 5.5);

  json frac = base_doc();
  frac["sim"]["n_max"] = 2.5;
  CHECK_THROWS_WITH_AS(parse_doc(frac), doctest::Contains("integer"),
                       ConfigError);

  json zero = base_doc();
  zero["sim"]["n_max"] = 0;
  CHECK_THROWS_WITH_AS(parse_doc(zero), doctest::Contains(">= 1"), ConfigError);

  json bad_dt = base_doc();
  bad_dt["sim"]["dt_ps"] = -1.0;
  CHECK_THROWS_WITH_AS(parse_doc(bad_dt), doctest::Contains("positive"),
                       ConfigError);
}

TEST_CASE("sweep axes parse in list and range form") {
  json doc = base_doc();
  doc["sweep"]["axes"] = {
      {{"param", "c1"}, {"values", {7.0, 9.0, 11.0}}},
      {{"param", "omega_mhz"}, {"min", 50.0}, {"max", 200.0}, {"count", 4}}};
  const ParsedConfig cfg = parse_doc(doc);
  REQUIRE(cfg.axes.size() == 2);
  CHECK(cfg.axes[0].param == SweepAxis::Param::c1);
  CHECK(cfg.axes[0].values == std::vector<double>{7.0, 9.0, 11.0});
  CHECK(cfg.axes[1].param == SweepAxis::Param::omega_mhz);
  CHECK(cfg.axes[1].values == std::vector<double>{50.0, 100.0, 150.0, 200.0});

  json mixed = base_doc();
  mixed["sweep"]["axes"] = {
      {{"param", "c1"}, {"values", {7.0}}, {"count", 3}}};
  CHECK_THROWS_WITH_AS(parse_doc(mixed), doctest::Contains("either"),
                       ConfigError);

  json unknown = base_doc();
  unknown["sweep"]["axes"] = {{{"param", "coupling"}, {"values", {1.0}}}};
  CHECK_THROWS_AS(parse_doc(unknown), ConfigError);

  json bad_count = base_doc();
  bad_count["sweep"]["axes"] = {
      {{"param", "c1"}, {"min", 1.0}, {"max", 2.0}, {"count", 0}}};
  CHECK_THROWS_WITH_AS(parse_doc(bad_count), doctest::Contains(">= 1"),
                       ConfigError);
}

TEST_CASE("malformed documents are rejected with the offending path") {
  CHECK_THROWS_WITH_AS(parse_config("{, }"),
                       doctest::Contains("not well-formed"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("[]"),
                       doctest::Contains("root must be an object"), ConfigError);

  json rogue = base_doc();
  rogue["bogus"] = 1;
  CHECK_THROWS_WITH_AS(parse_doc(rogue),
                       doctest::Contains("unknown config key 'bogus'"),
                       ConfigError);

  json nested = base_doc();
  nested["pulse"]["typo"] = 1;
  CHECK_THROWS_WITH_AS(parse_doc(nested), doctest::Contains("pulse.typo"),
                       ConfigError);

  json gone = base_doc();
  gone.erase("resonators");
  CHECK_THROWS_WITH_AS(parse_doc(gone),
                       doctest::Contains("missing config section 'resonators'"),
                       ConfigError);

  json bad_delta = base_doc();
  bad_delta["resonators"]["delta_ghz"] = {0.75, -1.5};
  CHECK_THROWS_WITH_AS(parse_doc(bad_delta), doctest::Contains("positive"),
                       ConfigError);

  json empty_delta = base_doc();
  empty_delta["resonators"]["delta_ghz"] = json::array();
  CHECK_THROWS_WITH_AS(parse_doc(empty_delta), doctest::Contains("nonempty"),
                       ConfigError);
}

TEST_CASE("serialization round trip is a fixed point") {
  json custom = base_doc();
  custom["couplings"] = {{"g_mhz", {68.5, 97.3}}, {"mu_mhz", {60.0, 0.0}}};
  custom["pulse"]["omega_fe_mhz"] = 0.0;
  custom["crosstalk"]["enabled"] = false;
  custom["dissipation"].erase("tphi_e_us");  // exercise a defaulted lifetime
  custom["sim"]["dt_ps"] = 15.0;
  custom["sim"]["t_final_ns"] = 12.25;
  custom["sweep"]["axes"] = {
      {{"param", "omega_mhz"}, {"min", 50.0}, {"max", 200.0}, {"count", 7}}};

  json plain = base_doc();
  plain.erase("dissipation");

  for (const std::string& text :
       {std::string(default_config_text()), custom.dump(), plain.dump()}) {
    const ParsedConfig p1 = parse_config(text);
    const std::string s1 = serialize_config(p1.spec, p1.axes, p1.dt_ps);
    const ParsedConfig p2 = parse_config(s1);
    const std::string s2 = serialize_config(p2.spec, p2.axes, p2.dt_ps);
    CHECK(s1 == s2);
    CHECK(p2.spec.g[0] == doctest::Approx(p1.spec.g[0]).epsilon(1e-11));
    CHECK(p2.spec.mu[1] == doctest::Approx(p1.spec.mu[1]).epsilon(1e-11));
    CHECK(p2.spec.include_crosstalk == p1.spec.include_crosstalk);
    CHECK(p2.spec.include_leakage == p1.spec.include_leakage);
    CHECK(p2.spec.include_dissipation == p1.spec.include_dissipation);
    CHECK(p2.spec.t_final_override ==
          doctest::Approx(p1.spec.t_final_override).epsilon(1e-11));
    REQUIRE(p2.axes.size() == p1.axes.size());
    for (std::size_t a = 0; a < p1.axes.size(); ++a) {
      CHECK(p2.axes[a].param == p1.axes[a].param);
      CHECK(p2.axes[a].values == p1.axes[a].values);
    }
    CHECK(p2.dt_ps == p1.dt_ps);
  }
}

TEST_CASE("non-uniform photon decay cannot be expressed in the schema") {
  SystemSpec s = baseline_spec();
  s.dissipation.kappa_b[1] *= 2.0;
  CHECK_THROWS_WITH_AS(serialize_config(s),
                       doctest::Contains("not representable"), ConfigError);
}

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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <initializer_list>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pairwave {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// 12 significant digits: far below any physical tolerance here, and coarse
// enough that unit conversion round-trips land on the same decimal.
double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

std::string join_path(const std::string& section, const std::string& key) {
  return section.empty() ? key : section + "." + key;
}

void expect_keys(const json& obj, const std::string& section,
                 std::initializer_list<const char*> allowed) {
  const std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& item : obj.items()) {
    if (known.count(item.key()) == 0) {
      fail("unknown config key '" + join_path(section, item.key()) + "'");
    }
  }
}

const json& require_section(const json& root, const char* name) {
  if (!root.contains(name)) fail(std::string("missing config section '") + name + "'");
  const json& sec = root.at(name);
  if (!sec.is_object()) fail(std::string("config section '") + name + "' must be an object");
  return sec;
}

double require_number(const json& obj, const std::string& section,
                      const char* key) {
  if (!obj.contains(key)) fail("missing required key '" + join_path(section, key) + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) fail("key '" + join_path(section, key) + "' must be a number");
  return v.get<double>();
}

double positive_number(const json& obj, const std::string& section,
                       const char* key) {
  const double v = require_number(obj, section, key);
  if (!(v > 0.0) || !std::isfinite(v)) {
    fail("key '" + join_path(section, key) + "' must be positive");
  }
  return v;
}

double nonneg_number(const json& obj, const std::string& section,
                     const char* key) {
  const double v = require_number(obj, section, key);
  if (v < 0.0 || !std::isfinite(v)) {
    fail("key '" + join_path(section, key) + "' must be >= 0");
  }
  return v;
}

std::vector<double> number_list(const json& obj, const std::string& section,
                                const char* key) {
  if (!obj.contains(key)) fail("missing required key '" + join_path(section, key) + "'");
  const json& v = obj.at(key);
  if (!v.is_array() || v.empty()) {
    fail("key '" + join_path(section, key) + "' must be a nonempty array of numbers");
  }
  std::vector<double> out;
  for (const json& e : v) {
    if (!e.is_number()) fail("key '" + join_path(section, key) + "' must contain only numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

bool bool_or(const json& obj, const std::string& section, const char* key,
             bool fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_boolean()) fail("key '" + join_path(section, key) + "' must be a boolean");
  return v.get<bool>();
}

int integer_number(const json& obj, const std::string& section, const char* key) {
  const double v = require_number(obj, section, key);
  const long n = std::lround(v);
  if (std::abs(v - static_cast<double>(n)) > 1e-9) {
    fail("key '" + join_path(section, key) + "' must be an integer");
  }
  return static_cast<int>(n);
}

}  // namespace

ParsedConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("config is not well-formed JSON: ") + e.what());
  }
  if (!root.is_object()) fail("config root must be an object");
  expect_keys(root, "", {"qutrit", "resonators", "couplings", "pulse",
                         "crosstalk", "dissipation", "sim", "sweep"});

  ParsedConfig out;
  SystemSpec& s = out.spec;
  auto notice = [&](std::string m) { out.notices.push_back(std::move(m)); };

  const json& qutrit = require_section(root, "qutrit");
  expect_keys(qutrit, "qutrit", {"omega_eg_ghz", "omega_fg_ghz"});
  s.omega_eg = ghz_to_angular(positive_number(qutrit, "qutrit", "omega_eg_ghz"));
  s.omega_fg = ghz_to_angular(positive_number(qutrit, "qutrit", "omega_fg_ghz"));

  const json& resonators = require_section(root, "resonators");
  expect_keys(resonators, "resonators", {"delta_ghz"});
  for (double d : number_list(resonators, "resonators", "delta_ghz")) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      fail("resonators.delta_ghz entries must be positive (Delta > 0)");
    }
    s.delta.push_back(ghz_to_angular(d));
  }
  s.n_pairs = static_cast<int>(s.delta.size());

  const json& couplings = require_section(root, "couplings");
  expect_keys(couplings, "couplings", {"c1", "g_mhz", "mu_ratio", "mu_mhz"});
  const bool has_c1 = couplings.contains("c1");
  const bool has_g = couplings.contains("g_mhz");
  if (has_c1 == has_g) {
    fail("couplings: exactly one of 'c1' or 'g_mhz' is required");
  }
  if (has_c1) {
    s.g = resolve_matching(s.delta, positive_number(couplings, "couplings", "c1")).g;
  } else {
    const std::vector<double> g_mhz = number_list(couplings, "couplings", "g_mhz");
    if (static_cast<int>(g_mhz.size()) != s.n_pairs) {
      fail("couplings.g_mhz must list one value per resonator pair");
    }
    for (double v : g_mhz) {
      if (v < 0.0 || !std::isfinite(v)) fail("couplings.g_mhz entries must be >= 0");
      s.g.push_back(mhz_to_angular(v));
    }
  }
  const bool has_mu_ratio = couplings.contains("mu_ratio");
  const bool has_mu_list = couplings.contains("mu_mhz");
  if (has_mu_ratio && has_mu_list) {
    fail("couplings: 'mu_ratio' and 'mu_mhz' are mutually exclusive");
  }
  if (has_mu_list) {
    const std::vector<double> mu_mhz = number_list(couplings, "couplings", "mu_mhz");
    if (static_cast<int>(mu_mhz.size()) != s.n_pairs) {
      fail("couplings.mu_mhz must list one value per resonator pair");
    }
    for (double v : mu_mhz) {
      if (v < 0.0 || !std::isfinite(v)) fail("couplings.mu_mhz entries must be >= 0");
      s.mu.push_back(mhz_to_angular(v));
    }
  } else {
    double ratio = 0.95;
    if (has_mu_ratio) {
      ratio = nonneg_number(couplings, "couplings", "mu_ratio");
    } else {
      notice("couplings.mu_ratio defaulted to 0.95");
    }
    s.mu.resize(s.n_pairs);
    for (int j = 0; j < s.n_pairs; ++j) s.mu[j] = ratio * s.g[j];
  }

  const json& pulse = require_section(root, "pulse");
  expect_keys(pulse, "pulse", {"omega_mhz", "omega_fe_mhz"});
  s.Omega = mhz_to_angular(nonneg_number(pulse, "pulse", "omega_mhz"));
  if (pulse.contains("omega_fe_mhz")) {
    const double v = nonneg_number(pulse, "pulse", "omega_fe_mhz");
    if (v == 0.0) {
      s.Omega_fe = 0.0;
      s.include_leakage = false;
    } else {
      s.Omega_fe = mhz_to_angular(v);
      s.include_leakage = true;
    }
  } else {
    s.Omega_fe = s.Omega;
    s.include_leakage = true;
    notice("pulse.omega_fe_mhz absent: leakage drive amplitude tied to omega_mhz");
  }

  if (root.contains("crosstalk")) {
    const json& crosstalk = require_section(root, "crosstalk");
    expect_keys(crosstalk, "crosstalk", {"enabled", "gcs_ratio"});
    s.include_crosstalk = bool_or(crosstalk, "crosstalk", "enabled", true);
    s.gcs_ratio = nonneg_number(crosstalk, "crosstalk", "gcs_ratio");
  } else {
    s.include_crosstalk = false;
    s.gcs_ratio = 0.0;
    notice("crosstalk section absent: crosstalk disabled");
  }

  if (root.contains("dissipation")) {
    const json& dis = require_section(root, "dissipation");
    expect_keys(dis, "dissipation",
                {"enabled", "kappa_us", "t1_eg_us", "t1_fe_us", "t1_fg_us",
                 "tphi_e_us", "tphi_f_us"});
    const bool enabled = bool_or(dis, "dissipation", "enabled", true);
    if (!enabled) {
      s.include_dissipation = false;
      s.dissipation = DissipationSpec::none(s.n_pairs);
      if (dis.size() > (dis.contains("enabled") ? 1u : 0u)) {
        notice("dissipation.enabled = false: lifetime values ignored");
      }
    } else {
      s.include_dissipation = true;
      auto rate_of = [&](const char* key, double default_us) {
        if (!dis.contains(key)) {
          std::ostringstream msg;
          msg << "dissipation." << key << " defaulted to " << default_us << " us";
          notice(msg.str());
          return lifetime_us_to_rate(default_us);
        }
        const double v = nonneg_number(dis, "dissipation", key);
        return v == 0.0 ? 0.0 : lifetime_us_to_rate(v);  // 0 = channel off
      };
      const double kappa = rate_of("kappa_us", 10.0);
      s.dissipation.kappa_a.assign(s.n_pairs, kappa);
      s.dissipation.kappa_b.assign(s.n_pairs, kappa);
      s.dissipation.gamma_eg = rate_of("t1_eg_us", 5.0);
      s.dissipation.gamma_fe = rate_of("t1_fe_us", 2.5);
      s.dissipation.gamma_fg = rate_of("t1_fg_us", 3.5);
      s.dissipation.gamma_phi_e = rate_of("tphi_e_us", 2.5);
      s.dissipation.gamma_phi_f = rate_of("tphi_f_us", 1.5);
    }
  } else {
    s.include_dissipation = false;
    s.dissipation = DissipationSpec::none(s.n_pairs);
    notice("dissipation section absent: dissipation disabled");
  }

  if (root.contains("sim")) {
    const json& sim = require_section(root, "sim");
    expect_keys(sim, "sim", {"n_max", "dt_ps", "t_final_ns"});
    if (sim.contains("n_max")) {
      s.n_max = integer_number(sim, "sim", "n_max");
      if (s.n_max < 1) fail("sim.n_max must be >= 1");
    } else {
      s.n_max = 2;
      notice("sim.n_max defaulted to 2");
    }
    if (sim.contains("dt_ps")) out.dt_ps = positive_number(sim, "sim", "dt_ps");
    if (sim.contains("t_final_ns")) {
      s.t_final_override = positive_number(sim, "sim", "t_final_ns");
    }
  } else {
    s.n_max = 2;
    notice("sim section absent: n_max = 2, automatic step size");
  }

  if (root.contains("sweep")) {
    const json& sweep = require_section(root, "sweep");
    expect_keys(sweep, "sweep", {"axes"});
    if (!sweep.contains("axes") || !sweep.at("axes").is_array() ||
        sweep.at("axes").empty()) {
      fail("sweep.axes must be a nonempty array");
    }
    for (const json& axis : sweep.at("axes")) {
      if (!axis.is_object()) fail("sweep.axes entries must be objects");
      expect_keys(axis, "sweep.axes[]", {"param", "values", "min", "max", "count"});
      if (!axis.contains("param") || !axis.at("param").is_string()) {
        fail("sweep.axes[].param must be a string");
      }
      const SweepAxis::Param p = parse_param(axis.at("param").get<std::string>());
      const bool has_values = axis.contains("values");
      const bool has_range =
          axis.contains("min") || axis.contains("max") || axis.contains("count");
      if (has_values == has_range) {
        fail("sweep.axes[]: give either 'values' or all of 'min'/'max'/'count'");
      }
      if (has_values) {
        out.axes.push_back(
            SweepAxis::list(p, number_list(axis, "sweep.axes[]", "values")));
      } else {
        const double lo = require_number(axis, "sweep.axes[]", "min");
        const double hi = require_number(axis, "sweep.axes[]", "max");
        const int count = integer_number(axis, "sweep.axes[]", "count");
        if (count < 1) fail("sweep.axes[].count must be >= 1");
        out.axes.push_back(SweepAxis::linear(p, lo, hi, count));
      }
    }
  }

  try {
    s.check();
  } catch (const std::invalid_argument& e) {
    fail(std::string("config resolves to an invalid spec: ") + e.what());
  }
  return out;
}

std::string serialize_config(const SystemSpec& spec,
                             const std::vector<SweepAxis>& axes,
                             std::optional<double> dt_ps) {
  spec.check();
  ordered_json root;

  root["qutrit"]["omega_eg_ghz"] = round12(angular_to_ghz(spec.omega_eg));
  root["qutrit"]["omega_fg_ghz"] = round12(angular_to_ghz(spec.omega_fg));

  ordered_json deltas = ordered_json::array();
  for (double d : spec.delta) deltas.push_back(round12(angular_to_ghz(d)));
  root["resonators"]["delta_ghz"] = std::move(deltas);

  ordered_json g_list = ordered_json::array(), mu_list = ordered_json::array();
  for (double g : spec.g) g_list.push_back(round12(angular_to_mhz(g)));
  for (double mu : spec.mu) mu_list.push_back(round12(angular_to_mhz(mu)));
  root["couplings"]["g_mhz"] = std::move(g_list);
  root["couplings"]["mu_mhz"] = std::move(mu_list);

  root["pulse"]["omega_mhz"] = round12(angular_to_mhz(spec.Omega));
  root["pulse"]["omega_fe_mhz"] =
      spec.include_leakage ? round12(angular_to_mhz(spec.Omega_fe)) : 0.0;

  root["crosstalk"]["enabled"] = spec.include_crosstalk;
  root["crosstalk"]["gcs_ratio"] = round12(spec.gcs_ratio);

  if (spec.include_dissipation) {
    const DissipationSpec& d = spec.dissipation;
    for (std::size_t j = 0; j < d.kappa_a.size(); ++j) {
      if (d.kappa_a[j] != d.kappa_a[0] || d.kappa_b[j] != d.kappa_a[0]) {
        fail("serialize_config: per-mode photon decay rates are not "
             "representable in the config schema");
      }
    }
    auto lifetime = [](double rate) {
      return rate == 0.0 ? 0.0 : round12(1.0 / (1e3 * rate));
    };
    root["dissipation"]["enabled"] = true;
    root["dissipation"]["kappa_us"] = lifetime(d.kappa_a.empty() ? 0.0 : d.kappa_a[0]);
    root["dissipation"]["t1_eg_us"] = lifetime(d.gamma_eg);
    root["dissipation"]["t1_fe_us"] = lifetime(d.gamma_fe);
    root["dissipation"]["t1_fg_us"] = lifetime(d.gamma_fg);
    root["dissipation"]["tphi_e_us"] = lifetime(d.gamma_phi_e);
    root["dissipation"]["tphi_f_us"] = lifetime(d.gamma_phi_f);
  } else {
    root["dissipation"]["enabled"] = false;
  }

  root["sim"]["n_max"] = spec.n_max;
  if (dt_ps) root["sim"]["dt_ps"] = *dt_ps;
  if (spec.t_final_override > 0.0) {
    root["sim"]["t_final_ns"] = round12(spec.t_final_override);
  }

  if (!axes.empty()) {
    ordered_json ax = ordered_json::array();
    for (const SweepAxis& axis : axes) {
      ordered_json a;
      a["param"] = param_name(axis.param);
      a["values"] = axis.values;
      ax.push_back(std::move(a));
    }
    root["sweep"]["axes"] = std::move(ax);
  }
  return root.dump(2) + "\n";
}

const char* default_config_text() {
  // Byte-identical to configs/baseline.json (checked by a unit test).
  return R"({
  "qutrit": { "omega_eg_ghz": 7.5, "omega_fg_ghz": 12.5 },
  "resonators": { "delta_ghz": [0.75, 1.5] },
  "couplings": { "c1": 11.0, "mu_ratio": 0.95 },
  "pulse": { "omega_mhz": 100.0 },
  "crosstalk": { "enabled": true, "gcs_ratio": 0.4 },
  "dissipation": {
    "enabled": true,
    "kappa_us": 10.0,
    "t1_eg_us": 5.0,
    "t1_fe_us": 2.5,
    "t1_fg_us": 3.5,
    "tphi_e_us": 2.5,
    "tphi_f_us": 1.5
  },
  "sim": { "n_max": 2 }
}
)";
}

}  // namespace pairwave

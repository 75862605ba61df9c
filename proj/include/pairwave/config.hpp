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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairwave/model.hpp"
#include "pairwave/sweep.hpp"
#include "pairwave/types.hpp"

namespace pairwave {

// Result of parsing a JSON config document: the resolved physical spec in
// internal units, the optional sweep plan, the optional fixed step size, and
// human-readable notes for every defaulted value.
struct ParsedConfig {
  SystemSpec spec;
  std::vector<SweepAxis> axes;
  std::optional<double> dt_ps;
  std::vector<std::string> notices;
};

// Parses a config document.  Sections: qutrit {omega_eg_ghz, omega_fg_ghz},
// resonators {delta_ghz: [...]}, couplings {c1 | g_mhz: [...], mu_ratio |
// mu_mhz: [...]}, pulse {omega_mhz, omega_fe_mhz?}, crosstalk {enabled?,
// gcs_ratio}, dissipation {enabled?, kappa_us?, t1_eg_us?, t1_fe_us?,
// t1_fg_us?, tphi_e_us?, tphi_f_us?}, sim {n_max?, dt_ps?, t_final_ns?},
// sweep {axes: [{param, values | min+max+count}]}.  Frequencies are
// omega/2pi values (GHz or MHz per suffix), lifetimes are in microseconds
// with 0 meaning channel off.  Unknown keys are rejected by path; missing
// optional keys are defaulted with a notice.  Throws ConfigError.
ParsedConfig parse_config(const std::string& text);

// Serializes a resolved spec back to the explicit config form (g_mhz +
// mu_mhz, explicit leakage amplitude).  Emitted physical values are rounded
// to 12 significant digits, which makes parse(serialize(parse(x))) a fixed
// point of the resolved spec.
std::string serialize_config(const SystemSpec& spec,
                             const std::vector<SweepAxis>& axes = {},
                             std::optional<double> dt_ps = std::nullopt);

// The embedded copy of the shipped default config (the baseline parameter
// set); byte-identical to configs/baseline.json.
const char* default_config_text();

}  // namespace pairwave

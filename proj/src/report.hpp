/*
  Copyright (c) 2026 the wmisolve authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef WMISOLVE_REPORT_HPP
#define WMISOLVE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wmi.hpp"

namespace wmi {

struct RunConfig {
  std::string algorithm = "sae";   // pa | sae | oracle
  std::string integrator = "exact";  // exact | mc
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  int workers = 1;
  bool breakdown = false;
  bool timing = true;  // wall_ms field; disable for byte-stable output
  std::vector<std::string> order;
  bool tseitin_skeleton = false;

  void check() const;
};

// Runs one algorithm/integrator combination and renders the JSON report.
// Exact values serialize as "p/q" strings, never floats.
std::string run_report(const WmiProblem& p, const RunConfig& config);

WmiResult run_algorithm(const WmiProblem& p, const RunConfig& config, AtomTable& run_table);

std::string render_report(const WmiResult& r, const AtomTable& table, const RunConfig& config,
                          long long wall_ms);

// Demographic-parity showcase: four WMI calls per seed and the ratio
// Pr(hire | minority) / Pr(hire | not minority), MC backend.
std::string fairness_report(const std::string& variant, std::uint64_t samples,
                            const std::vector<std::uint64_t>& seeds);

// Compact fixture acceptance subset used by the CLI selftest subcommand.
// Returns true when every line passed.
bool selftest(std::string& report);

}  // namespace wmi

#endif

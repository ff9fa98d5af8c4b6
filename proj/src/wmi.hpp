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

#ifndef WMISOLVE_WMI_HPP
#define WMISOLVE_WMI_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "integrate.hpp"
#include "skeleton.hpp"

namespace wmi {

struct WmiProblem {
  std::shared_ptr<AtomTable> table;
  Formula phi;   // support / evidence formula
  Formula chi;   // weight support, defaults true; bounds conjuncts live here
  Weight weight;
  std::vector<AtomId> bools;                 // declared Boolean atoms, in order
  std::vector<std::pair<Rat, Rat>> bounds;   // declared per-real bounds
  std::optional<Formula> query;              // optional query formula from the file

  int n_reals() const { return table->n_reals(); }

  // Rejects problems whose conjunctive relaxation leaves a real variable
  // unbounded (the integral would diverge).
  void validate() const;
};

struct BreakdownEntry {
  TruthAssignment assignment;
  std::uint64_t multiplicity = 1;
  IntegralValue integral;
};

struct WmiResult {
  bool exact = true;
  Rat value_rat;
  double value_mc = 0;
  std::uint64_t n_integrals = 0;
  std::vector<BreakdownEntry> breakdown;  // only kept when requested
  std::string algorithm;
  std::string integrator;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  double value_double() const { return exact ? rat_double(value_rat) : value_mc; }
};

struct RunOptions {
  bool keep_breakdown = false;
  int workers = 1;
  std::vector<std::string> order_override;  // Boolean decision order by name
  LabelMode skeleton_labels = LabelMode::Plaisted;
  std::ostream* trace = nullptr;
};

struct Labelled {
  Formula phi_star;
  Weight w_star;
  std::vector<AtomId> a_star;   // original Booleans followed by fresh labels
  std::vector<AtomId> fresh;    // the fresh labels only
};

// Conditions that are not Boolean literals on A are replaced in w by fresh
// atoms B_k; the biconditionals B_k <-> psi_k are conjoined to phi and chi.
Labelled label_conditions(const WmiProblem& p, AtomTable& table);

WmiResult wmi_pa(const WmiProblem& p, Integrator& integrator, AtomTable& run_table,
                 const RunOptions& opts = {});
WmiResult sae4wmi(const WmiProblem& p, Integrator& integrator, AtomTable& run_table,
                  const RunOptions& opts = {});

// Brute force over all total Boolean assignments and all total assignments to
// the LRA atoms; guarded reference implementation.
WmiResult oracle_wmi(const WmiProblem& p, Integrator& integrator, AtomTable& run_table,
                     const RunOptions& opts = {});

// Rejection sampling over the bounding box with uniformly random Boolean
// assignments; independent of every solver component.
double mc_oracle(const WmiProblem& p, std::uint64_t samples, std::uint64_t seed);

// Pr(delta | phi, chi, w) as a ratio of two runs sharing the configuration.
double query_probability(const WmiProblem& p, const Formula& delta, const std::string& algorithm,
                         Integrator& integrator, const RunOptions& opts = {});

}  // namespace wmi

#endif

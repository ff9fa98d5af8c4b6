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

#ifndef WMISOLVE_INTEGRATE_HPP
#define WMISOLVE_INTEGRATE_HPP

#include <cstdint>
#include <memory>
#include <string>

#include "polytope.hpp"
#include "weights.hpp"

namespace wmi {

struct IntegralValue {
  bool exact = true;
  Rat rational;       // exact backends
  double approx = 0;  // MC backend
  bool degenerate = false;

  double as_double() const { return exact ? rat_double(rational) : approx; }
};

// Backend contract: pure given configuration and seed. The salt is the
// assignment index; MC derives the per-call stream as seed ^ salt so parallel
// per-assignment integration stays reproducible.
class Integrator {
public:
  virtual ~Integrator() = default;
  virtual IntegralValue integrate(const Polytope& p, const Weight& fi_weight,
                                  const TruthAssignment& mu_bool, std::uint64_t salt) = 0;
  virtual std::string kind() const = 0;
  virtual bool exact() const = 0;
};

// Triangulation + Dirichlet monomial formula; exact rationals end to end.
class ExactIntegrator : public Integrator {
public:
  explicit ExactIntegrator(const AtomTable& table) : table_(table) {}
  IntegralValue integrate(const Polytope& p, const Weight& fi_weight,
                          const TruthAssignment& mu_bool, std::uint64_t salt) override;
  std::string kind() const override { return "exact"; }
  bool exact() const override { return true; }

private:
  const AtomTable& table_;
};

// Vol(mu_LRA) * E[w] by rejection sampling from the exact bounding box.
class McIntegrator : public Integrator {
public:
  McIntegrator(const AtomTable& table, std::uint64_t samples, std::uint64_t seed)
      : table_(table), samples_(samples), seed_(seed) {}
  IntegralValue integrate(const Polytope& p, const Weight& fi_weight,
                          const TruthAssignment& mu_bool, std::uint64_t salt) override;
  std::string kind() const override { return "mc"; }
  bool exact() const override { return false; }
  std::uint64_t samples() const { return samples_; }
  std::uint64_t seed() const { return seed_; }

private:
  const AtomTable& table_;
  std::uint64_t samples_;
  std::uint64_t seed_;
};

}  // namespace wmi

#endif

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

#ifndef WMISOLVE_WEIGHTS_HPP
#define WMISOLVE_WEIGHTS_HPP

#include <memory>
#include <string>
#include <vector>

#include "formula.hpp"
#include "polynomial.hpp"

namespace wmi {

enum class WKind { Const, Var, Add, Sub, Mul, Pow, Func, Ite };

struct WeightNode;
using Weight = std::shared_ptr<const WeightNode>;

// Weight-function tree: rational constants, real variables, arithmetic,
// registered opaque real functions, and conditional branches whose conditions
// are arbitrary formulas over the problem atoms.
struct WeightNode {
  WKind kind;
  Rat value;                  // Const
  VarId var = -1;             // Var
  std::vector<Weight> args;   // Add/Sub/Mul/Func: operands; Pow: base; Ite: then, else
  unsigned exponent = 0;      // Pow
  std::string func;           // Func
  Formula cond;               // Ite
};

Weight w_const(const Rat& c);
Weight w_var(VarId v);
Weight w_add(const Weight& a, const Weight& b);
Weight w_sub(const Weight& a, const Weight& b);
Weight w_mul(const Weight& a, const Weight& b);
Weight w_pow(const Weight& a, unsigned k);
Weight w_func(const std::string& name, std::vector<Weight> args);
Weight w_ite(const Formula& cond, const Weight& t, const Weight& e);

bool func_registered(const std::string& name, std::size_t arity);

// Distinct Ite conditions in first-occurrence preorder.
std::vector<Formula> conditions(const Weight& w);

// Replaces every Ite whose condition's residual under mu is a truth constant
// by the corresponding branch, recursively. Undecided structure is unchanged.
Weight restrict_weight(const Weight& w, const TruthAssignment& mu);

// True iff no Ite node remains.
bool is_fi(const Weight& w);

// Numeric evaluation (MC path). Throws NegativeWeightError on a negative
// result and UnknownFuncError on an unregistered function.
double evaluate(const Weight& w, const std::vector<double>& point, const TruthAssignment& mu_bool,
                const AtomTable& table);

// Exact evaluation over rationals; conditions must be decidable from the point
// and mu_bool; Func nodes are rejected.
Rat evaluate_exact(const Weight& w, const std::vector<Rat>& point, const TruthAssignment& mu_bool,
                   const AtomTable& table);

// Expansion of a condition-free, Func-free weight into a sparse polynomial.
Polynomial as_polynomial(const Weight& w, int nvars);

// Nodes in the weight tree, condition formulas included (linear-size metric).
int weight_size(const Weight& w);

std::string weight_str(const Weight& w, const AtomTable& t);

// Truth of an LRA or Boolean atom at a concrete point (strictness honored).
bool atom_truth_at(AtomId a, const std::vector<double>& point, const TruthAssignment& mu_bool,
                   const AtomTable& table);
bool formula_truth_at(const Formula& f, const std::vector<double>& point,
                      const TruthAssignment& mu_bool, const AtomTable& table);

}  // namespace wmi

#endif

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

#ifndef WMISOLVE_FORMULA_HPP
#define WMISOLVE_FORMULA_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "atoms.hpp"

namespace wmi {

enum class FKind { True, False, Atom, Not, And, Or, Implies, Iff };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  FKind kind;
  AtomId atom = -1;            // FKind::Atom
  std::vector<Formula> kids;   // connectives
  std::size_t hash = 0;
};

Formula f_true();
Formula f_false();
Formula f_atom(AtomId a);
Formula f_lit(const Literal& l);
Formula f_not(const Formula& f);
Formula f_and(std::vector<Formula> kids);
Formula f_or(std::vector<Formula> kids);
Formula f_implies(const Formula& a, const Formula& b);
Formula f_iff(const Formula& a, const Formula& b);

bool f_equal(const Formula& a, const Formula& b);
bool is_true(const Formula& f);
bool is_false(const Formula& f);

// A literal is an atom or a negated atom.
bool is_literal(const Formula& f);
Literal as_literal(const Formula& f);

// Partial or total map from atoms to truth values. Literal order is preserved
// for deterministic printing; inserting both polarities of an atom throws.
class TruthAssignment {
public:
  TruthAssignment() = default;
  explicit TruthAssignment(const std::vector<Literal>& lits);

  void push(const Literal& l);
  bool assigns(AtomId a) const { return map_.count(a) != 0; }
  bool value(AtomId a) const { return map_.at(a); }
  const std::vector<Literal>& literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool subset_of(const TruthAssignment& o) const;

  std::string str(const AtomTable& t) const;

private:
  std::vector<Literal> lits_;
  std::map<AtomId, bool> map_;
};

// Atoms of f, Boolean and LRA, in first-occurrence order.
std::vector<AtomId> atoms(const Formula& f);

// Residual of f w.r.t. mu: assigned atoms replaced by their truth constant,
// truth values propagated through the connectives until no constant remains
// reachable (not T -> F, g and T -> g, g iff F -> not g, ...).
Formula residual(const Formula& f, const TruthAssignment& mu);

bool prop_satisfies(const TruthAssignment& mu, const Formula& f);

// Boolean constant propagation to fixpoint plus the syntactic arithmetic
// subset: flattening, duplicate-literal removal, and complementary-literal
// detection in conjunctions. Disjunctions (psi v not psi) are left alone:
// validity clauses must survive to the enumerator.
Formula simplify(const Formula& f);

// simplify plus the collapse of valid disjunctions to true. Used where a
// formula's truth value is consumed directly (weight-condition residuals),
// never on formulas headed to the enumerator.
Formula simplify_strong(const Formula& f);

// True, a literal, or a conjunction of literals (checked after simplify).
bool is_literal_conjunction(const Formula& f);
std::vector<Literal> conjunction_literals(const Formula& f);

std::string formula_str(const Formula& f, const AtomTable& t);

}  // namespace wmi

#endif

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

#ifndef WMISOLVE_CNF_HPP
#define WMISOLVE_CNF_HPP

#include <string>
#include <vector>

#include "formula.hpp"

namespace wmi {

struct Clause {
  std::vector<Literal> lits;
  // Intentional validity clauses (... v psi v not psi) from the skeleton must
  // survive to the enumerator; nothing is allowed to delete them as tautologies.
  bool protected_validity = false;
};

struct CnfFormula {
  std::vector<Clause> clauses;
  std::vector<AtomId> labels;  // fresh atoms introduced; existentially quantified

  void add_clause(std::vector<Literal> lits, bool protect = false);
  // Appends another CNF, deduplicating syntactically identical clauses.
  void append(const CnfFormula& other);
  bool has_clause(const std::vector<Literal>& lits) const;
};

// Sorted, duplicate-literal-free copy (tautologies preserved).
std::vector<Literal> normalize_lits(std::vector<Literal> lits);

// Negation normal form (implications and bi-implications expanded,
// negations pushed to the literals).
Formula to_nnf(const Formula& f);

// Equivalence-preserving CNF via NNF + DeMorgan distribution; no fresh atoms.
// Worst case exponential in |f|. Tautological and duplicate clauses dropped.
CnfFormula cnf_classic(const Formula& f);

// Labelling CNF-izations: exists labels . result is equivalent to f, size
// linear in |f|. Tseitin introduces both implication directions, Plaisted only
// the polarity-required one.
CnfFormula cnf_tseitin(const Formula& f, AtomTable& table, const std::string& label_prefix);
CnfFormula cnf_plaisted(const Formula& f, AtomTable& table, const std::string& label_prefix);

Formula clause_formula(const Clause& c);
Formula cnf_to_formula(const CnfFormula& cnf);

// Debug dump: DIMACS-like body with an atom-mapping header.
std::string dump_cnf(const CnfFormula& cnf, const AtomTable& table);

}  // namespace wmi

#endif

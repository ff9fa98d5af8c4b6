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

#ifndef WMISOLVE_SKELETON_HPP
#define WMISOLVE_SKELETON_HPP

#include <utility>
#include <vector>

#include "cnf.hpp"
#include "weights.hpp"

namespace wmi {

enum class LabelMode { Plaisted, Tseitin };

struct SkeletonOutput {
  CnfFormula cnf;
  std::vector<std::pair<AtomId, Formula>> labels;  // fresh atom -> labelled condition
  int clause_count = 0;
};

// Conditional skeleton of w: a valid CNF over the atoms of w's conditions
// (plus local labels for non-literal conditions) whose satisfying partial
// assignments make the restricted weight condition-free.
//
// Branch clauses (... v psi v not psi) are marked validity-protected so no
// downstream step may drop them as tautologies. Non-literal conditions get a
// fresh label B and a guarded labelling definition: every definition clause is
// disjoined with the negated guard literals, so the definition is active only
// inside its own branch.
SkeletonOutput build_skeleton(const Weight& w, AtomTable& table,
                              LabelMode mode = LabelMode::Plaisted);

// Convert_SK(term, conds): CNF of (/\ conds) -> sk(term).
CnfFormula convert_sk(const Weight& term, const std::vector<Literal>& conds, AtomTable& table,
                      std::vector<std::pair<AtomId, Formula>>& labels,
                      LabelMode mode = LabelMode::Plaisted);

}  // namespace wmi

#endif

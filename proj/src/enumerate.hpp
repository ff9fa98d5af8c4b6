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

#ifndef WMISOLVE_ENUMERATE_HPP
#define WMISOLVE_ENUMERATE_HPP

#include <optional>
#include <ostream>
#include <set>
#include <vector>

#include "cnf.hpp"
#include "lra.hpp"

namespace wmi {

enum class EnumMode { Total, Partial };

struct EnumRequest {
  CnfFormula cnf;
  std::vector<AtomId> relevant;        // projection set
  EnumMode mode = EnumMode::Partial;
  std::vector<AtomId> decision_order;  // atoms missing from it are appended in id order
  std::ostream* trace = nullptr;
};

// Projected AllSMT as a single-consumer stream: theory-satisfiable (total or
// partial) assignments over the relevant atoms, disjoint pairwise and covering
// every satisfying total assignment. Elements are produced one by one and
// blocked by the negation of the emitted projection.
//
// Pinned heuristics: static decision order, initial phase falsifying the atom
// as parsed, decisions only on atoms of not-yet-satisfied clauses, exhaustive
// LRA theory propagation, early stop once every clause is satisfied, greedy
// reverse-trail minimization against the original plus blocking clauses.
class EnumStream {
public:
  EnumStream(EnumRequest req, const AtomTable& table);

  std::optional<TruthAssignment> next();
  int emitted() const { return emitted_; }

  // Subset-minimal restriction of a satisfying assignment over the relevant
  // atoms, literals dropped greedily in reverse order. Exposed for tests.
  static TruthAssignment minimize(const TruthAssignment& total, const CnfFormula& cnf,
                                  const std::set<AtomId>& relevant);

private:
  enum class Val : char { Unassigned, True, False };
  enum class Reason : char { Decision, Unit, Theory, Flip };

  struct TrailEntry {
    Literal lit;
    Reason reason;
  };
  struct DecisionMark {
    AtomId atom;
    bool first_phase;
    bool flipped;
    std::size_t trail_mark;
  };

  const AtomTable& table_;
  CnfFormula cnf_;
  std::set<AtomId> relevant_;
  EnumMode mode_;
  std::vector<AtomId> order_;
  std::ostream* trace_;

  std::vector<std::vector<Literal>> blocking_;
  std::vector<std::vector<Literal>> learned_;
  std::vector<Val> value_;
  std::vector<TrailEntry> trail_;
  std::vector<DecisionMark> decisions_;
  std::vector<AtomId> lra_atoms_;  // LRA atoms occurring in the clauses
  bool lra_dirty_ = false;
  bool finished_ = false;
  int emitted_ = 0;

  bool lit_true(const Literal& l) const;
  bool lit_false(const Literal& l) const;
  void assign(const Literal& l, Reason r);
  void pop_to(std::size_t mark);
  std::vector<Literal> lra_trail() const;

  // Returns false on conflict.
  bool unit_propagate();
  bool theory_consistent();  // checks + learns on conflict
  bool theory_propagate();   // returns true if something was assigned
  bool backtrack();          // false when the search space is exhausted
  bool all_satisfied() const;
  AtomId pick_decision() const;
  TruthAssignment project() const;
};

}  // namespace wmi

#endif

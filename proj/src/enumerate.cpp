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

#include "enumerate.hpp"

#include <algorithm>
#include <map>

namespace wmi {

EnumStream::EnumStream(EnumRequest req, const AtomTable& table)
    : table_(table),
      cnf_(std::move(req.cnf)),
      relevant_(req.relevant.begin(), req.relevant.end()),
      mode_(req.mode),
      trace_(req.trace) {
  std::set<AtomId> in_clauses;
  for (const auto& c : cnf_.clauses)
    for (const auto& l : c.lits) in_clauses.insert(l.atom);

  std::set<AtomId> placed;
  for (AtomId a : req.decision_order)
    if (placed.insert(a).second) order_.push_back(a);
  for (AtomId a : in_clauses)
    if (placed.insert(a).second) order_.push_back(a);
  for (AtomId a : relevant_)
    if (placed.insert(a).second) order_.push_back(a);

  for (AtomId a : order_)
    if (in_clauses.count(a) && table_.atom(a).kind == AtomKind::Lra) lra_atoms_.push_back(a);

  value_.assign(table_.n_atoms(), Val::Unassigned);
}

bool EnumStream::lit_true(const Literal& l) const {
  Val v = value_[l.atom];
  return v != Val::Unassigned && (v == Val::True) == l.positive;
}

bool EnumStream::lit_false(const Literal& l) const {
  Val v = value_[l.atom];
  return v != Val::Unassigned && (v == Val::True) != l.positive;
}

void EnumStream::assign(const Literal& l, Reason r) {
  value_[l.atom] = l.positive ? Val::True : Val::False;
  trail_.push_back({l, r});
  if (table_.atom(l.atom).kind == AtomKind::Lra) lra_dirty_ = true;
}

void EnumStream::pop_to(std::size_t mark) {
  while (trail_.size() > mark) {
    value_[trail_.back().lit.atom] = Val::Unassigned;
    trail_.pop_back();
  }
  lra_dirty_ = true;
}

std::vector<Literal> EnumStream::lra_trail() const {
  std::vector<Literal> out;
  for (const auto& e : trail_)
    if (table_.atom(e.lit.atom).kind == AtomKind::Lra) out.push_back(e.lit);
  return out;
}

bool EnumStream::unit_propagate() {
  bool changed = true;
  while (changed) {
    changed = false;
    auto scan = [&](const std::vector<Literal>& lits) -> int {
      // 0 ok, 1 conflict, 2 assigned a unit
      const Literal* unit = nullptr;
      int unassigned = 0;
      for (const auto& l : lits) {
        if (lit_true(l)) return 0;
        if (!lit_false(l)) {
          ++unassigned;
          unit = &l;
        }
      }
      if (unassigned == 0) return 1;
      if (unassigned == 1) {
        assign(*unit, Reason::Unit);
        return 2;
      }
      return 0;
    };
    for (const auto& c : cnf_.clauses) {
      int s = scan(c.lits);
      if (s == 1) return false;
      if (s == 2) changed = true;
    }
    for (const auto& c : blocking_) {
      int s = scan(c);
      if (s == 1) return false;
      if (s == 2) changed = true;
    }
    for (const auto& c : learned_) {
      int s = scan(c);
      if (s == 1) return false;
      if (s == 2) changed = true;
    }
  }
  return true;
}

bool EnumStream::theory_consistent() {
  if (!lra_dirty_) return true;
  lra_dirty_ = false;
  std::vector<Literal> lits = lra_trail();
  if (lits.empty()) return true;
  LraCore core = lra_check(lits, table_);
  if (core.sat) return true;
  std::vector<Literal> clause;
  for (const auto& l : core.conflict) clause.push_back(~l);
  learned_.push_back(normalize_lits(std::move(clause)));
  return false;
}

bool EnumStream::theory_propagate() {
  std::vector<Literal> lits = lra_trail();
  bool any = false;
  for (AtomId a : lra_atoms_) {
    if (value_[a] != Val::Unassigned) continue;
    if (lra_entails(lits, Literal(a, true), table_)) {
      assign(Literal(a, true), Reason::Theory);
      lits.push_back(Literal(a, true));
      any = true;
    } else if (lra_entails(lits, Literal(a, false), table_)) {
      assign(Literal(a, false), Reason::Theory);
      lits.push_back(Literal(a, false));
      any = true;
    }
  }
  return any;
}

bool EnumStream::backtrack() {
  while (!decisions_.empty()) {
    DecisionMark& d = decisions_.back();
    pop_to(d.trail_mark);
    if (!d.flipped) {
      d.flipped = true;
      assign(Literal(d.atom, !d.first_phase), Reason::Flip);
      return true;
    }
    decisions_.pop_back();
  }
  return false;
}

bool EnumStream::all_satisfied() const {
  auto sat = [&](const std::vector<Literal>& lits) {
    for (const auto& l : lits)
      if (lit_true(l)) return true;
    return false;
  };
  for (const auto& c : cnf_.clauses)
    if (!sat(c.lits)) return false;
  for (const auto& c : blocking_)
    if (!sat(c)) return false;
  return true;
}

AtomId EnumStream::pick_decision() const {
  auto pending = [&](const std::vector<Literal>& lits) {
    for (const auto& l : lits)
      if (lit_true(l)) return false;
    return true;
  };
  std::set<AtomId> candidates;
  for (const auto& c : cnf_.clauses)
    if (pending(c.lits))
      for (const auto& l : c.lits)
        if (value_[l.atom] == Val::Unassigned) candidates.insert(l.atom);
  for (const auto& c : blocking_)
    if (pending(c))
      for (const auto& l : c)
        if (value_[l.atom] == Val::Unassigned) candidates.insert(l.atom);
  for (AtomId a : order_)
    if (candidates.count(a)) return a;
  // No unsatisfied clause: in total mode finish assigning the relevant atoms.
  if (mode_ == EnumMode::Total) {
    for (AtomId a : order_)
      if (relevant_.count(a) && value_[a] == Val::Unassigned) return a;
  }
  return -1;
}

TruthAssignment EnumStream::project() const {
  std::vector<Literal> lits;
  for (const auto& e : trail_)
    if (relevant_.count(e.lit.atom)) lits.push_back(e.lit);
  return TruthAssignment(lits);
}

TruthAssignment EnumStream::minimize(const TruthAssignment& total, const CnfFormula& cnf,
                                     const std::set<AtomId>& relevant) {
  std::map<AtomId, bool> view;
  for (const auto& l : total.literals()) view[l.atom] = l.positive;
  auto satisfied = [&](const std::vector<Literal>& lits) {
    for (const auto& l : lits) {
      auto it = view.find(l.atom);
      if (it != view.end() && it->second == l.positive) return true;
    }
    return false;
  };
  auto all_ok = [&] {
    for (const auto& c : cnf.clauses)
      if (!satisfied(c.lits)) return false;
    return true;
  };
  const auto& lits = total.literals();
  for (auto it = lits.rbegin(); it != lits.rend(); ++it) {
    if (!relevant.count(it->atom)) continue;
    view.erase(it->atom);
    if (!all_ok()) view[it->atom] = it->positive;
  }
  std::vector<Literal> kept;
  for (const auto& l : lits)
    if (view.count(l.atom)) kept.push_back(l);
  return TruthAssignment(kept);
}

std::optional<TruthAssignment> EnumStream::next() {
  if (finished_) return std::nullopt;

  // Restart search from scratch; blocking clauses carry the progress.
  std::fill(value_.begin(), value_.end(), Val::Unassigned);
  trail_.clear();
  decisions_.clear();
  lra_dirty_ = false;

  while (true) {
    if (!unit_propagate()) {
      if (!backtrack()) {
        finished_ = true;
        return std::nullopt;
      }
      continue;
    }
    if (!theory_consistent()) {
      if (!backtrack()) {
        finished_ = true;
        return std::nullopt;
      }
      continue;
    }
    if (theory_propagate()) continue;

    bool stop = all_satisfied() &&
                (mode_ == EnumMode::Partial || pick_decision() == -1);
    if (stop) {
      TruthAssignment mu = project();
      if (mode_ == EnumMode::Partial) {
        CnfFormula check = cnf_;
        for (const auto& b : blocking_) check.clauses.push_back(Clause{b, false});
        // Hidden trail literals stay as context for the clause checks.
        TruthAssignment full;
        for (const auto& e : trail_) full.push(e.lit);
        std::set<AtomId> rel = relevant_;
        mu = minimize(full, check, rel);
        std::vector<Literal> projected;
        for (const auto& l : mu.literals())
          if (relevant_.count(l.atom)) projected.push_back(l);
        mu = TruthAssignment(projected);
      }
      std::vector<Literal> block;
      for (const auto& l : mu.literals()) block.push_back(~l);
      blocking_.push_back(normalize_lits(std::move(block)));
      ++emitted_;
      if (trace_) *trace_ << "assignment " << emitted_ << ": " << mu.str(table_) << "\n";
      return mu;
    }

    AtomId a = pick_decision();
    if (a < 0) {
      // Clauses satisfied but total mode still missing atoms is handled in
      // stop; reaching here means a pending clause had no unassigned atom.
      if (!backtrack()) {
        finished_ = true;
        return std::nullopt;
      }
      continue;
    }
    bool phase = table_.atom(a).preferred_phase;
    decisions_.push_back({a, phase, false, trail_.size()});
    assign(Literal(a, phase), Reason::Decision);
  }
}

}  // namespace wmi

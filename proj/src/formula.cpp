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

#include "formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wmi {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Formula make(FKind k, AtomId a, std::vector<Formula> kids) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->atom = a;
  n->kids = std::move(kids);
  std::size_t h = static_cast<std::size_t>(k) * 1000003u + static_cast<std::size_t>(a + 1);
  for (const auto& c : n->kids) h = mix(h, c->hash);
  n->hash = h;
  return n;
}

const Formula& true_const() {
  static Formula f = make(FKind::True, -1, {});
  return f;
}

const Formula& false_const() {
  static Formula f = make(FKind::False, -1, {});
  return f;
}

}  // namespace

Formula f_true() { return true_const(); }
Formula f_false() { return false_const(); }

Formula f_atom(AtomId a) { return make(FKind::Atom, a, {}); }

Formula f_lit(const Literal& l) {
  Formula a = f_atom(l.atom);
  return l.positive ? a : f_not(a);
}

Formula f_not(const Formula& f) {
  switch (f->kind) {
    case FKind::True: return f_false();
    case FKind::False: return f_true();
    case FKind::Not: return f->kids[0];
    default: return make(FKind::Not, -1, {f});
  }
}

Formula f_and(std::vector<Formula> kids) {
  std::vector<Formula> out;
  for (auto& k : kids) {
    if (is_false(k)) return f_false();
    if (is_true(k)) continue;
    out.push_back(std::move(k));
  }
  if (out.empty()) return f_true();
  if (out.size() == 1) return out[0];
  return make(FKind::And, -1, std::move(out));
}

Formula f_or(std::vector<Formula> kids) {
  std::vector<Formula> out;
  for (auto& k : kids) {
    if (is_true(k)) return f_true();
    if (is_false(k)) continue;
    out.push_back(std::move(k));
  }
  if (out.empty()) return f_false();
  if (out.size() == 1) return out[0];
  return make(FKind::Or, -1, std::move(out));
}

Formula f_implies(const Formula& a, const Formula& b) {
  if (is_true(a)) return b;
  if (is_false(a)) return f_true();
  if (is_true(b)) return f_true();
  if (is_false(b)) return f_not(a);
  return make(FKind::Implies, -1, {a, b});
}

Formula f_iff(const Formula& a, const Formula& b) {
  if (is_true(a)) return b;
  if (is_false(a)) return f_not(b);
  if (is_true(b)) return a;
  if (is_false(b)) return f_not(a);
  return make(FKind::Iff, -1, {a, b});
}

bool is_true(const Formula& f) { return f->kind == FKind::True; }
bool is_false(const Formula& f) { return f->kind == FKind::False; }

bool f_equal(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->atom != b->atom ||
      a->kids.size() != b->kids.size())
    return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!f_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

bool is_literal(const Formula& f) {
  if (f->kind == FKind::Atom) return true;
  return f->kind == FKind::Not && f->kids[0]->kind == FKind::Atom;
}

Literal as_literal(const Formula& f) {
  if (f->kind == FKind::Atom) return Literal(f->atom, true);
  return Literal(f->kids[0]->atom, false);
}

TruthAssignment::TruthAssignment(const std::vector<Literal>& lits) {
  for (const auto& l : lits) push(l);
}

void TruthAssignment::push(const Literal& l) {
  auto it = map_.find(l.atom);
  if (it != map_.end()) {
    if (it->second != l.positive) throw Error("assignment maps an atom to both truth values");
    return;
  }
  map_[l.atom] = l.positive;
  lits_.push_back(l);
}

bool TruthAssignment::subset_of(const TruthAssignment& o) const {
  for (const auto& l : lits_) {
    if (!o.assigns(l.atom) || o.value(l.atom) != l.positive) return false;
  }
  return true;
}

std::string TruthAssignment::str(const AtomTable& t) const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (i) os << ", ";
    os << t.literal_str(lits_[i]);
  }
  os << '}';
  return os.str();
}

std::vector<AtomId> atoms(const Formula& f) {
  std::vector<AtomId> out;
  std::set<AtomId> seen;
  std::vector<const FormulaNode*> stack{f.get()};
  // Iterative preorder; children pushed in reverse to keep occurrence order.
  while (!stack.empty()) {
    const FormulaNode* n = stack.back();
    stack.pop_back();
    if (n->kind == FKind::Atom) {
      if (seen.insert(n->atom).second) out.push_back(n->atom);
      continue;
    }
    for (auto it = n->kids.rbegin(); it != n->kids.rend(); ++it) stack.push_back(it->get());
  }
  return out;
}

Formula residual(const Formula& f, const TruthAssignment& mu) {
  switch (f->kind) {
    case FKind::True:
    case FKind::False: return f;
    case FKind::Atom:
      if (mu.assigns(f->atom)) return mu.value(f->atom) ? f_true() : f_false();
      return f;
    case FKind::Not: return f_not(residual(f->kids[0], mu));
    case FKind::And: {
      std::vector<Formula> kids;
      kids.reserve(f->kids.size());
      for (const auto& k : f->kids) kids.push_back(residual(k, mu));
      return f_and(std::move(kids));
    }
    case FKind::Or: {
      std::vector<Formula> kids;
      kids.reserve(f->kids.size());
      for (const auto& k : f->kids) kids.push_back(residual(k, mu));
      return f_or(std::move(kids));
    }
    case FKind::Implies: return f_implies(residual(f->kids[0], mu), residual(f->kids[1], mu));
    case FKind::Iff: return f_iff(residual(f->kids[0], mu), residual(f->kids[1], mu));
  }
  return f;
}

bool prop_satisfies(const TruthAssignment& mu, const Formula& f) {
  return is_true(residual(f, mu));
}

namespace {

void flatten_into(FKind k, const Formula& f, std::vector<Formula>& out) {
  if (f->kind == k) {
    for (const auto& c : f->kids) flatten_into(k, c, out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

namespace {

Formula simplify_impl(const Formula& f, bool collapse_valid_or) {
  switch (f->kind) {
    case FKind::True:
    case FKind::False:
    case FKind::Atom: return f;
    case FKind::Not: return f_not(simplify_impl(f->kids[0], collapse_valid_or));
    case FKind::Implies:
      return f_implies(simplify_impl(f->kids[0], collapse_valid_or),
                       simplify_impl(f->kids[1], collapse_valid_or));
    case FKind::Iff: {
      Formula a = simplify_impl(f->kids[0], collapse_valid_or);
      Formula b = simplify_impl(f->kids[1], collapse_valid_or);
      if (f_equal(a, b)) return f_true();
      return f_iff(a, b);
    }
    case FKind::And:
    case FKind::Or: {
      bool conj = f->kind == FKind::And;
      std::vector<Formula> flat;
      for (const auto& k : f->kids) flatten_into(f->kind, simplify_impl(k, collapse_valid_or), flat);
      std::vector<Formula> kept;
      std::set<std::pair<AtomId, bool>> lits;
      for (const auto& k : flat) {
        if (conj ? is_false(k) : is_true(k)) return conj ? f_false() : f_true();
        if (conj ? is_true(k) : is_false(k)) continue;
        if (is_literal(k)) {
          Literal l = as_literal(k);
          // Complementary literals always collapse conjunctions; disjunctions
          // (psi v not psi) are validity clauses and collapse only on request.
          if (lits.count({l.atom, !l.positive})) {
            if (conj) return f_false();
            if (collapse_valid_or) return f_true();
          }
          if (!lits.insert({l.atom, l.positive}).second) continue;  // duplicate
          kept.push_back(k);
          continue;
        }
        bool dup = false;
        for (const auto& prev : kept)
          if (f_equal(prev, k)) {
            dup = true;
            break;
          }
        if (!dup) kept.push_back(k);
      }
      return conj ? f_and(std::move(kept)) : f_or(std::move(kept));
    }
  }
  return f;
}

}  // namespace

Formula simplify(const Formula& f) { return simplify_impl(f, false); }

Formula simplify_strong(const Formula& f) { return simplify_impl(f, true); }

bool is_literal_conjunction(const Formula& f) {
  if (is_true(f) || is_literal(f)) return true;
  if (f->kind != FKind::And) return false;
  for (const auto& k : f->kids)
    if (!is_literal(k)) return false;
  return true;
}

std::vector<Literal> conjunction_literals(const Formula& f) {
  std::vector<Literal> out;
  if (is_true(f)) return out;
  if (is_literal(f)) {
    out.push_back(as_literal(f));
    return out;
  }
  for (const auto& k : f->kids) out.push_back(as_literal(k));
  return out;
}

std::string formula_str(const Formula& f, const AtomTable& t) {
  switch (f->kind) {
    case FKind::True: return "true";
    case FKind::False: return "false";
    case FKind::Atom: return t.atom_str(f->atom);
    case FKind::Not: return "(not " + formula_str(f->kids[0], t) + ")";
    case FKind::And:
    case FKind::Or: {
      std::string s = f->kind == FKind::And ? "(and" : "(or";
      for (const auto& k : f->kids) s += " " + formula_str(k, t);
      return s + ")";
    }
    case FKind::Implies:
      return "(=> " + formula_str(f->kids[0], t) + " " + formula_str(f->kids[1], t) + ")";
    case FKind::Iff:
      return "(iff " + formula_str(f->kids[0], t) + " " + formula_str(f->kids[1], t) + ")";
  }
  return "?";
}

}  // namespace wmi

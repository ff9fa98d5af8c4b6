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

#include "cnf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace wmi {

std::vector<Literal> normalize_lits(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

void CnfFormula::add_clause(std::vector<Literal> lits, bool protect) {
  Clause c;
  c.lits = normalize_lits(std::move(lits));
  c.protected_validity = protect;
  clauses.push_back(std::move(c));
}

bool CnfFormula::has_clause(const std::vector<Literal>& lits) const {
  for (const auto& c : clauses)
    if (c.lits == lits) return true;
  return false;
}

void CnfFormula::append(const CnfFormula& other) {
  for (const auto& c : other.clauses) {
    if (!has_clause(c.lits)) clauses.push_back(c);
  }
  for (AtomId b : other.labels) labels.push_back(b);
}

namespace {

bool is_tautology(const std::vector<Literal>& lits) {
  for (std::size_t i = 0; i + 1 < lits.size(); ++i)
    if (lits[i].atom == lits[i + 1].atom && lits[i].positive != lits[i + 1].positive) return true;
  return false;
}

// Negation normal form; Iff expanded per polarity.
Formula nnf(const Formula& f, bool pos) {
  switch (f->kind) {
    case FKind::True: return pos ? f_true() : f_false();
    case FKind::False: return pos ? f_false() : f_true();
    case FKind::Atom: return pos ? f : f_not(f);
    case FKind::Not: return nnf(f->kids[0], !pos);
    case FKind::And:
    case FKind::Or: {
      bool conj = (f->kind == FKind::And) == pos;
      std::vector<Formula> kids;
      for (const auto& k : f->kids) kids.push_back(nnf(k, pos));
      return conj ? f_and(std::move(kids)) : f_or(std::move(kids));
    }
    case FKind::Implies: {
      if (pos) return f_or({nnf(f->kids[0], false), nnf(f->kids[1], true)});
      return f_and({nnf(f->kids[0], true), nnf(f->kids[1], false)});
    }
    case FKind::Iff: {
      const Formula& a = f->kids[0];
      const Formula& b = f->kids[1];
      if (pos)
        return f_and({f_or({nnf(a, false), nnf(b, true)}), f_or({nnf(b, false), nnf(a, true)})});
      return f_and({f_or({nnf(a, true), nnf(b, true)}), f_or({nnf(a, false), nnf(b, false)})});
    }
  }
  return f;
}

void distribute(const Formula& f, std::vector<std::vector<Literal>>& out) {
  if (is_true(f)) return;
  if (is_false(f)) {
    out.push_back({});
    return;
  }
  if (is_literal(f)) {
    out.push_back({as_literal(f)});
    return;
  }
  if (f->kind == FKind::And) {
    for (const auto& k : f->kids) distribute(k, out);
    return;
  }
  // Or: cross product of the children's clause sets.
  std::vector<std::vector<Literal>> acc{{}};
  for (const auto& k : f->kids) {
    std::vector<std::vector<Literal>> kid_clauses;
    distribute(k, kid_clauses);
    std::vector<std::vector<Literal>> next;
    for (const auto& a : acc)
      for (const auto& c : kid_clauses) {
        std::vector<Literal> merged = a;
        merged.insert(merged.end(), c.begin(), c.end());
        next.push_back(std::move(merged));
      }
    acc = std::move(next);
  }
  for (auto& c : acc) out.push_back(std::move(c));
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, true); }

CnfFormula cnf_classic(const Formula& f) {
  CnfFormula out;
  std::vector<std::vector<Literal>> raw;
  distribute(nnf(f, true), raw);
  std::set<std::vector<Literal>> seen;
  for (auto& c : raw) {
    auto lits = normalize_lits(std::move(c));
    if (is_tautology(lits)) continue;
    if (seen.insert(lits).second) out.clauses.push_back(Clause{lits, false});
  }
  return out;
}

namespace {

enum class Pol { Pos, Neg, Both };

Pol flip(Pol p) { return p == Pol::Pos ? Pol::Neg : p == Pol::Neg ? Pol::Pos : Pol::Both; }

struct LabelEncoder {
  AtomTable& table;
  CnfFormula& out;
  std::string prefix;
  bool tseitin;  // emit both directions regardless of polarity
  int counter = 0;
  std::map<std::pair<const FormulaNode*, int>, Literal> cache;

  Literal encode(const Formula& f, Pol pol) {
    if (is_literal(f)) return as_literal(f);
    if (f->kind == FKind::Not) return ~encode(f->kids[0], flip(pol));
    if (tseitin) pol = Pol::Both;
    auto key = std::make_pair(f.get(), static_cast<int>(pol));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    AtomId b = table.fresh_label(prefix + std::to_string(++counter));
    out.labels.push_back(b);
    Literal lb(b, true);
    cache[key] = lb;

    bool want_pos = pol != Pol::Neg;
    bool want_neg = pol != Pol::Pos;
    switch (f->kind) {
      case FKind::And: {
        if (want_pos)
          for (const auto& k : f->kids) out.add_clause({~lb, encode(k, pol == Pol::Both ? Pol::Both : Pol::Pos)});
        if (want_neg) {
          std::vector<Literal> cl{lb};
          for (const auto& k : f->kids) cl.push_back(~encode(k, pol == Pol::Both ? Pol::Both : Pol::Neg));
          out.add_clause(std::move(cl));
        }
        break;
      }
      case FKind::Or: {
        if (want_pos) {
          std::vector<Literal> cl{~lb};
          for (const auto& k : f->kids) cl.push_back(encode(k, pol == Pol::Both ? Pol::Both : Pol::Pos));
          out.add_clause(std::move(cl));
        }
        if (want_neg)
          for (const auto& k : f->kids) out.add_clause({lb, ~encode(k, pol == Pol::Both ? Pol::Both : Pol::Neg)});
        break;
      }
      case FKind::Implies: {
        Pol sub_pos = pol == Pol::Both ? Pol::Both : Pol::Pos;
        Pol sub_neg = pol == Pol::Both ? Pol::Both : Pol::Neg;
        if (want_pos) out.add_clause({~lb, ~encode(f->kids[0], sub_neg), encode(f->kids[1], sub_pos)});
        if (want_neg) {
          out.add_clause({lb, encode(f->kids[0], sub_pos)});
          out.add_clause({lb, ~encode(f->kids[1], sub_neg)});
        }
        break;
      }
      case FKind::Iff: {
        Literal la = encode(f->kids[0], Pol::Both);
        Literal lk = encode(f->kids[1], Pol::Both);
        if (want_pos) {
          out.add_clause({~lb, ~la, lk});
          out.add_clause({~lb, la, ~lk});
        }
        if (want_neg) {
          out.add_clause({lb, la, lk});
          out.add_clause({lb, ~la, ~lk});
        }
        break;
      }
      default: break;
    }
    return lb;
  }

  // Top-level assertion avoids labelling conjunctions and plain clauses.
  void assert_top(const Formula& f) {
    if (is_true(f)) return;
    if (is_false(f)) {
      out.add_clause({});
      return;
    }
    if (f->kind == FKind::And) {
      for (const auto& k : f->kids) assert_top(k);
      return;
    }
    if (is_literal(f)) {
      out.add_clause({as_literal(f)});
      return;
    }
    if (f->kind == FKind::Or) {
      std::vector<Literal> cl;
      for (const auto& k : f->kids) cl.push_back(encode(k, Pol::Pos));
      out.add_clause(std::move(cl));
      return;
    }
    if (f->kind == FKind::Implies) {
      out.add_clause({~encode(f->kids[0], Pol::Neg), encode(f->kids[1], Pol::Pos)});
      return;
    }
    if (f->kind == FKind::Iff) {
      Literal la = encode(f->kids[0], Pol::Both);
      Literal lb = encode(f->kids[1], Pol::Both);
      out.add_clause({~la, lb});
      out.add_clause({la, ~lb});
      return;
    }
    if (f->kind == FKind::Not) {
      out.add_clause({~encode(f->kids[0], Pol::Neg)});
      return;
    }
  }
};

}  // namespace

CnfFormula cnf_tseitin(const Formula& f, AtomTable& table, const std::string& label_prefix) {
  CnfFormula out;
  LabelEncoder enc{table, out, label_prefix, true};
  enc.assert_top(f);
  return out;
}

CnfFormula cnf_plaisted(const Formula& f, AtomTable& table, const std::string& label_prefix) {
  CnfFormula out;
  LabelEncoder enc{table, out, label_prefix, false};
  enc.assert_top(f);
  return out;
}

Formula clause_formula(const Clause& c) {
  std::vector<Formula> lits;
  for (const auto& l : c.lits) lits.push_back(f_lit(l));
  return f_or(std::move(lits));
}

Formula cnf_to_formula(const CnfFormula& cnf) {
  std::vector<Formula> cs;
  for (const auto& c : cnf.clauses) cs.push_back(clause_formula(c));
  return f_and(std::move(cs));
}

std::string dump_cnf(const CnfFormula& cnf, const AtomTable& table) {
  std::ostringstream os;
  std::set<AtomId> used;
  for (const auto& c : cnf.clauses)
    for (const auto& l : c.lits) used.insert(l.atom);
  for (AtomId a : used) os << "c atom " << (a + 1) << " = " << table.atom_str(a) << "\n";
  for (AtomId b : cnf.labels) os << "c label " << (b + 1) << "\n";
  os << "p cnf " << table.n_atoms() << " " << cnf.clauses.size() << "\n";
  for (const auto& c : cnf.clauses) {
    for (const auto& l : c.lits) os << (l.positive ? "" : "-") << (l.atom + 1) << " ";
    os << "0";
    if (c.protected_validity) os << "  c valid";
    os << "\n";
  }
  return os.str();
}

}  // namespace wmi

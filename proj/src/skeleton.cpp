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

#include "skeleton.hpp"

namespace wmi {

namespace {

struct SkContext {
  AtomTable& table;
  std::vector<std::pair<AtomId, Formula>>& labels;
  LabelMode mode;
  int counter = 0;

  AtomId fresh(const Formula& cond) {
    AtomId b = table.fresh_label("B#" + std::to_string(++counter));
    labels.emplace_back(b, cond);
    return b;
  }

  AtomId fresh_inner() { return table.fresh_label("B#" + std::to_string(++counter)); }
};

std::vector<Literal> guard_of(const std::vector<Literal>& conds) {
  std::vector<Literal> g;
  g.reserve(conds.size());
  for (const auto& l : conds) g.push_back(~l);
  return g;
}

// Positive direction of the local labelling: clauses of guard v (chain -> psi),
// where chain is the implication context (~B of the enclosing labels). Nested
// labels inherit the chain, so their definitions are active only when the
// whole branch is.
void pos_clauses(const Formula& psi, const std::vector<Literal>& guard,
                 std::vector<Literal> chain, SkContext& ctx, CnfFormula& out) {
  if (is_literal(psi)) {
    std::vector<Literal> cl = guard;
    cl.insert(cl.end(), chain.begin(), chain.end());
    cl.push_back(as_literal(psi));
    out.add_clause(std::move(cl));
    return;
  }
  if (psi->kind == FKind::And) {
    for (const auto& k : psi->kids) pos_clauses(k, guard, chain, ctx, out);
    return;
  }
  // Or: literals inline, complex children labelled.
  std::vector<Literal> cl = guard;
  cl.insert(cl.end(), chain.begin(), chain.end());
  std::vector<std::pair<Formula, Literal>> deferred;
  for (const auto& k : psi->kids) {
    if (is_literal(k)) {
      cl.push_back(as_literal(k));
    } else {
      Literal lb(ctx.fresh_inner(), true);
      out.labels.push_back(lb.atom);
      cl.push_back(lb);
      deferred.emplace_back(k, lb);
    }
  }
  out.add_clause(std::move(cl));
  for (const auto& [k, lb] : deferred) {
    std::vector<Literal> sub = chain;
    sub.push_back(~lb);
    pos_clauses(k, guard, std::move(sub), ctx, out);
  }
}

CnfFormula local_label_defs(AtomId b, const Formula& psi, const std::vector<Literal>& guard,
                            SkContext& ctx) {
  CnfFormula out;
  Formula n = to_nnf(psi);
  if (ctx.mode == LabelMode::Tseitin) {
    CnfFormula defs = cnf_tseitin(f_iff(f_atom(b), n), ctx.table, "B#ts" + std::to_string(b) + "_");
    for (auto& c : defs.clauses) {
      std::vector<Literal> cl = guard;
      cl.insert(cl.end(), c.lits.begin(), c.lits.end());
      out.add_clause(std::move(cl));
    }
    for (AtomId l : defs.labels) out.labels.push_back(l);
    return out;
  }
  // Plaisted: B -> psi with chained inner labels, psi -> B by plain DeMorgan.
  pos_clauses(n, guard, {Literal(b, false)}, ctx, out);
  CnfFormula neg = cnf_classic(f_not(n));
  for (const auto& c : neg.clauses) {
    std::vector<Literal> cl = guard;
    cl.push_back(Literal(b, true));
    cl.insert(cl.end(), c.lits.begin(), c.lits.end());
    out.add_clause(std::move(cl));
  }
  return out;
}

CnfFormula convert(const Weight& term, const std::vector<Literal>& conds, SkContext& ctx) {
  CnfFormula out;
  switch (term->kind) {
    case WKind::Const:
    case WKind::Var: return out;  // constants and polynomial leaves encode to true
    case WKind::Add:
    case WKind::Sub:
    case WKind::Mul:
    case WKind::Pow:
    case WKind::Func: {
      for (const auto& a : term->args) out.append(convert(a, conds, ctx));
      return out;
    }
    case WKind::Ite: {
      std::vector<Literal> guard = guard_of(conds);
      Literal split;
      if (is_literal(term->cond)) {
        split = as_literal(term->cond);
      } else {
        AtomId b = ctx.fresh(term->cond);
        out.labels.push_back(b);
        split = Literal(b, true);
      }
      std::vector<Literal> branch = guard;
      branch.push_back(split);
      branch.push_back(~split);
      out.add_clause(std::move(branch), /*protect=*/true);
      if (!is_literal(term->cond)) out.append(local_label_defs(split.atom, term->cond, guard, ctx));

      std::vector<Literal> conds_then = conds;
      conds_then.push_back(split);
      out.append(convert(term->args[0], conds_then, ctx));
      std::vector<Literal> conds_else = conds;
      conds_else.push_back(~split);
      out.append(convert(term->args[1], conds_else, ctx));
      return out;
    }
  }
  return out;
}

}  // namespace

CnfFormula convert_sk(const Weight& term, const std::vector<Literal>& conds, AtomTable& table,
                      std::vector<std::pair<AtomId, Formula>>& labels, LabelMode mode) {
  SkContext ctx{table, labels, mode};
  return convert(term, conds, ctx);
}

SkeletonOutput build_skeleton(const Weight& w, AtomTable& table, LabelMode mode) {
  SkeletonOutput out;
  out.cnf = convert_sk(w, {}, table, out.labels, mode);
  out.clause_count = static_cast<int>(out.cnf.clauses.size());
  return out;
}

}  // namespace wmi

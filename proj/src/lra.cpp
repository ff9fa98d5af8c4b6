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

#include "lra.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace wmi {

std::vector<LraConstraint> constraints_of(const std::vector<Literal>& lits,
                                          const AtomTable& table, bool drop_disequalities) {
  std::vector<LraConstraint> rows;
  for (const auto& lit : lits) {
    const AtomData& d = table.atom(lit.atom);
    if (d.kind != AtomKind::Lra) continue;
    auto neg = [&] {
      std::vector<std::pair<VarId, Rat>> c;
      for (const auto& [v, q] : d.coeffs) c.emplace_back(v, -q);
      return c;
    };
    if (lit.positive) {
      switch (d.op) {
        case LraOp::Le: rows.push_back({d.coeffs, false, d.rhs}); break;
        case LraOp::Lt: rows.push_back({d.coeffs, true, d.rhs}); break;
        case LraOp::Eq:
          rows.push_back({d.coeffs, false, d.rhs});
          rows.push_back({neg(), false, -d.rhs});
          break;
      }
    } else {
      switch (d.op) {
        case LraOp::Le: rows.push_back({neg(), true, -d.rhs}); break;   // e > rhs
        case LraOp::Lt: rows.push_back({neg(), false, -d.rhs}); break;  // e >= rhs
        case LraOp::Eq:
          if (!drop_disequalities) throw Error("disequality in constraint conversion");
          break;
      }
    }
  }
  return rows;
}

namespace {

// Dense two-phase simplex with Bland's rule. Coefficient matrix entries stay
// pure rationals; only the right-hand column carries delta.
struct Tableau {
  int n = 0;     // columns eligible for entering
  int cols = 0;  // total columns, artificials included
  std::vector<std::vector<Rat>> A;
  std::vector<DeltaRat> b;
  std::vector<int> basis;
  std::vector<Rat> obj;   // reduced costs, maximize form
  DeltaRat obj_val;       // objective value at the current basic solution

  int rows() const { return static_cast<int>(A.size()); }
  int width() const { return cols; }

  void pivot(int r, int e) {
    Rat p = A[r][e];
    for (auto& v : A[r]) v /= p;
    b[r] = b[r] / p;
    for (int i = 0; i < rows(); ++i) {
      if (i == r) continue;
      Rat f = A[i][e];
      if (f == 0) continue;
      for (int j = 0; j < width(); ++j) A[i][j] -= f * A[r][j];
      b[i] = b[i] - b[r] * f;
    }
    Rat f = obj[e];
    if (f != 0) {
      for (int j = 0; j < width(); ++j) obj[j] -= f * A[r][j];
      obj_val = obj_val + b[r] * f;
    }
    basis[r] = e;
  }

  // One Bland step; 0 at optimum, 1 after a pivot, -1 if unbounded.
  int step() {
    int e = -1;
    for (int j = 0; j < n; ++j)
      if (obj[j] > 0) {
        e = j;
        break;
      }
    if (e < 0) return 0;
    int r = -1;
    DeltaRat best;
    for (int i = 0; i < rows(); ++i) {
      if (A[i][e] <= 0) continue;
      DeltaRat ratio = b[i] / A[i][e];
      if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r < 0) return -1;
    pivot(r, e);
    return 1;
  }

  int run() {
    int s;
    while ((s = step()) == 1) {}
    return s;
  }
};

struct Standardized {
  Tableau t;
  int nvars = 0;  // free variables; columns 2v (positive part), 2v+1 (negative part)
  bool feasible = false;
};

// Phase 1: feasibility of rows over free variables.
Standardized phase1(const std::vector<LraConstraint>& rows, int nvars, bool with_delta) {
  Standardized s;
  s.nvars = nvars;
  int m = static_cast<int>(rows.size());
  Tableau& t = s.t;
  int base_cols = 2 * nvars + m;  // variable parts + one slack per row
  t.A.assign(m, std::vector<Rat>(base_cols, Rat(0)));
  t.b.resize(m);
  t.basis.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    for (const auto& [v, c] : rows[i].coeffs) {
      t.A[i][2 * v] += c;
      t.A[i][2 * v + 1] -= c;
    }
    t.A[i][2 * nvars + i] = 1;
    t.b[i] = with_delta ? DeltaRat(rows[i].rhs, rows[i].strict ? Rat(-1) : Rat(0))
                        : DeltaRat(rows[i].rhs);
    if (t.b[i] < DeltaRat()) {
      for (auto& v : t.A[i]) v = -v;
      t.b[i] = -t.b[i];
    }
  }
  // Rows whose slack kept coefficient +1 start with the slack basic; sign-flipped
  // rows get an artificial variable.
  std::vector<int> art_rows;
  for (int i = 0; i < m; ++i) {
    if (t.A[i][2 * nvars + i] == 1)
      t.basis[i] = 2 * nvars + i;
    else
      art_rows.push_back(i);
  }
  int n_art = static_cast<int>(art_rows.size());
  for (int i = 0; i < m; ++i) t.A[i].resize(base_cols + n_art, Rat(0));
  for (int k = 0; k < n_art; ++k) {
    t.A[art_rows[k]][base_cols + k] = 1;
    t.basis[art_rows[k]] = base_cols + k;
  }
  t.cols = base_cols + n_art;
  t.obj.assign(t.cols, Rat(0));
  t.obj_val = DeltaRat();
  // Maximize -(sum of artificials): W = -sum b_art + sum_j (sum_i A_ij) z_j.
  for (int i : art_rows) {
    for (int j = 0; j < base_cols; ++j) t.obj[j] += t.A[i][j];
    t.obj_val = t.obj_val - t.b[i];
  }
  t.n = base_cols;  // artificials never re-enter
  t.run();
  s.feasible = t.obj_val.is_zero();
  if (s.feasible) {
    // Drive zero-valued artificials out of the basis where possible.
    for (int i = 0; i < t.rows(); ++i) {
      if (t.basis[i] < base_cols) continue;
      for (int j = 0; j < base_cols; ++j)
        if (t.A[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
    }
  }
  return s;
}

std::map<VarId, DeltaRat> solution_of(const Standardized& s) {
  std::map<VarId, DeltaRat> x;
  for (VarId v = 0; v < s.nvars; ++v) x[v] = DeltaRat();
  for (int i = 0; i < s.t.rows(); ++i) {
    int col = s.t.basis[i];
    if (col < 2 * s.nvars) {
      VarId v = col / 2;
      if (col % 2 == 0)
        x[v] = x[v] + s.t.b[i];
      else
        x[v] = x[v] - s.t.b[i];
    }
  }
  return x;
}

bool literal_holds(const Literal& lit, const std::map<VarId, Rat>& x, const AtomTable& table) {
  const AtomData& d = table.atom(lit.atom);
  Rat lhs = 0;
  for (const auto& [v, c] : d.coeffs) lhs += c * x.at(v);
  bool val = false;
  switch (d.op) {
    case LraOp::Le: val = lhs <= d.rhs; break;
    case LraOp::Lt: val = lhs < d.rhs; break;
    case LraOp::Eq: val = lhs == d.rhs; break;
  }
  return val == lit.positive;
}

// Feasibility over free variables with disequalities decided by case split.
// On success optionally returns a concrete rational witness.
bool sat_lits(const std::vector<Literal>& lits, const AtomTable& table,
              std::map<VarId, Rat>* witness) {
  std::vector<LraConstraint> rows;
  std::vector<const AtomData*> diseqs;
  for (const auto& lit : lits) {
    const AtomData& d = table.atom(lit.atom);
    if (d.kind != AtomKind::Lra) continue;
    if (d.op == LraOp::Eq && !lit.positive) {
      diseqs.push_back(&d);
      continue;
    }
    auto single = constraints_of({lit}, table, false);
    rows.insert(rows.end(), single.begin(), single.end());
  }

  std::optional<Standardized> found;
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == diseqs.size()) {
      Standardized s = phase1(rows, table.n_reals(), true);
      if (!s.feasible) return false;
      found = std::move(s);
      return true;
    }
    const AtomData& d = *diseqs[k];
    for (bool low : {true, false}) {
      LraConstraint cut;
      if (low) {
        cut = {d.coeffs, true, d.rhs};
      } else {
        std::vector<std::pair<VarId, Rat>> neg;
        for (const auto& [v, c] : d.coeffs) neg.emplace_back(v, -c);
        cut = {neg, true, -d.rhs};
      }
      rows.push_back(cut);
      if (search(k + 1)) return true;
      rows.pop_back();
    }
    return false;
  };
  if (!search(0)) return false;
  if (!witness) return true;

  // Concretize delta: halve until every original literal holds exactly.
  auto dx = solution_of(*found);
  Rat delta(1);
  for (int iter = 0; iter < 256; ++iter) {
    std::map<VarId, Rat> xx;
    for (const auto& [v, q] : dx) xx[v] = q.a + q.b * delta;
    bool ok = true;
    for (const auto& l : lits) {
      if (table.atom(l.atom).kind != AtomKind::Lra) continue;
      if (!literal_holds(l, xx, table)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      *witness = std::move(xx);
      return true;
    }
    delta /= 2;
  }
  throw Error("delta concretization failed");
}

}  // namespace

LraCore lra_check(const std::vector<Literal>& lits, const AtomTable& table) {
  std::vector<Literal> lra;
  for (const auto& l : lits)
    if (table.atom(l.atom).kind == AtomKind::Lra) lra.push_back(l);

  LraCore out;
  std::map<VarId, Rat> witness;
  if (sat_lits(lra, table, &witness)) {
    out.sat = true;
    out.witness = std::move(witness);
    return out;
  }
  out.sat = false;
  // Deletion-based minimal conflict.
  std::vector<Literal> core = lra;
  std::size_t i = 0;
  while (i < core.size()) {
    std::vector<Literal> trial;
    for (std::size_t j = 0; j < core.size(); ++j)
      if (j != i) trial.push_back(core[j]);
    if (!sat_lits(trial, table, nullptr))
      core = std::move(trial);
    else
      ++i;
  }
  out.conflict = std::move(core);
  return out;
}

bool lra_entails(const std::vector<Literal>& lits, const Literal& lit, const AtomTable& table) {
  std::vector<Literal> probe;
  for (const auto& l : lits)
    if (table.atom(l.atom).kind == AtomKind::Lra) probe.push_back(l);
  probe.push_back(~lit);
  return !sat_lits(probe, table, nullptr);
}

LpResult lp_extremum(const std::vector<LraConstraint>& rows,
                     const std::vector<std::pair<VarId, Rat>>& objective, bool maximize,
                     int nvars) {
  std::vector<LraConstraint> closed = rows;
  for (auto& r : closed) r.strict = false;
  Standardized s = phase1(closed, nvars, false);
  LpResult res;
  if (!s.feasible) {
    res.kind = LpResult::Infeasible;
    return res;
  }
  Tableau& t = s.t;
  t.obj.assign(t.width(), Rat(0));
  t.obj_val = DeltaRat();
  for (const auto& [v, c] : objective) {
    Rat cc = maximize ? c : -c;
    t.obj[2 * v] += cc;
    t.obj[2 * v + 1] -= cc;
  }
  // Canonicalize: basis columns must have zero reduced cost.
  for (int i = 0; i < t.rows(); ++i) {
    Rat f = t.obj[t.basis[i]];
    if (f == 0) continue;
    for (int j = 0; j < t.width(); ++j) t.obj[j] -= f * t.A[i][j];
    t.obj_val = t.obj_val + t.b[i] * f;
  }
  int status = t.run();
  if (status == -1) {
    res.kind = LpResult::Unbounded;
    return res;
  }
  res.kind = LpResult::Optimal;
  res.value = maximize ? t.obj_val.a : -t.obj_val.a;
  return res;
}

}  // namespace wmi

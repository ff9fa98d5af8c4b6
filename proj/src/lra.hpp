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

#ifndef WMISOLVE_LRA_HPP
#define WMISOLVE_LRA_HPP

#include <map>
#include <vector>

#include "atoms.hpp"

namespace wmi {

// Rational with an infinitesimal component, a + b*delta. Strict bounds become
// non-strict delta-shifted ones; ordering is lexicographic. No floating point
// anywhere on this path.
struct DeltaRat {
  Rat a;
  Rat b;

  DeltaRat() : a(0), b(0) {}
  DeltaRat(Rat x) : a(std::move(x)), b(0) {}
  DeltaRat(Rat x, Rat y) : a(std::move(x)), b(std::move(y)) {}

  DeltaRat operator+(const DeltaRat& o) const { return {a + o.a, b + o.b}; }
  DeltaRat operator-(const DeltaRat& o) const { return {a - o.a, b - o.b}; }
  DeltaRat operator-() const { return {-a, -b}; }
  DeltaRat operator*(const Rat& s) const { return {a * s, b * s}; }
  DeltaRat operator/(const Rat& s) const { return {a / s, b / s}; }

  bool operator==(const DeltaRat& o) const { return a == o.a && b == o.b; }
  bool operator<(const DeltaRat& o) const { return a != o.a ? a < o.a : b < o.b; }
  bool operator<=(const DeltaRat& o) const { return *this == o || *this < o; }
  bool is_zero() const { return a == 0 && b == 0; }
};

// Half-space sum(coeffs * x) <= rhs (strict: <).
struct LraConstraint {
  std::vector<std::pair<VarId, Rat>> coeffs;
  bool strict = false;
  Rat rhs;
};

struct LraCore {
  bool sat = false;
  std::map<VarId, Rat> witness;    // populated when sat
  std::vector<Literal> conflict;   // minimal unsat subset when unsat
};

// Half-space view of a set of LRA literals. Equalities expand to two rows.
// Disequalities (negated equality atoms) throw unless dropped; dropping is the
// measure-preserving choice for integration domains.
std::vector<LraConstraint> constraints_of(const std::vector<Literal>& lits, const AtomTable& table,
                                          bool drop_disequalities);

// Exact satisfiability of a conjunction of LRA literals via rational simplex
// with delta handling for strict bounds. Disequalities are decided by case
// split. The conflict subset is minimized by deletion.
LraCore lra_check(const std::vector<Literal>& lits, const AtomTable& table);

// lits entails lit (both over canonical atoms).
bool lra_entails(const std::vector<Literal>& lits, const Literal& lit, const AtomTable& table);

struct LpResult {
  enum Kind { Optimal, Unbounded, Infeasible } kind = Infeasible;
  Rat value;
};

// Extremum of a linear objective over the closure of the constraint set
// (strictness ignored).
LpResult lp_extremum(const std::vector<LraConstraint>& rows,
                     const std::vector<std::pair<VarId, Rat>>& objective, bool maximize,
                     int nvars);

}  // namespace wmi

#endif

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

#ifndef WMISOLVE_POLYTOPE_HPP
#define WMISOLVE_POLYTOPE_HPP

#include <string>
#include <vector>

#include "lra.hpp"
#include "polynomial.hpp"

namespace wmi {

// H-representation over the full ordered real-variable list of a problem.
// Strictness is recorded but integration works on the closure.
struct Polytope {
  int dims = 0;
  std::vector<LraConstraint> rows;
  bool degenerate = false;  // an equality literal was present

  std::string key() const;  // stable identity for caching
};

// Dense point in the polytope's variable order.
using Point = std::vector<Rat>;

struct Simplex {
  std::vector<Point> verts;  // dims + 1 points
};

// Builds the canonical H-representation of an LRA-satisfiable literal set.
// Negated atoms are flipped into <=/< rows, disequalities dropped (measure
// zero), equality atoms set the degenerate flag.
Polytope polytope_from(const std::vector<Literal>& mu_lra, const AtomTable& table);

// All vertices: unique solutions of dims active constraints, feasibility
// filtered and deduplicated. Throws UnboundedError when any axis LP is
// unbounded.
std::vector<Point> vertices(const Polytope& p);

// Fan triangulation from the lexicographically smallest vertex over
// recursively triangulated facets. Empty for lower-dimensional polytopes.
std::vector<Simplex> triangulate(const Polytope& p);

// Exact integral of x^exps over a simplex: Dirichlet integral composed with
// the affine map onto the standard simplex (|det| factor).
Rat integrate_monomial_simplex(const Simplex& s, const std::vector<unsigned>& exps);

// Exact integral of a polynomial over a bounded polytope (0 if degenerate).
Rat integrate_exact(const Polytope& p, const Polynomial& poly);

// Exact per-dimension bounds; throws UnboundedError if any direction is
// unbounded.
std::vector<std::pair<Rat, Rat>> bounding_box(const Polytope& p);

}  // namespace wmi

#endif

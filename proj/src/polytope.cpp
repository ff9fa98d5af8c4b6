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

#include "polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace wmi {

namespace {

std::vector<Rat> dense_coeffs(const LraConstraint& r, int dims) {
  std::vector<Rat> c(dims, Rat(0));
  for (const auto& [v, q] : r.coeffs) c[v] += q;
  return c;
}

std::string row_key(const LraConstraint& r, int dims) {
  // Positive scaling to a primitive integer form keeps the half-space.
  std::vector<Rat> c = dense_coeffs(r, dims);
  mpz_class den_lcm = 1;
  for (const auto& q : c)
    if (q != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& q : c) {
    if (q == 0) continue;
    mpz_class scaled = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat scale = num_gcd == 0 ? Rat(1) : Rat(den_lcm) / Rat(num_gcd);
  std::ostringstream os;
  for (const auto& q : c) {
    Rat s = q * scale;
    s.canonicalize();
    os << s.get_str() << ' ';
  }
  Rat rs = r.rhs * scale;
  rs.canonicalize();
  os << "<= " << rs.get_str();
  return os.str();
}

// Rank of the span of (rows of) m, exact.
int rank_of(std::vector<std::vector<Rat>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[rank], m[p]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

// Solves a d x d system exactly; empty result when singular.
std::vector<Rat> solve_square(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  int d = static_cast<int>(b.size());
  for (int c = 0; c < d; ++c) {
    int p = -1;
    for (int r = c; r < d; ++r)
      if (a[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) return {};
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    for (int r = 0; r < d; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (int cc = c; cc < d; ++cc) a[r][cc] -= f * a[c][cc];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rat> x(d);
  for (int c = 0; c < d; ++c) x[c] = b[c] / a[c][c];
  return x;
}

Rat det_of(std::vector<std::vector<Rat>> a) {
  int d = static_cast<int>(a.size());
  Rat det = 1;
  for (int c = 0; c < d; ++c) {
    int p = -1;
    for (int r = c; r < d; ++r)
      if (a[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != c) {
      std::swap(a[c], a[p]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < d; ++r) {
      if (a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (int cc = c; cc < d; ++cc) a[r][cc] -= f * a[c][cc];
    }
  }
  return det;
}

int affine_rank(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<std::vector<Rat>> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rat> d(pts[0].size());
    for (std::size_t j = 0; j < pts[0].size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return rank_of(std::move(diffs));
}

}  // namespace

std::string Polytope::key() const {
  std::vector<std::string> keys;
  for (const auto& r : rows) keys.push_back(row_key(r, dims));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::ostringstream os;
  os << dims << (degenerate ? " deg " : " full ");
  for (const auto& k : keys) os << k << " | ";
  return os.str();
}

Polytope polytope_from(const std::vector<Literal>& mu_lra, const AtomTable& table) {
  Polytope p;
  p.dims = table.n_reals();
  for (const auto& lit : mu_lra) {
    const AtomData& d = table.atom(lit.atom);
    if (d.kind != AtomKind::Lra) continue;
    if (d.op == LraOp::Eq && lit.positive) p.degenerate = true;
    auto rows = constraints_of({lit}, table, /*drop_disequalities=*/true);
    p.rows.insert(p.rows.end(), rows.begin(), rows.end());
  }
  // Deduplicate rows syntactically.
  std::set<std::string> seen;
  std::vector<LraConstraint> kept;
  for (auto& r : p.rows) {
    std::string k = row_key(r, p.dims) + (r.strict ? "s" : "");
    if (seen.insert(k).second) kept.push_back(std::move(r));
  }
  p.rows = std::move(kept);
  return p;
}

std::vector<std::pair<Rat, Rat>> bounding_box(const Polytope& p) {
  std::vector<std::pair<Rat, Rat>> box;
  for (int v = 0; v < p.dims; ++v) {
    std::vector<std::pair<VarId, Rat>> obj{{v, Rat(1)}};
    LpResult lo = lp_extremum(p.rows, obj, /*maximize=*/false, p.dims);
    LpResult hi = lp_extremum(p.rows, obj, /*maximize=*/true, p.dims);
    if (lo.kind == LpResult::Unbounded || hi.kind == LpResult::Unbounded)
      throw UnboundedError("polytope is unbounded in direction of variable " + std::to_string(v));
    if (lo.kind == LpResult::Infeasible || hi.kind == LpResult::Infeasible)
      throw UnsatError("empty polytope");
    box.emplace_back(lo.value, hi.value);
  }
  return box;
}

std::vector<Point> vertices(const Polytope& p) {
  bounding_box(p);  // raises UnboundedError early
  int d = p.dims;
  int m = static_cast<int>(p.rows.size());
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> B;
  for (const auto& r : p.rows) {
    A.push_back(dense_coeffs(r, d));
    B.push_back(r.rhs);
  }
  std::vector<Point> verts;
  std::set<std::string> seen;
  std::vector<int> idx(d);
  std::function<void(int, int)> combos = [&](int start, int k) {
    if (k == d) {
      std::vector<std::vector<Rat>> sub;
      std::vector<Rat> rhs;
      for (int i = 0; i < d; ++i) {
        sub.push_back(A[idx[i]]);
        rhs.push_back(B[idx[i]]);
      }
      std::vector<Rat> x = solve_square(std::move(sub), std::move(rhs));
      if (x.empty()) return;
      for (int i = 0; i < m; ++i) {
        Rat lhs = 0;
        for (int j = 0; j < d; ++j) lhs += A[i][j] * x[j];
        if (lhs > B[i]) return;  // closure: strict rows treated closed
      }
      std::ostringstream os;
      for (const auto& q : x) os << q.get_str() << ',';
      if (seen.insert(os.str()).second) verts.push_back(std::move(x));
      return;
    }
    for (int i = start; i <= m - (d - k); ++i) {
      idx[k] = i;
      combos(i + 1, k + 1);
    }
  };
  if (d > 0 && m >= d) combos(0, 0);
  return verts;
}

namespace {

bool lex_less(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

void triangulate_face(const Polytope& p, const std::vector<Point>& verts, int dim,
                      std::vector<Point>& fixed, std::vector<Simplex>& out) {
  if (static_cast<int>(verts.size()) == dim + 1) {
    Simplex s;
    s.verts = fixed;
    s.verts.insert(s.verts.end(), verts.begin(), verts.end());
    out.push_back(std::move(s));
    return;
  }
  const Point* apex = &verts[0];
  for (const auto& v : verts)
    if (lex_less(v, *apex)) apex = &v;

  std::set<std::string> done;
  for (const auto& r : p.rows) {
    std::vector<Rat> c = dense_coeffs(r, p.dims);
    auto active = [&](const Point& v) {
      Rat lhs = 0;
      for (int j = 0; j < p.dims; ++j) lhs += c[j] * v[j];
      return lhs == r.rhs;
    };
    if (active(*apex)) continue;
    std::vector<Point> face;
    for (const auto& v : verts)
      if (active(v)) face.push_back(v);
    if (static_cast<int>(face.size()) < dim || affine_rank(face) != dim - 1) continue;
    std::sort(face.begin(), face.end(), lex_less);
    std::ostringstream os;
    for (const auto& v : face)
      for (const auto& q : v) os << q.get_str() << ',';
    if (!done.insert(os.str()).second) continue;
    fixed.push_back(*apex);
    triangulate_face(p, face, dim - 1, fixed, out);
    fixed.pop_back();
  }
}

}  // namespace

std::vector<Simplex> triangulate(const Polytope& p) {
  std::vector<Point> verts = vertices(p);
  if (p.degenerate || static_cast<int>(verts.size()) < p.dims + 1 ||
      affine_rank(verts) < p.dims)
    return {};
  std::vector<Point> fixed;
  std::vector<Simplex> out;
  triangulate_face(p, verts, p.dims, fixed, out);
  return out;
}

Rat integrate_monomial_simplex(const Simplex& s, const std::vector<unsigned>& exps) {
  int d = static_cast<int>(s.verts.size()) - 1;
  if (d == 0) return Rat(0);
  // Affine map x = v0 + M*lambda onto the standard simplex.
  std::vector<std::vector<Rat>> M(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) M[j][i] = s.verts[i + 1][j] - s.verts[0][j];
  Rat jac = abs(det_of(M));
  if (jac == 0) return Rat(0);

  Polynomial integrand = Polynomial::constant(d, Rat(1));
  for (int j = 0; j < d; ++j) {
    if (exps[j] == 0) continue;
    Polynomial coord = Polynomial::constant(d, s.verts[0][j]);
    for (int i = 0; i < d; ++i) {
      Polynomial li = Polynomial::variable(d, i);
      coord = coord + li * Polynomial::constant(d, M[j][i]);
    }
    integrand = integrand * coord.pow(exps[j]);
  }

  Rat total = 0;
  for (const auto& [mono, coef] : integrand.terms()) {
    unsigned degree = 0;
    Rat numer = 1;
    for (int i = 0; i < d; ++i) {
      degree += mono[i];
      numer *= rat_factorial(mono[i]);
    }
    total += coef * numer / rat_factorial(d + degree);
  }
  return total * jac;
}

Rat integrate_exact(const Polytope& p, const Polynomial& poly) {
  if (p.degenerate || poly.is_zero()) return Rat(0);
  std::vector<Simplex> simplices = triangulate(p);
  Rat total = 0;
  for (const auto& s : simplices) {
    for (const auto& [mono, coef] : poly.terms()) {
      std::vector<unsigned> e(mono.begin(), mono.end());
      total += coef * integrate_monomial_simplex(s, e);
    }
  }
  return total;
}

}  // namespace wmi

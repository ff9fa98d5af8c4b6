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

#include "gen.hpp"

#include <sstream>
#include <vector>

#include "rng.hpp"

namespace wmi {

namespace {

std::string leaf_poly(Rng& rng, int n_reals) {
  switch (rng.below(6)) {
    case 0: return "1";
    case 1: return "2";
    case 2: return "1/2";
    case 3: return "x" + std::to_string(1 + rng.below(n_reals));
    case 4: {
      std::string a = "x" + std::to_string(1 + rng.below(n_reals));
      std::string b = "x" + std::to_string(1 + rng.below(n_reals));
      return "(+ " + a + " " + b + ")";
    }
    default: {
      std::string a = "x" + std::to_string(1 + rng.below(n_reals));
      return "(* " + std::to_string(1 + rng.below(3)) + " " + a + ")";
    }
  }
}

}  // namespace

std::string gen_prodite(int n, std::uint64_t seed) {
  Rng rng(seed);
  int n_reals = 2;
  int n_bools = n / 4;
  std::ostringstream w;
  // Distinct conditions by construction: every fourth one is a fresh Boolean
  // atom, the rest are axis atoms with strictly increasing thresholds.
  std::vector<std::string> factors;
  for (int i = 0; i < n; ++i) {
    std::string cond;
    if (i % 4 == 3) {
      cond = "A" + std::to_string(i / 4 + 1);
    } else {
      int var = 1 + (i % n_reals);
      cond = "(<= x" + std::to_string(var) + " " + std::to_string(i + 1) + "/" +
             std::to_string(n + 1) + ")";
    }
    factors.push_back("(ite " + cond + " " + leaf_poly(rng, n_reals) + " " +
                      leaf_poly(rng, n_reals) + ")");
  }
  std::string weight;
  if (factors.empty()) {
    weight = "1";
  } else {
    weight = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i)
      weight = "(* " + weight + " " + factors[i] + ")";
  }
  std::ostringstream os;
  os << "(problem\n  (reals";
  for (int v = 1; v <= n_reals; ++v) os << " (x" << v << " 0 1)";
  os << ")\n  (bools";
  for (int b = 1; b <= n_bools; ++b) os << " A" << b;
  os << ")\n  (support true)\n  (weight " << weight << "))\n";
  return os.str();
}

namespace {

struct TreeGen {
  Rng rng;
  int n_bools;
  int n_reals;
  std::vector<std::string> lra_pool;

  std::string random_lra_atom() {
    std::ostringstream os;
    int v1 = 1 + static_cast<int>(rng.below(n_reals));
    const char* ops[] = {"<=", "<", ">=", ">"};
    const char* op = ops[rng.below(4)];
    int rhs = static_cast<int>(rng.below(5));
    if (rng.below(3) == 0 && n_reals > 1) {
      int v2 = 1 + static_cast<int>(rng.below(n_reals));
      if (v2 == v1) v2 = 1 + (v1 % n_reals);
      os << "(" << op << " (+ x" << v1 << " x" << v2 << ") " << rhs << ")";
    } else if (rng.below(4) == 0) {
      os << "(" << op << " (* 2 x" << v1 << ") " << rhs << ")";
    } else {
      os << "(" << op << " x" << v1 << " " << rhs << ")";
    }
    return os.str();
  }

  std::string random_literal() {
    std::string a;
    if (n_bools > 0 && rng.below(3) == 0)
      a = "A" + std::to_string(1 + rng.below(n_bools));
    else
      a = lra_pool[rng.below(lra_pool.size())];
    if (rng.below(3) == 0) return "(not " + a + ")";
    return a;
  }

  std::string random_condition() {
    // Mostly literals; occasionally a non-literal to exercise local labelling.
    std::uint64_t r = rng.below(10);
    if (r < 7) return random_literal();
    std::string a = random_literal();
    std::string b = random_literal();
    return (r < 9 ? "(and " : "(or ") + a + " " + b + ")";
  }

  std::string weight(int depth) {
    if (depth <= 0) return leaf_poly(rng, n_reals);
    switch (rng.below(4)) {
      case 0:
      case 1: return "(ite " + random_condition() + " " + weight(depth - 1) + " " +
                     weight(depth - 1) + ")";
      case 2: return "(+ " + weight(depth - 1) + " " + weight(depth - 1) + ")";
      default: return "(* " + weight(depth - 1) + " " + weight(depth - 1) + ")";
    }
  }

  std::string support() {
    int n_clauses = 1 + static_cast<int>(rng.below(3));
    std::ostringstream os;
    os << "(and";
    for (int c = 0; c < n_clauses; ++c) {
      int width = 2 + static_cast<int>(rng.below(2));
      os << " (or";
      for (int l = 0; l < width; ++l) os << " " << random_literal();
      os << ")";
    }
    os << ")";
    return os.str();
  }
};

}  // namespace

std::string gen_tree(int depth, int n_bools, int n_reals, std::uint64_t seed) {
  TreeGen g{Rng(seed), n_bools, n_reals, {}};
  int pool = 3 + static_cast<int>(g.rng.below(3));
  for (int i = 0; i < pool; ++i) g.lra_pool.push_back(g.random_lra_atom());
  std::string w = g.weight(depth);
  std::string phi = g.support();
  std::ostringstream os;
  os << "(problem\n  (reals";
  for (int v = 1; v <= n_reals; ++v) os << " (x" << v << " 0 2)";
  os << ")\n  (bools";
  for (int b = 1; b <= n_bools; ++b) os << " A" << b;
  os << ")\n  (support " << phi << ")\n  (weight " << w << "))\n";
  return os.str();
}

}  // namespace wmi

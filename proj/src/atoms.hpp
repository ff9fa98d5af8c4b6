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

#ifndef WMISOLVE_ATOMS_HPP
#define WMISOLVE_ATOMS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace wmi {

using AtomId = int;
using VarId = int;

enum class AtomKind { Bool, Lra };

// Canonical comparison operators. >= and > are normalized away at
// construction time: (t >= c) is interned as the negative literal of (t < c).
enum class LraOp { Le, Lt, Eq };

// Operators accepted from input before canonicalization.
enum class InOp { Le, Lt, Ge, Gt, Eq };

struct Literal {
  AtomId atom = -1;
  bool positive = true;

  Literal() = default;
  Literal(AtomId a, bool p) : atom(a), positive(p) {}
  Literal operator~() const { return Literal(atom, !positive); }
  bool operator==(const Literal& o) const { return atom == o.atom && positive == o.positive; }
  bool operator<(const Literal& o) const {
    return atom != o.atom ? atom < o.atom : positive < o.positive;
  }
};

struct AtomData {
  AtomKind kind = AtomKind::Bool;
  std::string name;                           // Bool atoms only
  std::vector<std::pair<VarId, Rat>> coeffs;  // LRA: sorted by variable, first coeff > 0, gcd 1
  LraOp op = LraOp::Le;
  Rat rhs;
  bool preferred_phase = false;  // initial DPLL phase: falsify the atom as parsed
  bool is_label = false;         // fresh atom introduced by a transformation; hidden in enumeration
};

// Interning table for real variables and atoms. Canonicalization guarantees
// that syntactically distinct but identical LRA atoms unify, so identity
// equality of AtomIds coincides with structural equality.
//
// One table per problem; construction is single-threaded. Copying the table
// gives a run its own space for fresh labels without disturbing the problem.
class AtomTable {
public:
  VarId add_real(const std::string& name);
  VarId real_index(const std::string& name) const;  // -1 if unknown
  const std::string& real_name(VarId v) const { return reals_[v]; }
  int n_reals() const { return static_cast<int>(reals_.size()); }

  AtomId bool_atom(const std::string& name);
  AtomId find_bool(const std::string& name) const;  // -1 if unknown

  // Canonicalizes and interns; the returned literal carries the polarity flip
  // introduced by normalization. Throws Error when all coefficients are zero.
  Literal lra_literal(const std::vector<std::pair<VarId, Rat>>& coeffs, InOp op, const Rat& rhs);

  AtomId fresh_label(const std::string& name);

  const AtomData& atom(AtomId id) const { return atoms_[id]; }
  int n_atoms() const { return static_cast<int>(atoms_.size()); }

  std::string atom_str(AtomId id) const;
  std::string literal_str(const Literal& lit) const;

private:
  std::vector<std::string> reals_;
  std::map<std::string, VarId> real_index_;
  std::vector<AtomData> atoms_;
  std::map<std::string, AtomId> bool_index_;
  std::map<std::string, AtomId> lra_index_;  // canonical key -> id

  std::string lra_key(const std::vector<std::pair<VarId, Rat>>& coeffs, LraOp op,
                      const Rat& rhs) const;
};

}  // namespace wmi

#endif

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

#include "atoms.hpp"

#include <algorithm>
#include <sstream>

namespace wmi {

VarId AtomTable::add_real(const std::string& name) {
  auto it = real_index_.find(name);
  if (it != real_index_.end()) return it->second;
  VarId v = static_cast<VarId>(reals_.size());
  reals_.push_back(name);
  real_index_[name] = v;
  return v;
}

VarId AtomTable::real_index(const std::string& name) const {
  auto it = real_index_.find(name);
  return it == real_index_.end() ? -1 : it->second;
}

AtomId AtomTable::bool_atom(const std::string& name) {
  auto it = bool_index_.find(name);
  if (it != bool_index_.end()) return it->second;
  AtomId id = static_cast<AtomId>(atoms_.size());
  AtomData d;
  d.kind = AtomKind::Bool;
  d.name = name;
  d.preferred_phase = false;
  atoms_.push_back(std::move(d));
  bool_index_[name] = id;
  return id;
}

AtomId AtomTable::find_bool(const std::string& name) const {
  auto it = bool_index_.find(name);
  return it == bool_index_.end() ? -1 : it->second;
}

AtomId AtomTable::fresh_label(const std::string& name) {
  AtomId id = static_cast<AtomId>(atoms_.size());
  AtomData d;
  d.kind = AtomKind::Bool;
  d.name = name;
  d.preferred_phase = false;
  d.is_label = true;
  atoms_.push_back(std::move(d));
  return id;
}

std::string AtomTable::lra_key(const std::vector<std::pair<VarId, Rat>>& coeffs, LraOp op,
                               const Rat& rhs) const {
  std::ostringstream os;
  for (const auto& [v, c] : coeffs) os << v << '*' << c.get_str() << ' ';
  switch (op) {
    case LraOp::Le: os << "<="; break;
    case LraOp::Lt: os << "<"; break;
    case LraOp::Eq: os << "="; break;
  }
  os << ' ' << rhs.get_str();
  return os.str();
}

Literal AtomTable::lra_literal(const std::vector<std::pair<VarId, Rat>>& coeffs, InOp op,
                               const Rat& rhs) {
  std::map<VarId, Rat> acc;
  for (const auto& [v, c] : coeffs) acc[v] += c;
  std::vector<std::pair<VarId, Rat>> cs;
  for (auto& [v, c] : acc)
    if (c != 0) cs.emplace_back(v, c);
  if (cs.empty()) throw Error("arithmetic atom has no variable");

  bool positive = true;
  LraOp cop;
  switch (op) {
    case InOp::Le: cop = LraOp::Le; break;
    case InOp::Lt: cop = LraOp::Lt; break;
    case InOp::Eq: cop = LraOp::Eq; break;
    // (t >= c) == not (t < c); (t > c) == not (t <= c)
    case InOp::Ge: cop = LraOp::Lt; positive = false; break;
    case InOp::Gt: cop = LraOp::Le; positive = false; break;
  }

  // Scale to integer coefficients with gcd 1.
  mpz_class den_lcm = 1;
  for (auto& [v, c] : cs) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (auto& [v, c] : cs) {
    mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat scale = Rat(den_lcm) / Rat(num_gcd);
  Rat srhs = rhs * scale;
  for (auto& [v, c] : cs) {
    c *= scale;
    c.canonicalize();
  }
  srhs.canonicalize();

  // Leading coefficient positive; flipping the sign of a <= / < atom turns it
  // into the negation of the mirrored strict / non-strict atom.
  if (cs.front().second < 0) {
    for (auto& [v, c] : cs) c = -c;
    srhs = -srhs;
    if (cop == LraOp::Le) {
      cop = LraOp::Lt;
      positive = !positive;
    } else if (cop == LraOp::Lt) {
      cop = LraOp::Le;
      positive = !positive;
    }
  }

  std::string key = lra_key(cs, cop, srhs);
  auto it = lra_index_.find(key);
  if (it != lra_index_.end()) return Literal(it->second, positive);

  AtomId id = static_cast<AtomId>(atoms_.size());
  AtomData d;
  d.kind = AtomKind::Lra;
  d.coeffs = cs;
  d.op = cop;
  d.rhs = srhs;
  d.preferred_phase = !positive;  // falsify the atom as it was first written
  atoms_.push_back(std::move(d));
  lra_index_[key] = id;
  return Literal(id, positive);
}

std::string AtomTable::atom_str(AtomId id) const {
  const AtomData& d = atoms_[id];
  if (d.kind == AtomKind::Bool) return d.name;
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& [v, c] : d.coeffs) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rat a = abs(c);
    if (a != 1) os << a.get_str() << '*';
    os << real_name(v);
    first = false;
  }
  switch (d.op) {
    case LraOp::Le: os << " <= "; break;
    case LraOp::Lt: os << " < "; break;
    case LraOp::Eq: os << " = "; break;
  }
  os << d.rhs.get_str() << ')';
  return os.str();
}

std::string AtomTable::literal_str(const Literal& lit) const {
  const AtomData& d = atoms_[lit.atom];
  if (lit.positive) return atom_str(lit.atom);
  if (d.kind == AtomKind::Bool) return "(not " + d.name + ")";
  // Render the negation with the mirrored operator for readability.
  std::string s = atom_str(lit.atom);
  std::size_t p;
  if ((p = s.find(" <= ")) != std::string::npos) return s.substr(0, p) + " > " + s.substr(p + 4);
  if ((p = s.find(" < ")) != std::string::npos) return s.substr(0, p) + " >= " + s.substr(p + 3);
  if ((p = s.find(" = ")) != std::string::npos) return s.substr(0, p) + " != " + s.substr(p + 3);
  return "(not " + s + ")";
}

}  // namespace wmi

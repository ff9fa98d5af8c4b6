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

#include "weights.hpp"

#include <cmath>
#include <sstream>

namespace wmi {

namespace {

std::shared_ptr<WeightNode> make_mut(WKind k) {
  auto n = std::make_shared<WeightNode>();
  n->kind = k;
  return n;
}

}  // namespace

Weight w_const(const Rat& c) {
  auto n = make_mut(WKind::Const);
  n->value = c;
  return n;
}

Weight w_var(VarId v) {
  auto n = make_mut(WKind::Var);
  n->var = v;
  return n;
}

Weight w_add(const Weight& a, const Weight& b) {
  auto n = make_mut(WKind::Add);
  n->args = {a, b};
  return n;
}

Weight w_sub(const Weight& a, const Weight& b) {
  auto n = make_mut(WKind::Sub);
  n->args = {a, b};
  return n;
}

Weight w_mul(const Weight& a, const Weight& b) {
  auto n = make_mut(WKind::Mul);
  n->args = {a, b};
  return n;
}

Weight w_pow(const Weight& a, unsigned k) {
  auto n = make_mut(WKind::Pow);
  n->args = {a};
  n->exponent = k;
  return n;
}

Weight w_func(const std::string& name, std::vector<Weight> args) {
  if (!func_registered(name, args.size()))
    throw UnknownFuncError("unknown function '" + name + "' with arity " +
                           std::to_string(args.size()));
  auto n = make_mut(WKind::Func);
  n->func = name;
  n->args = std::move(args);
  return n;
}

Weight w_ite(const Formula& cond, const Weight& t, const Weight& e) {
  auto n = make_mut(WKind::Ite);
  n->cond = cond;
  n->args = {t, e};
  return n;
}

// Registry of total real functions usable only with the MC integrator.
bool func_registered(const std::string& name, std::size_t arity) {
  return name == "gauss" && arity == 3;  // gauss(mean, stddev, arg)
}

namespace {

void collect_conditions(const Weight& w, std::vector<Formula>& out) {
  if (w->kind == WKind::Ite) {
    bool seen = false;
    for (const auto& c : out)
      if (f_equal(c, w->cond)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(w->cond);
  }
  for (const auto& a : w->args) collect_conditions(a, out);
}

}  // namespace

std::vector<Formula> conditions(const Weight& w) {
  std::vector<Formula> out;
  collect_conditions(w, out);
  return out;
}

Weight restrict_weight(const Weight& w, const TruthAssignment& mu) {
  switch (w->kind) {
    case WKind::Const:
    case WKind::Var: return w;
    case WKind::Ite: {
      Formula r = simplify_strong(residual(w->cond, mu));
      if (is_true(r)) return restrict_weight(w->args[0], mu);
      if (is_false(r)) return restrict_weight(w->args[1], mu);
      return w_ite(w->cond, restrict_weight(w->args[0], mu), restrict_weight(w->args[1], mu));
    }
    default: {
      auto n = make_mut(w->kind);
      n->value = w->value;
      n->var = w->var;
      n->exponent = w->exponent;
      n->func = w->func;
      for (const auto& a : w->args) n->args.push_back(restrict_weight(a, mu));
      return n;
    }
  }
}

bool is_fi(const Weight& w) {
  if (w->kind == WKind::Ite) return false;
  for (const auto& a : w->args)
    if (!is_fi(a)) return false;
  return true;
}

bool atom_truth_at(AtomId a, const std::vector<double>& point, const TruthAssignment& mu_bool,
                   const AtomTable& table) {
  const AtomData& d = table.atom(a);
  if (d.kind == AtomKind::Bool) {
    if (!mu_bool.assigns(a)) throw Error("unassigned Boolean atom in numeric evaluation");
    return mu_bool.value(a);
  }
  double lhs = 0;
  for (const auto& [v, c] : d.coeffs) lhs += rat_double(c) * point[v];
  double rhs = rat_double(d.rhs);
  switch (d.op) {
    case LraOp::Le: return lhs <= rhs;
    case LraOp::Lt: return lhs < rhs;
    case LraOp::Eq: return lhs == rhs;
  }
  return false;
}

bool formula_truth_at(const Formula& f, const std::vector<double>& point,
                      const TruthAssignment& mu_bool, const AtomTable& table) {
  switch (f->kind) {
    case FKind::True: return true;
    case FKind::False: return false;
    case FKind::Atom: return atom_truth_at(f->atom, point, mu_bool, table);
    case FKind::Not: return !formula_truth_at(f->kids[0], point, mu_bool, table);
    case FKind::And:
      for (const auto& k : f->kids)
        if (!formula_truth_at(k, point, mu_bool, table)) return false;
      return true;
    case FKind::Or:
      for (const auto& k : f->kids)
        if (formula_truth_at(k, point, mu_bool, table)) return true;
      return false;
    case FKind::Implies:
      return !formula_truth_at(f->kids[0], point, mu_bool, table) ||
             formula_truth_at(f->kids[1], point, mu_bool, table);
    case FKind::Iff:
      return formula_truth_at(f->kids[0], point, mu_bool, table) ==
             formula_truth_at(f->kids[1], point, mu_bool, table);
  }
  return false;
}

namespace {

double eval_rec(const Weight& w, const std::vector<double>& point, const TruthAssignment& mu_bool,
                const AtomTable& table) {
  switch (w->kind) {
    case WKind::Const: return rat_double(w->value);
    case WKind::Var: return point[w->var];
    case WKind::Add:
      return eval_rec(w->args[0], point, mu_bool, table) +
             eval_rec(w->args[1], point, mu_bool, table);
    case WKind::Sub:
      return eval_rec(w->args[0], point, mu_bool, table) -
             eval_rec(w->args[1], point, mu_bool, table);
    case WKind::Mul:
      return eval_rec(w->args[0], point, mu_bool, table) *
             eval_rec(w->args[1], point, mu_bool, table);
    case WKind::Pow: return std::pow(eval_rec(w->args[0], point, mu_bool, table), w->exponent);
    case WKind::Func: {
      // gauss(mean, stddev, arg)
      double mean = eval_rec(w->args[0], point, mu_bool, table);
      double sd = eval_rec(w->args[1], point, mu_bool, table);
      double arg = eval_rec(w->args[2], point, mu_bool, table);
      double z = (arg - mean) / sd;
      return std::exp(-0.5 * z * z) / (sd * std::sqrt(2.0 * M_PI));
    }
    case WKind::Ite:
      return formula_truth_at(w->cond, point, mu_bool, table)
                 ? eval_rec(w->args[0], point, mu_bool, table)
                 : eval_rec(w->args[1], point, mu_bool, table);
  }
  return 0;
}

}  // namespace

double evaluate(const Weight& w, const std::vector<double>& point, const TruthAssignment& mu_bool,
                const AtomTable& table) {
  double v = eval_rec(w, point, mu_bool, table);
  if (v < 0)
    throw NegativeWeightError("weight evaluates to " + std::to_string(v) +
                              "; weights must be nonnegative");
  return v;
}

namespace {

bool atom_truth_exact(AtomId a, const std::vector<Rat>& point, const TruthAssignment& mu_bool,
                      const AtomTable& table) {
  const AtomData& d = table.atom(a);
  if (d.kind == AtomKind::Bool) {
    if (!mu_bool.assigns(a)) throw Error("unassigned Boolean atom in exact evaluation");
    return mu_bool.value(a);
  }
  Rat lhs = 0;
  for (const auto& [v, c] : d.coeffs) lhs += c * point[v];
  switch (d.op) {
    case LraOp::Le: return lhs <= d.rhs;
    case LraOp::Lt: return lhs < d.rhs;
    case LraOp::Eq: return lhs == d.rhs;
  }
  return false;
}

bool formula_truth_exact(const Formula& f, const std::vector<Rat>& point,
                         const TruthAssignment& mu_bool, const AtomTable& table) {
  switch (f->kind) {
    case FKind::True: return true;
    case FKind::False: return false;
    case FKind::Atom: return atom_truth_exact(f->atom, point, mu_bool, table);
    case FKind::Not: return !formula_truth_exact(f->kids[0], point, mu_bool, table);
    case FKind::And:
      for (const auto& k : f->kids)
        if (!formula_truth_exact(k, point, mu_bool, table)) return false;
      return true;
    case FKind::Or:
      for (const auto& k : f->kids)
        if (formula_truth_exact(k, point, mu_bool, table)) return true;
      return false;
    case FKind::Implies:
      return !formula_truth_exact(f->kids[0], point, mu_bool, table) ||
             formula_truth_exact(f->kids[1], point, mu_bool, table);
    case FKind::Iff:
      return formula_truth_exact(f->kids[0], point, mu_bool, table) ==
             formula_truth_exact(f->kids[1], point, mu_bool, table);
  }
  return false;
}

}  // namespace

Rat evaluate_exact(const Weight& w, const std::vector<Rat>& point, const TruthAssignment& mu_bool,
                   const AtomTable& table) {
  switch (w->kind) {
    case WKind::Const: return w->value;
    case WKind::Var: return point[w->var];
    case WKind::Add:
      return evaluate_exact(w->args[0], point, mu_bool, table) +
             evaluate_exact(w->args[1], point, mu_bool, table);
    case WKind::Sub:
      return evaluate_exact(w->args[0], point, mu_bool, table) -
             evaluate_exact(w->args[1], point, mu_bool, table);
    case WKind::Mul:
      return evaluate_exact(w->args[0], point, mu_bool, table) *
             evaluate_exact(w->args[1], point, mu_bool, table);
    case WKind::Pow: {
      Rat base = evaluate_exact(w->args[0], point, mu_bool, table);
      Rat r = 1;
      for (unsigned i = 0; i < w->exponent; ++i) r *= base;
      return r;
    }
    case WKind::Func: throw NotPolynomialError("opaque function in exact evaluation");
    case WKind::Ite:
      return formula_truth_exact(w->cond, point, mu_bool, table)
                 ? evaluate_exact(w->args[0], point, mu_bool, table)
                 : evaluate_exact(w->args[1], point, mu_bool, table);
  }
  return Rat(0);
}

Polynomial as_polynomial(const Weight& w, int nvars) {
  switch (w->kind) {
    case WKind::Const: return Polynomial::constant(nvars, w->value);
    case WKind::Var: return Polynomial::variable(nvars, w->var);
    case WKind::Add: return as_polynomial(w->args[0], nvars) + as_polynomial(w->args[1], nvars);
    case WKind::Sub: return as_polynomial(w->args[0], nvars) - as_polynomial(w->args[1], nvars);
    case WKind::Mul: return as_polynomial(w->args[0], nvars) * as_polynomial(w->args[1], nvars);
    case WKind::Pow: return as_polynomial(w->args[0], nvars).pow(w->exponent);
    case WKind::Func:
      throw NotPolynomialError("opaque function '" + w->func + "' is not a polynomial");
    case WKind::Ite: throw NotPolynomialError("conditional weight is not a polynomial");
  }
  return Polynomial(nvars);
}

int weight_size(const Weight& w) {
  int n = 1;
  if (w->kind == WKind::Ite) {
    std::vector<const FormulaNode*> stack{w->cond.get()};
    while (!stack.empty()) {
      const FormulaNode* f = stack.back();
      stack.pop_back();
      ++n;
      for (const auto& k : f->kids) stack.push_back(k.get());
    }
  }
  for (const auto& a : w->args) n += weight_size(a);
  return n;
}

std::string weight_str(const Weight& w, const AtomTable& t) {
  std::ostringstream os;
  switch (w->kind) {
    case WKind::Const: os << w->value.get_str(); break;
    case WKind::Var: os << t.real_name(w->var); break;
    case WKind::Add:
      os << "(+ " << weight_str(w->args[0], t) << " " << weight_str(w->args[1], t) << ")";
      break;
    case WKind::Sub:
      os << "(- " << weight_str(w->args[0], t) << " " << weight_str(w->args[1], t) << ")";
      break;
    case WKind::Mul:
      os << "(* " << weight_str(w->args[0], t) << " " << weight_str(w->args[1], t) << ")";
      break;
    case WKind::Pow:
      os << "(pow " << weight_str(w->args[0], t) << " " << w->exponent << ")";
      break;
    case WKind::Func: {
      os << "(" << w->func;
      for (const auto& a : w->args) os << " " << weight_str(a, t);
      os << ")";
      break;
    }
    case WKind::Ite:
      os << "(ite " << formula_str(w->cond, t) << " " << weight_str(w->args[0], t) << " "
         << weight_str(w->args[1], t) << ")";
      break;
  }
  return os.str();
}

}  // namespace wmi

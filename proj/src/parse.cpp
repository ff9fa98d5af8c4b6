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

#include "parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace wmi {

namespace {

struct Sexpr {
  bool list = false;
  std::string atom;
  std::vector<Sexpr> kids;
  int line = 1;
  int col = 1;

  bool is(const std::string& head) const {
    return list && !kids.empty() && !kids[0].list && kids[0].atom == head;
  }
};

struct Reader {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Reader(const std::string& t) : text(t) {}

  int peek() const { return pos < text.size() ? text[pos] : -1; }

  int get() {
    if (pos >= text.size()) return -1;
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == ';') {
        while (pos < text.size() && text[pos] != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  Sexpr read() {
    skip_ws();
    Sexpr s;
    s.line = line;
    s.col = col;
    int c = peek();
    if (c < 0) throw ParseError("unexpected end of input", line, col);
    if (c == ')') throw ParseError("unexpected ')'", line, col);
    if (c == '(') {
      get();
      s.list = true;
      while (true) {
        skip_ws();
        if (peek() < 0) throw ParseError("unbalanced '('", s.line, s.col);
        if (peek() == ')') {
          get();
          break;
        }
        s.kids.push_back(read());
      }
      return s;
    }
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')' && text[pos] != ';')
      s.atom.push_back(static_cast<char>(get()));
    return s;
  }
};

struct LinearExpr {
  std::map<VarId, Rat> coeffs;
  Rat constant;

  LinearExpr& operator+=(const LinearExpr& o) {
    for (const auto& [v, c] : o.coeffs) coeffs[v] += c;
    constant += o.constant;
    return *this;
  }
  void negate() {
    for (auto& [v, c] : coeffs) c = -c;
    constant = -constant;
  }
  void scale(const Rat& s) {
    for (auto& [v, c] : coeffs) c *= s;
    constant *= s;
  }
  bool is_constant() const {
    for (const auto& [v, c] : coeffs)
      if (c != 0) return false;
    return true;
  }
};

struct ProblemParser {
  AtomTable& table;

  VarId require_real(const Sexpr& s) const {
    VarId v = table.real_index(s.atom);
    if (v < 0) throw ParseError("unknown real variable '" + s.atom + "'", s.line, s.col);
    return v;
  }

  LinearExpr parse_term(const Sexpr& s) const {
    LinearExpr e;
    if (!s.list) {
      if (auto q = rat_parse(s.atom)) {
        e.constant = *q;
        return e;
      }
      if (table.real_index(s.atom) >= 0) {
        e.coeffs[table.real_index(s.atom)] = 1;
        return e;
      }
      if (table.find_bool(s.atom) >= 0)
        throw ParseError("Boolean atom '" + s.atom + "' used in an arithmetic term", s.line,
                         s.col);
      throw ParseError("unknown variable '" + s.atom + "'", s.line, s.col);
    }
    if (s.kids.empty() || s.kids[0].list)
      throw ParseError("malformed arithmetic term", s.line, s.col);
    const std::string& op = s.kids[0].atom;
    if (op == "+") {
      if (s.kids.size() < 2) throw ParseError("'+' needs operands", s.line, s.col);
      for (std::size_t i = 1; i < s.kids.size(); ++i) e += parse_term(s.kids[i]);
      return e;
    }
    if (op == "-") {
      if (s.kids.size() == 2) {
        e = parse_term(s.kids[1]);
        e.negate();
        return e;
      }
      if (s.kids.size() == 3) {
        e = parse_term(s.kids[1]);
        LinearExpr rhs = parse_term(s.kids[2]);
        rhs.negate();
        e += rhs;
        return e;
      }
      throw ParseError("'-' takes one or two operands", s.line, s.col);
    }
    if (op == "*") {
      if (s.kids.size() < 2) throw ParseError("'*' needs operands", s.line, s.col);
      e.constant = 1;
      for (std::size_t i = 1; i < s.kids.size(); ++i) {
        LinearExpr f = parse_term(s.kids[i]);
        if (e.is_constant()) {
          Rat c = e.constant;
          e = f;
          e.scale(c);
        } else if (f.is_constant()) {
          e.scale(f.constant);
        } else {
          throw ParseError("nonlinear product in an arithmetic atom", s.line, s.col);
        }
      }
      return e;
    }
    throw ParseError("unknown arithmetic operator '" + op + "'", s.line, s.col);
  }

  Formula parse_atom(const Sexpr& s) const {
    const std::string& op = s.kids[0].atom;
    if (s.kids.size() != 3)
      throw ParseError("comparison '" + op + "' takes two operands", s.line, s.col);
    LinearExpr lhs = parse_term(s.kids[1]);
    LinearExpr rhs = parse_term(s.kids[2]);
    rhs.negate();
    lhs += rhs;
    Rat bound = -lhs.constant;
    std::vector<std::pair<VarId, Rat>> coeffs(lhs.coeffs.begin(), lhs.coeffs.end());
    InOp in;
    if (op == "<=") in = InOp::Le;
    else if (op == "<") in = InOp::Lt;
    else if (op == ">=") in = InOp::Ge;
    else if (op == ">") in = InOp::Gt;
    else if (op == "=") in = InOp::Eq;
    else throw ParseError("unknown comparison '" + op + "'", s.line, s.col);
    try {
      return f_lit(table.lra_literal(coeffs, in, bound));
    } catch (const Error& e) {
      throw ParseError(e.what(), s.line, s.col);
    }
  }

  Formula parse_formula(const Sexpr& s) const {
    if (!s.list) {
      if (s.atom == "true") return f_true();
      if (s.atom == "false") return f_false();
      AtomId a = table.find_bool(s.atom);
      if (a >= 0) return f_atom(a);
      if (table.real_index(s.atom) >= 0)
        throw ParseError("real variable '" + s.atom + "' used as a formula", s.line, s.col);
      throw ParseError("unknown Boolean atom '" + s.atom + "'", s.line, s.col);
    }
    if (s.kids.empty() || s.kids[0].list) throw ParseError("malformed formula", s.line, s.col);
    const std::string& op = s.kids[0].atom;
    if (op == "and" || op == "or") {
      if (s.kids.size() < 2)
        throw ParseError("'" + op + "' needs at least one operand", s.line, s.col);
      std::vector<Formula> kids;
      for (std::size_t i = 1; i < s.kids.size(); ++i) kids.push_back(parse_formula(s.kids[i]));
      return op == "and" ? f_and(std::move(kids)) : f_or(std::move(kids));
    }
    if (op == "not") {
      if (s.kids.size() != 2) throw ParseError("'not' takes one operand", s.line, s.col);
      return f_not(parse_formula(s.kids[1]));
    }
    if (op == "=>" || op == "iff") {
      if (s.kids.size() != 3) throw ParseError("'" + op + "' takes two operands", s.line, s.col);
      Formula a = parse_formula(s.kids[1]);
      Formula b = parse_formula(s.kids[2]);
      return op == "=>" ? f_implies(a, b) : f_iff(a, b);
    }
    if (op == "<=" || op == "<" || op == ">=" || op == ">" || op == "=") return parse_atom(s);
    throw ParseError("unknown formula operator '" + op + "'", s.line, s.col);
  }

  Weight parse_weight(const Sexpr& s) const {
    if (!s.list) {
      if (auto q = rat_parse(s.atom)) return w_const(*q);
      VarId v = table.real_index(s.atom);
      if (v >= 0) return w_var(v);
      throw ParseError("unknown weight symbol '" + s.atom + "'", s.line, s.col);
    }
    if (s.kids.empty() || s.kids[0].list) throw ParseError("malformed weight", s.line, s.col);
    const std::string& op = s.kids[0].atom;
    auto fold = [&](auto combine) {
      Weight acc = parse_weight(s.kids[1]);
      for (std::size_t i = 2; i < s.kids.size(); ++i) acc = combine(acc, parse_weight(s.kids[i]));
      return acc;
    };
    if (op == "+") {
      if (s.kids.size() < 3) throw ParseError("'+' needs two operands", s.line, s.col);
      return fold(w_add);
    }
    if (op == "*") {
      if (s.kids.size() < 3) throw ParseError("'*' needs two operands", s.line, s.col);
      return fold(w_mul);
    }
    if (op == "-") {
      if (s.kids.size() != 3) throw ParseError("'-' takes two operands", s.line, s.col);
      return w_sub(parse_weight(s.kids[1]), parse_weight(s.kids[2]));
    }
    if (op == "pow") {
      if (s.kids.size() != 3 || s.kids[2].list)
        throw ParseError("'pow' takes a weight and an exponent", s.line, s.col);
      auto q = rat_parse(s.kids[2].atom);
      if (!q || q->get_den() != 1 || *q < 0)
        throw ParseError("'pow' exponent must be a nonnegative integer", s.kids[2].line,
                         s.kids[2].col);
      return w_pow(parse_weight(s.kids[1]), static_cast<unsigned>(q->get_num().get_ui()));
    }
    if (op == "gauss") {
      if (s.kids.size() != 4) throw ParseError("'gauss' takes mean, stddev, arg", s.line, s.col);
      std::vector<Weight> args;
      for (std::size_t i = 1; i < s.kids.size(); ++i) args.push_back(parse_weight(s.kids[i]));
      return w_func("gauss", std::move(args));
    }
    if (op == "ite") {
      if (s.kids.size() != 4)
        throw ParseError("'ite' takes a condition and two weights", s.line, s.col);
      return w_ite(parse_formula(s.kids[1]), parse_weight(s.kids[2]), parse_weight(s.kids[3]));
    }
    throw ParseError("unknown weight operator '" + op + "'", s.line, s.col);
  }
};

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

WmiProblem parse_problem(const std::string& text) {
  Reader reader(text);
  Sexpr root = reader.read();
  if (!root.is("problem")) throw ParseError("expected (problem ...)", root.line, root.col);

  WmiProblem p;
  p.table = std::make_shared<AtomTable>();
  p.phi = f_true();
  p.chi = f_true();
  p.weight = w_const(1);
  ProblemParser pp{*p.table};

  const Sexpr* support = nullptr;
  const Sexpr* query = nullptr;
  const Sexpr* weight = nullptr;

  for (std::size_t i = 1; i < root.kids.size(); ++i) {
    const Sexpr& sec = root.kids[i];
    if (sec.is("reals")) {
      for (std::size_t j = 1; j < sec.kids.size(); ++j) {
        const Sexpr& d = sec.kids[j];
        if (!d.list || d.kids.size() != 3 || d.kids[0].list || !valid_name(d.kids[0].atom))
          throw ParseError("real declaration must be (name lo hi)", d.line, d.col);
        auto lo = rat_parse(d.kids[1].atom);
        auto hi = rat_parse(d.kids[2].atom);
        if (!lo || !hi) throw ParseError("malformed bound", d.line, d.col);
        if (*hi < *lo) throw ParseError("upper bound below lower bound", d.line, d.col);
        if (p.table->real_index(d.kids[0].atom) >= 0)
          throw ParseError("duplicate real '" + d.kids[0].atom + "'", d.line, d.col);
        p.table->add_real(d.kids[0].atom);
        p.bounds.emplace_back(*lo, *hi);
      }
    } else if (sec.is("bools")) {
      for (std::size_t j = 1; j < sec.kids.size(); ++j) {
        const Sexpr& d = sec.kids[j];
        if (d.list || !valid_name(d.atom))
          throw ParseError("Boolean declaration must be a name", d.line, d.col);
        if (p.table->find_bool(d.atom) >= 0 || p.table->real_index(d.atom) >= 0)
          throw ParseError("duplicate variable '" + d.atom + "'", d.line, d.col);
        p.bools.push_back(p.table->bool_atom(d.atom));
      }
    } else if (sec.is("support")) {
      if (sec.kids.size() != 2) throw ParseError("(support <formula>)", sec.line, sec.col);
      support = &sec.kids[1];
    } else if (sec.is("query")) {
      if (sec.kids.size() != 2) throw ParseError("(query <formula>)", sec.line, sec.col);
      query = &sec.kids[1];
    } else if (sec.is("weight")) {
      if (sec.kids.size() != 2) throw ParseError("(weight <weight>)", sec.line, sec.col);
      weight = &sec.kids[1];
    } else {
      throw ParseError("unknown problem section", sec.line, sec.col);
    }
  }

  // Atom interning order: support first, then the bounds, then query and weight.
  if (support) p.phi = pp.parse_formula(*support);
  std::vector<Formula> box;
  for (VarId v = 0; v < p.table->n_reals(); ++v) {
    box.push_back(f_lit(p.table->lra_literal({{v, Rat(1)}}, InOp::Ge, p.bounds[v].first)));
    box.push_back(f_lit(p.table->lra_literal({{v, Rat(1)}}, InOp::Le, p.bounds[v].second)));
  }
  p.chi = f_and(std::move(box));
  if (query) p.query = pp.parse_formula(*query);
  if (weight) p.weight = pp.parse_weight(*weight);
  return p;
}

Formula parse_formula_text(const std::string& text, AtomTable& table) {
  Reader reader(text);
  Sexpr s = reader.read();
  ProblemParser pp{table};
  return pp.parse_formula(s);
}

namespace {

std::string sexpr_of_term(const std::vector<std::pair<VarId, Rat>>& coeffs, const AtomTable& t) {
  std::vector<std::string> parts;
  for (const auto& [v, c] : coeffs) {
    if (c == 1)
      parts.push_back(t.real_name(v));
    else
      parts.push_back("(* " + c.get_str() + " " + t.real_name(v) + ")");
  }
  if (parts.size() == 1) return parts[0];
  std::string s = "(+";
  for (const auto& x : parts) s += " " + x;
  return s + ")";
}

std::string sexpr_of_atom(AtomId a, const AtomTable& t) {
  const AtomData& d = t.atom(a);
  if (d.kind == AtomKind::Bool) return d.name;
  std::string op = d.op == LraOp::Le ? "<=" : d.op == LraOp::Lt ? "<" : "=";
  return "(" + op + " " + sexpr_of_term(d.coeffs, t) + " " + d.rhs.get_str() + ")";
}

}  // namespace

std::string sexpr_of_formula(const Formula& f, const AtomTable& t) {
  switch (f->kind) {
    case FKind::True: return "true";
    case FKind::False: return "false";
    case FKind::Atom: return sexpr_of_atom(f->atom, t);
    case FKind::Not: return "(not " + sexpr_of_formula(f->kids[0], t) + ")";
    case FKind::And:
    case FKind::Or: {
      std::string s = f->kind == FKind::And ? "(and" : "(or";
      for (const auto& k : f->kids) s += " " + sexpr_of_formula(k, t);
      return s + ")";
    }
    case FKind::Implies:
      return "(=> " + sexpr_of_formula(f->kids[0], t) + " " + sexpr_of_formula(f->kids[1], t) +
             ")";
    case FKind::Iff:
      return "(iff " + sexpr_of_formula(f->kids[0], t) + " " + sexpr_of_formula(f->kids[1], t) +
             ")";
  }
  return "?";
}

std::string sexpr_of_weight(const Weight& w, const AtomTable& t) {
  switch (w->kind) {
    case WKind::Const: return w->value.get_str();
    case WKind::Var: return t.real_name(w->var);
    case WKind::Add:
      return "(+ " + sexpr_of_weight(w->args[0], t) + " " + sexpr_of_weight(w->args[1], t) + ")";
    case WKind::Sub:
      return "(- " + sexpr_of_weight(w->args[0], t) + " " + sexpr_of_weight(w->args[1], t) + ")";
    case WKind::Mul:
      return "(* " + sexpr_of_weight(w->args[0], t) + " " + sexpr_of_weight(w->args[1], t) + ")";
    case WKind::Pow:
      return "(pow " + sexpr_of_weight(w->args[0], t) + " " + std::to_string(w->exponent) + ")";
    case WKind::Func: {
      std::string s = "(" + w->func;
      for (const auto& a : w->args) s += " " + sexpr_of_weight(a, t);
      return s + ")";
    }
    case WKind::Ite:
      return "(ite " + sexpr_of_formula(w->cond, t) + " " + sexpr_of_weight(w->args[0], t) + " " +
             sexpr_of_weight(w->args[1], t) + ")";
  }
  return "?";
}

std::string print_problem(const WmiProblem& p) {
  std::ostringstream os;
  const AtomTable& t = *p.table;
  os << "(problem\n  (reals";
  for (VarId v = 0; v < t.n_reals(); ++v)
    os << " (" << t.real_name(v) << " " << p.bounds[v].first.get_str() << " "
       << p.bounds[v].second.get_str() << ")";
  os << ")\n  (bools";
  for (AtomId a : p.bools) os << " " << t.atom(a).name;
  os << ")\n  (support " << sexpr_of_formula(p.phi, t) << ")\n";
  if (p.query) os << "  (query " << sexpr_of_formula(*p.query, t) << ")\n";
  os << "  (weight " << sexpr_of_weight(p.weight, t) << "))\n";
  return os.str();
}

bool weight_equal(const Weight& a, const Weight& b) {
  if (a->kind != b->kind || a->args.size() != b->args.size()) return false;
  switch (a->kind) {
    case WKind::Const:
      if (a->value != b->value) return false;
      break;
    case WKind::Var:
      if (a->var != b->var) return false;
      break;
    case WKind::Pow:
      if (a->exponent != b->exponent) return false;
      break;
    case WKind::Func:
      if (a->func != b->func) return false;
      break;
    case WKind::Ite:
      if (!f_equal(a->cond, b->cond)) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!weight_equal(a->args[i], b->args[i])) return false;
  return true;
}

bool problem_equal(const WmiProblem& a, const WmiProblem& b) {
  if (a.table->n_reals() != b.table->n_reals()) return false;
  for (VarId v = 0; v < a.table->n_reals(); ++v)
    if (a.table->real_name(v) != b.table->real_name(v)) return false;
  if (a.bounds != b.bounds) return false;
  if (a.bools.size() != b.bools.size()) return false;
  for (std::size_t i = 0; i < a.bools.size(); ++i)
    if (a.table->atom(a.bools[i]).name != b.table->atom(b.bools[i]).name) return false;
  if (!f_equal(a.phi, b.phi) || !f_equal(a.chi, b.chi)) return false;
  if (a.query.has_value() != b.query.has_value()) return false;
  if (a.query && !f_equal(*a.query, *b.query)) return false;
  return weight_equal(a.weight, b.weight);
}

}  // namespace wmi

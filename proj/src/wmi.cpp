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

#include "wmi.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "rng.hpp"

namespace wmi {

namespace {

// Literal conjuncts of the top-level conjunction (the bounds relaxation).
std::vector<Literal> top_literals(const Formula& f) {
  std::vector<Literal> out;
  Formula s = simplify(f);
  if (is_literal(s)) {
    out.push_back(as_literal(s));
    return out;
  }
  if (s->kind == FKind::And) {
    for (const auto& k : s->kids)
      if (is_literal(k)) out.push_back(as_literal(k));
  }
  return out;
}

}  // namespace

void WmiProblem::validate() const {
  if (is_false(simplify(f_and({phi, chi})))) return;  // empty support integrates to 0
  std::vector<Literal> lits = top_literals(f_and({phi, chi}));
  std::vector<LraConstraint> rows = constraints_of(lits, *table, /*drop_disequalities=*/true);
  for (VarId v = 0; v < table->n_reals(); ++v) {
    std::vector<std::pair<VarId, Rat>> obj{{v, Rat(1)}};
    LpResult lo = lp_extremum(rows, obj, false, table->n_reals());
    LpResult hi = lp_extremum(rows, obj, true, table->n_reals());
    if (lo.kind == LpResult::Unbounded || hi.kind == LpResult::Unbounded)
      throw UnboundedError("real variable '" + table->real_name(v) +
                           "' is not bounded by the support; the integral would diverge");
  }
}

Labelled label_conditions(const WmiProblem& p, AtomTable& table) {
  Labelled out;
  out.a_star = p.bools;
  std::vector<Formula> bics;
  std::vector<std::pair<Formula, AtomId>> repl;

  int k = 0;
  for (const Formula& psi : conditions(p.weight)) {
    if (is_literal(psi) && table.atom(as_literal(psi).atom).kind == AtomKind::Bool &&
        !table.atom(as_literal(psi).atom).is_label)
      continue;  // Boolean literal on A stays as it is
    AtomId b = table.fresh_label("B@" + std::to_string(++k));
    out.a_star.push_back(b);
    out.fresh.push_back(b);
    bics.push_back(f_iff(f_atom(b), psi));
    repl.emplace_back(psi, b);
  }

  std::function<Weight(const Weight&)> rewrite = [&](const Weight& w) -> Weight {
    if (w->kind == WKind::Ite) {
      Formula cond = w->cond;
      for (const auto& [psi, b] : repl)
        if (f_equal(psi, cond)) {
          cond = f_atom(b);
          break;
        }
      return w_ite(cond, rewrite(w->args[0]), rewrite(w->args[1]));
    }
    if (w->args.empty()) return w;
    std::vector<Weight> args;
    for (const auto& a : w->args) args.push_back(rewrite(a));
    Weight r;
    switch (w->kind) {
      case WKind::Add: r = w_add(args[0], args[1]); break;
      case WKind::Sub: r = w_sub(args[0], args[1]); break;
      case WKind::Mul: r = w_mul(args[0], args[1]); break;
      case WKind::Pow: r = w_pow(args[0], w->exponent); break;
      case WKind::Func: r = w_func(w->func, args); break;
      default: r = w;
    }
    return r;
  };

  out.w_star = repl.empty() ? p.weight : rewrite(p.weight);
  std::vector<Formula> conj{p.phi, p.chi};
  conj.insert(conj.end(), bics.begin(), bics.end());
  out.phi_star = f_and(std::move(conj));
  return out;
}

namespace {

struct IntegralTask {
  Polytope polytope;
  Weight weight;
  TruthAssignment mu_bool;
  std::uint64_t multiplicity;
  std::uint64_t salt;
  TruthAssignment display;  // reported in the breakdown
};

// Accumulates integrals, optionally fanning a bounded batch out to worker
// threads. Exact sums are order-independent; MC values are merged in emission
// order so results do not depend on the worker count.
class Accumulator {
public:
  Accumulator(Integrator& integrator, WmiResult& result, const RunOptions& opts)
      : integrator_(integrator), result_(result), opts_(opts) {}

  void push(IntegralTask task) {
    tasks_.push_back(std::move(task));
    if (tasks_.size() >= 64) flush();
  }

  void flush() {
    if (tasks_.empty()) return;
    std::vector<IntegralValue> values(tasks_.size());
    int workers = std::max(1, opts_.workers);
    if (workers == 1 || tasks_.size() == 1) {
      for (std::size_t i = 0; i < tasks_.size(); ++i)
        values[i] = integrator_.integrate(tasks_[i].polytope, tasks_[i].weight,
                                          tasks_[i].mu_bool, tasks_[i].salt);
    } else {
      std::vector<std::thread> pool;
      std::atomic<std::size_t> cursor{0};
      std::exception_ptr error;
      std::mutex error_mu;
      for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
          while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= tasks_.size()) return;
            try {
              values[i] = integrator_.integrate(tasks_[i].polytope, tasks_[i].weight,
                                                tasks_[i].mu_bool, tasks_[i].salt);
            } catch (...) {
              std::lock_guard<std::mutex> lk(error_mu);
              if (!error) error = std::current_exception();
              return;
            }
          }
        });
      for (auto& th : pool) th.join();
      if (error) std::rethrow_exception(error);
    }
    for (std::size_t i = 0; i < tasks_.size(); ++i) {
      const auto& t = tasks_[i];
      if (values[i].exact)
        result_.value_rat += Rat(static_cast<long>(t.multiplicity)) * values[i].rational;
      else
        result_.value_mc += static_cast<double>(t.multiplicity) * values[i].approx;
      if (opts_.keep_breakdown)
        result_.breakdown.push_back({t.display, t.multiplicity, values[i]});
    }
    tasks_.clear();
  }

private:
  Integrator& integrator_;
  WmiResult& result_;
  const RunOptions& opts_;
  std::vector<IntegralTask> tasks_;
};

std::vector<AtomId> boolean_decision_order(const WmiProblem& p, const AtomTable& table,
                                           const std::vector<AtomId>& bools,
                                           const RunOptions& opts) {
  if (opts.order_override.empty()) return bools;
  std::vector<AtomId> order;
  for (const auto& name : opts.order_override) {
    AtomId a = table.find_bool(name);
    if (a < 0) throw UnknownVariableError("unknown atom in decision order: " + name);
    order.push_back(a);
  }
  for (AtomId a : bools)
    if (std::find(order.begin(), order.end(), a) == order.end()) order.push_back(a);
  return order;
}

// Solver-side CNF-ization is Tseitin, as in the reference SMT stack; labels
// are hidden from the projection.
CnfFormula encode_for_enum(const Formula& f, AtomTable& table, const std::string& prefix) {
  return cnf_tseitin(f, table, prefix);
}

std::vector<Literal> lra_literals_of(const TruthAssignment& mu, const AtomTable& table) {
  std::vector<Literal> out;
  for (const auto& l : mu.literals())
    if (table.atom(l.atom).kind == AtomKind::Lra) out.push_back(l);
  return out;
}

TruthAssignment merge(const TruthAssignment& a, const TruthAssignment& b) {
  TruthAssignment m = a;
  for (const auto& l : b.literals()) m.push(l);
  return m;
}

void finish(WmiResult& r, Integrator& integrator) {
  r.exact = integrator.exact();
  r.integrator = integrator.kind();
  if (auto* mc = dynamic_cast<McIntegrator*>(&integrator)) {
    r.samples = mc->samples();
    r.seed = mc->seed();
  }
}

}  // namespace

WmiResult wmi_pa(const WmiProblem& p, Integrator& integrator, AtomTable& table,
                 const RunOptions& opts) {
  p.validate();
  WmiResult result;
  result.algorithm = "pa";
  Accumulator acc(integrator, result, opts);

  Labelled lab = label_conditions(p, table);
  CnfFormula cnf = encode_for_enum(lab.phi_star, table, "T@");

  EnumRequest req;
  req.cnf = cnf;
  req.relevant = lab.a_star;
  req.mode = EnumMode::Total;
  req.decision_order = boolean_decision_order(p, table, lab.a_star, opts);
  req.trace = opts.trace;
  EnumStream outer(std::move(req), table);

  while (auto mu_star = outer.next()) {
    Formula rho = simplify(residual(lab.phi_star, *mu_star));
    Weight w_mu = restrict_weight(lab.w_star, *mu_star);
    if (!is_fi(w_mu))
      throw SkeletonFiViolation("weight not FI after a total assignment over A*");
    if (is_literal_conjunction(rho)) {
      std::vector<Literal> lits = conjunction_literals(rho);
      IntegralTask t{polytope_from(lits, table), w_mu, *mu_star, 1, result.n_integrals,
                     opts.keep_breakdown ? *mu_star : TruthAssignment()};
      ++result.n_integrals;
      acc.push(std::move(t));
      continue;
    }
    // TA over the residual's atoms; fresh CNF labels stay hidden.
    EnumRequest inner_req;
    inner_req.cnf = encode_for_enum(rho, table, "T@r" + std::to_string(result.n_integrals) + "_");
    std::vector<AtomId> rho_atoms = atoms(rho);
    inner_req.relevant = rho_atoms;
    inner_req.mode = EnumMode::Partial;
    inner_req.decision_order = rho_atoms;
    inner_req.trace = opts.trace;
    EnumStream inner(std::move(inner_req), table);
    while (auto mu_lra = inner.next()) {
      std::vector<Literal> lits = lra_literals_of(*mu_lra, table);
      IntegralTask t{polytope_from(lits, table), w_mu, *mu_star, 1, result.n_integrals,
                     opts.keep_breakdown ? merge(*mu_star, *mu_lra) : TruthAssignment()};
      ++result.n_integrals;
      acc.push(std::move(t));
    }
  }
  acc.flush();
  finish(result, integrator);
  return result;
}

WmiResult sae4wmi(const WmiProblem& p, Integrator& integrator, AtomTable& table,
                  const RunOptions& opts) {
  p.validate();
  WmiResult result;
  result.algorithm = "sae";
  Accumulator acc(integrator, result, opts);

  SkeletonOutput sk = build_skeleton(p.weight, table, opts.skeleton_labels);
  Formula sk_formula = cnf_to_formula(sk.cnf);
  Formula phi_sss = f_and({p.phi, p.chi, sk_formula});

  CnfFormula cnf = encode_for_enum(f_and({p.phi, p.chi}), table, "T@");
  cnf.append(sk.cnf);

  std::size_t n_bools = p.bools.size();

  EnumRequest req;
  req.cnf = cnf;
  req.relevant = p.bools;
  req.mode = EnumMode::Partial;
  req.decision_order = boolean_decision_order(p, table, p.bools, opts);
  req.trace = opts.trace;
  EnumStream outer(std::move(req), table);

  while (auto mu_a = outer.next()) {
    std::uint64_t k = n_bools - mu_a->size();
    Formula rho = simplify(residual(phi_sss, *mu_a));
    if (is_literal_conjunction(rho)) {
      std::vector<Literal> domain;
      for (const auto& l : conjunction_literals(rho)) {
        const AtomData& d = table.atom(l.atom);
        if (d.kind == AtomKind::Lra) {
          domain.push_back(l);
        } else if (!d.is_label) {
          throw Error("free Boolean literal in a literal-conjunction residual");
        }
      }
      Weight w_mu = restrict_weight(p.weight, *mu_a);
      if (!is_fi(w_mu))
        throw SkeletonFiViolation("restricted weight still has a condition on the fast path");
      IntegralTask t{polytope_from(domain, table), w_mu, *mu_a, std::uint64_t(1) << k,
                     result.n_integrals, opts.keep_breakdown ? *mu_a : TruthAssignment()};
      ++result.n_integrals;
      acc.push(std::move(t));
      continue;
    }

    EnumRequest inner_req;
    inner_req.cnf = encode_for_enum(rho, table, "T@r" + std::to_string(result.n_integrals) + "_");
    std::vector<AtomId> rel;
    std::vector<AtomId> rho_bools;
    for (AtomId a : atoms(rho)) {
      if (table.atom(a).is_label) continue;
      rel.push_back(a);
      if (table.atom(a).kind == AtomKind::Bool) rho_bools.push_back(a);
    }
    inner_req.relevant = rel;
    inner_req.mode = EnumMode::Partial;
    inner_req.decision_order = rho_bools;  // Booleans first, LRA in atom order
    inner_req.trace = opts.trace;
    EnumStream inner(std::move(inner_req), table);
    while (auto mu = inner.next()) {
      std::size_t boolean_assigned = 0;
      for (const auto& l : mu->literals())
        if (table.atom(l.atom).kind == AtomKind::Bool) ++boolean_assigned;
      if (boolean_assigned > k) throw Error("inner assignment exceeds the unassigned Booleans");
      std::uint64_t k2 = k - boolean_assigned;
      TruthAssignment mu_full = merge(*mu_a, *mu);
      Weight w_mu = restrict_weight(p.weight, mu_full);
      if (!is_fi(w_mu))
        throw SkeletonFiViolation("restricted weight still has a condition after enumeration");
      std::vector<Literal> domain = lra_literals_of(*mu, table);
      IntegralTask t{polytope_from(domain, table), w_mu, mu_full, std::uint64_t(1) << k2,
                     result.n_integrals, opts.keep_breakdown ? mu_full : TruthAssignment()};
      ++result.n_integrals;
      acc.push(std::move(t));
    }
  }
  acc.flush();
  finish(result, integrator);
  return result;
}

WmiResult oracle_wmi(const WmiProblem& p, Integrator& integrator, AtomTable& table,
                     const RunOptions& opts) {
  p.validate();
  WmiResult result;
  result.algorithm = "oracle";

  Formula support = f_and({p.phi, p.chi});
  std::vector<AtomId> lra;
  {
    std::set<AtomId> seen;
    auto grab = [&](const Formula& f) {
      for (AtomId a : atoms(f))
        if (table.atom(a).kind == AtomKind::Lra && seen.insert(a).second) lra.push_back(a);
    };
    grab(support);
    for (const auto& c : conditions(p.weight)) grab(c);
  }
  std::size_t m = p.bools.size();
  std::size_t l = lra.size();
  if (m + l > 16)
    throw TooLargeError("oracle guard exceeded: " + std::to_string(m + l) + " atoms");

  std::map<std::string, IntegralValue> memo;
  bool use_memo = integrator.exact();

  for (std::uint64_t bm = 0; bm < (std::uint64_t(1) << m); ++bm) {
    std::vector<Literal> blits;
    for (std::size_t i = 0; i < m; ++i) blits.emplace_back(p.bools[i], ((bm >> i) & 1) != 0);
    TruthAssignment mu_a(blits);
    Formula fa = residual(support, mu_a);
    if (is_false(fa)) continue;
    for (std::uint64_t lm = 0; lm < (std::uint64_t(1) << l); ++lm) {
      std::vector<Literal> llits;
      for (std::size_t i = 0; i < l; ++i) llits.emplace_back(lra[i], ((lm >> i) & 1) != 0);
      TruthAssignment nu(llits);
      if (!prop_satisfies(nu, fa)) continue;
      if (!lra_check(llits, table).sat) continue;
      TruthAssignment mu = merge(mu_a, nu);
      Weight w_mu = restrict_weight(p.weight, mu);
      if (!is_fi(w_mu)) throw Error("oracle: conditions not decided by the atom grid");
      Polytope poly = polytope_from(llits, table);
      IntegralValue v;
      if (use_memo) {
        std::string key = poly.key() + "#" + as_polynomial(w_mu, p.n_reals()).key();
        auto it = memo.find(key);
        if (it != memo.end()) {
          v = it->second;
        } else {
          v = integrator.integrate(poly, w_mu, mu, result.n_integrals);
          ++result.n_integrals;
          memo.emplace(std::move(key), v);
        }
      } else {
        v = integrator.integrate(poly, w_mu, mu, result.n_integrals);
        ++result.n_integrals;
      }
      if (v.exact)
        result.value_rat += v.rational;
      else
        result.value_mc += v.approx;
      if (opts.keep_breakdown) result.breakdown.push_back({mu, 1, v});
    }
  }
  finish(result, integrator);
  return result;
}

double mc_oracle(const WmiProblem& p, std::uint64_t samples, std::uint64_t seed) {
  p.validate();
  std::vector<Literal> lits = top_literals(f_and({p.phi, p.chi}));
  std::vector<LraConstraint> rows = constraints_of(lits, *p.table, true);
  int d = p.table->n_reals();
  std::vector<double> lo(d), hi(d);
  double box_vol = 1;
  for (VarId v = 0; v < d; ++v) {
    std::vector<std::pair<VarId, Rat>> obj{{v, Rat(1)}};
    LpResult l = lp_extremum(rows, obj, false, d);
    LpResult h = lp_extremum(rows, obj, true, d);
    if (l.kind != LpResult::Optimal || h.kind != LpResult::Optimal)
      throw UnboundedError("mc oracle needs a bounded box");
    lo[v] = rat_double(l.value);
    hi[v] = rat_double(h.value);
    box_vol *= hi[v] - lo[v];
  }
  Formula support = f_and({p.phi, p.chi});
  std::size_t m = p.bools.size();
  Rng rng(seed);
  double sum = 0;
  std::vector<double> x(d);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (int i = 0; i < d; ++i) x[i] = rng.uniform(lo[i], hi[i]);
    std::vector<Literal> blits;
    for (std::size_t i = 0; i < m; ++i) blits.emplace_back(p.bools[i], rng.coin());
    TruthAssignment mu(blits);
    if (!formula_truth_at(support, x, mu, *p.table)) continue;
    sum += evaluate(p.weight, x, mu, *p.table);
  }
  double scale = std::pow(2.0, static_cast<double>(m));
  return box_vol * scale * sum / static_cast<double>(samples);
}

double query_probability(const WmiProblem& p, const Formula& delta, const std::string& algorithm,
                         Integrator& integrator, const RunOptions& opts) {
  WmiProblem num = p;
  num.phi = simplify(f_and({p.phi, delta}));

  auto run_one = [&](const WmiProblem& prob) -> WmiResult {
    AtomTable t = *prob.table;
    if (algorithm == "pa") return wmi_pa(prob, integrator, t, opts);
    if (algorithm == "oracle") return oracle_wmi(prob, integrator, t, opts);
    return sae4wmi(prob, integrator, t, opts);
  };

  WmiResult den = run_one(p);
  WmiResult num_r = run_one(num);
  if (den.exact) {
    if (den.value_rat == 0) throw ZeroPartitionError("WMI of the support is zero");
    return rat_double(num_r.value_rat / den.value_rat);
  }
  if (den.value_mc == 0) throw ZeroPartitionError("WMI estimate of the support is zero");
  return num_r.value_mc / den.value_mc;
}

}  // namespace wmi

#include <doctest.h>

#include <set>

#include "cnf.hpp"
#include "rng.hpp"

using namespace wmi;

namespace {

// Truth-table model count of an arbitrary formula over its own atoms.
long models_of(const Formula& f) {
  std::vector<AtomId> as = atoms(f);
  long n = 0;
  for (long m = 0; m < (1L << as.size()); ++m) {
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < as.size(); ++i) lits.emplace_back(as[i], (m >> i & 1) != 0);
    if (prop_satisfies(TruthAssignment(lits), f)) ++n;
  }
  return n;
}

// Model count of exists labels . cnf, projected on the original atoms.
long projected_models_of(const CnfFormula& cnf, const std::vector<AtomId>& orig) {
  std::set<AtomId> labels(cnf.labels.begin(), cnf.labels.end());
  std::vector<AtomId> all = orig;
  for (AtomId b : cnf.labels) all.push_back(b);
  std::set<std::vector<bool>> projected;
  for (long m = 0; m < (1L << all.size()); ++m) {
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < all.size(); ++i) lits.emplace_back(all[i], (m >> i & 1) != 0);
    TruthAssignment mu(lits);
    bool ok = true;
    for (const auto& c : cnf.clauses) {
      bool sat = false;
      for (const auto& l : c.lits)
        if (mu.assigns(l.atom) && mu.value(l.atom) == l.positive) {
          sat = true;
          break;
        }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<bool> key;
    for (AtomId a : orig) key.push_back(mu.value(a));
    projected.insert(key);
  }
  return static_cast<long>(projected.size());
}

Formula random_formula(Rng& rng, const std::vector<AtomId>& as, int depth) {
  if (depth == 0 || rng.below(4) == 0) {
    Formula a = f_atom(as[rng.below(as.size())]);
    return rng.coin() ? a : f_not(a);
  }
  switch (rng.below(5)) {
    case 0: return f_and({random_formula(rng, as, depth - 1), random_formula(rng, as, depth - 1)});
    case 1: return f_or({random_formula(rng, as, depth - 1), random_formula(rng, as, depth - 1)});
    case 2: return f_not(random_formula(rng, as, depth - 1));
    case 3:
      return f_implies(random_formula(rng, as, depth - 1), random_formula(rng, as, depth - 1));
    default: return f_iff(random_formula(rng, as, depth - 1), random_formula(rng, as, depth - 1));
  }
}

}  // namespace

TEST_CASE("classic cnf: single DeMorgan step") {
  AtomTable t;
  AtomId a = t.bool_atom("a");
  AtomId b = t.bool_atom("b");
  AtomId c = t.bool_atom("c");
  Formula f = f_or({f_atom(a), f_and({f_atom(b), f_atom(c)})});
  CnfFormula cnf = cnf_classic(f);
  REQUIRE(cnf.clauses.size() == 2);
  CHECK(cnf.has_clause(normalize_lits({Literal(a, true), Literal(b, true)})));
  CHECK(cnf.has_clause(normalize_lits({Literal(a, true), Literal(c, true)})));
}

TEST_CASE("classic cnf: a clause maps to itself") {
  AtomTable t;
  AtomId a = t.bool_atom("a");
  AtomId b = t.bool_atom("b");
  Formula f = f_or({f_atom(a), f_not(f_atom(b))});
  CnfFormula cnf = cnf_classic(f);
  REQUIRE(cnf.clauses.size() == 1);
  CHECK(cnf.clauses[0].lits == normalize_lits({Literal(a, true), Literal(b, false)}));
}

TEST_CASE("classic cnf of an iff chain matches the truth-table oracle size") {
  AtomTable t;
  std::vector<AtomId> as;
  for (int i = 0; i < 4; ++i) as.push_back(t.bool_atom("p" + std::to_string(i)));
  // p0 iff (p1 iff (p2 iff p3)): every prime implicate has full support, so the
  // irredundant CNF has exactly one clause per falsifying row.
  Formula f = f_iff(f_atom(as[0]), f_iff(f_atom(as[1]), f_iff(f_atom(as[2]), f_atom(as[3]))));
  long falsifying = (1L << 4) - models_of(f);
  CHECK(falsifying == 8);  // 2^(n-1) * 2 for an n=3 iff chain
  CnfFormula cnf = cnf_classic(f);
  CHECK(static_cast<long>(cnf.clauses.size()) == falsifying);
  // Equivalence against the truth table.
  std::vector<AtomId> orig = atoms(f);
  CHECK(projected_models_of(cnf, orig) == models_of(f));
}

TEST_CASE("plaisted: literal maps to itself, no labels") {
  AtomTable t;
  AtomId a = t.bool_atom("a");
  CnfFormula cnf = cnf_plaisted(f_not(f_atom(a)), t, "T");
  CHECK(cnf.labels.empty());
  REQUIRE(cnf.clauses.size() == 1);
  CHECK(cnf.clauses[0].lits == std::vector<Literal>{Literal(a, false)});
}

TEST_CASE("plaisted labels only the complex disjunct") {
  AtomTable t;
  AtomId a = t.bool_atom("a");
  AtomId b = t.bool_atom("b");
  AtomId c = t.bool_atom("c");
  Formula f = f_or({f_atom(a), f_and({f_atom(b), f_atom(c)})});
  CnfFormula cnf = cnf_plaisted(f, t, "T");
  REQUIRE(cnf.labels.size() == 1);
  AtomId lbl = cnf.labels[0];
  REQUIRE(cnf.clauses.size() == 3);
  CHECK(cnf.has_clause(normalize_lits({Literal(a, true), Literal(lbl, true)})));
  CHECK(cnf.has_clause(normalize_lits({Literal(lbl, false), Literal(b, true)})));
  CHECK(cnf.has_clause(normalize_lits({Literal(lbl, false), Literal(c, true)})));
}

TEST_CASE("labelling cnfs preserve projected model counts on random formulas") {
  Rng rng(7);
  AtomTable t;
  std::vector<AtomId> as;
  for (int i = 0; i < 6; ++i) as.push_back(t.bool_atom("q" + std::to_string(i)));
  for (int round = 0; round < 50; ++round) {
    Formula f = random_formula(rng, as, 3);
    std::vector<AtomId> orig = atoms(f);
    long expect = models_of(f);

    AtomTable t1 = t;
    CnfFormula ts = cnf_tseitin(f, t1, "Ts" + std::to_string(round) + "_");
    CHECK(projected_models_of(ts, orig) == expect);

    AtomTable t2 = t;
    CnfFormula pg = cnf_plaisted(f, t2, "Tp" + std::to_string(round) + "_");
    CHECK(projected_models_of(pg, orig) == expect);

    CnfFormula cl = cnf_classic(f);
    CHECK(cl.labels.empty());
    CHECK(projected_models_of(cl, orig) == expect);
  }
}

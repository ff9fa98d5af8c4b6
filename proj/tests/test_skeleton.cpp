#include <doctest.h>

#include <set>

#include "gen.hpp"
#include "parse.hpp"
#include "skeleton.hpp"

using namespace wmi;

namespace {

bool clause_set_contains(const CnfFormula& cnf, std::vector<Literal> lits) {
  return cnf.has_clause(normalize_lits(std::move(lits)));
}

// Every total assignment over the non-label atoms extends to a model of the
// skeleton for some label assignment (validity of exists B . sk).
bool skeleton_valid(const SkeletonOutput& sk, const AtomTable& t) {
  std::set<AtomId> label_set;
  for (const auto& [b, cond] : sk.labels) label_set.insert(b);
  for (const auto& c : sk.cnf.clauses)
    for (const auto& l : c.lits)
      if (t.atom(l.atom).is_label) label_set.insert(l.atom);
  std::vector<AtomId> main_atoms, labels(label_set.begin(), label_set.end());
  {
    std::set<AtomId> seen;
    for (const auto& c : sk.cnf.clauses)
      for (const auto& l : c.lits)
        if (!label_set.count(l.atom) && seen.insert(l.atom).second) main_atoms.push_back(l.atom);
  }
  if (main_atoms.size() + labels.size() > 20) return false;  // guard
  auto satisfied = [&](const TruthAssignment& mu) {
    for (const auto& c : sk.cnf.clauses) {
      bool ok = false;
      for (const auto& l : c.lits)
        if (mu.assigns(l.atom) && mu.value(l.atom) == l.positive) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  };
  for (long m = 0; m < (1L << main_atoms.size()); ++m) {
    bool found = false;
    for (long lm = 0; lm < (1L << labels.size()) && !found; ++lm) {
      std::vector<Literal> lits;
      for (std::size_t i = 0; i < main_atoms.size(); ++i)
        lits.emplace_back(main_atoms[i], (m >> i & 1) != 0);
      for (std::size_t i = 0; i < labels.size(); ++i)
        lits.emplace_back(labels[i], (lm >> i & 1) != 0);
      if (satisfied(TruthAssignment(lits))) found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("skeleton of the two-Boolean example tree: the five branch clauses") {
  WmiProblem p = parse_problem(R"((problem
    (reals (x1 0 2) (x2 0 3))
    (bools A1 A2)
    (support true)
    (weight (ite A1
              (ite (>= x1 1)
                (ite (>= x2 1) (* (pow x1 2) x2) (* x1 x2))
                (ite (>= x2 2) (+ x1 x2) 1))
              (ite A2 x2 2)))))");
  AtomTable t = *p.table;
  SkeletonOutput sk = build_skeleton(p.weight, t);

  CHECK(sk.clause_count == 5);
  CHECK(sk.labels.empty());

  AtomId a1 = t.find_bool("A1");
  AtomId a2 = t.find_bool("A2");
  VarId x1 = t.real_index("x1");
  VarId x2 = t.real_index("x2");
  Literal x1_ge_1 = t.lra_literal({{x1, Rat(1)}}, InOp::Ge, Rat(1));
  Literal x2_ge_1 = t.lra_literal({{x2, Rat(1)}}, InOp::Ge, Rat(1));
  Literal x2_ge_2 = t.lra_literal({{x2, Rat(1)}}, InOp::Ge, Rat(2));

  CHECK(clause_set_contains(sk.cnf, {Literal(a1, true), Literal(a1, false)}));
  CHECK(clause_set_contains(sk.cnf, {Literal(a1, false), x1_ge_1, ~x1_ge_1}));
  CHECK(clause_set_contains(sk.cnf, {Literal(a1, false), ~x1_ge_1, x2_ge_1, ~x2_ge_1}));
  CHECK(clause_set_contains(sk.cnf, {Literal(a1, false), x1_ge_1, x2_ge_2, ~x2_ge_2}));
  CHECK(clause_set_contains(sk.cnf, {Literal(a1, true), Literal(a2, true), Literal(a2, false)}));

  for (const auto& c : sk.cnf.clauses) CHECK(c.protected_validity);
  CHECK(skeleton_valid(sk, t));
}

TEST_CASE("constants and polynomials encode to an empty skeleton") {
  AtomTable t;
  t.add_real("x");
  std::vector<std::pair<AtomId, Formula>> labels;
  CHECK(convert_sk(w_const(5), {}, t, labels).clauses.empty());
  CHECK(convert_sk(w_mul(w_var(0), w_add(w_var(0), w_const(1))), {}, t, labels).clauses.empty());
  CHECK(build_skeleton(w_const(1), t).clause_count == 0);
}

TEST_CASE("guarded local labelling reproduces the non-literal example block") {
  // w = ite(x1<=4, ite((x1<=2) or ((x1<=3) and (x2>1)), 1, x1),
  //                ite((x2>2) or ((x1>5) and (x2>3/2)), x2, x1*x2))
  WmiProblem p = parse_problem(R"((problem
    (reals (x1 0 6) (x2 0 3))
    (bools)
    (support true)
    (weight (ite (<= x1 4)
              (ite (or (<= x1 2) (and (<= x1 3) (> x2 1))) 1 x1)
              (ite (or (> x2 2) (and (> x1 5) (> x2 3/2))) x2 (* x1 x2))))))");
  AtomTable t = *p.table;
  SkeletonOutput sk = build_skeleton(p.weight, t);

  REQUIRE(sk.labels.size() == 2);  // one label per non-literal condition
  CHECK(sk.clause_count == 13);

  VarId x1 = t.real_index("x1");
  VarId x2 = t.real_index("x2");
  Literal x1_le_4 = t.lra_literal({{x1, Rat(1)}}, InOp::Le, Rat(4));
  Literal x1_le_2 = t.lra_literal({{x1, Rat(1)}}, InOp::Le, Rat(2));
  Literal x1_le_3 = t.lra_literal({{x1, Rat(1)}}, InOp::Le, Rat(3));
  Literal x2_gt_1 = t.lra_literal({{x2, Rat(1)}}, InOp::Gt, Rat(1));
  Literal x2_gt_2 = t.lra_literal({{x2, Rat(1)}}, InOp::Gt, Rat(2));
  Literal x1_gt_5 = t.lra_literal({{x1, Rat(1)}}, InOp::Gt, Rat(5));
  Literal x2_gt_32 = t.lra_literal({{x2, Rat(1)}}, InOp::Gt, Rat(3, 2));

  Literal b1(sk.labels[0].first, true);
  Literal b2(sk.labels[1].first, true);
  // Inner conjunction labels are the other fresh atoms in the cnf label list.
  REQUIRE(sk.cnf.labels.size() == 4);
  Literal b3(sk.cnf.labels[1], true);
  Literal b4(sk.cnf.labels[3], true);

  // Branch validity clauses.
  CHECK(clause_set_contains(sk.cnf, {x1_le_4, ~x1_le_4}));
  CHECK(clause_set_contains(sk.cnf, {~x1_le_4, b1, ~b1}));
  CHECK(clause_set_contains(sk.cnf, {x1_le_4, b2, ~b2}));

  // Guarded Plaisted definition of B1 <-> psi1.
  CHECK(clause_set_contains(sk.cnf, {~x1_le_4, ~b1, x1_le_2, b3}));
  CHECK(clause_set_contains(sk.cnf, {~x1_le_4, ~b1, ~b3, x1_le_3}));
  CHECK(clause_set_contains(sk.cnf, {~x1_le_4, ~b1, ~b3, x2_gt_1}));
  CHECK(clause_set_contains(sk.cnf, {~x1_le_4, b1, ~x1_le_2}));
  CHECK(clause_set_contains(sk.cnf, {~x1_le_4, b1, ~x1_le_3, ~x2_gt_1}));

  // Guarded Plaisted definition of B2 <-> psi2.
  CHECK(clause_set_contains(sk.cnf, {x1_le_4, ~b2, x2_gt_2, b4}));
  CHECK(clause_set_contains(sk.cnf, {x1_le_4, ~b2, ~b4, x1_gt_5}));
  CHECK(clause_set_contains(sk.cnf, {x1_le_4, ~b2, ~b4, x2_gt_32}));
  CHECK(clause_set_contains(sk.cnf, {x1_le_4, b2, ~x2_gt_2}));
  CHECK(clause_set_contains(sk.cnf, {x1_le_4, b2, ~x1_gt_5, ~x2_gt_32}));

  CHECK(skeleton_valid(sk, t));
}

TEST_CASE("conjunction condition with empty guard: B v ~B plus 3 definitions") {
  AtomTable t;
  VarId x = t.add_real("x");
  Literal lo = t.lra_literal({{x, Rat(1)}}, InOp::Ge, Rat(0));
  Literal hi = t.lra_literal({{x, Rat(1)}}, InOp::Le, Rat(1));
  Weight w = w_ite(f_and({f_lit(lo), f_lit(hi)}), w_const(1), w_const(2));
  SkeletonOutput sk = build_skeleton(w, t);
  REQUIRE(sk.labels.size() == 1);
  Literal b(sk.labels[0].first, true);
  CHECK(sk.clause_count == 4);
  CHECK(clause_set_contains(sk.cnf, {b, ~b}));
  CHECK(clause_set_contains(sk.cnf, {~b, lo}));
  CHECK(clause_set_contains(sk.cnf, {~b, hi}));
  CHECK(clause_set_contains(sk.cnf, {b, ~lo, ~hi}));
  CHECK(skeleton_valid(sk, t));
}

TEST_CASE("the same condition labelled in different branches gets distinct labels") {
  AtomTable t;
  VarId x = t.add_real("x");
  AtomId a = t.bool_atom("A");
  Literal lo = t.lra_literal({{x, Rat(1)}}, InOp::Ge, Rat(0));
  Literal hi = t.lra_literal({{x, Rat(1)}}, InOp::Le, Rat(1));
  Formula range = f_and({f_lit(lo), f_lit(hi)});
  Weight w = w_ite(f_atom(a), w_ite(range, w_const(1), w_const(2)),
                   w_ite(range, w_const(3), w_const(4)));
  SkeletonOutput sk = build_skeleton(w, t);
  REQUIRE(sk.labels.size() == 2);
  CHECK(sk.labels[0].first != sk.labels[1].first);
  CHECK(f_equal(sk.labels[0].second, sk.labels[1].second));
}

TEST_CASE("skeleton debug dump: atom-mapping header plus DIMACS body") {
  AtomTable t;
  VarId x = t.add_real("x");
  AtomId a = t.bool_atom("A");
  Weight w = w_ite(f_atom(a), w_ite(f_lit(t.lra_literal({{x, Rat(1)}}, InOp::Le, Rat(1))),
                                    w_var(x), w_const(1)),
                   w_const(2));
  SkeletonOutput sk = build_skeleton(w, t);
  std::string dump = dump_cnf(sk.cnf, t);
  CHECK(dump ==
        "c atom 1 = A\n"
        "c atom 2 = (x <= 1)\n"
        "p cnf 2 2\n"
        "-1 1 0  c valid\n"
        "-1 -2 2 0  c valid\n");
}

TEST_CASE("prodite skeletons have exactly n clauses") {
  for (int n : {1, 2, 3, 5, 8, 13, 21, 33, 48, 64}) {
    WmiProblem p = parse_problem(gen_prodite(n, 42));
    AtomTable t = *p.table;
    SkeletonOutput sk = build_skeleton(p.weight, t);
    CHECK(sk.clause_count == n);
  }
}

TEST_CASE("skeleton size stays within a fixed factor of the weight size") {
  // Literal count <= 4 * |w| across the fixtures in this file and random trees.
  auto literal_count = [](const CnfFormula& cnf) {
    int n = 0;
    for (const auto& c : cnf.clauses) n += static_cast<int>(c.lits.size());
    return n;
  };
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    WmiProblem p = parse_problem(gen_tree(4, 3, 3, seed));
    AtomTable t = *p.table;
    SkeletonOutput sk = build_skeleton(p.weight, t);
    CHECK(literal_count(sk.cnf) <= 4 * weight_size(p.weight));
  }
  for (int n : {4, 16, 64}) {
    WmiProblem p = parse_problem(gen_prodite(n, 1));
    AtomTable t = *p.table;
    SkeletonOutput sk = build_skeleton(p.weight, t);
    CHECK(literal_count(sk.cnf) <= 4 * weight_size(p.weight));
  }
}

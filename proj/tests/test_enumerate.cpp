#include <doctest.h>

#include <set>
#include <sstream>

#include "enumerate.hpp"
#include "parse.hpp"

using namespace wmi;

namespace {

// phi = (A1 v (x<=1)) and (not A1 v B1) and (B1 iff (x>=2))
struct Ex4 {
  AtomTable t;
  VarId x;
  AtomId a1, b1;
  Literal x_le_1, x_ge_2;
  Formula phi;

  Ex4() {
    x = t.add_real("x");
    a1 = t.bool_atom("A1");
    b1 = t.bool_atom("B1");
    x_le_1 = t.lra_literal({{x, Rat(1)}}, InOp::Le, Rat(1));
    x_ge_2 = t.lra_literal({{x, Rat(1)}}, InOp::Ge, Rat(2));
    phi = f_and({f_or({f_atom(a1), f_lit(x_le_1)}), f_or({f_not(f_atom(a1)), f_atom(b1)}),
                 f_iff(f_atom(b1), f_lit(x_ge_2))});
  }

  CnfFormula cnf() {
    AtomTable scratch = t;  // no labels needed for this shape
    CnfFormula c = cnf_plaisted(phi, scratch, "T");
    REQUIRE(c.labels.empty());
    return c;
  }
};

std::set<std::vector<Literal>> drain(EnumStream& s) {
  std::set<std::vector<Literal>> out;
  while (auto mu = s.next()) {
    auto lits = mu->literals();
    std::sort(lits.begin(), lits.end());
    bool fresh = out.insert(lits).second;
    CHECK(fresh);  // no assignment may be produced twice
  }
  return out;
}

// All theory-satisfiable total assignments over `relevant` that extend to
// satisfy the cnf (labels and hidden atoms existentially quantified).
std::set<std::vector<Literal>> brute_tta(const CnfFormula& cnf,
                                         const std::vector<AtomId>& relevant,
                                         const AtomTable& t) {
  std::set<AtomId> seen(relevant.begin(), relevant.end());
  std::vector<AtomId> hidden;
  for (const auto& c : cnf.clauses)
    for (const auto& l : c.lits)
      if (seen.insert(l.atom).second) hidden.push_back(l.atom);
  std::set<std::vector<Literal>> out;
  std::size_t n = relevant.size(), h = hidden.size();
  for (long rm = 0; rm < (1L << n); ++rm) {
    bool extendable = false;
    for (long hm = 0; hm < (1L << h) && !extendable; ++hm) {
      std::vector<Literal> lits;
      for (std::size_t i = 0; i < n; ++i) lits.emplace_back(relevant[i], (rm >> i & 1) != 0);
      for (std::size_t i = 0; i < h; ++i) lits.emplace_back(hidden[i], (hm >> i & 1) != 0);
      TruthAssignment mu(lits);
      bool sat = true;
      for (const auto& c : cnf.clauses) {
        bool ok = false;
        for (const auto& l : c.lits)
          if (mu.assigns(l.atom) && mu.value(l.atom) == l.positive) {
            ok = true;
            break;
          }
        if (!ok) {
          sat = false;
          break;
        }
      }
      if (!sat) continue;
      if (!lra_check(lits, t).sat) continue;
      extendable = true;
    }
    if (extendable) {
      std::vector<Literal> key;
      for (std::size_t i = 0; i < n; ++i) key.emplace_back(relevant[i], (rm >> i & 1) != 0);
      std::sort(key.begin(), key.end());
      out.insert(key);
    }
  }
  return out;
}

void check_partition_laws(const CnfFormula& cnf, const std::vector<AtomId>& relevant,
                          const AtomTable& t) {
  // TTA stream matches the brute-force set exactly.
  EnumRequest total_req;
  total_req.cnf = cnf;
  total_req.relevant = relevant;
  total_req.mode = EnumMode::Total;
  EnumStream total_stream(total_req, t);
  auto tta = drain(total_stream);
  auto oracle = brute_tta(cnf, relevant, t);
  CHECK(tta == oracle);

  // TA stream: disjointness and exact cover of the oracle set.
  EnumRequest part_req;
  part_req.cnf = cnf;
  part_req.relevant = relevant;
  part_req.mode = EnumMode::Partial;
  EnumStream part_stream(part_req, t);
  std::vector<TruthAssignment> tas;
  while (auto mu = part_stream.next()) tas.push_back(*mu);

  for (std::size_t i = 0; i < tas.size(); ++i)
    for (std::size_t j = i + 1; j < tas.size(); ++j) {
      bool opposite = false;
      for (const auto& l : tas[i].literals())
        if (tas[j].assigns(l.atom) && tas[j].value(l.atom) != l.positive) opposite = true;
      CHECK(opposite);
    }

  for (const auto& total_lits : oracle) {
    TruthAssignment eta(total_lits);
    int covers = 0;
    for (const auto& mu : tas)
      if (mu.subset_of(eta)) ++covers;
    CHECK(covers == 1);
  }
}

}  // namespace

TEST_CASE("TTA of the biconditional example: exactly the two paper assignments") {
  Ex4 fx;
  CnfFormula cnf = fx.cnf();
  std::vector<AtomId> relevant{fx.a1, fx.b1, fx.x_le_1.atom, fx.x_ge_2.atom};
  EnumRequest req;
  req.cnf = cnf;
  req.relevant = relevant;
  req.mode = EnumMode::Total;
  req.decision_order = {fx.a1, fx.b1};
  EnumStream s(req, fx.t);
  auto set = drain(s);
  REQUIRE(set.size() == 2);

  std::vector<Literal> m1 = {Literal(fx.a1, true), Literal(fx.b1, true), ~fx.x_le_1, fx.x_ge_2};
  std::vector<Literal> m2 = {Literal(fx.a1, false), Literal(fx.b1, false), fx.x_le_1, ~fx.x_ge_2};
  std::sort(m1.begin(), m1.end());
  std::sort(m2.begin(), m2.end());
  CHECK(set.count(m1));
  CHECK(set.count(m2));
}

TEST_CASE("projected enumeration on A1 gives {A1} and {not A1}") {
  Ex4 fx;
  CnfFormula cnf = fx.cnf();
  for (EnumMode mode : {EnumMode::Total, EnumMode::Partial}) {
    EnumRequest req;
    req.cnf = cnf;
    req.relevant = {fx.a1};
    req.mode = mode;
    req.decision_order = {fx.a1, fx.b1};
    EnumStream s(req, fx.t);
    auto set = drain(s);
    REQUIRE(set.size() == 2);
    CHECK(set.count({Literal(fx.a1, true)}));
    CHECK(set.count({Literal(fx.a1, false)}));
  }
}

TEST_CASE("TA of the biconditional example drops only the undetermined atom") {
  Ex4 fx;
  CnfFormula cnf = fx.cnf();
  EnumRequest req;
  req.cnf = cnf;
  req.relevant = {fx.a1, fx.b1, fx.x_le_1.atom, fx.x_ge_2.atom};
  req.mode = EnumMode::Partial;
  req.decision_order = {fx.a1, fx.b1};
  EnumStream s(req, fx.t);
  auto set = drain(s);
  REQUIRE(set.size() == 2);
  std::vector<Literal> m1 = {Literal(fx.a1, true), Literal(fx.b1, true), fx.x_ge_2};
  std::vector<Literal> m2 = {Literal(fx.a1, false), Literal(fx.b1, false), fx.x_le_1, ~fx.x_ge_2};
  std::sort(m1.begin(), m1.end());
  std::sort(m2.begin(), m2.end());
  CHECK(set.count(m1));
  CHECK(set.count(m2));
}

TEST_CASE("unsatisfiable input yields an empty stream") {
  AtomTable t;
  AtomId a = t.bool_atom("A");
  CnfFormula cnf;
  cnf.add_clause({Literal(a, true)});
  cnf.add_clause({Literal(a, false)});
  EnumRequest req;
  req.cnf = cnf;
  req.relevant = {a};
  req.mode = EnumMode::Partial;
  EnumStream s(req, t);
  CHECK_FALSE(s.next().has_value());
}

TEST_CASE("minimize drops exactly the two redundant literals of the narrated total") {
  // Total assignment {A1, A2, x1>=1, x2>=1, x2>=2} over the skeleton of the
  // two-Boolean example; the minimal restriction keeps {A1, x1>=1, x2>=1}.
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

  AtomId a1 = t.find_bool("A1");
  AtomId a2 = t.find_bool("A2");
  Literal x1_ge_1 = t.lra_literal({{t.real_index("x1"), Rat(1)}}, InOp::Ge, Rat(1));
  Literal x2_ge_1 = t.lra_literal({{t.real_index("x2"), Rat(1)}}, InOp::Ge, Rat(1));
  Literal x2_ge_2 = t.lra_literal({{t.real_index("x2"), Rat(1)}}, InOp::Ge, Rat(2));

  TruthAssignment total({Literal(a1, true), Literal(a2, true), x1_ge_1, x2_ge_1, x2_ge_2});
  std::set<AtomId> relevant{a1, a2, x1_ge_1.atom, x2_ge_1.atom, x2_ge_2.atom};
  TruthAssignment mu = EnumStream::minimize(total, sk.cnf, relevant);
  REQUIRE(mu.size() == 3);
  CHECK(mu.value(a1));
  CHECK(mu.value(x1_ge_1.atom) == x1_ge_1.positive);
  CHECK(mu.value(x2_ge_1.atom) == x2_ge_1.positive);
  CHECK_FALSE(mu.assigns(a2));
  CHECK_FALSE(mu.assigns(x2_ge_2.atom));

  // An already-minimal assignment is a fixpoint.
  TruthAssignment again = EnumStream::minimize(mu, sk.cnf, relevant);
  CHECK(again.size() == mu.size());
}

TEST_CASE("partition laws on assorted small formulas") {
  Ex4 fx;
  CnfFormula cnf = fx.cnf();
  check_partition_laws(cnf, {fx.a1, fx.b1, fx.x_le_1.atom, fx.x_ge_2.atom}, fx.t);
  check_partition_laws(cnf, {fx.a1}, fx.t);
  check_partition_laws(cnf, {fx.a1, fx.b1}, fx.t);
}

TEST_CASE("trace log: one line per emitted assignment") {
  Ex4 fx;
  CnfFormula cnf = fx.cnf();
  std::ostringstream trace;
  EnumRequest req;
  req.cnf = cnf;
  req.relevant = {fx.a1};
  req.mode = EnumMode::Partial;
  req.decision_order = {fx.a1, fx.b1};
  req.trace = &trace;
  EnumStream s(req, fx.t);
  while (s.next()) {
  }
  CHECK(trace.str() ==
        "assignment 1: {(not A1)}\n"
        "assignment 2: {A1}\n");
}

TEST_CASE("identical requests produce identical streams") {
  Ex4 fx;
  CnfFormula cnf = fx.cnf();
  auto run = [&] {
    EnumRequest req;
    req.cnf = cnf;
    req.relevant = {fx.a1, fx.b1, fx.x_le_1.atom, fx.x_ge_2.atom};
    req.mode = EnumMode::Partial;
    EnumStream s(req, fx.t);
    std::vector<std::string> out;
    while (auto mu = s.next()) out.push_back(mu->str(fx.t));
    return out;
  };
  CHECK(run() == run());
}

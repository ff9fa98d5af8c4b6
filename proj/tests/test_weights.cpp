#include <doctest.h>

#include "rng.hpp"
#include "weights.hpp"

using namespace wmi;

namespace {

// The tree-structured weight of the running two-Boolean example.
struct Fig {
  AtomTable t;
  VarId x1, x2;
  AtomId a1, a2;
  Literal x1_ge_1, x2_ge_1, x2_ge_2;
  Weight f11, f12, f21, f22, f3, f4;
  Weight w;

  Fig() {
    x1 = t.add_real("x1");
    x2 = t.add_real("x2");
    a1 = t.bool_atom("A1");
    a2 = t.bool_atom("A2");
    x1_ge_1 = t.lra_literal({{x1, Rat(1)}}, InOp::Ge, Rat(1));
    x2_ge_1 = t.lra_literal({{x2, Rat(1)}}, InOp::Ge, Rat(1));
    x2_ge_2 = t.lra_literal({{x2, Rat(1)}}, InOp::Ge, Rat(2));
    f11 = w_mul(w_pow(w_var(x1), 2), w_var(x2));
    f12 = w_mul(w_var(x1), w_var(x2));
    f21 = w_add(w_var(x1), w_var(x2));
    f22 = w_const(1);
    f3 = w_var(x2);
    f4 = w_const(2);
    w = w_ite(f_atom(a1),
              w_ite(f_lit(x1_ge_1), w_ite(f_lit(x2_ge_1), f11, f12),
                    w_ite(f_lit(x2_ge_2), f21, f22)),
              w_ite(f_atom(a2), f3, f4));
  }
};

}  // namespace

TEST_CASE("conditions in first-occurrence preorder") {
  Fig fx;
  auto cs = conditions(fx.w);
  REQUIRE(cs.size() == 5);
  CHECK(f_equal(cs[0], f_atom(fx.a1)));
  CHECK(f_equal(cs[1], f_lit(fx.x1_ge_1)));
  CHECK(f_equal(cs[2], f_lit(fx.x2_ge_1)));
  CHECK(f_equal(cs[3], f_lit(fx.x2_ge_2)));
  CHECK(f_equal(cs[4], f_atom(fx.a2)));

  CHECK(conditions(w_const(1)).empty());

  // A product of ites with distinct conditions lists each once.
  Weight p = w_mul(w_ite(f_atom(fx.a1), w_const(1), w_const(2)),
                   w_mul(w_ite(f_lit(fx.x1_ge_1), w_const(1), w_const(2)),
                         w_ite(f_atom(fx.a2), w_const(1), w_const(2))));
  CHECK(conditions(p).size() == 3);
  // Repeating a condition does not duplicate it.
  Weight q = w_mul(p, w_ite(f_atom(fx.a1), w_const(3), w_const(4)));
  CHECK(conditions(q).size() == 3);
}

TEST_CASE("restrict selects branches") {
  Fig fx;
  TruthAssignment mu({Literal(fx.a1, true), fx.x1_ge_1, fx.x2_ge_1});
  Weight r = restrict_weight(fx.w, mu);
  CHECK(is_fi(r));
  CHECK(weight_str(r, fx.t) == weight_str(fx.f11, fx.t));

  CHECK(weight_str(restrict_weight(fx.w, TruthAssignment()), fx.t) == weight_str(fx.w, fx.t));

  TruthAssignment nu({Literal(fx.a1, false), Literal(fx.a2, true)});
  CHECK(weight_str(restrict_weight(fx.w, nu), fx.t) == weight_str(fx.f3, fx.t));
}

TEST_CASE("is_fi") {
  Fig fx;
  CHECK(is_fi(w_const(2)));
  CHECK_FALSE(is_fi(w_ite(f_atom(fx.a1), w_const(1), w_const(2))));
  TruthAssignment mu({Literal(fx.a1, true), fx.x1_ge_1, fx.x2_ge_1});
  CHECK(is_fi(restrict_weight(fx.w, mu)));
}

TEST_CASE("restrict is total over the conditions") {
  Fig fx;
  auto cs = conditions(fx.w);
  for (int m = 0; m < (1 << 5); ++m) {
    std::vector<Literal> lits;
    for (int i = 0; i < 5; ++i) {
      Literal l = as_literal(cs[i]);
      lits.emplace_back(l.atom, (m >> i & 1) != 0);
    }
    CHECK(is_fi(restrict_weight(fx.w, TruthAssignment(lits))));
  }
}

TEST_CASE("evaluate") {
  Fig fx;
  TruthAssignment mu({Literal(fx.a1, true), Literal(fx.a2, false)});
  CHECK(evaluate(w_const(Rat(3, 2)), {0, 0}, mu, fx.t) == doctest::Approx(1.5));
  CHECK(evaluate(fx.f11, {2, 3}, mu, fx.t) == doctest::Approx(12.0));
  // Ite(x1 >= 1, 1, 0) at x1 = 2 takes the then branch.
  Weight ind = w_ite(f_lit(fx.x1_ge_1), w_const(1), w_const(0));
  CHECK(evaluate(ind, {2, 0}, mu, fx.t) == doctest::Approx(1.0));
  CHECK(evaluate(ind, {0.5, 0}, mu, fx.t) == doctest::Approx(0.0));

  Weight neg = w_sub(w_const(0), w_const(1));
  CHECK_THROWS_AS(evaluate(neg, {0, 0}, mu, fx.t), NegativeWeightError);
}

TEST_CASE("gauss pdf evaluation") {
  AtomTable t;
  VarId x = t.add_real("x");
  Weight g = w_func("gauss", {w_const(0), w_const(1), w_var(x)});
  TruthAssignment mu;
  CHECK(evaluate(g, {0}, mu, t) == doctest::Approx(0.3989422804014327));
  CHECK(evaluate(g, {1}, mu, t) == doctest::Approx(0.24197072451914337));
  CHECK_THROWS_AS(w_func("sigmoid", {w_const(0)}), UnknownFuncError);
}

TEST_CASE("as_polynomial expansion") {
  AtomTable t;
  VarId x1 = t.add_real("x1");
  VarId x2 = t.add_real("x2");
  // (x1 + x2) * x1 = x1^2 + x1*x2
  Weight w = w_mul(w_add(w_var(x1), w_var(x2)), w_var(x1));
  Polynomial p = as_polynomial(w, 2);
  CHECK(p.terms().size() == 2);
  CHECK(p.terms().at({2, 0}) == 1);
  CHECK(p.terms().at({1, 1}) == 1);

  CHECK(as_polynomial(w_const(0), 2).is_zero());

  Weight c = w_mul(w_pow(w_var(x1), 3), w_const(Rat(2, 3)));
  Polynomial q = as_polynomial(c, 2);
  CHECK(q.terms().at({3, 0}) == Rat(2, 3));

  CHECK_THROWS_AS(as_polynomial(w_func("gauss", {w_const(0), w_const(1), w_var(x1)}), 2),
                  NotPolynomialError);
}

TEST_CASE("as_polynomial agrees with exact evaluation at random rational points") {
  Fig fx;
  Rng rng(3);
  TruthAssignment empty;
  std::vector<Weight> fis{fx.f11, fx.f12, fx.f21, fx.f22,
                          w_sub(w_mul(fx.f21, fx.f21), w_var(fx.x1)),
                          w_pow(w_add(w_var(fx.x1), w_const(Rat(1, 3))), 3)};
  for (const auto& w : fis) {
    Polynomial p = as_polynomial(w, 2);
    for (int i = 0; i < 100; ++i) {
      auto coord = [&] {
        Rat q(static_cast<long>(rng.below(13)) - 6, static_cast<unsigned long>(1 + rng.below(4)));
        q.canonicalize();
        return q;
      };
      std::vector<Rat> pt{coord(), coord()};
      CHECK(p.eval(pt) == evaluate_exact(w, pt, empty, fx.t));
    }
  }
}

TEST_CASE("evaluate of a restriction agrees with the original where consistent") {
  Fig fx;
  Rng rng(5);
  auto cs = conditions(fx.w);
  for (int round = 0; round < 200; ++round) {
    std::vector<double> pt{rng.uniform(0, 2), rng.uniform(0, 3)};
    std::vector<Literal> lits{Literal(fx.a1, rng.coin()), Literal(fx.a2, rng.coin())};
    TruthAssignment mu_bool(lits);
    // Assignment matching the point's atom truth values.
    std::vector<Literal> cond_lits = lits;
    for (const auto& c : cs) {
      if (!is_literal(c)) continue;
      Literal l = as_literal(c);
      if (fx.t.atom(l.atom).kind != AtomKind::Lra) continue;
      cond_lits.emplace_back(l.atom, atom_truth_at(l.atom, pt, mu_bool, fx.t));
    }
    TruthAssignment mu(cond_lits);
    Weight r = restrict_weight(fx.w, mu);
    CHECK(evaluate(r, pt, mu_bool, fx.t) ==
          doctest::Approx(evaluate(fx.w, pt, mu_bool, fx.t)));
  }
}

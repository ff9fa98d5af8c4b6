#include <doctest.h>

#include <cmath>

#include "integrate.hpp"

using namespace wmi;

namespace {

struct Fx {
  AtomTable t;
  VarId x1, x2;

  Fx() {
    x1 = t.add_real("x1");
    x2 = t.add_real("x2");
  }

  Polytope box(const Rat& a1, const Rat& b1, const Rat& a2, const Rat& b2) {
    std::vector<Literal> lits{t.lra_literal({{x1, Rat(1)}}, InOp::Ge, a1),
                              t.lra_literal({{x1, Rat(1)}}, InOp::Le, b1),
                              t.lra_literal({{x2, Rat(1)}}, InOp::Ge, a2),
                              t.lra_literal({{x2, Rat(1)}}, InOp::Le, b2)};
    return polytope_from(lits, t);
  }
};

}  // namespace

TEST_CASE("exact integrator on the paper monomial") {
  Fx fx;
  ExactIntegrator exact(fx.t);
  Weight w = w_mul(w_pow(w_var(fx.x1), 2), w_var(fx.x2));
  IntegralValue v = exact.integrate(fx.box(0, 2, 0, 3), w, TruthAssignment(), 0);
  CHECK(v.exact);
  CHECK(v.rational == 12);
}

TEST_CASE("mc integration: volume of the unit square within 3 sigma") {
  Fx fx;
  std::uint64_t n = 100000;
  McIntegrator mc(fx.t, n, 7);
  IntegralValue v = mc.integrate(fx.box(0, 1, 0, 1), w_const(1), TruthAssignment(), 0);
  CHECK_FALSE(v.exact);
  // The box equals the region, so acceptance is certain and the estimate exact.
  CHECK(v.approx == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("mc vs exact on a nontrivial region and weight") {
  Fx fx;
  std::vector<Literal> lits{
      fx.t.lra_literal({{fx.x1, Rat(1)}}, InOp::Ge, Rat(0)),
      fx.t.lra_literal({{fx.x1, Rat(1)}}, InOp::Le, Rat(2)),
      fx.t.lra_literal({{fx.x2, Rat(1)}}, InOp::Ge, Rat(0)),
      fx.t.lra_literal({{fx.x2, Rat(1)}}, InOp::Le, Rat(3)),
      fx.t.lra_literal({{fx.x1, Rat(3)}, {fx.x2, Rat(2)}}, InOp::Le, Rat(8))};
  Polytope p = polytope_from(lits, fx.t);
  Weight w = w_mul(w_pow(w_var(fx.x1), 2), w_var(fx.x2));
  ExactIntegrator exact(fx.t);
  Rat truth = exact.integrate(p, w, TruthAssignment(), 0).rational;
  McIntegrator mc(fx.t, 200000, 99);
  double est = mc.integrate(p, w, TruthAssignment(), 0).approx;
  CHECK(std::abs(est - rat_double(truth)) / rat_double(truth) < 0.05);
}

TEST_CASE("mc integration is deterministic given the seed and salt") {
  Fx fx;
  McIntegrator mc(fx.t, 2000, 42);
  double a = mc.integrate(fx.box(0, 1, 0, 2), w_var(fx.x1), TruthAssignment(), 5).approx;
  double b = mc.integrate(fx.box(0, 1, 0, 2), w_var(fx.x1), TruthAssignment(), 5).approx;
  CHECK(a == b);
  double c = mc.integrate(fx.box(0, 1, 0, 2), w_var(fx.x1), TruthAssignment(), 6).approx;
  CHECK(a != c);
}

TEST_CASE("single-sample estimates are legal") {
  Fx fx;
  McIntegrator mc(fx.t, 1, 1);
  IntegralValue v = mc.integrate(fx.box(0, 1, 0, 1), w_const(1), TruthAssignment(), 0);
  CHECK(v.approx == doctest::Approx(1.0));
}

TEST_CASE("degenerate polytopes integrate to zero in both backends") {
  Fx fx;
  std::vector<Literal> lits{fx.t.lra_literal({{fx.x1, Rat(1)}}, InOp::Eq, Rat(1)),
                            fx.t.lra_literal({{fx.x2, Rat(1)}}, InOp::Ge, Rat(0)),
                            fx.t.lra_literal({{fx.x2, Rat(1)}}, InOp::Le, Rat(1))};
  Polytope p = polytope_from(lits, fx.t);
  CHECK(p.degenerate);
  ExactIntegrator exact(fx.t);
  CHECK(exact.integrate(p, w_const(1), TruthAssignment(), 0).rational == 0);
  McIntegrator mc(fx.t, 100, 1);
  CHECK(mc.integrate(p, w_const(1), TruthAssignment(), 0).approx == 0.0);
}

TEST_CASE("zero acceptance on a thin polytope is surfaced, not hidden") {
  Fx fx;
  // A sliver around the diagonal: the bounding box is the unit square, so a
  // one-sample run almost surely misses it.
  std::vector<Literal> lits{
      fx.t.lra_literal({{fx.x1, Rat(1)}}, InOp::Ge, Rat(0)),
      fx.t.lra_literal({{fx.x1, Rat(1)}}, InOp::Le, Rat(1)),
      fx.t.lra_literal({{fx.x2, Rat(1)}}, InOp::Ge, Rat(0)),
      fx.t.lra_literal({{fx.x2, Rat(1)}}, InOp::Le, Rat(1)),
      fx.t.lra_literal({{fx.x1, Rat(1)}, {fx.x2, Rat(-1)}}, InOp::Ge, Rat(0)),
      fx.t.lra_literal({{fx.x1, Rat(1)}, {fx.x2, Rat(-1)}}, InOp::Le, Rat(1, 10000))};
  Polytope sliver = polytope_from(lits, fx.t);
  McIntegrator mc(fx.t, 1, 12345);
  CHECK_THROWS_AS(mc.integrate(sliver, w_const(1), TruthAssignment(), 0),
                  ZeroAcceptanceError);
}

TEST_CASE("exact value is invariant under a fan-root change") {
  // Translating the polytope moves the lexicographically smallest vertex, so
  // the triangulation fan is rooted elsewhere; the translated integral of the
  // shifted polynomial must not move.
  Fx fx;
  auto make = [&](const Rat& t1, const Rat& t2) {
    std::vector<Literal> lits{
        fx.t.lra_literal({{fx.x1, Rat(1)}}, InOp::Ge, t1),
        fx.t.lra_literal({{fx.x2, Rat(1)}}, InOp::Ge, t2),
        fx.t.lra_literal({{fx.x1, Rat(2)}, {fx.x2, Rat(1)}}, InOp::Le, Rat(4) + 2 * t1 + t2),
        fx.t.lra_literal({{fx.x1, Rat(-1)}, {fx.x2, Rat(3)}}, InOp::Le, Rat(5) - t1 + 3 * t2)};
    return polytope_from(lits, fx.t);
  };
  // p(x) = x1^2 * x2 + x1 over the base polytope.
  Polynomial base(2);
  base.add_term({2, 1}, Rat(1));
  base.add_term({1, 0}, Rat(1));
  // Shifted integrand q(x) = p(x - t) for t = (5, 7), expanded by hand:
  // (x1-5)^2 (x2-7) + (x1-5).
  Polynomial x1 = Polynomial::variable(2, 0);
  Polynomial x2 = Polynomial::variable(2, 1);
  Polynomial c5 = Polynomial::constant(2, Rat(5));
  Polynomial c7 = Polynomial::constant(2, Rat(7));
  Polynomial shifted = (x1 - c5).pow(2) * (x2 - c7) + (x1 - c5);
  CHECK(integrate_exact(make(0, 0), base) == integrate_exact(make(5, 7), shifted));
}

TEST_CASE("mc relative error decreases with the sample count") {
  Fx fx;
  Polytope p = fx.box(0, 2, 0, 2);
  Weight w = w_add(w_mul(w_var(fx.x1), w_var(fx.x2)), w_const(Rat(1, 2)));
  ExactIntegrator exact(fx.t);
  double truth = rat_double(exact.integrate(p, w, TruthAssignment(), 0).rational);
  auto median_err = [&](std::uint64_t n) {
    std::vector<double> errs;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      McIntegrator mc(fx.t, n, seed);
      double est = mc.integrate(p, w, TruthAssignment(), seed).approx;
      errs.push_back(std::abs(est - truth) / truth);
    }
    std::sort(errs.begin(), errs.end());
    return (errs[4] + errs[5]) / 2;
  };
  double e100 = median_err(100);
  double e1000 = median_err(1000);
  double e10000 = median_err(10000);
  CHECK(e1000 <= e100);
  CHECK(e10000 <= e1000);
}

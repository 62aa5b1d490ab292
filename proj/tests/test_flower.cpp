#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "projcone/errors.hpp"
#include "projcone/flow.hpp"
#include "projcone/flower.hpp"

using namespace projcone;

namespace {

AxisSet set_of(std::initializer_list<int> axes) {
  AxisSet s;
  for (int a : axes) s = s.with(a);
  return s;
}

ProjectionInequality ineq_of(int n,
                             std::vector<std::pair<AxisSet, Rat>> terms) {
  return ProjectionInequality::canonicalize(n, std::move(terms));
}

// x1 + x2 + x13 + x23 - x12 - x123 - x3: balanced on every axis, yet the
// saturation flow tops out at 5 of 6.
ProjectionInequality seven_term() {
  return ineq_of(3, {{set_of({1}), Rat(1)},
                     {set_of({2}), Rat(1)},
                     {set_of({1, 3}), Rat(1)},
                     {set_of({2, 3}), Rat(1)},
                     {set_of({1, 2}), Rat(-1)},
                     {set_of({1, 2, 3}), Rat(-1)},
                     {set_of({3}), Rat(-1)}});
}

ProjectionInequality bt3() {
  return ineq_of(3, {{set_of({1, 2}), Rat(1)},
                     {set_of({1, 3}), Rat(1)},
                     {set_of({2, 3}), Rat(1)},
                     {set_of({1, 2, 3}), Rat(-2)}});
}

Flower box_flower(std::vector<Rat> axis_values) {
  int n = static_cast<int>(axis_values.size());
  Flower fl = Flower::zeros(n);
  for (AxisSet s : enumerate_subsets(n)) {
    for (int axis : s.axes()) fl.at(s, axis) = axis_values[axis - 1];
  }
  return fl;
}

}  // namespace

TEST_CASE("pi of the zero flower is zero") {
  LogProjectionVector pi = pi_from_flower(Flower::zeros(3));
  for (const Rat& v : pi.entries) CHECK(v == 0);
}

TEST_CASE("pi of a box flower adds axis lengths") {
  LogProjectionVector pi = pi_from_flower(box_flower({Rat(1), Rat(2)}));
  CHECK(pi.at(set_of({1})) == 1);
  CHECK(pi.at(set_of({2})) == 2);
  CHECK(pi.at(set_of({1, 2})) == 3);
}

TEST_CASE("membership accepts a box vector") {
  LogProjectionVector pi = LogProjectionVector::zeros(2);
  pi.at(set_of({1})) = 1;
  pi.at(set_of({2})) = 2;
  pi.at(set_of({1, 2})) = 3;
  MembershipResult r = flower_from_pi(pi);
  REQUIRE(r.flower.has_value());
  CHECK(!r.certificate.has_value());
  CHECK(r.flower->monotone());
  LogProjectionVector back = pi_from_flower(*r.flower);
  CHECK(back.entries == pi.entries);
}

TEST_CASE("membership rejects pi_12 > pi_1 + pi_2 with the exact certificate") {
  LogProjectionVector pi = LogProjectionVector::zeros(2);
  pi.at(set_of({1, 2})) = 1;
  MembershipResult r = flower_from_pi(pi);
  REQUIRE(r.certificate.has_value());
  CHECK(!r.flower.has_value());

  ProjectionInequality expected = ineq_of(2, {{set_of({1}), Rat(1)},
                                              {set_of({2}), Rat(1)},
                                              {set_of({1, 2}), Rat(-1)}});
  CHECK(r.certificate->terms() == expected.terms());
  CHECK(is_fnc(*r.certificate).is_fnc);
  CHECK(claim_value(*r.certificate, pi) < 0);
}

TEST_CASE("membership certificates are always valid and violated") {
  // Scaled-up copies of the same infeasible direction must yield the same
  // primitive certificate.
  for (int scale = 1; scale <= 3; ++scale) {
    LogProjectionVector pi = LogProjectionVector::zeros(2);
    pi.at(set_of({1, 2})) = scale;
    MembershipResult r = flower_from_pi(pi);
    REQUIRE(r.certificate.has_value());
    ProjectionInequality expected = ineq_of(2, {{set_of({1}), Rat(1)},
                                                {set_of({2}), Rat(1)},
                                                {set_of({1, 2}), Rat(-1)}});
    CHECK(r.certificate->terms() == expected.terms());
  }

  // A deeper infeasible point: pi_123 too large relative to the pairs.
  LogProjectionVector pi = LogProjectionVector::zeros(3);
  pi.at(set_of({1})) = 2;
  pi.at(set_of({2})) = 2;
  pi.at(set_of({3})) = 2;
  pi.at(set_of({1, 2})) = 2;
  pi.at(set_of({1, 3})) = 2;
  pi.at(set_of({2, 3})) = 2;
  pi.at(set_of({1, 2, 3})) = 4;
  MembershipResult r = flower_from_pi(pi);
  REQUIRE(r.certificate.has_value());
  CHECK(is_fnc(*r.certificate).is_fnc);
  CHECK(claim_value(*r.certificate, pi) < 0);
}

TEST_CASE("flower roundtrip is exact on sampled cornered flowers") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> val(0, 6);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < (n == 4 ? 10 : 25); ++trial) {
      // Raw values g pushed down by max-over-supersets become cornered.
      Flower g = Flower::zeros(n);
      for (auto& petal : g.entries) {
        for (auto& entry : petal) entry = val(rng);
      }
      Flower fl = Flower::zeros(n);
      for (AxisSet s : enumerate_subsets(n)) {
        for (int axis : s.axes()) {
          Rat best = 0;
          for (AxisSet sup : enumerate_subsets(n)) {
            if (!s.subset_of(sup)) continue;
            if (g.at(sup, axis) > best) best = g.at(sup, axis);
          }
          fl.at(s, axis) = best;
        }
      }
      REQUIRE(fl.monotone());
      LogProjectionVector pi = pi_from_flower(fl);
      MembershipResult r = flower_from_pi(pi);
      REQUIRE(r.flower.has_value());
      CHECK(r.flower->monotone());
      LogProjectionVector back = pi_from_flower(*r.flower);
      CHECK(back.entries == pi.entries);
    }
  }
}

TEST_CASE("violating flower for no middle arcs puts mass on singletons") {
  ProjectionInequality ineq = ineq_of(3, {{set_of({1, 2, 3}), Rat(1)},
                                          {set_of({1}), Rat(-1)},
                                          {set_of({2}), Rat(-1)},
                                          {set_of({3}), Rat(-1)}});
  ViolatingFlowerResult vf = violating_flower(ineq);
  CHECK(vf.lhs_coef == 0);
  CHECK(vf.rhs_coef == 3);
  for (int axis = 1; axis <= 3; ++axis) {
    CHECK(vf.slope.at(set_of({axis}), axis) == 1);
  }
  CHECK(vf.slope.at(set_of({1, 2}), 1) == 0);
  CHECK(vf.slope.at(set_of({1, 2, 3}), 1) == 0);
  CHECK(vf.slope.monotone());
  CHECK(claim_value(ineq, pi_from_flower(vf.slope)) < 0);
}

TEST_CASE("violating flower follows the min cut on the seven-term example") {
  ViolatingFlowerResult vf = violating_flower(seven_term());
  CHECK(vf.lhs_coef == 4);
  CHECK(vf.rhs_coef == 5);

  // Sink-side lambda nodes: (12,1), (12,2), (123,1), (123,2), (3,3).
  CHECK(vf.slope.at(set_of({1}), 1) == 1);
  CHECK(vf.slope.at(set_of({2}), 2) == 1);
  CHECK(vf.slope.at(set_of({3}), 3) == 1);
  CHECK(vf.slope.at(set_of({1, 2}), 1) == 1);
  CHECK(vf.slope.at(set_of({1, 2}), 2) == 1);
  CHECK(vf.slope.at(set_of({1, 3}), 1) == 1);
  CHECK(vf.slope.at(set_of({2, 3}), 2) == 1);
  CHECK(vf.slope.at(set_of({1, 2, 3}), 1) == 1);
  CHECK(vf.slope.at(set_of({1, 2, 3}), 2) == 1);
  CHECK(vf.slope.at(set_of({1, 3}), 3) == 0);
  CHECK(vf.slope.at(set_of({2, 3}), 3) == 0);
  CHECK(vf.slope.at(set_of({1, 2, 3}), 3) == 0);

  LogProjectionVector pi = pi_from_flower(vf.slope);
  CHECK(pi.at(set_of({1, 2})) == 2);
  CHECK(pi.at(set_of({1, 3})) == 1);
  CHECK(pi.at(set_of({1, 2, 3})) == 2);
  CHECK(claim_value(seven_term(), pi) == vf.lhs_coef - vf.rhs_coef);
}

TEST_CASE("violating flower falls back to the cube on mass imbalance") {
  ProjectionInequality light = ineq_of(2, {{set_of({1}), Rat(1)},
                                           {set_of({1, 2}), Rat(-1)}});
  ViolatingFlowerResult vf = violating_flower(light);
  CHECK(vf.lhs_coef == 1);
  CHECK(vf.rhs_coef == 2);
  for (AxisSet s : enumerate_subsets(2)) {
    for (int axis : s.axes()) CHECK(vf.slope.at(s, axis) == 1);
  }

  ProjectionInequality heavy = ineq_of(2, {{set_of({1, 2}), Rat(1)},
                                           {set_of({1}), Rat(-1)}});
  ViolatingFlowerResult wf = violating_flower(heavy);
  CHECK(wf.lhs_coef == -2);
  CHECK(wf.rhs_coef == -1);
  CHECK(wf.slope.at(set_of({1}), 1) == -1);
}

TEST_CASE("violating flower stretches one axis when balance fails there") {
  ProjectionInequality ineq = ineq_of(2, {{set_of({1, 2}), Rat(1)},
                                          {set_of({1}), Rat(-2)}});
  // Masses agree (2 = 2) but axis 1 carries 1 vs 2.
  ViolatingFlowerResult vf = violating_flower(ineq);
  CHECK(vf.lhs_coef == 1);
  CHECK(vf.rhs_coef == 2);
  CHECK(vf.slope.at(set_of({1}), 1) == 1);
  CHECK(vf.slope.at(set_of({1, 2}), 1) == 1);
  CHECK(vf.slope.at(set_of({2}), 2) == 0);
  CHECK(vf.slope.at(set_of({1, 2}), 2) == 0);
}

TEST_CASE("violating flower refuses valid inequalities") {
  CHECK_THROWS_AS(violating_flower(bt3()), DomainError);
}

TEST_CASE("materialization of the zero flower is the unit cube") {
  BoxUnion u = materialize_flower(Flower::zeros(3), Int(2));
  REQUIRE(u.boxes.size() == 1);
  CHECK(volume(u) == 1);
  for (const Rat& v : log_projection_vector(u).entries) CHECK(v == 1);
}

TEST_CASE("materialization of a cross flower") {
  Flower fl = Flower::zeros(2);
  fl.at(set_of({1}), 1) = 1;
  fl.at(set_of({2}), 2) = 1;
  BoxUnion u = materialize_flower(fl, Int(2));
  LogProjectionVector pv = log_projection_vector(u);
  CHECK(pv.at(set_of({1})) == 2);
  CHECK(pv.at(set_of({2})) == 2);
  CHECK(pv.at(set_of({1, 2})) == 3);
}

TEST_CASE("materialization of a box flower is a single box") {
  BoxUnion u = materialize_flower(box_flower({Rat(1), Rat(2)}), Int(3));
  REQUIRE(u.boxes.size() == 1);
  CHECK(u.boxes[0].sides == std::vector<Rat>{Rat(3), Rat(9)});
  LogProjectionVector pv = log_projection_vector(u);
  CHECK(pv.at(set_of({1, 2})) == 27);
}

TEST_CASE("materialization rejects fractional entries and tiny bases") {
  Flower fl = Flower::zeros(2);
  fl.at(set_of({1}), 1) = Rat(1, 2);
  CHECK_THROWS_AS(materialize_flower(fl, Int(2)), DomainError);
  CHECK_THROWS_AS(materialize_flower(Flower::zeros(2), Int(1)), DomainError);
}

TEST_CASE("shifted min-cut flowers materialize to genuine counterexamples") {
  // Shifting every entry by 2n+1 preserves the claim value (masses are
  // equal in the min-cut case) and makes the largest petal dominate every
  // projection, so a large base must reproduce the violation.
  ViolatingFlowerResult vf = violating_flower(seven_term());
  Flower shifted = vf.slope;
  for (auto& petal : shifted.entries) {
    for (auto& entry : petal) entry += 7;
  }
  REQUIRE(shifted.monotone());
  BoxUnion u = materialize_flower(shifted, Int(1024));
  EvalResult ev = evaluate_inequality(seven_term(), u);
  CHECK(ev.status == EvalStatus::Violated);
}

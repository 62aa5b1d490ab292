#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "projcone/errors.hpp"
#include "projcone/inequality.hpp"
#include "projcone/rational.hpp"
#include "projcone/subsets.hpp"

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

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(*parse_rational("3/4") == Rat(3, 4));
  CHECK(*parse_rational("-2") == Rat(-2));
  CHECK(*parse_rational("0") == 0);
  CHECK(*parse_rational("6/4") == Rat(3, 2));
  CHECK(*parse_rational("-6/4") == Rat(-3, 2));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational(""));
  CHECK(!parse_rational("1/"));
  CHECK(!parse_rational("/2"));
  CHECK(!parse_rational("1.5"));
  CHECK(!parse_rational("2/-3"));
  CHECK(!parse_rational("1 / 2"));
  CHECK(rational_str(Rat(3, 4)) == "3/4");
  CHECK(rational_str(Rat(-5)) == "-5");
  CHECK(rational_str(Rat(0)) == "0");
  CHECK(rational_str(*parse_rational("10/5")) == "2");
}

TEST_CASE("rational powers and common denominators") {
  CHECK(pow_rational(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(pow_rational(Rat(2), 10) == Rat(1024));
  CHECK(pow_rational(Rat(5), 0) == Rat(1));
  CHECK(pow_rational(Rat(0), 3) == Rat(0));
  CHECK(common_denominator({Rat(1, 2), Rat(2, 3)}) == 6);
  CHECK(common_denominator({Rat(1), Rat(-3)}) == 1);
  CHECK(common_denominator({}) == 1);
  CHECK(common_denominator({Rat(5, 6), Rat(1, 4)}) == 12);
}

TEST_CASE("axis set basics") {
  AxisSet s = set_of({1, 3});
  CHECK(s.cardinality() == 2);
  CHECK(s.contains(1));
  CHECK(!s.contains(2));
  CHECK(s.contains(3));
  CHECK(s.subset_of(AxisSet::full(3)));
  CHECK(!AxisSet::full(3).subset_of(s));
  CHECK(s.with(2) == AxisSet::full(3));
  CHECK(s.without(3) == AxisSet::single(1));
  CHECK(s.axes() == std::vector<int>{1, 3});
  CHECK(s.str() == "1,3");
  CHECK(AxisSet().empty());
  CHECK(s.intersect(set_of({3, 4})) == AxisSet::single(3));
  CHECK(s.unite(set_of({2})) == AxisSet::full(3));
}

TEST_CASE("canonical subset order") {
  CHECK(enumerate_subsets(1) == std::vector<AxisSet>{AxisSet::single(1)});
  CHECK(enumerate_subsets(2) ==
        std::vector<AxisSet>{AxisSet::single(1), AxisSet::single(2),
                             set_of({1, 2})});
  const auto& s3 = enumerate_subsets(3);
  CHECK(s3.size() == 7);
  CHECK(s3.back() == AxisSet::full(3));

  // Cardinality first, then lexicographic on ascending element lists.
  CHECK(canonical_less(set_of({1, 4}), set_of({2, 3})));
  CHECK(!canonical_less(set_of({2, 3}), set_of({1, 4})));
  CHECK(canonical_less(set_of({3}), set_of({1, 2})));

  for (int n = 1; n <= 6; ++n) {
    const auto& subsets = enumerate_subsets(n);
    CHECK(subsets.size() == (size_t(1) << n) - 1);
    for (size_t i = 0; i + 1 < subsets.size(); ++i) {
      CHECK(canonical_less(subsets[i], subsets[i + 1]));
    }
    for (size_t i = 0; i < subsets.size(); ++i) {
      CHECK(subset_position(subsets[i], n) == static_cast<int>(i));
    }
  }
  CHECK_THROWS_AS(enumerate_subsets(0), DomainError);
  CHECK_THROWS_AS(enumerate_subsets(17), DomainError);
}

TEST_CASE("axis set parsing") {
  CHECK(parse_axis_set("1,2", 3) == set_of({1, 2}));
  CHECK(parse_axis_set("3", 3) == AxisSet::single(3));
  CHECK(parse_axis_set("2,1", 3) == set_of({1, 2}));
  CHECK_THROWS_AS(parse_axis_set("4", 3), SchemaError);
  CHECK_THROWS_AS(parse_axis_set("", 3), SchemaError);
  CHECK_THROWS_AS(parse_axis_set("1,,2", 3), SchemaError);
  CHECK_THROWS_AS(parse_axis_set("0", 3), SchemaError);
  CHECK_THROWS_AS(parse_axis_set("a", 3), SchemaError);
}

TEST_CASE("inequality canonicalization") {
  ProjectionInequality merged =
      ineq_of(1, {{AxisSet::single(1), Rat(1)}, {AxisSet::single(1), Rat(1)}});
  CHECK(merged.terms().size() == 1);
  CHECK(merged.coeff(AxisSet::single(1)) == 2);

  ProjectionInequality cancelled = ineq_of(3, {{set_of({1, 3}), Rat(1)},
                                               {set_of({1, 3}), Rat(-1)},
                                               {AxisSet::single(1), Rat(1)}});
  CHECK(cancelled.terms().size() == 1);
  CHECK(cancelled.coeff(AxisSet::single(1)) == 1);
  CHECK(cancelled.coeff(set_of({1, 3})) == 0);

  CHECK_THROWS_AS(ineq_of(2, {}), DomainError);
  CHECK_THROWS_AS(
      ineq_of(2, {{set_of({1, 2}), Rat(1)}, {set_of({1, 2}), Rat(-1)}}),
      DomainError);
  CHECK_THROWS_AS(ineq_of(2, {{set_of({1, 3}), Rat(1)}}), DomainError);
  CHECK_THROWS_AS(ineq_of(2, {{AxisSet(), Rat(1)}}), DomainError);

  // Idempotence.
  ProjectionInequality again =
      ProjectionInequality::canonicalize(cancelled.dimension(), cancelled.terms());
  CHECK(again == cancelled);
}

TEST_CASE("inequality sides") {
  // x_12 + x_23 + x_34 - x_123 - x_234.
  ProjectionInequality ex1 = ineq_of(4, {{set_of({1, 2}), Rat(1)},
                                         {set_of({2, 3}), Rat(1)},
                                         {set_of({3, 4}), Rat(1)},
                                         {set_of({1, 2, 3}), Rat(-1)},
                                         {set_of({2, 3, 4}), Rat(-1)}});
  auto [a1, b1] = ex1.sides();
  REQUIRE(a1.entries.size() == 3);
  REQUIRE(b1.entries.size() == 2);
  CHECK(a1.entries[0].set == set_of({1, 2}));
  CHECK(a1.entries[2].set == set_of({3, 4}));
  CHECK(b1.entries[0].set == set_of({1, 2, 3}));
  for (const auto& ws : a1.entries) CHECK(ws.weight == 1);
  for (const auto& ws : b1.entries) CHECK(ws.weight == 1);
  CHECK(a1.total_weight() == 3);
  CHECK(a1.weighted_mass() == 6);
  CHECK(b1.weighted_mass() == 6);
  CHECK(a1.axis_weight(2) == 2);
  CHECK(b1.axis_weight(2) == 2);

  // 2x_123 - x_12 - x_13 - x_23.
  ProjectionInequality rev = ineq_of(3, {{set_of({1, 2, 3}), Rat(2)},
                                         {set_of({1, 2}), Rat(-1)},
                                         {set_of({1, 3}), Rat(-1)},
                                         {set_of({2, 3}), Rat(-1)}});
  auto [a2, b2] = rev.sides();
  REQUIRE(a2.entries.size() == 1);
  CHECK(a2.entries[0].set == set_of({1, 2, 3}));
  CHECK(a2.entries[0].weight == 2);
  CHECK(b2.entries.size() == 3);

  ProjectionInequality one = ineq_of(1, {{AxisSet::single(1), Rat(1)}});
  auto [a3, b3] = one.sides();
  CHECK(a3.entries.size() == 1);
  CHECK(b3.entries.empty());

  // Rebuilding the coefficient map from the two sides loses no mass.
  std::vector<std::pair<AxisSet, Rat>> rebuilt;
  for (const auto& ws : a1.entries) rebuilt.emplace_back(ws.set, ws.weight);
  for (const auto& ws : b1.entries) rebuilt.emplace_back(ws.set, -ws.weight);
  CHECK(ProjectionInequality::canonicalize(4, rebuilt) == ex1);
}

TEST_CASE("axis balance") {
  ProjectionInequality ex1 = ineq_of(4, {{set_of({1, 2}), Rat(1)},
                                         {set_of({2, 3}), Rat(1)},
                                         {set_of({3, 4}), Rat(1)},
                                         {set_of({1, 2, 3}), Rat(-1)},
                                         {set_of({2, 3, 4}), Rat(-1)}});
  CHECK(axis_balance(ex1) == std::vector<Rat>(4, Rat(0)));

  ProjectionInequality lop =
      ineq_of(2, {{AxisSet::single(1), Rat(1)}, {set_of({1, 2}), Rat(-1)}});
  std::vector<Rat> balance = axis_balance(lop);
  CHECK(balance[0] == 0);
  CHECK(balance[1] == -1);
}

TEST_CASE("inequality scaling") {
  ProjectionInequality lop =
      ineq_of(2, {{AxisSet::single(1), Rat(1)}, {set_of({1, 2}), Rat(-1)}});
  ProjectionInequality twice = lop.scaled(Rat(2));
  CHECK(twice.coeff(AxisSet::single(1)) == 2);
  CHECK(twice.coeff(set_of({1, 2})) == -2);
  CHECK_THROWS_AS(lop.scaled(Rat(0)), DomainError);
  CHECK_THROWS_AS(lop.scaled(Rat(-1)), DomainError);
}

TEST_CASE("log projection vectors and claim values") {
  LogProjectionVector pi = LogProjectionVector::zeros(2);
  CHECK(pi.entries.size() == 3);
  pi.at(AxisSet::single(1)) = Rat(1);
  pi.at(AxisSet::single(2)) = Rat(2);
  pi.at(set_of({1, 2})) = Rat(3);
  CHECK(pi.at(set_of({1, 2})) == 3);

  // x_1 + x_2 - x_12 on the box vector: 1 + 2 - 3 = 0 (tight).
  ProjectionInequality bt = ineq_of(2, {{AxisSet::single(1), Rat(1)},
                                        {AxisSet::single(2), Rat(1)},
                                        {set_of({1, 2}), Rat(-1)}});
  CHECK(claim_value(bt, pi) == 0);

  pi.at(set_of({1, 2})) = Rat(4);
  CHECK(claim_value(bt, pi) == -1);
}

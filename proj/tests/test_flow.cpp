#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "projcone/errors.hpp"
#include "projcone/flow.hpp"

using namespace projcone;

namespace {

AxisSet set_of(std::initializer_list<int> axes) {
  AxisSet s;
  for (int a : axes) s = s.with(a);
  return s;
}

WeightedFamily family(int n, std::vector<std::pair<AxisSet, Rat>> entries) {
  WeightedFamily f;
  f.dimension = n;
  for (auto& [set, weight] : entries) f.entries.push_back({set, weight});
  return f;
}

ProjectionInequality ineq_of(int n,
                             std::vector<std::pair<AxisSet, Rat>> terms) {
  return ProjectionInequality::canonicalize(n, std::move(terms));
}

ProjectionInequality example1() {
  return ineq_of(4, {{set_of({1, 2}), Rat(1)},
                     {set_of({2, 3}), Rat(1)},
                     {set_of({3, 4}), Rat(1)},
                     {set_of({1, 2, 3}), Rat(-1)},
                     {set_of({2, 3, 4}), Rat(-1)}});
}

// Total capacity of arcs crossing from the cut's source side to its sink
// side, recomputed from scratch; also asserts no middle arc crosses.
Rat crossing_capacity(const FlowNetwork& net, const CutCertificate& cut) {
  auto on = [](const std::vector<int>& list, int node) {
    return std::find(list.begin(), list.end(), node) != list.end();
  };
  Rat total = 0;
  for (size_t i = 0; i < net.sigma.size(); ++i) {
    if (on(cut.sink_sigma, static_cast<int>(i))) total += net.source_cap[i];
  }
  for (size_t j = 0; j < net.lambda.size(); ++j) {
    if (on(cut.source_lambda, static_cast<int>(j))) total += net.sink_cap[j];
  }
  for (const auto& [si, lj] : net.middle) {
    CHECK(!(on(cut.source_sigma, si) && on(cut.sink_lambda, lj)));
  }
  return total;
}

}  // namespace

TEST_CASE("network with no containment has no middle arcs") {
  WeightedFamily a = family(3, {{set_of({1, 2, 3}), Rat(1)}});
  WeightedFamily b = family(3, {{set_of({1}), Rat(1)},
                                {set_of({2}), Rat(1)},
                                {set_of({3}), Rat(1)}});
  FlowNetwork net = build_network(a, b);
  CHECK(net.sigma.size() == 3);
  CHECK(net.lambda.size() == 3);
  CHECK(net.middle.empty());
  CHECK(net.sink_total() == 3);

  MaxFlowResult flow = max_flow_min_cut(net);
  CHECK(flow.value == 0);
  CHECK(flow.cut.sink_lambda.size() == 3);
  CHECK(crossing_capacity(net, flow.cut) == flow.value);

  SaturationResult sat = saturates(a, b);
  CHECK(!sat.saturates);
  CHECK(sat.flow == 0);
  CHECK(sat.sink_total == 3);
}

TEST_CASE("cover families build the expected middle arcs") {
  auto [a, b] = example1().sides();
  FlowNetwork net = build_network(a, b);
  CHECK(net.sigma.size() == 6);
  CHECK(net.lambda.size() == 6);

  // Middle arcs exist exactly where the A set lies inside the B set and the
  // coordinates agree.
  std::map<std::pair<std::string, int>, std::vector<std::string>> arcs;
  for (const auto& [si, lj] : net.middle) {
    const auto& s = net.sigma[si];
    const auto& l = net.lambda[lj];
    CHECK(s.axis == l.axis);
    CHECK(a.entries[s.family].set.subset_of(b.entries[l.family].set));
    arcs[{a.entries[s.family].set.str(), s.axis}].push_back(
        b.entries[l.family].set.str());
  }
  CHECK(net.middle.size() == 8);
  CHECK(arcs[{"2,3", 2}] == std::vector<std::string>{"1,2,3", "2,3,4"});
  CHECK(arcs[{"1,2", 1}] == std::vector<std::string>{"1,2,3"});
  CHECK(arcs[{"3,4", 4}] == std::vector<std::string>{"2,3,4"});

  MaxFlowResult flow = max_flow_min_cut(net);
  CHECK(flow.value == 6);
  CHECK(crossing_capacity(net, flow.cut) == 6);
  CHECK(saturates(a, b).saturates);
}

TEST_CASE("fractional half-weight triple cover saturates") {
  WeightedFamily a = family(3, {{set_of({1, 2}), Rat(1, 2)},
                                {set_of({1, 3}), Rat(1, 2)},
                                {set_of({2, 3}), Rat(1, 2)}});
  WeightedFamily b = family(3, {{set_of({1, 2, 3}), Rat(1)}});
  FlowNetwork net = build_network(a, b);
  CHECK(net.source_cap == std::vector<Rat>(6, Rat(1, 2)));
  CHECK(net.sink_cap == std::vector<Rat>(3, Rat(1)));

  MaxFlowResult flow = max_flow_min_cut(net);
  CHECK(flow.value == 3);
  CHECK(crossing_capacity(net, flow.cut) == 3);

  SaturationResult sat = saturates(a, b);
  CHECK(sat.saturates);
  CHECK(sat.c1);
  CHECK(sat.flow == 3);
  CHECK(sat.sink_total == 3);
}

TEST_CASE("weight balance reports per-axis differences") {
  auto [a1, b1] = example1().sides();
  CHECK(weight_balance(a1, b1) == std::vector<Rat>(4, Rat(0)));
  CHECK(c1_holds(a1, b1));

  WeightedFamily a = family(2, {{set_of({1}), Rat(1)}});
  WeightedFamily b = family(2, {{set_of({1, 2}), Rat(1)}});
  std::vector<Rat> balance = weight_balance(a, b);
  CHECK(balance[0] == 0);
  CHECK(balance[1] == -1);
  CHECK(!c1_holds(a, b));

  CHECK(weight_balance(a, a) == std::vector<Rat>(2, Rat(0)));
}

TEST_CASE("covers returns a valid coordinate-preserving matching") {
  std::vector<AxisSet> a = {set_of({1, 2}), set_of({2, 3}), set_of({3, 4})};
  std::vector<AxisSet> b = {set_of({1, 2, 3}), set_of({2, 3, 4})};
  auto mapping = covers(4, a, b);
  REQUIRE(mapping.has_value());
  REQUIRE(mapping->arrows.size() == 6);

  // Every A instance appears exactly once, lands inside its target at the
  // same coordinate, and every B instance is hit exactly once.
  std::map<std::pair<int, int>, int> a_seen;
  std::map<std::pair<int, int>, int> b_seen;
  for (const auto& arrow : mapping->arrows) {
    CHECK(a[arrow.a_index].contains(arrow.axis));
    CHECK(a[arrow.a_index].subset_of(b[arrow.b_index]));
    a_seen[{arrow.a_index, arrow.axis}] += 1;
    b_seen[{arrow.b_index, arrow.axis}] += 1;
  }
  for (const auto& [key, count] : a_seen) CHECK(count == 1);
  CHECK(a_seen.size() == 6);
  CHECK(b_seen.size() == 6);
}

TEST_CASE("covers handles the five-set example and rejects non-covers") {
  std::vector<AxisSet> a = {set_of({1}), set_of({1, 2}), set_of({2, 3}),
                            set_of({3, 4}), set_of({2, 4})};
  std::vector<AxisSet> b = {set_of({1, 2, 3}), set_of({2, 3, 4}),
                            set_of({1, 2, 4})};
  CHECK(covers(4, a, b).has_value());

  CHECK(!covers(2, {set_of({1, 2})}, {set_of({1}), set_of({2})}).has_value());

  // Axis-count mismatch: property 1 fails before any matching runs.
  CHECK(!covers(2, {set_of({1})}, {set_of({1, 2})}).has_value());
}

TEST_CASE("cover implies unit-weight saturation") {
  std::vector<AxisSet> a = {set_of({1}), set_of({1, 2}), set_of({2, 3}),
                            set_of({3, 4}), set_of({2, 4})};
  std::vector<AxisSet> b = {set_of({1, 2, 3}), set_of({2, 3, 4}),
                            set_of({1, 2, 4})};
  WeightedFamily fa = family(4, {});
  for (AxisSet s : a) fa.entries.push_back({s, Rat(1)});
  WeightedFamily fb = family(4, {});
  for (AxisSet s : b) fb.entries.push_back({s, Rat(1)});
  CHECK(saturates(fa, fb).saturates);
}

TEST_CASE("is_fnc matches the characterization") {
  CHECK(is_fnc(ineq_of(2, {{set_of({1}), Rat(1)},
                           {set_of({2}), Rat(1)},
                           {set_of({1, 2}), Rat(-1)}}))
            .is_fnc);
  CHECK(is_fnc(example1()).is_fnc);

  // Axis-3 lambda instance starves: max flow 5 of 6.
  FncResult seven = is_fnc(ineq_of(3, {{set_of({1}), Rat(1)},
                                       {set_of({2}), Rat(1)},
                                       {set_of({1, 3}), Rat(1)},
                                       {set_of({2, 3}), Rat(1)},
                                       {set_of({1, 2}), Rat(-1)},
                                       {set_of({1, 2, 3}), Rat(-1)},
                                       {set_of({3}), Rat(-1)}}));
  CHECK(!seven.is_fnc);
  CHECK(seven.saturation.c1);
  CHECK(seven.saturation.flow == 5);
  CHECK(seven.saturation.sink_total == 6);

  CHECK(!is_fnc(ineq_of(2, {{set_of({1}), Rat(1)}, {set_of({1, 2}), Rat(-1)}}))
             .is_fnc);

  // One-sided inequalities fail C1, not crash.
  FncResult one_sided = is_fnc(ineq_of(1, {{set_of({1}), Rat(1)}}));
  CHECK(!one_sided.is_fnc);
}

TEST_CASE("is_fnc is invariant under positive scaling") {
  ProjectionInequality base = example1();
  CHECK(is_fnc(base.scaled(Rat(7, 3))).is_fnc);
  ProjectionInequality bad = ineq_of(2, {{set_of({1}), Rat(1)},
                                         {set_of({1, 2}), Rat(-1)}});
  CHECK(!is_fnc(bad.scaled(Rat(5))).is_fnc);
}

TEST_CASE("k-cover inequalities are always FNC") {
  // Three axes, 2-cover by the three pairs.
  CHECK(is_fnc(ineq_of(3, {{set_of({1, 2}), Rat(1)},
                           {set_of({1, 3}), Rat(1)},
                           {set_of({2, 3}), Rat(1)},
                           {set_of({1, 2, 3}), Rat(-2)}}))
            .is_fnc);
  // 3-cover of {1,2,3,4} by all triples.
  CHECK(is_fnc(ineq_of(4, {{set_of({1, 2, 3}), Rat(1)},
                           {set_of({1, 2, 4}), Rat(1)},
                           {set_of({1, 3, 4}), Rat(1)},
                           {set_of({2, 3, 4}), Rat(1)},
                           {set_of({1, 2, 3, 4}), Rat(-3)}}))
            .is_fnc);
  // 1-cover: a partition.
  CHECK(is_fnc(ineq_of(4, {{set_of({1, 4}), Rat(1)},
                           {set_of({2, 3}), Rat(1)},
                           {set_of({1, 2, 3, 4}), Rat(-1)}}))
            .is_fnc);
}

TEST_CASE("integral capacities yield integral flows") {
  auto [a, b] = example1().sides();
  MaxFlowResult flow = max_flow_min_cut(build_network(a, b));
  for (const Rat& f : flow.source_flow) CHECK(f.get_den() == 1);
  for (const Rat& f : flow.sink_flow) CHECK(f.get_den() == 1);
  for (const Rat& f : flow.middle_flow) CHECK(f.get_den() == 1);
}

TEST_CASE("cut certificates partition all nodes") {
  auto [a, b] = example1().sides();
  FlowNetwork net = build_network(a, b);
  MaxFlowResult flow = max_flow_min_cut(net);
  CHECK(flow.cut.source_sigma.size() + flow.cut.sink_sigma.size() ==
        net.sigma.size());
  CHECK(flow.cut.source_lambda.size() + flow.cut.sink_lambda.size() ==
        net.lambda.size());
  CHECK(flow.cut.value == flow.value);
}

TEST_CASE("dimension mismatch is rejected") {
  WeightedFamily a = family(2, {{set_of({1}), Rat(1)}});
  WeightedFamily b = family(3, {{set_of({1, 2, 3}), Rat(1)}});
  CHECK_THROWS_AS(build_network(a, b), DomainError);
}

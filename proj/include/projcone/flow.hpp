#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projcone/inequality.hpp"
#include "projcone/rational.hpp"
#include "projcone/subsets.hpp"

namespace projcone {

// Saturation network for two weighted families. Sigma nodes are (A_i, x)
// with x in A_i, lambda nodes are (B_j, y) with y in B_j. The source feeds
// each sigma node with capacity alpha_i, each lambda node feeds the sink
// with capacity beta_j, and a middle arc of unbounded capacity joins
// (A_i, x) to (B_j, y) exactly when A_i is a subset of B_j and x = y.
struct FlowNetwork {
  struct Node {
    int family;  // index into the owning family's entries
    int axis;
  };
  int dimension = 0;
  std::vector<Node> sigma;
  std::vector<Node> lambda;
  std::vector<Rat> source_cap;               // per sigma node
  std::vector<Rat> sink_cap;                 // per lambda node
  std::vector<std::pair<int, int>> middle;   // (sigma index, lambda index)

  Rat sink_total() const;
};

FlowNetwork build_network(const WeightedFamily& a, const WeightedFamily& b);

// Min cut as the residual-reachability partition: source_sigma/lambda list
// node indices reachable from the source in the final residual graph. This
// partition is the same for every maximum flow, so it is deterministic.
struct CutCertificate {
  Rat value = Rat(0);
  std::vector<int> source_sigma;
  std::vector<int> source_lambda;
  std::vector<int> sink_sigma;
  std::vector<int> sink_lambda;
};

struct MaxFlowResult {
  Rat value = Rat(0);
  std::vector<Rat> source_flow;  // per sigma node
  std::vector<Rat> sink_flow;    // per lambda node
  std::vector<Rat> middle_flow;  // per middle arc
  CutCertificate cut;
};

// Exact max flow (shortest augmenting paths, so the augmentation count is
// bounded by V*E independent of capacity values). Integral capacities give
// an integral flow.
MaxFlowResult max_flow_min_cut(const FlowNetwork& net);

// Per-axis weight balance sum_i alpha_i [x in A_i] - sum_j beta_j [x in B_j].
std::vector<Rat> weight_balance(const WeightedFamily& a, const WeightedFamily& b);
bool c1_holds(const WeightedFamily& a, const WeightedFamily& b);

struct SaturationResult {
  bool saturates = false;
  bool c1 = false;
  Rat flow = Rat(0);
  Rat sink_total = Rat(0);
  CutCertificate cut;
};

// C1 plus full-sink-capacity max flow.
SaturationResult saturates(const WeightedFamily& a, const WeightedFamily& b);

// Coordinate-preserving assignment of A-instances onto B-instances: entry
// ((i, x) -> j) means instance x of A_i maps into B_j at the same axis.
struct CoverMapping {
  struct Arrow {
    int a_index;
    int axis;
    int b_index;
  };
  std::vector<Arrow> arrows;
};

// Unweighted multiset families; present exactly when `a` covers `b`, i.e.
// every instance (B_j, y) is matched injectively from some (A_i, y) with
// A_i inside B_j.
std::optional<CoverMapping> covers(int n, const std::vector<AxisSet>& a,
                                   const std::vector<AxisSet>& b);

struct FncResult {
  bool is_fnc = false;
  SaturationResult saturation;
};

// An inequality is fractional-nonuniform-cover exactly when its two sides
// satisfy C1 and the saturation network has a max flow filling every sink
// arc.
FncResult is_fnc(const ProjectionInequality& ineq);

}  // namespace projcone

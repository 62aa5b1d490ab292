#include "projcone/flow.hpp"

#include <deque>
#include <map>

#include "projcone/errors.hpp"

namespace projcone {

namespace {

// Generic exact max-flow on a small directed graph, shortest augmenting
// paths (BFS), residual adjacency rebuilt on the fly. Node 0 is the
// source, node 1 the sink.
struct MiniGraph {
  struct Edge {
    int to;
    Rat cap;
    Rat flow = Rat(0);
  };
  int nodes = 2;
  std::vector<Edge> edges;                 // forward edges only
  std::vector<std::vector<int>> adjacency; // per node, incident edge ids (both ends)

  int add_node() { return nodes++; }

  int add_edge(int from, int to, Rat cap) {
    int id = static_cast<int>(edges.size());
    edges.push_back({to, std::move(cap)});
    from_of.push_back(from);
    return id;
  }

  std::vector<int> from_of;

  void finalize() {
    adjacency.assign(nodes, {});
    for (size_t id = 0; id < edges.size(); ++id) {
      adjacency[from_of[id]].push_back(static_cast<int>(id));
      adjacency[edges[id].to].push_back(static_cast<int>(id));
    }
  }

  Rat residual(int id, int node) const {
    // Residual capacity leaving `node` along edge id.
    if (from_of[id] == node) return edges[id].cap - edges[id].flow;
    return edges[id].flow;
  }

  int other(int id, int node) const {
    return from_of[id] == node ? edges[id].to : from_of[id];
  }

  Rat run() {
    Rat total = 0;
    while (true) {
      std::vector<int> parent_edge(nodes, -1);
      std::vector<bool> seen(nodes, false);
      std::deque<int> queue{0};
      seen[0] = true;
      while (!queue.empty() && !seen[1]) {
        int node = queue.front();
        queue.pop_front();
        for (int id : adjacency[node]) {
          int next = other(id, node);
          if (seen[next] || residual(id, node) <= 0) continue;
          seen[next] = true;
          parent_edge[next] = id;
          queue.push_back(next);
        }
      }
      if (!seen[1]) return total;
      Rat bottleneck;
      bool first = true;
      for (int node = 1; node != 0;) {
        int id = parent_edge[node];
        int prev = other(id, node);
        Rat r = residual(id, prev);
        if (first || r < bottleneck) bottleneck = r;
        first = false;
        node = prev;
      }
      for (int node = 1; node != 0;) {
        int id = parent_edge[node];
        int prev = other(id, node);
        if (from_of[id] == prev) {
          edges[id].flow += bottleneck;
        } else {
          edges[id].flow -= bottleneck;
        }
        node = prev;
      }
      total += bottleneck;
    }
  }

  std::vector<bool> source_side() const {
    std::vector<bool> seen(nodes, false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      int node = queue.front();
      queue.pop_front();
      for (int id : adjacency[node]) {
        int next = other(id, node);
        if (!seen[next] && residual(id, node) > 0) {
          seen[next] = true;
          queue.push_back(next);
        }
      }
    }
    return seen;
  }
};

}  // namespace

Rat FlowNetwork::sink_total() const {
  Rat total = 0;
  for (const auto& cap : sink_cap) total += cap;
  return total;
}

FlowNetwork build_network(const WeightedFamily& a, const WeightedFamily& b) {
  if (a.dimension != b.dimension) {
    throw DomainError("families live in different dimensions");
  }
  FlowNetwork net;
  net.dimension = a.dimension;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    for (int axis : a.entries[i].set.axes()) {
      net.sigma.push_back({static_cast<int>(i), axis});
      net.source_cap.push_back(a.entries[i].weight);
    }
  }
  for (size_t j = 0; j < b.entries.size(); ++j) {
    for (int axis : b.entries[j].set.axes()) {
      net.lambda.push_back({static_cast<int>(j), axis});
      net.sink_cap.push_back(b.entries[j].weight);
    }
  }
  for (size_t s = 0; s < net.sigma.size(); ++s) {
    AxisSet a_set = a.entries[net.sigma[s].family].set;
    for (size_t l = 0; l < net.lambda.size(); ++l) {
      if (net.sigma[s].axis == net.lambda[l].axis &&
          a_set.subset_of(b.entries[net.lambda[l].family].set)) {
        net.middle.emplace_back(static_cast<int>(s), static_cast<int>(l));
      }
    }
  }
  return net;
}

MaxFlowResult max_flow_min_cut(const FlowNetwork& net) {
  MiniGraph g;
  std::vector<int> sigma_node(net.sigma.size());
  std::vector<int> lambda_node(net.lambda.size());
  for (size_t s = 0; s < net.sigma.size(); ++s) sigma_node[s] = g.add_node();
  for (size_t l = 0; l < net.lambda.size(); ++l) lambda_node[l] = g.add_node();

  // Middle arcs are conceptually unbounded; any capacity above the total
  // sink capacity is equivalent (no minimum cut ever uses one).
  Rat big = net.sink_total() + 1;

  std::vector<int> source_edge(net.sigma.size());
  std::vector<int> sink_edge(net.lambda.size());
  std::vector<int> middle_edge(net.middle.size());
  for (size_t s = 0; s < net.sigma.size(); ++s) {
    source_edge[s] = g.add_edge(0, sigma_node[s], net.source_cap[s]);
  }
  for (size_t l = 0; l < net.lambda.size(); ++l) {
    sink_edge[l] = g.add_edge(lambda_node[l], 1, net.sink_cap[l]);
  }
  for (size_t m = 0; m < net.middle.size(); ++m) {
    middle_edge[m] = g.add_edge(sigma_node[net.middle[m].first],
                                lambda_node[net.middle[m].second], big);
  }
  g.finalize();

  MaxFlowResult result;
  result.value = g.run();
  for (size_t s = 0; s < net.sigma.size(); ++s) {
    result.source_flow.push_back(g.edges[source_edge[s]].flow);
  }
  for (size_t l = 0; l < net.lambda.size(); ++l) {
    result.sink_flow.push_back(g.edges[sink_edge[l]].flow);
  }
  for (size_t m = 0; m < net.middle.size(); ++m) {
    result.middle_flow.push_back(g.edges[middle_edge[m]].flow);
  }

  std::vector<bool> reachable = g.source_side();
  result.cut.value = result.value;
  for (size_t s = 0; s < net.sigma.size(); ++s) {
    if (reachable[sigma_node[s]]) {
      result.cut.source_sigma.push_back(static_cast<int>(s));
    } else {
      result.cut.sink_sigma.push_back(static_cast<int>(s));
    }
  }
  for (size_t l = 0; l < net.lambda.size(); ++l) {
    if (reachable[lambda_node[l]]) {
      result.cut.source_lambda.push_back(static_cast<int>(l));
    } else {
      result.cut.sink_lambda.push_back(static_cast<int>(l));
    }
  }
  return result;
}

std::vector<Rat> weight_balance(const WeightedFamily& a, const WeightedFamily& b) {
  if (a.dimension != b.dimension) {
    throw DomainError("families live in different dimensions");
  }
  std::vector<Rat> balance(a.dimension, Rat(0));
  for (int axis = 1; axis <= a.dimension; ++axis) {
    balance[axis - 1] = a.axis_weight(axis) - b.axis_weight(axis);
  }
  return balance;
}

bool c1_holds(const WeightedFamily& a, const WeightedFamily& b) {
  for (const auto& value : weight_balance(a, b)) {
    if (value != 0) return false;
  }
  return true;
}

SaturationResult saturates(const WeightedFamily& a, const WeightedFamily& b) {
  SaturationResult result;
  result.c1 = c1_holds(a, b);
  FlowNetwork net = build_network(a, b);
  MaxFlowResult flow = max_flow_min_cut(net);
  result.flow = flow.value;
  result.sink_total = net.sink_total();
  result.cut = flow.cut;
  result.saturates = result.c1 && result.flow == result.sink_total;
  return result;
}

std::optional<CoverMapping> covers(int n, const std::vector<AxisSet>& a,
                                   const std::vector<AxisSet>& b) {
  WeightedFamily fam_a{n, {}};
  WeightedFamily fam_b{n, {}};
  for (AxisSet s : a) fam_a.entries.push_back({s, Rat(1)});
  for (AxisSet s : b) fam_b.entries.push_back({s, Rat(1)});
  FlowNetwork net = build_network(fam_a, fam_b);
  MaxFlowResult flow = max_flow_min_cut(net);
  if (flow.value != net.sink_total()) return std::nullopt;
  // Unit capacities make the flow integral, so every middle arc carries 0
  // or 1 and the carried arcs form the assignment.
  CoverMapping mapping;
  for (size_t m = 0; m < net.middle.size(); ++m) {
    if (flow.middle_flow[m] == 0) continue;
    if (flow.middle_flow[m] != 1) {
      throw InternalError("unit-capacity flow must be integral");
    }
    const auto& sigma = net.sigma[net.middle[m].first];
    const auto& lambda = net.lambda[net.middle[m].second];
    mapping.arrows.push_back({sigma.family, sigma.axis, lambda.family});
  }
  return mapping;
}

FncResult is_fnc(const ProjectionInequality& ineq) {
  auto [a, b] = ineq.sides();
  FncResult result;
  if (b.entries.empty()) {
    // No negative terms: the claim is a product of powers >= 1 on cornered
    // objects only when saturation holds; with an empty B side the network
    // saturates trivially, so only C1 matters.
    result.saturation.c1 = c1_holds(a, b);
    result.saturation.saturates = result.saturation.c1;
    result.is_fnc = result.saturation.c1;
    return result;
  }
  result.saturation = saturates(a, b);
  result.is_fnc = result.saturation.saturates;
  return result;
}

}  // namespace projcone

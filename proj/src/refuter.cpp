#include "projcone/refuter.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "projcone/errors.hpp"
#include "projcone/flow.hpp"
#include "projcone/flower.hpp"
#include "projcone/lp.hpp"

namespace projcone {

namespace {

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

RefutationReport make_report(std::string method, BoxUnion witness,
                             std::map<std::string, std::string> params,
                             const EvalResult& eval) {
  RefutationReport report;
  report.method = std::move(method);
  report.witness = std::move(witness);
  report.params = std::move(params);
  report.lhs = eval.lhs;
  report.rhs = eval.rhs;
  report.margin = eval.margin;
  return report;
}

}  // namespace

bool ConnectionGraph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : edges) {
    if (e.first == i && e.second == j) return true;
  }
  return false;
}

ConnectionGraph connection_graph(const ProjectionInequality& ineq) {
  auto [a, b] = ineq.sides();
  ConnectionGraph g;
  g.dimension = ineq.dimension();
  for (int i = 1; i <= g.dimension; ++i) {
    for (int j = i + 1; j <= g.dimension; ++j) {
      bool in_some_b = false;
      for (const auto& ws : b.entries) {
        if (ws.set.contains(i) && ws.set.contains(j)) {
          in_some_b = true;
          break;
        }
      }
      if (!in_some_b) continue;
      bool in_some_a = false;
      for (const auto& ws : a.entries) {
        if (ws.set.contains(i) && ws.set.contains(j)) {
          in_some_a = true;
          break;
        }
      }
      if (!in_some_a) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

namespace {

// Plain recursive maximum clique on the induced subgraph; dimensions are
// tiny (n <= 16).
void clique_extend(const ConnectionGraph& g, const std::vector<int>& candidates,
                   size_t start, int depth, int& best) {
  if (depth + static_cast<int>(candidates.size() - start) <= best) return;
  for (size_t idx = start; idx < candidates.size(); ++idx) {
    std::vector<int> next;
    for (size_t other = idx + 1; other < candidates.size(); ++other) {
      if (g.has_edge(candidates[idx], candidates[other])) {
        next.push_back(candidates[other]);
      }
    }
    if (depth + 1 > best) best = depth + 1;
    if (!next.empty()) clique_extend(g, next, 0, depth + 1, best);
  }
}

void bron_kerbosch(const ConnectionGraph& g, uint32_t r, uint32_t p, uint32_t x,
                   std::vector<AxisSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(AxisSet(r));
    return;
  }
  uint32_t candidates = p;
  while (candidates) {
    int bit = __builtin_ctz(candidates);
    candidates &= candidates - 1;
    int axis = bit + 1;
    uint32_t nbrs = 0;
    for (int other = 1; other <= g.dimension; ++other) {
      if (other != axis && g.has_edge(axis, other)) nbrs |= 1u << (other - 1);
    }
    bron_kerbosch(g, r | (1u << bit), p & nbrs, x & nbrs, out);
    p &= ~(1u << bit);
    x |= 1u << bit;
  }
}

}  // namespace

int max_clique_size(const ConnectionGraph& g, AxisSet s) {
  if (s.empty()) return 0;
  std::vector<int> candidates = s.axes();
  int best = 1;
  clique_extend(g, candidates, 0, 0, best);
  return best;
}

std::vector<AxisSet> maximal_cliques(const ConnectionGraph& g) {
  std::vector<AxisSet> out;
  uint32_t all = AxisSet::full(g.dimension).bits();
  bron_kerbosch(g, 0, all, 0, out);
  std::sort(out.begin(), out.end(),
            [](AxisSet a, AxisSet b) { return canonical_less(a, b); });
  return out;
}

BoxUnion skeleton_build(const ConnectionGraph& g, const Int& m) {
  BoxUnion u;
  u.dimension = g.dimension;
  for (AxisSet clique : maximal_cliques(g)) {
    std::vector<Rat> sides(g.dimension, Rat(1));
    for (int axis : clique.axes()) sides[axis - 1] = Rat(m);
    u.boxes.push_back(make_box(std::vector<Rat>(g.dimension, Rat(0)), std::move(sides)));
  }
  return u;
}

std::optional<RefutationReport> skeleton_refute(const ProjectionInequality& ineq,
                                                long mcap) {
  auto [a, b] = ineq.sides();
  ConnectionGraph g = connection_graph(ineq);
  Rat lhs_exponent = a.total_weight();
  Rat rhs_exponent = 0;
  for (const auto& ws : b.entries) {
    rhs_exponent += ws.weight * max_clique_size(g, ws.set);
  }
  if (!(lhs_exponent < rhs_exponent)) return std::nullopt;

  for (Int m = 4; m <= mcap; m *= 2) {
    BoxUnion u = skeleton_build(g, m);
    EvalResult eval = evaluate_inequality(ineq, u);
    if (eval.status == EvalStatus::Violated) {
      return make_report("skeleton", std::move(u), {{"M", m.get_str()}}, eval);
    }
  }
  throw InternalError("skeleton exponent gap exists but the cap was reached");
}

namespace {

long set_sum(AxisSet s, const std::vector<long>& t) {
  long total = 0;
  for (int axis : s.axes()) total += t[axis - 1];
  return total;
}

// sum_i alpha_i |t(A_i)| < sum_j beta_j |t(B_j)|, exactly.
bool unionbox_condition(const WeightedFamily& a, const WeightedFamily& b,
                        const std::vector<long>& t) {
  Rat lhs = 0;
  Rat rhs = 0;
  for (const auto& ws : a.entries) {
    long s = set_sum(ws.set, t);
    lhs += ws.weight * Rat(s < 0 ? -s : s);
  }
  for (const auto& ws : b.entries) {
    long s = set_sum(ws.set, t);
    rhs += ws.weight * Rat(s < 0 ? -s : s);
  }
  return lhs < rhs;
}

BoxUnion unionbox_witness(int n, const std::vector<long>& t, const Int& m) {
  BoxUnion u;
  u.dimension = n;
  u.boxes.push_back(make_box(std::vector<Rat>(n, Rat(0)), std::vector<Rat>(n, Rat(1))));
  std::vector<Rat> sides;
  Rat rm(m);
  for (int axis = 1; axis <= n; ++axis) {
    sides.push_back(pow_rational(rm, t[axis - 1]));
  }
  u.boxes.push_back(make_box(std::vector<Rat>(n, Rat(1)), std::move(sides)));
  return u;
}

}  // namespace

std::optional<RefutationReport> unionbox_refute(const ProjectionInequality& ineq,
                                                const std::vector<long>& t,
                                                long mcap) {
  const int n = ineq.dimension();
  if (t.size() != static_cast<size_t>(n)) {
    throw SchemaError("exponent vector length must match the dimension");
  }
  auto [a, b] = ineq.sides();
  if (!unionbox_condition(a, b, t)) return std::nullopt;

  for (Int m = 4; m <= mcap; m *= 2) {
    BoxUnion u = unionbox_witness(n, t, m);
    EvalResult eval = evaluate_inequality(ineq, u);
    if (eval.status == EvalStatus::Violated) {
      return make_report("unionbox", std::move(u),
                         {{"M", m.get_str()}, {"t", join_longs(t)}}, eval);
    }
  }
  throw InternalError("union-box absolute gap exists but the cap was reached");
}

namespace {

std::vector<std::vector<long>> farkas_directions(const ProjectionInequality& ineq) {
  std::vector<std::vector<long>> out;
  for (const auto& verdict : single_cover_check(ineq)) {
    if (!verdict.feasible && !verdict.t.empty()) out.push_back(verdict.t);
  }
  return out;
}

}  // namespace

std::optional<std::vector<long>> search_t(const ProjectionInequality& ineq, int radius) {
  if (radius > 4) throw DomainError("t-grid radius capped at 4");
  auto [a, b] = ineq.sides();
  for (const auto& t : farkas_directions(ineq)) {
    if (unionbox_condition(a, b, t)) return t;
  }
  if (radius < 0) return std::nullopt;
  const int n = ineq.dimension();
  std::vector<long> t(n, -radius);
  while (true) {
    bool zero = true;
    for (long v : t) {
      if (v != 0) {
        zero = false;
        break;
      }
    }
    if (!zero && unionbox_condition(a, b, t)) return t;
    int pos = n - 1;
    while (pos >= 0 && t[pos] == radius) {
      t[pos] = -radius;
      --pos;
    }
    if (pos < 0) return std::nullopt;
    ++t[pos];
  }
}

std::vector<SingleCoverVerdict> single_cover_check(const ProjectionInequality& ineq) {
  auto [a, b] = ineq.sides();
  const int n = ineq.dimension();
  std::vector<SingleCoverVerdict> verdicts;
  for (const auto& target : b.entries) {
    LinearSystem sys;
    std::vector<int> c_var;
    for (size_t i = 0; i < a.entries.size(); ++i) {
      c_var.push_back(sys.add_variable("c" + std::to_string(i), true));
    }
    // Axis rows first (their Farkas multipliers form the separating
    // direction), then the upper bounds c_i <= alpha_i.
    for (int axis = 1; axis <= n; ++axis) {
      std::map<int, Rat> row;
      for (size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i].set.contains(axis)) row[c_var[i]] = Rat(1);
      }
      Rat rhs = target.set.contains(axis) ? target.weight : Rat(0);
      sys.add_constraint(std::move(row), Rel::Eq, rhs);
    }
    for (size_t i = 0; i < a.entries.size(); ++i) {
      sys.add_constraint({{c_var[i], Rat(1)}}, Rel::Le, a.entries[i].weight);
    }

    SingleCoverVerdict verdict;
    verdict.b_set = target.set;
    verdict.beta = target.weight;
    FeasibilityResult lp = solve(sys);
    if (lp.status == FeasibilityResult::Status::Feasible) {
      verdict.feasible = true;
      for (size_t i = 0; i < a.entries.size(); ++i) {
        verdict.c.push_back(lp.witness[c_var[i]]);
      }
    } else {
      verdict.feasible = false;
      std::vector<Rat> y(lp.farkas.begin(), lp.farkas.begin() + n);
      Int denom = common_denominator(y);
      for (int axis = 0; axis < n; ++axis) {
        Rat scaled = y[axis] * Rat(denom);
        if (scaled.get_den() != 1 || !scaled.get_num().fits_slong_p()) {
          throw InternalError("separating direction does not rationalize");
        }
        verdict.t.push_back(scaled.get_num().get_si());
      }
    }
    verdicts.push_back(std::move(verdict));
  }
  return verdicts;
}

namespace {

struct HybridSplit {
  ProjectionInequality part1;
  std::vector<std::pair<AxisSet, Rat>> part2_terms;  // may be empty
  std::vector<long> r;                               // empty when part2 empty
  uint32_t mask;
};

// Integer exponent vector with t(S) <= -1 on part1 supports, t(S) >= 1 on
// part2 supports, and part 2 asymptotically tight: weighted exponent sums
// agree across its two sides. Strictness is baked in since any feasible
// direction scales.
std::optional<std::vector<long>> split_exponents(
    int n, const std::vector<std::pair<AxisSet, Rat>>& part1_terms,
    const std::vector<std::pair<AxisSet, Rat>>& part2_terms) {
  LinearSystem sys;
  std::vector<int> r_var;
  for (int axis = 1; axis <= n; ++axis) {
    r_var.push_back(sys.add_variable("r" + std::to_string(axis), false));
  }
  auto add_rows = [&](const std::vector<std::pair<AxisSet, Rat>>& terms, bool upper) {
    for (const auto& [set, coeff] : terms) {
      std::map<int, Rat> row;
      for (int axis : set.axes()) row[r_var[axis - 1]] = Rat(1);
      if (upper) {
        sys.add_constraint(std::move(row), Rel::Le, Rat(-1));
      } else {
        sys.add_constraint(std::move(row), Rel::Ge, Rat(1));
      }
    }
  };
  add_rows(part1_terms, true);
  add_rows(part2_terms, false);
  {
    std::map<int, Rat> tight;
    for (const auto& [set, coeff] : part2_terms) {
      for (int axis : set.axes()) tight[r_var[axis - 1]] += coeff;
    }
    sys.add_constraint(std::move(tight), Rel::Eq, Rat(0));
  }
  FeasibilityResult lp = solve(sys);
  if (lp.status != FeasibilityResult::Status::Feasible) return std::nullopt;
  Int denom = common_denominator(lp.witness);
  std::vector<long> r;
  for (int axis = 0; axis < n; ++axis) {
    Rat scaled = lp.witness[axis] * Rat(denom);
    if (scaled.get_den() != 1 || !scaled.get_num().fits_slong_p()) return std::nullopt;
    r.push_back(scaled.get_num().get_si());
  }
  return r;
}

bool skeleton_condition(const ProjectionInequality& part) {
  auto [a, b] = part.sides();
  if (b.entries.empty()) return false;
  ConnectionGraph g = connection_graph(part);
  Rat lhs = a.total_weight();
  Rat rhs = 0;
  for (const auto& ws : b.entries) {
    rhs += ws.weight * max_clique_size(g, ws.set);
  }
  return lhs < rhs;
}

std::vector<HybridSplit> hybrid_splits(const ProjectionInequality& ineq,
                                       const std::optional<std::vector<long>>& r_override) {
  const auto& terms = ineq.terms();
  const int n = ineq.dimension();
  const size_t count = terms.size();
  std::vector<HybridSplit> splits;
  if (count > 20) return splits;  // mask enumeration is the hybrid's scope limit

  // Per-axis balance checks run over every mask: do them in plain integers
  // after clearing denominators once.
  std::vector<Rat> coeffs;
  for (const auto& [set, coeff] : terms) coeffs.push_back(coeff);
  Int denom = common_denominator(coeffs);
  std::vector<std::array<long, kMaxDimension>> inc(count);
  for (size_t i = 0; i < count; ++i) {
    inc[i].fill(0);
    Rat scaled = coeffs[i] * Rat(denom);
    if (scaled.get_den() != 1 || !scaled.get_num().fits_slong_p()) return splits;
    long value = scaled.get_num().get_si();
    for (int axis : terms[i].first.axes()) inc[i][axis - 1] = value;
  }

  // Both parts balanced forces the whole to be balanced; bail out early
  // otherwise so part-2 balance follows from part-1 balance below.
  {
    std::array<long, kMaxDimension> total;
    total.fill(0);
    for (size_t i = 0; i < count; ++i)
      for (int axis = 0; axis < n; ++axis) total[axis] += inc[i][axis];
    for (int axis = 0; axis < n; ++axis)
      if (total[axis] != 0) return splits;
  }

  for (uint32_t mask = 1; mask < (1u << count); ++mask) {
    std::array<long, kMaxDimension> balance;
    balance.fill(0);
    for (size_t i = 0; i < count; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int axis = 0; axis < n; ++axis) balance[axis] += inc[i][axis];
    }
    bool ok = true;
    for (int axis = 0; axis < n; ++axis) {
      if (balance[axis] != 0) {
        ok = false;
        break;
      }
    }
    // Part 2 inherits balance from part 1 whenever the input is balanced,
    // which FNC inputs always are.
    if (!ok) continue;

    std::vector<std::pair<AxisSet, Rat>> part1_terms;
    std::vector<std::pair<AxisSet, Rat>> part2_terms;
    for (size_t i = 0; i < count; ++i) {
      if (mask & (1u << i)) {
        part1_terms.push_back(terms[i]);
      } else {
        part2_terms.push_back(terms[i]);
      }
    }
    ProjectionInequality part1 = ProjectionInequality::canonicalize(n, part1_terms);
    if (!skeleton_condition(part1)) continue;

    std::vector<long> r;
    if (!part2_terms.empty()) {
      if (r_override) {
        r = *r_override;
      } else {
        auto found = split_exponents(n, part1_terms, part2_terms);
        if (!found) continue;
        r = *found;
      }
    } else if (r_override) {
      continue;  // an explicit r asks for a genuine two-part split
    }
    splits.push_back(HybridSplit{std::move(part1), std::move(part2_terms),
                                 std::move(r), mask});
  }
  return splits;
}

}  // namespace

std::optional<RefutationReport> hybrid_refute(
    const ProjectionInequality& ineq, const Int& m, const Int& r,
    const std::optional<std::vector<long>>& r_override) {
  const int n = ineq.dimension();
  if (r_override && r_override->size() != static_cast<size_t>(n)) {
    throw SchemaError("exponent override length must match the dimension");
  }
  for (const auto& split : hybrid_splits(ineq, r_override)) {
    ConnectionGraph g = connection_graph(split.part1);
    BoxUnion u = skeleton_build(g, m);
    if (!split.part2_terms.empty()) {
      std::vector<Rat> corner;
      for (int axis = 0; axis < n; ++axis) {
        Rat top = 0;
        for (const auto& box : u.boxes) {
          Rat end = box.corner[axis] + box.sides[axis];
          if (end > top) top = end;
        }
        corner.push_back(top);
      }
      std::vector<Rat> sides;
      Rat rr(r);
      for (int axis = 0; axis < n; ++axis) {
        sides.push_back(pow_rational(rr, split.r[axis]));
      }
      u.boxes.push_back(make_box(std::move(corner), std::move(sides)));
    }
    EvalResult eval = evaluate_inequality(ineq, u);
    if (eval.status != EvalStatus::Violated) continue;
    std::map<std::string, std::string> params{
        {"M", m.get_str()},
        {"R", r.get_str()},
        {"split", std::to_string(split.mask)}};
    if (!split.r.empty()) params["r"] = join_longs(split.r);
    return make_report("hybrid", std::move(u), std::move(params), eval);
  }
  return std::nullopt;
}

namespace {

std::optional<RefutationReport> flower_refute(const ProjectionInequality& ineq) {
  const int n = ineq.dimension();

  // Clearing denominators keeps the violation verdict and makes the
  // coefficient gap below at least 1, which bounds the base needed.
  std::vector<Rat> coeffs;
  for (const auto& [set, coeff] : ineq.terms()) coeffs.push_back(coeff);
  ProjectionInequality scaled = ineq.scaled(Rat(common_denominator(coeffs)));
  ViolatingFlowerResult vf = violating_flower(scaled);

  // Per-axis-constant slopes materialize exactly; the min-cut flower needs
  // a shift making pi strictly monotone so petal thickening cannot leak
  // into higher projections. The shift keeps the claim value because C1
  // holds in that branch.
  bool per_axis_constant = true;
  for (int axis = 1; axis <= n && per_axis_constant; ++axis) {
    Rat value = vf.slope.at(AxisSet::single(axis), axis);
    for (AxisSet s : enumerate_subsets(n)) {
      if (!s.contains(axis)) continue;
      if (vf.slope.at(s, axis) != value) {
        per_axis_constant = false;
        break;
      }
    }
  }
  Flower shifted = vf.slope;
  long shift = 0;
  if (!per_axis_constant) {
    shift = 2L * n + 1;
    for (auto& petal : shifted.entries) {
      for (auto& entry : petal) entry += shift;
    }
  }

  Int base = 2;
  for (int step = 0; step < 40; ++step, base *= base) {
    BoxUnion u = materialize_flower(shifted, base);
    EvalResult eval = evaluate_inequality(ineq, u);
    if (eval.status == EvalStatus::Violated) {
      return make_report("flower", std::move(u),
                         {{"base", base.get_str()},
                          {"shift", std::to_string(shift)},
                          {"lhs_coef", rational_str(vf.lhs_coef)},
                          {"rhs_coef", rational_str(vf.rhs_coef)}},
                         eval);
    }
  }
  throw InternalError("flower materialization never reached violation");
}

// One candidate box per claim term, h_s the intended projection exponent of
// term s. Rows: e_s(S_s) = h_s keeps the own box on top, e_t(S_s) <= h_s
// keeps every other box at or below, and sum_s coeff_s h_s <= -1 makes the
// claim exponent negative (the homogeneous rows absorb any positive scale,
// so a gap of 1 costs no generality). Any union of origin-cornered boxes
// with power sides is dominated term-wise by such an assignment, so an
// infeasible system rules the whole family out.
std::optional<std::vector<std::vector<long>>> staircase_exponents(
    const ProjectionInequality& ineq) {
  const auto& terms = ineq.terms();
  const int n = ineq.dimension();
  const int count = static_cast<int>(terms.size());
  LinearSystem sys;
  std::vector<int> h(count);
  std::vector<std::vector<int>> e(count, std::vector<int>(n));
  for (int t = 0; t < count; ++t) {
    h[t] = sys.add_variable("h" + std::to_string(t), false);
    for (int axis = 1; axis <= n; ++axis) {
      e[t][axis - 1] = sys.add_variable(
          "e" + std::to_string(t) + "_" + std::to_string(axis), false);
    }
  }
  for (int s = 0; s < count; ++s) {
    for (int t = 0; t < count; ++t) {
      std::map<int, Rat> row;
      for (int axis : terms[s].first.axes()) row[e[t][axis - 1]] += Rat(1);
      row[h[s]] -= Rat(1);
      sys.add_constraint(std::move(row), t == s ? Rel::Eq : Rel::Le, Rat(0));
    }
  }
  std::map<int, Rat> claim;
  for (int t = 0; t < count; ++t) claim[h[t]] += terms[t].second;
  sys.add_constraint(std::move(claim), Rel::Le, Rat(-1));

  FeasibilityResult res = solve(sys);
  if (res.status != FeasibilityResult::Status::Feasible) return std::nullopt;

  // Clear denominators so the box sides stay rational; scaling the whole
  // exponent matrix preserves feasibility and the sign of the claim.
  Int denom = 1;
  for (int t = 0; t < count; ++t) {
    for (int i = 0; i < n; ++i) {
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(),
              res.witness[e[t][i]].get_den().get_mpz_t());
    }
  }
  std::vector<std::vector<long>> exps;
  for (int t = 0; t < count; ++t) {
    std::vector<long> vec(n);
    for (int i = 0; i < n; ++i) {
      Rat scaled = res.witness[e[t][i]] * Rat(denom);
      if (!scaled.get_num().fits_slong_p()) return std::nullopt;
      vec[i] = scaled.get_num().get_si();
    }
    if (std::find(exps.begin(), exps.end(), vec) == exps.end()) {
      exps.push_back(std::move(vec));
    }
  }
  return exps;
}

}  // namespace

std::optional<RefutationReport> staircase_refute(const ProjectionInequality& ineq,
                                                 long bcap) {
  const int n = ineq.dimension();
  auto exps = staircase_exponents(ineq);
  if (!exps) return std::nullopt;

  std::string joined;
  for (const auto& vec : *exps) {
    if (!joined.empty()) joined += ";";
    joined += join_longs(vec);
  }
  for (Int base = 2; base <= bcap; base *= 2) {
    BoxUnion u;
    u.dimension = n;
    Rat rb(base);
    for (const auto& vec : *exps) {
      std::vector<Rat> sides;
      for (int axis = 0; axis < n; ++axis) {
        sides.push_back(pow_rational(rb, vec[axis]));
      }
      u.boxes.push_back(make_box(std::vector<Rat>(n, Rat(0)), std::move(sides)));
    }
    EvalResult eval = evaluate_inequality(ineq, u);
    if (eval.status == EvalStatus::Violated) {
      return make_report("staircase", std::move(u),
                         {{"base", base.get_str()}, {"exponents", joined}}, eval);
    }
  }
  throw InternalError("staircase exponent gap exists but the cap was reached");
}

std::optional<RefutationReport> refute_pipeline(const ProjectionInequality& ineq,
                                                const PipelineOptions& options) {
  std::optional<RefutationReport> report;
  FncResult fnc = is_fnc(ineq);
  if (!fnc.is_fnc) {
    if (!options.allow_flower) return std::nullopt;
    report = flower_refute(ineq);
  }
  if (!report && options.allow_skeleton) {
    report = skeleton_refute(ineq, options.mcap);
  }
  if (!report && options.allow_unionbox) {
    auto t = search_t(ineq, options.t_radius);
    if (t) {
      report = unionbox_refute(ineq, *t, options.mcap);
      if (report) {
        for (const auto& cand : farkas_directions(ineq)) {
          if (cand == *t) {
            report->method = "singlecover+unionbox";
            break;
          }
        }
      }
    }
  }
  if (!report && options.allow_hybrid) {
    for (Int m = 4; m <= 256 && !report; m *= 2) {
      for (int kappa = 2; kappa <= 8 && !report; ++kappa) {
        Int r = 1;
        for (int e = 0; e < kappa; ++e) r *= m;
        report = hybrid_refute(ineq, m, r);
      }
    }
  }
  if (!report && options.allow_staircase) {
    report = staircase_refute(ineq, options.mcap);
  }
  if (report) {
    EvalResult check = evaluate_inequality(ineq, report->witness);
    if (check.status != EvalStatus::Violated || check.lhs != report->lhs ||
        check.rhs != report->rhs) {
      throw InternalError("refutation report failed re-verification");
    }
  }
  return report;
}

}  // namespace projcone

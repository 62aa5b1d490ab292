#include "projcone/btcone.hpp"

#include <map>
#include <utility>

#include "projcone/errors.hpp"
#include "projcone/flow.hpp"
#include "projcone/lp.hpp"
#include "projcone/refuter.hpp"

namespace projcone {

namespace {

std::map<uint32_t, Rat> combination_vector(const BtCombination& comb) {
  std::map<uint32_t, Rat> acc;
  for (const auto& term : comb.terms) {
    for (const auto& ws : term.cover) {
      acc[ws.set.bits()] += term.multiplier * ws.weight;
    }
    acc[term.set.bits()] -= term.multiplier * term.k;
  }
  return acc;
}

}  // namespace

bool recombines_to(const BtCombination& comb, const ProjectionInequality& ineq) {
  if (comb.dimension != ineq.dimension()) return false;
  std::map<uint32_t, Rat> acc = combination_vector(comb);
  for (const auto& [set, coeff] : ineq.terms()) {
    auto it = acc.find(set.bits());
    if (it == acc.end() || it->second != coeff) return false;
    acc.erase(it);
  }
  for (const auto& [bits, value] : acc) {
    if (value != 0) return false;
  }
  return true;
}

std::optional<BtCombination> in_bt_cone(const ProjectionInequality& ineq) {
  const int n = ineq.dimension();
  if (n > 6) throw DomainError("cone membership capped at dimension 6");

  LinearSystem sys;
  struct Column {
    AxisSet s;
    AxisSet a;  // empty() marks the k_S column
    int var;
  };
  std::vector<Column> columns;
  // k_S and w_{S,A} for every S with |S| >= 2 and every proper nonempty
  // A inside S. Pairs with A = S would be zero directions and are skipped.
  std::map<uint32_t, int> k_var;
  for (AxisSet s : enumerate_subsets(n)) {
    if (s.cardinality() < 2) continue;
    int kv = sys.add_variable("k_" + s.str(), true);
    k_var[s.bits()] = kv;
    columns.push_back({s, AxisSet(), kv});
    for (AxisSet a : enumerate_subsets(n)) {
      if (a.bits() == s.bits() || !a.subset_of(s)) continue;
      int wv = sys.add_variable("w_" + s.str() + "_" + a.str(), true);
      columns.push_back({s, a, wv});
    }
  }
  // Uniform-cover rows: for each S and x in S the weights through x match k_S.
  for (AxisSet s : enumerate_subsets(n)) {
    if (s.cardinality() < 2) continue;
    for (int axis : s.axes()) {
      std::map<int, Rat> row;
      for (const auto& col : columns) {
        if (col.s.bits() != s.bits() || col.a.empty()) continue;
        if (col.a.contains(axis)) row[col.var] = Rat(1);
      }
      row[k_var[s.bits()]] = Rat(-1);
      sys.add_constraint(std::move(row), Rel::Eq, Rat(0));
    }
  }
  // Target rows: coefficient of x_U collects +w_{S,U} over S strictly above
  // U and -k_U.
  for (AxisSet u : enumerate_subsets(n)) {
    std::map<int, Rat> row;
    for (const auto& col : columns) {
      if (col.a.bits() == u.bits()) row[col.var] = Rat(1);
    }
    auto it = k_var.find(u.bits());
    if (it != k_var.end()) row[it->second] = Rat(-1);
    if (row.empty()) {
      // n = 1: no generators exist at all, so only the zero vector is in
      // the cone.
      if (ineq.coeff(u) != 0) return std::nullopt;
      continue;
    }
    sys.add_constraint(std::move(row), Rel::Eq, ineq.coeff(u));
  }

  FeasibilityResult lp = solve(sys);
  if (lp.status != FeasibilityResult::Status::Feasible) return std::nullopt;

  BtCombination comb;
  comb.dimension = n;
  comb.integral = true;
  for (AxisSet s : enumerate_subsets(n)) {
    auto it = k_var.find(s.bits());
    if (it == k_var.end()) continue;
    Rat k = lp.witness[it->second];
    if (k == 0) continue;
    BtTerm term;
    term.set = s;
    term.k = k;
    term.multiplier = Rat(1);
    for (const auto& col : columns) {
      if (col.s.bits() != s.bits() || col.a.empty()) continue;
      Rat w = lp.witness[col.var];
      if (w == 0) continue;
      term.cover.push_back({col.a, w});
      if (w.get_den() != 1) comb.integral = false;
    }
    if (k.get_den() != 1) comb.integral = false;
    comb.terms.push_back(std::move(term));
  }
  if (!recombines_to(comb, ineq)) {
    throw InternalError("cone membership witness fails recombination");
  }
  return comb;
}

namespace {

DecomposeResult failure(std::string reason) {
  DecomposeResult r;
  r.ok = false;
  r.reason = std::move(reason);
  return r;
}

// Rank of the A-side indicator matrix by rational Gaussian elimination.
int indicator_rank(const WeightedFamily& a, int n) {
  std::vector<std::vector<Rat>> m;
  for (const auto& ws : a.entries) {
    std::vector<Rat> row(n, Rat(0));
    for (int axis : ws.set.axes()) row[axis - 1] = 1;
    m.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == -1) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[rank][col];
      for (int c = col; c < n; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

ProjectionInequality part_from_cover(const ProjectionInequality& ineq,
                                     const WeightedFamily& a,
                                     const WeightedSet& b_entry,
                                     const std::vector<Rat>& c) {
  std::vector<std::pair<AxisSet, Rat>> terms;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    terms.emplace_back(a.entries[i].set, c[i]);
  }
  terms.emplace_back(b_entry.set, -b_entry.weight);
  return ProjectionInequality::canonicalize(ineq.dimension(), terms);
}

}  // namespace

DecomposeResult decompose_independent(const ProjectionInequality& ineq) {
  auto [a, b] = ineq.sides();
  const int n = ineq.dimension();
  if (a.entries.empty() || b.entries.empty()) {
    return failure("both sides must be nonempty");
  }
  if (indicator_rank(a, n) != static_cast<int>(a.entries.size())) {
    return failure("A-side indicator vectors are linearly dependent");
  }
  if (!c1_holds(a, b)) {
    return failure("weight balance (C1) fails, sides cannot split exactly");
  }
  std::vector<SingleCoverVerdict> verdicts = single_cover_check(ineq);
  DecomposeResult result;
  result.ok = true;
  for (const auto& verdict : verdicts) {
    if (!verdict.feasible) {
      return failure("no single-cover certificate for B-set {" +
                     verdict.b_set.str() + "}");
    }
    result.parts.push_back(part_from_cover(
        ineq, a, {verdict.b_set, verdict.beta}, verdict.c));
  }
  // Independence forces the certificates to sum to alpha exactly, so the
  // parts recombine to the input; verify anyway.
  std::map<uint32_t, Rat> acc;
  for (const auto& part : result.parts) {
    for (const auto& [set, coeff] : part.terms()) acc[set.bits()] += coeff;
  }
  for (const auto& [set, coeff] : ineq.terms()) {
    if (acc[set.bits()] != coeff) {
      return failure("certificates do not recombine to the input");
    }
    acc.erase(set.bits());
  }
  for (const auto& [bits, value] : acc) {
    if (value != 0) return failure("certificates do not recombine to the input");
  }
  return result;
}

DecomposeResult decompose_m_le_2(const ProjectionInequality& ineq) {
  auto [a, b] = ineq.sides();
  if (b.entries.size() > 2) {
    return failure("B side has more than two sets");
  }
  if (a.entries.empty() || b.entries.empty()) {
    return failure("both sides must be nonempty");
  }
  if (!c1_holds(a, b)) {
    return failure("weight balance (C1) fails");
  }
  std::vector<SingleCoverVerdict> verdicts = single_cover_check(ineq);
  if (!verdicts[0].feasible) {
    return failure("no single-cover certificate for B-set {" +
                   verdicts[0].b_set.str() + "}");
  }
  DecomposeResult result;
  result.ok = true;
  result.parts.push_back(
      part_from_cover(ineq, a, {verdicts[0].b_set, verdicts[0].beta}, verdicts[0].c));
  if (b.entries.size() == 2) {
    std::vector<Rat> remainder;
    for (size_t i = 0; i < a.entries.size(); ++i) {
      remainder.push_back(a.entries[i].weight - verdicts[0].c[i]);
    }
    // C1 of the whole input makes the remainder a certificate for B_2.
    result.parts.push_back(
        part_from_cover(ineq, a, {b.entries[1].set, b.entries[1].weight}, remainder));
  } else {
    // m = 1: the certificate must exhaust the A side.
    for (size_t i = 0; i < a.entries.size(); ++i) {
      if (verdicts[0].c[i] != a.entries[i].weight) {
        return failure("certificate does not exhaust the A side");
      }
    }
  }
  return result;
}

BtCombination bt3_eliminate(const ProjectionInequality& ineq) {
  if (ineq.dimension() != 3) {
    throw DomainError("eliminator works in dimension 3 only");
  }
  if (!is_fnc(ineq).is_fnc) {
    throw DomainError("eliminator requires an FNC inequality");
  }

  std::map<uint32_t, Rat> gamma;
  for (const auto& [set, coeff] : ineq.terms()) gamma[set.bits()] = coeff;
  auto coeff_of = [&](AxisSet s) {
    auto it = gamma.find(s.bits());
    return it == gamma.end() ? Rat(0) : it->second;
  };

  BtCombination comb;
  comb.dimension = 3;
  comb.integral = true;

  // Each negative pair coefficient is absorbed by a singleton cover of the
  // pair; FNC keeps the singleton coefficients nonnegative throughout.
  for (AxisSet pair : enumerate_subsets(3)) {
    if (pair.cardinality() != 2) continue;
    Rat value = coeff_of(pair);
    if (value >= 0) continue;
    Rat multiplier = -value;
    auto axes = pair.axes();
    BtTerm term;
    term.set = pair;
    term.k = Rat(1);
    term.multiplier = multiplier;
    term.cover.push_back({AxisSet::single(axes[0]), Rat(1)});
    term.cover.push_back({AxisSet::single(axes[1]), Rat(1)});
    if (multiplier.get_den() != 1) comb.integral = false;
    comb.terms.push_back(term);
    gamma[pair.bits()] = 0;
    for (int axis : axes) {
      AxisSet single = AxisSet::single(axis);
      gamma[single.bits()] = coeff_of(single) - multiplier;
      if (gamma[single.bits()] < 0) {
        throw InternalError("saturation should keep singleton weights nonnegative");
      }
    }
  }

  AxisSet full = AxisSet::full(3);
  Rat k = -coeff_of(full);
  if (k < 0) {
    throw InternalError("FNC inequality with positive full-set coefficient");
  }
  if (k > 0) {
    BtTerm residue;
    residue.set = full;
    residue.k = k;
    residue.multiplier = Rat(1);
    for (AxisSet s : enumerate_subsets(3)) {
      if (s.bits() == full.bits()) continue;
      Rat value = coeff_of(s);
      if (value == 0) continue;
      if (value < 0) {
        throw InternalError("negative residue weight after elimination");
      }
      residue.cover.push_back({s, value});
      if (value.get_den() != 1) comb.integral = false;
    }
    if (k.get_den() != 1) comb.integral = false;
    comb.terms.push_back(std::move(residue));
  } else {
    // k = 0 forces the whole residue to vanish (nonnegative weights with
    // zero per-axis sums).
    for (AxisSet s : enumerate_subsets(3)) {
      if (s.bits() != full.bits() && coeff_of(s) != 0) {
        throw InternalError("zero-cover residue must vanish");
      }
    }
  }

  if (!recombines_to(comb, ineq)) {
    throw InternalError("eliminator output fails recombination");
  }
  return comb;
}

}  // namespace projcone

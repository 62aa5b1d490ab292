#include "projcone/flower.hpp"

#include <utility>

#include "projcone/errors.hpp"
#include "projcone/flow.hpp"
#include "projcone/lp.hpp"

namespace projcone {

Flower Flower::zeros(int n) {
  Flower fl;
  fl.dimension = n;
  for (AxisSet s : enumerate_subsets(n)) {
    fl.entries.emplace_back(s.cardinality(), Rat(0));
  }
  return fl;
}

namespace {

int axis_slot(AxisSet s, int axis) {
  int slot = 0;
  for (int a : s.axes()) {
    if (a == axis) return slot;
    ++slot;
  }
  throw DomainError("axis not in subset");
}

}  // namespace

const Rat& Flower::at(AxisSet s, int axis) const {
  return entries[subset_position(s, dimension)][axis_slot(s, axis)];
}

Rat& Flower::at(AxisSet s, int axis) {
  return entries[subset_position(s, dimension)][axis_slot(s, axis)];
}

bool Flower::monotone() const {
  // Checking single-element extensions covers all pairs transitively.
  for (AxisSet s : enumerate_subsets(dimension)) {
    for (int extra = 1; extra <= dimension; ++extra) {
      if (s.contains(extra)) continue;
      AxisSet bigger = s.with(extra);
      for (int axis : s.axes()) {
        if (at(s, axis) < at(bigger, axis)) return false;
      }
    }
  }
  return true;
}

LogProjectionVector pi_from_flower(const Flower& fl) {
  LogProjectionVector pi = LogProjectionVector::zeros(fl.dimension);
  for (AxisSet s : enumerate_subsets(fl.dimension)) {
    Rat total = 0;
    for (int axis : s.axes()) total += fl.at(s, axis);
    pi.at(s) = total;
  }
  return pi;
}

MembershipResult flower_from_pi(const LogProjectionVector& pi) {
  const int n = pi.dimension;
  LinearSystem sys;
  // One free variable per (S, i in S).
  std::vector<std::vector<int>> var(enumerate_subsets(n).size());
  for (AxisSet s : enumerate_subsets(n)) {
    size_t pos = subset_position(s, n);
    for (int axis : s.axes()) {
      var[pos].push_back(
          sys.add_variable("f_" + s.str() + "|" + std::to_string(axis), false));
    }
  }
  // Equalities: sum_{i in S} f_{S,i} = pi_S, in canonical subset order so
  // Farkas multipliers line up with subsets.
  for (AxisSet s : enumerate_subsets(n)) {
    size_t pos = subset_position(s, n);
    std::map<int, Rat> row;
    for (int v : var[pos]) row[v] = Rat(1);
    sys.add_constraint(std::move(row), Rel::Eq, pi.at(s));
  }
  // Monotonicity on single-element extensions only.
  for (AxisSet s : enumerate_subsets(n)) {
    size_t pos = subset_position(s, n);
    for (int extra = 1; extra <= n; ++extra) {
      if (s.contains(extra)) continue;
      AxisSet bigger = s.with(extra);
      size_t bpos = subset_position(bigger, n);
      int slot = 0;
      for (int axis : s.axes()) {
        std::map<int, Rat> row;
        row[var[pos][slot]] = Rat(1);
        row[var[bpos][axis_slot(bigger, axis)]] = Rat(-1);
        sys.add_constraint(std::move(row), Rel::Ge, Rat(0));
        ++slot;
      }
    }
  }

  FeasibilityResult lp = solve(sys);
  MembershipResult result;
  if (lp.status == FeasibilityResult::Status::Feasible) {
    Flower fl = Flower::zeros(n);
    for (AxisSet s : enumerate_subsets(n)) {
      size_t pos = subset_position(s, n);
      for (size_t slot = 0; slot < var[pos].size(); ++slot) {
        fl.entries[pos][slot] = lp.witness[var[pos][slot]];
      }
    }
    result.flower = std::move(fl);
    return result;
  }
  if (lp.status != FeasibilityResult::Status::Infeasible) {
    throw InternalError("feasibility solve returned unbounded");
  }
  // The equality multipliers y prove sum y_S pi'_S <= 0 for every
  // realizable pi', with sum y_S pi_S > 0 here; negating them yields a
  // valid inequality that pi violates.
  std::vector<std::pair<AxisSet, Rat>> terms;
  const auto& order = enumerate_subsets(n);
  for (size_t pos = 0; pos < order.size(); ++pos) {
    terms.emplace_back(order[pos], -lp.farkas[pos]);
  }
  // Rescale to primitive integers so equal certificates print identically
  // regardless of solver pivoting.
  std::vector<Rat> nonzero;
  for (const auto& [s, c] : terms) {
    if (c != 0) nonzero.push_back(c);
  }
  if (!nonzero.empty()) {
    Int den = common_denominator(nonzero);
    Int g = 0;
    for (const Rat& c : nonzero) {
      Int scaled = c.get_num() * (den / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat scale(den, g);
    scale.canonicalize();
    for (auto& [s, c] : terms) c *= scale;
  }
  result.certificate = ProjectionInequality::canonicalize(n, terms);
  return result;
}

ViolatingFlowerResult violating_flower(const ProjectionInequality& ineq) {
  FncResult fnc = is_fnc(ineq);
  if (fnc.is_fnc) {
    throw DomainError("violating_flower requires a non-FNC inequality");
  }
  const int n = ineq.dimension();
  auto [a, b] = ineq.sides();

  ViolatingFlowerResult result;
  result.slope = Flower::zeros(n);

  Rat mass_a = a.weighted_mass();
  Rat mass_b = b.weighted_mass();
  if (mass_a != mass_b) {
    // Cube flower: every entry gets the same slope, aimed against the
    // heavier side.
    Rat sigma = mass_a > mass_b ? Rat(-1) : Rat(1);
    for (auto& petal : result.slope.entries) {
      for (auto& entry : petal) entry = sigma;
    }
    result.lhs_coef = sigma * mass_a;
    result.rhs_coef = sigma * mass_b;
  } else {
    std::vector<Rat> balance = weight_balance(a, b);
    int bad_axis = 0;
    for (int axis = 1; axis <= n; ++axis) {
      if (balance[axis - 1] != 0) {
        bad_axis = axis;
        break;
      }
    }
    if (bad_axis != 0) {
      // Axis flower: a single box stretched along the unbalanced axis.
      Rat sigma = balance[bad_axis - 1] > 0 ? Rat(-1) : Rat(1);
      for (AxisSet s : enumerate_subsets(n)) {
        if (s.contains(bad_axis)) result.slope.at(s, bad_axis) = sigma;
      }
      result.lhs_coef = sigma * a.axis_weight(bad_axis);
      result.rhs_coef = sigma * b.axis_weight(bad_axis);
    } else {
      // C1 holds, so the saturation max flow falls short and the min cut
      // leaves lambda nodes on the sink side. Any sigma node fed by such a
      // lambda node sits on the sink side too (the middle arc is
      // unbounded), which caps the lhs coefficient below the rhs one.
      FlowNetwork net = build_network(a, b);
      const auto& cut = fnc.saturation.cut;
      for (AxisSet s : enumerate_subsets(n)) {
        for (int lam : cut.sink_lambda) {
          int axis = net.lambda[lam].axis;
          if (!s.contains(axis)) continue;
          if (s.subset_of(b.entries[net.lambda[lam].family].set)) {
            result.slope.at(s, axis) = 1;
          }
        }
      }
      for (const auto& ws : a.entries) {
        for (int axis : ws.set.axes()) {
          result.lhs_coef += ws.weight * result.slope.at(ws.set, axis);
        }
      }
      for (const auto& ws : b.entries) {
        for (int axis : ws.set.axes()) {
          result.rhs_coef += ws.weight * result.slope.at(ws.set, axis);
        }
      }
    }
  }

  if (!(result.lhs_coef < result.rhs_coef)) {
    throw InternalError("violating flower lost its coefficient gap");
  }
  if (!result.slope.monotone()) {
    throw InternalError("violating flower slope is not monotone");
  }
  return result;
}

BoxUnion materialize_flower(const Flower& fl, const Int& base) {
  if (base < 2) throw DomainError("materialization base must be at least 2");
  const int n = fl.dimension;
  for (const auto& petal : fl.entries) {
    for (const auto& entry : petal) {
      if (entry.get_den() != 1) {
        throw DomainError("materialization requires integer log-lengths");
      }
      if (!entry.get_num().fits_slong_p()) {
        throw DomainError("log-length exponent too large");
      }
    }
  }

  // A flower whose entries depend only on the axis is exactly a box, with
  // projections base^{pi_S} on the nose.
  bool per_axis_constant = true;
  std::vector<Rat> axis_value(n, Rat(0));
  for (int axis = 1; axis <= n && per_axis_constant; ++axis) {
    axis_value[axis - 1] = fl.at(AxisSet::single(axis), axis);
    for (AxisSet s : enumerate_subsets(n)) {
      if (!s.contains(axis)) continue;
      if (fl.at(s, axis) != axis_value[axis - 1]) {
        per_axis_constant = false;
        break;
      }
    }
  }

  BoxUnion u;
  u.dimension = n;
  Rat rbase(base);
  if (per_axis_constant) {
    std::vector<Rat> sides;
    for (int axis = 1; axis <= n; ++axis) {
      sides.push_back(pow_rational(rbase, axis_value[axis - 1].get_num().get_si()));
    }
    u.boxes.push_back(make_box(std::vector<Rat>(n, Rat(0)), std::move(sides)));
    return u;
  }

  for (AxisSet s : enumerate_subsets(n)) {
    std::vector<Rat> sides(n, Rat(1));
    for (int axis : s.axes()) {
      sides[axis - 1] = pow_rational(rbase, fl.at(s, axis).get_num().get_si());
    }
    u.boxes.push_back(make_box(std::vector<Rat>(n, Rat(0)), std::move(sides)));
  }
  return u;
}

}  // namespace projcone

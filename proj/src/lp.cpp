#include "projcone/lp.hpp"

#include <algorithm>
#include <utility>

#include "projcone/errors.hpp"

namespace projcone {

namespace {

// Full-tableau two-phase simplex over exact rationals. Columns are laid
// out as: structural (free variables split into +/- halves), then one
// slack or surplus per inequality row, then one artificial per Ge/Eq row.
// Dantzig pricing with least-index tie-break; a long degenerate streak
// switches the phase permanently to Bland's rule, which cannot cycle.
struct Tableau {
  int rows = 0;
  int cols = 0;  // without rhs
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> rhs;
  std::vector<int> basis;        // column basic in each row
  std::vector<Rat> cost1;        // phase-1 reduced costs
  std::vector<Rat> cost2;        // phase-2 reduced costs
  Rat z1;                        // phase-1 objective (sum of artificials)
  Rat z2;                        // phase-2 objective value (minimization form)
  int first_artificial = 0;      // columns >= this are artificial

  void pivot(int row, int col) {
    Rat inv = 1 / a[row][col];
    for (int j = 0; j < cols; ++j) a[row][j] *= inv;
    rhs[row] *= inv;
    a[row][col] = 1;
    for (int i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat factor = a[i][col];
      for (int j = 0; j < cols; ++j) {
        if (a[row][j] != 0) a[i][j] -= factor * a[row][j];
      }
      rhs[i] -= factor * rhs[row];
      a[i][col] = 0;
    }
    auto update_cost = [&](std::vector<Rat>& cost, Rat& z) {
      if (cost.empty() || cost[col] == 0) return;
      Rat factor = cost[col];
      for (int j = 0; j < cols; ++j) {
        if (a[row][j] != 0) cost[j] -= factor * a[row][j];
      }
      z -= factor * rhs[row];
      cost[col] = 0;
    };
    update_cost(cost1, z1);
    update_cost(cost2, z2);
    basis[row] = col;
  }

  // Least-ratio row for entering column, ties broken on least basis index
  // (keeps Bland's rule exact). -1 when the column is unbounded below.
  int ratio_row(int col) const {
    int best = -1;
    Rat best_ratio;
    for (int i = 0; i < rows; ++i) {
      if (a[i][col] <= 0) continue;
      Rat ratio = rhs[i] / a[i][col];
      if (best == -1 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  // Minimizes the active cost row. allow_artificial gates artificial
  // columns (disabled in phase 2). Returns false on unboundedness.
  bool run(std::vector<Rat>& cost, Rat& z, bool allow_artificial) {
    bool bland = false;
    int degenerate_streak = 0;
    const int streak_limit = 64 + 2 * (rows + cols);
    while (true) {
      int enter = -1;
      if (bland) {
        for (int j = 0; j < cols; ++j) {
          if (!allow_artificial && j >= first_artificial) break;
          if (cost[j] < 0) {
            enter = j;
            break;
          }
        }
      } else {
        for (int j = 0; j < cols; ++j) {
          if (!allow_artificial && j >= first_artificial) break;
          if (cost[j] < 0 && (enter == -1 || cost[j] < cost[enter])) enter = j;
        }
      }
      if (enter == -1) return true;
      int row = ratio_row(enter);
      if (row == -1) return false;
      Rat before = z;
      pivot(row, enter);
      if (z == before) {
        if (++degenerate_streak > streak_limit) bland = true;
      } else {
        degenerate_streak = 0;
      }
    }
  }
};

}  // namespace

int LinearSystem::add_variable(const std::string& name, bool nonneg) {
  for (const auto& existing : names_) {
    if (existing == name) throw DomainError("duplicate variable name: " + name);
  }
  names_.push_back(name);
  nonneg_.push_back(nonneg);
  return static_cast<int>(names_.size()) - 1;
}

void LinearSystem::add_constraint(std::map<int, Rat> coeff, Rel rel, Rat rhs) {
  for (const auto& [var, value] : coeff) {
    if (var < 0 || var >= static_cast<int>(names_.size())) {
      throw DomainError("constraint references unknown variable");
    }
    (void)value;
  }
  constraints_.push_back(LinConstraint{std::move(coeff), rel, std::move(rhs)});
}

void LinearSystem::set_objective(std::map<int, Rat> coeff, bool maximize) {
  objective_ = std::move(coeff);
  maximize_ = maximize;
}

FeasibilityResult solve(const LinearSystem& sys) {
  const int num_vars = sys.num_vars();
  const int num_rows = sys.num_constraints();

  // Column layout for structural variables.
  std::vector<int> pos_col(num_vars), neg_col(num_vars, -1);
  int col = 0;
  for (int v = 0; v < num_vars; ++v) {
    pos_col[v] = col++;
    if (!sys.nonneg()[v]) neg_col[v] = col++;
  }
  const int structural = col;

  // One slack/surplus per inequality row (after rhs normalization), one
  // artificial per Ge/Eq row.
  std::vector<bool> flip(num_rows, false);
  std::vector<Rel> rel(num_rows);
  for (int i = 0; i < num_rows; ++i) {
    const auto& c = sys.constraints()[i];
    rel[i] = c.rel;
    if (c.rhs < 0) {
      flip[i] = true;
      if (c.rel == Rel::Le) rel[i] = Rel::Ge;
      if (c.rel == Rel::Ge) rel[i] = Rel::Le;
    }
  }
  std::vector<int> slack_col(num_rows, -1);
  for (int i = 0; i < num_rows; ++i) {
    if (rel[i] != Rel::Eq) slack_col[i] = col++;
  }
  const int first_artificial = col;
  std::vector<int> art_col(num_rows, -1);
  for (int i = 0; i < num_rows; ++i) {
    if (rel[i] != Rel::Le) art_col[i] = col++;
  }

  Tableau t;
  t.rows = num_rows;
  t.cols = col;
  t.first_artificial = first_artificial;
  t.a.assign(num_rows, std::vector<Rat>(col, Rat(0)));
  t.rhs.assign(num_rows, Rat(0));
  t.basis.assign(num_rows, -1);

  for (int i = 0; i < num_rows; ++i) {
    const auto& c = sys.constraints()[i];
    Rat sign = flip[i] ? Rat(-1) : Rat(1);
    for (const auto& [var, value] : c.coeff) {
      t.a[i][pos_col[var]] += sign * value;
      if (neg_col[var] >= 0) t.a[i][neg_col[var]] -= sign * value;
    }
    t.rhs[i] = sign * c.rhs;
    if (rel[i] == Rel::Le) {
      t.a[i][slack_col[i]] = 1;
      t.basis[i] = slack_col[i];
    } else if (rel[i] == Rel::Ge) {
      t.a[i][slack_col[i]] = -1;
      t.a[i][art_col[i]] = 1;
      t.basis[i] = art_col[i];
    } else {
      t.a[i][art_col[i]] = 1;
      t.basis[i] = art_col[i];
    }
  }

  // Phase-1 reduced costs: cost of artificials is 1; basic artificials are
  // priced out up front.
  t.cost1.assign(col, Rat(0));
  for (int j = first_artificial; j < col; ++j) t.cost1[j] = 1;
  t.z1 = 0;
  for (int i = 0; i < num_rows; ++i) {
    if (t.basis[i] >= first_artificial) {
      for (int j = 0; j < col; ++j) t.cost1[j] -= t.a[i][j];
      t.z1 += t.rhs[i];
    }
  }
  // z1 tracks -(sum of artificials) offset internally: run() minimizes, and
  // optimality leaves z1 = -(optimal phase-1 objective). Track the sign by
  // construction: z1 started at sum(rhs of artificial rows) and run()
  // subtracts; at the end the phase-1 optimum equals z1 again. Keep the
  // invariant simple by recomputing the artificial sum on termination.
  t.cost2.clear();

  if (!t.run(t.cost1, t.z1, true)) {
    throw InternalError("phase 1 cannot be unbounded");
  }

  Rat artificial_sum = 0;
  for (int i = 0; i < num_rows; ++i) {
    if (t.basis[i] >= first_artificial) artificial_sum += t.rhs[i];
  }

  FeasibilityResult result;
  if (artificial_sum > 0) {
    result.status = FeasibilityResult::Status::Infeasible;
    result.farkas.assign(num_rows, Rat(0));
    for (int i = 0; i < num_rows; ++i) {
      Rat y;
      if (art_col[i] >= 0) {
        y = 1 - t.cost1[art_col[i]];
      } else {
        y = -t.cost1[slack_col[i]];
      }
      result.farkas[i] = flip[i] ? Rat(-y) : y;
    }
    return result;
  }

  // Drive leftover degenerate artificials out of the basis; rows that
  // cannot pivot are redundant and harmless, but removing them keeps the
  // phase-2 ratio test clean.
  for (int i = 0; i < t.rows; ++i) {
    if (t.basis[i] < first_artificial) continue;
    int target = -1;
    for (int j = 0; j < first_artificial; ++j) {
      if (t.a[i][j] != 0) {
        target = j;
        break;
      }
    }
    if (target >= 0) {
      t.pivot(i, target);
    } else {
      int last = t.rows - 1;
      if (i != last) {
        std::swap(t.a[i], t.a[last]);
        std::swap(t.rhs[i], t.rhs[last]);
        std::swap(t.basis[i], t.basis[last]);
      }
      t.a.pop_back();
      t.rhs.pop_back();
      t.basis.pop_back();
      --t.rows;
      --i;
    }
  }

  if (sys.has_objective()) {
    t.cost2.assign(col, Rat(0));
    t.z2 = 0;
    Rat dir = sys.maximize() ? Rat(-1) : Rat(1);
    for (const auto& [var, value] : sys.objective()) {
      t.cost2[pos_col[var]] += dir * value;
      if (neg_col[var] >= 0) t.cost2[neg_col[var]] -= dir * value;
    }
    for (int i = 0; i < t.rows; ++i) {
      int b = t.basis[i];
      if (t.cost2[b] == 0) continue;
      Rat factor = t.cost2[b];
      for (int j = 0; j < col; ++j) {
        if (t.a[i][j] != 0) t.cost2[j] -= factor * t.a[i][j];
      }
      t.z2 -= factor * t.rhs[i];
      t.cost2[b] = 0;
    }
    if (!t.run(t.cost2, t.z2, false)) {
      result.status = FeasibilityResult::Status::Unbounded;
      return result;
    }
  }

  result.status = FeasibilityResult::Status::Feasible;
  std::vector<Rat> column_value(col, Rat(0));
  for (int i = 0; i < t.rows; ++i) column_value[t.basis[i]] = t.rhs[i];
  result.witness.assign(num_vars, Rat(0));
  for (int v = 0; v < num_vars; ++v) {
    result.witness[v] = column_value[pos_col[v]];
    if (neg_col[v] >= 0) result.witness[v] -= column_value[neg_col[v]];
  }
  if (sys.has_objective()) {
    Rat value = 0;
    for (const auto& [var, coeff] : sys.objective()) {
      value += coeff * result.witness[var];
    }
    result.objective_value = value;
  }
  return result;
}

bool verify_result(const LinearSystem& sys, const FeasibilityResult& result) {
  if (result.status == FeasibilityResult::Status::Feasible) {
    if (result.witness.size() != static_cast<size_t>(sys.num_vars())) return false;
    for (int v = 0; v < sys.num_vars(); ++v) {
      if (sys.nonneg()[v] && result.witness[v] < 0) return false;
    }
    for (const auto& c : sys.constraints()) {
      Rat lhs = 0;
      for (const auto& [var, value] : c.coeff) lhs += value * result.witness[var];
      if (c.rel == Rel::Le && lhs > c.rhs) return false;
      if (c.rel == Rel::Ge && lhs < c.rhs) return false;
      if (c.rel == Rel::Eq && lhs != c.rhs) return false;
    }
    return true;
  }
  if (result.status == FeasibilityResult::Status::Infeasible) {
    if (result.farkas.size() != static_cast<size_t>(sys.num_constraints())) return false;
    for (int i = 0; i < sys.num_constraints(); ++i) {
      const auto& c = sys.constraints()[i];
      if (c.rel == Rel::Le && result.farkas[i] > 0) return false;
      if (c.rel == Rel::Ge && result.farkas[i] < 0) return false;
    }
    std::vector<Rat> combo(sys.num_vars(), Rat(0));
    Rat rhs = 0;
    for (int i = 0; i < sys.num_constraints(); ++i) {
      const auto& c = sys.constraints()[i];
      for (const auto& [var, value] : c.coeff) combo[var] += result.farkas[i] * value;
      rhs += result.farkas[i] * c.rhs;
    }
    for (int v = 0; v < sys.num_vars(); ++v) {
      if (sys.nonneg()[v]) {
        if (combo[v] > 0) return false;
      } else {
        if (combo[v] != 0) return false;
      }
    }
    return rhs > 0;
  }
  return true;
}

}  // namespace projcone

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "projcone/rational.hpp"

namespace projcone {

enum class Rel { Le, Eq, Ge };

struct LinConstraint {
  std::map<int, Rat> coeff;  // variable index -> coefficient, zeros omitted
  Rel rel = Rel::Eq;
  Rat rhs = Rat(0);
};

// A mixed system of equalities and inequalities over rational variables,
// each either free or constrained nonnegative, with an optional linear
// objective. Variable names must be unique (enforced by add_variable).
class LinearSystem {
 public:
  int add_variable(const std::string& name, bool nonneg);
  void add_constraint(std::map<int, Rat> coeff, Rel rel, Rat rhs);
  // Sense: maximize if `maximize` is true, else minimize.
  void set_objective(std::map<int, Rat> coeff, bool maximize);
  bool has_objective() const { return objective_.has_value(); }

  int num_vars() const { return static_cast<int>(names_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<bool>& nonneg() const { return nonneg_; }
  const std::vector<LinConstraint>& constraints() const { return constraints_; }
  const std::map<int, Rat>& objective() const { return *objective_; }
  bool maximize() const { return maximize_; }

 private:
  std::vector<std::string> names_;
  std::vector<bool> nonneg_;
  std::vector<LinConstraint> constraints_;
  std::optional<std::map<int, Rat>> objective_;
  bool maximize_ = false;
};

// Infeasibility certificate: one multiplier per constraint, >= 0 on Ge rows,
// <= 0 on Le rows, free on Eq rows. Combining rows with these multipliers
// cancels every free variable, leaves a nonpositive coefficient on every
// nonnegative variable, and produces a strictly positive right-hand side:
// an exact contradiction.
struct FeasibilityResult {
  enum class Status { Feasible, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  std::vector<Rat> witness;          // per variable, when Feasible
  std::optional<Rat> objective_value;
  std::vector<Rat> farkas;           // per constraint, when Infeasible
};

// Exact two-phase simplex. Deterministic: identical systems yield identical
// results. Anti-cycling via Bland's least-index rule (engaged automatically
// after a degenerate streak; Dantzig pricing otherwise).
FeasibilityResult solve(const LinearSystem& system);

// True when `witness`/`farkas` in `result` verify against `system` by exact
// substitution. Used by tests and by callers that re-check certificates.
bool verify_result(const LinearSystem& system, const FeasibilityResult& result);

}  // namespace projcone

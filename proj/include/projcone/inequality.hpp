#pragma once

#include <utility>
#include <vector>

#include "projcone/rational.hpp"
#include "projcone/subsets.hpp"

namespace projcone {

// One side of a projection inequality: subsets with strictly positive weights.
struct WeightedSet {
  AxisSet set;
  Rat weight;
};

struct WeightedFamily {
  int dimension = 0;
  std::vector<WeightedSet> entries;  // canonical subset order, weights > 0

  Rat total_weight() const;
  // Sum of weight * |set| over the family.
  Rat weighted_mass() const;
  // Sum of weights of entries containing `axis`.
  Rat axis_weight(int axis) const;
};

// Claim sum_S coeff_S * pi_S >= 0 over log-projection vectors, stored as a
// sparse coefficient map in canonical subset order with no zero entries.
class ProjectionInequality {
 public:
  // Merges duplicate subsets, drops zero coefficients, sorts canonically.
  // Throws DomainError if everything cancels or n is out of range.
  static ProjectionInequality canonicalize(
      int n, std::vector<std::pair<AxisSet, Rat>> terms);

  int dimension() const { return dimension_; }
  const std::vector<std::pair<AxisSet, Rat>>& terms() const { return terms_; }
  Rat coeff(AxisSet set) const;

  // Positive coefficients become the A side, negated negatives the B side.
  std::pair<WeightedFamily, WeightedFamily> sides() const;

  // coeff_S * scale for every S; scale must be positive.
  ProjectionInequality scaled(const Rat& scale) const;

  bool operator==(const ProjectionInequality&) const = default;

 private:
  ProjectionInequality() = default;
  int dimension_ = 0;
  std::vector<std::pair<AxisSet, Rat>> terms_;
};

// Per-axis signed weight balance: sum of coeff_S over S containing the axis.
// All zero exactly when condition C1 holds for the two sides.
std::vector<Rat> axis_balance(const ProjectionInequality& ineq);

// Log-projection vector: one finite rational per nonempty subset of {1..n},
// stored in canonical subset order.
struct LogProjectionVector {
  int dimension = 0;
  std::vector<Rat> entries;

  const Rat& at(AxisSet set) const;
  Rat& at(AxisSet set);
  static LogProjectionVector zeros(int n);
};

// Claim value sum_S coeff_S * pi_S.
Rat claim_value(const ProjectionInequality& ineq, const LogProjectionVector& pi);

}  // namespace projcone

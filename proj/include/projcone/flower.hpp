#pragma once

#include <optional>
#include <vector>

#include "projcone/boxgeom.hpp"
#include "projcone/inequality.hpp"
#include "projcone/rational.hpp"
#include "projcone/subsets.hpp"

namespace projcone {

// Rectangular flower in log space: an edge length f_{S,i} for every
// nonempty S and axis i in S. Cornered iff monotone: f_{S,i} >= f_{S',i}
// whenever S is a subset of S'. Entries may be negative.
struct Flower {
  int dimension = 0;
  // entries[subset_position(S)][k] = f_{S, axes(S)[k]}
  std::vector<std::vector<Rat>> entries;

  static Flower zeros(int n);
  const Rat& at(AxisSet s, int axis) const;
  Rat& at(AxisSet s, int axis);
  bool monotone() const;
};

// pi_S = sum over i in S of f_{S,i}.
LogProjectionVector pi_from_flower(const Flower& fl);

struct MembershipResult {
  // Exactly one of the two is set.
  std::optional<Flower> flower;
  // Inequality with claim_value(certificate, pi) < 0, itself FNC.
  std::optional<ProjectionInequality> certificate;
};

// Decides whether pi is realizable by a rectangular flower. Feasible:
// returns a flower reproducing pi exactly. Infeasible: returns the
// inequality encoded by the Farkas certificate.
MembershipResult flower_from_pi(const LogProjectionVector& pi);

struct ViolatingFlowerResult {
  // The violating flower is tau * slope for every large enough tau > 0;
  // slope entries lie in {-1, 0, 1}.
  Flower slope;
  Rat lhs_coef;  // tau-coefficient contributed by positive terms
  Rat rhs_coef;  // tau-coefficient contributed by negated negative terms
};

// For a non-FNC inequality, builds a flower family violating the claim:
// lhs_coef < rhs_coef always holds on output. Throws DomainError when the
// input is FNC.
ViolatingFlowerResult violating_flower(const ProjectionInequality& ineq);

// Geometric realization with integer entries only (throws DomainError
// otherwise): when entries are constant per axis the flower is a single
// box with exact projections base^{pi_S}; in general one box per petal,
// Prod_{i in S} [0, base^{f_{S,i}}] x Prod_{i not in S} [0,1]. Thickening
// can inflate projections, so callers needing exactness verify with
// boxgeom afterwards.
BoxUnion materialize_flower(const Flower& fl, const Int& base);

}  // namespace projcone

#pragma once

#include <vector>

#include "projcone/inequality.hpp"
#include "projcone/rational.hpp"
#include "projcone/subsets.hpp"

namespace projcone {

// Axis-aligned closed box [corner_i, corner_i + side_i] per axis. All
// coordinates nonnegative. Zero sides mark a degenerate box; volume
// operations reject those.
struct Box {
  std::vector<Rat> corner;
  std::vector<Rat> sides;

  int dimension() const { return static_cast<int>(corner.size()); }
  bool degenerate() const;
  bool contains_box(const Box& other) const;
};

struct BoxUnion {
  int dimension = 0;
  std::vector<Box> boxes;
};

Box make_box(std::vector<Rat> corner, std::vector<Rat> sides);

// Restriction to the axes in `axes` (coordinates re-indexed ascending).
BoxUnion project(const BoxUnion& u, AxisSet axes);

// Exact union volume by full coordinate compression. Volumes stay in linear
// space; logarithms are never taken.
Rat volume(const BoxUnion& u);

// Exact projected volume |T_S| for every nonempty S in canonical order.
std::vector<Rat> projection_volumes(const BoxUnion& u);

enum class EvalStatus { Holds, Tight, Violated };

struct EvalResult {
  EvalStatus status = EvalStatus::Holds;
  Rat lhs = Rat(1);   // product over the A side of |T_A|^alpha (scaled integral exponents)
  Rat rhs = Rat(1);   // product over the B side
  Rat margin = Rat(1);  // lhs / rhs
};

// Evaluates the product-form inequality on the union exactly. Coefficients
// are scaled by their common denominator so all exponents are integers; this
// does not change the holds/tight/violated verdict.
EvalResult evaluate_inequality(const ProjectionInequality& ineq, const BoxUnion& u);

// Per-subset exact projected volumes, packaged with at(S) lookup. Entries
// are plain volumes (linear space, no logarithm). Throws DomainError when
// some projection is degenerate (zero volume).
LogProjectionVector log_projection_vector(const BoxUnion& u);

}  // namespace projcone

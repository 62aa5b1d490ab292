#include "projcone/boxgeom.hpp"

#include <algorithm>
#include <utility>

#include "projcone/errors.hpp"

namespace projcone {

namespace {

struct Interval {
  Rat lo;
  Rat hi;
};

// Exact union volume by coordinate compression: per axis, the box end
// points split space into slabs; every resulting cell is either fully
// covered by some box or disjoint from all of them. Recursion filters the
// candidate boxes per slab, so sparse unions stay cheap.
class CellWalker {
 public:
  CellWalker(const std::vector<std::vector<Interval>>& boxes, int dims)
      : boxes_(boxes), dims_(dims), grid_(dims) {
    for (int axis = 0; axis < dims_; ++axis) {
      auto& coords = grid_[axis];
      for (const auto& box : boxes_) {
        coords.push_back(box[axis].lo);
        coords.push_back(box[axis].hi);
      }
      std::sort(coords.begin(), coords.end());
      coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    }
  }

  Rat total() {
    std::vector<int> all(boxes_.size());
    for (size_t i = 0; i < boxes_.size(); ++i) all[i] = static_cast<int>(i);
    sum_ = 0;
    walk(0, all, Rat(1));
    return sum_;
  }

 private:
  void walk(int axis, const std::vector<int>& candidates, const Rat& prefix) {
    if (axis == dims_) {
      sum_ += prefix;
      return;
    }
    const auto& coords = grid_[axis];
    std::vector<int> inside;
    for (size_t t = 0; t + 1 < coords.size(); ++t) {
      inside.clear();
      for (int id : candidates) {
        if (boxes_[id][axis].lo <= coords[t] && boxes_[id][axis].hi >= coords[t + 1]) {
          inside.push_back(id);
        }
      }
      if (inside.empty()) continue;
      walk(axis + 1, inside, prefix * (coords[t + 1] - coords[t]));
    }
  }

  const std::vector<std::vector<Interval>>& boxes_;
  int dims_;
  std::vector<std::vector<Rat>> grid_;
  Rat sum_;
};

}  // namespace

bool Box::degenerate() const {
  for (const auto& s : sides) {
    if (s <= 0) return true;
  }
  return false;
}

bool Box::contains_box(const Box& other) const {
  for (size_t i = 0; i < corner.size(); ++i) {
    if (corner[i] > other.corner[i]) return false;
    if (corner[i] + sides[i] < other.corner[i] + other.sides[i]) return false;
  }
  return true;
}

Box make_box(std::vector<Rat> corner, std::vector<Rat> sides) {
  if (corner.size() != sides.size()) {
    throw DomainError("box corner and sides must have equal length");
  }
  for (const auto& c : corner) {
    if (c < 0) throw DomainError("boxes live in the nonnegative orthant");
  }
  for (const auto& s : sides) {
    if (s <= 0) throw DomainError("box sides must be positive");
  }
  return Box{std::move(corner), std::move(sides)};
}

BoxUnion project(const BoxUnion& u, AxisSet axes) {
  if (axes.empty()) throw DomainError("cannot project onto the empty axis set");
  BoxUnion out;
  out.dimension = axes.cardinality();
  for (const auto& box : u.boxes) {
    Box projected;
    for (int axis : axes.axes()) {
      if (axis > u.dimension) throw DomainError("projection axis out of range");
      projected.corner.push_back(box.corner[axis - 1]);
      projected.sides.push_back(box.sides[axis - 1]);
    }
    out.boxes.push_back(std::move(projected));
  }
  return out;
}

Rat volume(const BoxUnion& u) {
  if (u.boxes.empty()) return Rat(0);
  std::vector<std::vector<Interval>> boxes;
  for (const auto& box : u.boxes) {
    if (box.dimension() != u.dimension) {
      throw DomainError("box dimension mismatch inside union");
    }
    if (box.degenerate()) throw DomainError("degenerate box in volume");
    std::vector<Interval> intervals;
    for (int i = 0; i < u.dimension; ++i) {
      intervals.push_back({box.corner[i], box.corner[i] + box.sides[i]});
    }
    boxes.push_back(std::move(intervals));
  }
  return CellWalker(boxes, u.dimension).total();
}

std::vector<Rat> projection_volumes(const BoxUnion& u) {
  std::vector<Rat> result;
  for (AxisSet s : enumerate_subsets(u.dimension)) {
    result.push_back(volume(project(u, s)));
  }
  return result;
}

LogProjectionVector log_projection_vector(const BoxUnion& u) {
  if (u.boxes.empty()) {
    throw DomainError("projection of an empty union is degenerate");
  }
  LogProjectionVector vec = LogProjectionVector::zeros(u.dimension);
  vec.entries = projection_volumes(u);
  for (const auto& v : vec.entries) {
    if (v == 0) throw DomainError("degenerate projection: zero volume");
  }
  return vec;
}

EvalResult evaluate_inequality(const ProjectionInequality& ineq, const BoxUnion& u) {
  if (ineq.dimension() != u.dimension) {
    throw DomainError("inequality and union dimensions differ");
  }
  std::vector<Rat> coeffs;
  for (const auto& [set, coeff] : ineq.terms()) coeffs.push_back(coeff);
  Int scale = common_denominator(coeffs);

  EvalResult result;
  for (const auto& [set, coeff] : ineq.terms()) {
    Rat v = volume(project(u, set));
    if (v <= 0) throw DomainError("degenerate projection in evaluation");
    Rat scaled = coeff * Rat(scale);
    if (scaled.get_den() != 1) throw InternalError("exponent scaling failed");
    long e = 0;
    if (!scaled.get_num().fits_slong_p()) throw DomainError("exponent too large");
    e = scaled.get_num().get_si();
    if (e > 0) {
      result.lhs *= pow_rational(v, e);
    } else {
      result.rhs *= pow_rational(v, -e);
    }
  }
  result.margin = result.lhs / result.rhs;
  if (result.lhs > result.rhs) {
    result.status = EvalStatus::Holds;
  } else if (result.lhs == result.rhs) {
    result.status = EvalStatus::Tight;
  } else {
    result.status = EvalStatus::Violated;
  }
  return result;
}

}  // namespace projcone

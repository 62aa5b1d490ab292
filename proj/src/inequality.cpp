#include "projcone/inequality.hpp"

#include <algorithm>
#include <map>

#include "projcone/errors.hpp"

namespace projcone {

Rat WeightedFamily::total_weight() const {
  Rat sum(0);
  for (const auto& e : entries) sum += e.weight;
  return sum;
}

Rat WeightedFamily::weighted_mass() const {
  Rat sum(0);
  for (const auto& e : entries) sum += e.weight * e.set.cardinality();
  return sum;
}

Rat WeightedFamily::axis_weight(int axis) const {
  Rat sum(0);
  for (const auto& e : entries) {
    if (e.set.contains(axis)) sum += e.weight;
  }
  return sum;
}

ProjectionInequality ProjectionInequality::canonicalize(
    int n, std::vector<std::pair<AxisSet, Rat>> terms) {
  if (n < 1 || n > kMaxDimension) {
    throw DomainError("dimension out of range [1, 16]: " + std::to_string(n));
  }
  std::map<std::uint32_t, Rat> merged;
  for (auto& [set, coeff] : terms) {
    if (set.empty() || !set.subset_of(AxisSet::full(n))) {
      throw DomainError("subset out of range for dimension " + std::to_string(n));
    }
    merged[set.bits()] += coeff;
  }
  ProjectionInequality out;
  out.dimension_ = n;
  for (AxisSet s : enumerate_subsets(n)) {
    auto it = merged.find(s.bits());
    if (it != merged.end() && it->second != 0) {
      out.terms_.emplace_back(s, it->second);
    }
  }
  if (out.terms_.empty()) {
    throw DomainError("inequality is identically zero after canonicalization");
  }
  return out;
}

Rat ProjectionInequality::coeff(AxisSet set) const {
  for (const auto& [s, c] : terms_) {
    if (s == set) return c;
  }
  return Rat(0);
}

std::pair<WeightedFamily, WeightedFamily> ProjectionInequality::sides() const {
  WeightedFamily a{dimension_, {}};
  WeightedFamily b{dimension_, {}};
  for (const auto& [set, coeff] : terms_) {
    if (coeff > 0) {
      a.entries.push_back({set, coeff});
    } else {
      b.entries.push_back({set, -coeff});
    }
  }
  return {a, b};
}

ProjectionInequality ProjectionInequality::scaled(const Rat& scale) const {
  if (scale <= 0) throw DomainError("scale must be positive");
  ProjectionInequality out(*this);
  for (auto& [set, coeff] : out.terms_) coeff *= scale;
  return out;
}

std::vector<Rat> axis_balance(const ProjectionInequality& ineq) {
  std::vector<Rat> balance(ineq.dimension(), Rat(0));
  for (const auto& [set, coeff] : ineq.terms()) {
    for (int axis : set.axes()) balance[axis - 1] += coeff;
  }
  return balance;
}

const Rat& LogProjectionVector::at(AxisSet set) const {
  return entries[subset_position(set, dimension)];
}

Rat& LogProjectionVector::at(AxisSet set) {
  return entries[subset_position(set, dimension)];
}

LogProjectionVector LogProjectionVector::zeros(int n) {
  LogProjectionVector v;
  v.dimension = n;
  v.entries.assign(enumerate_subsets(n).size(), Rat(0));
  return v;
}

Rat claim_value(const ProjectionInequality& ineq, const LogProjectionVector& pi) {
  if (pi.dimension != ineq.dimension()) {
    throw DomainError("dimension mismatch between inequality and vector");
  }
  Rat value(0);
  for (const auto& [set, coeff] : ineq.terms()) value += coeff * pi.at(set);
  return value;
}

}  // namespace projcone

#include "projcone/subsets.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "projcone/errors.hpp"

namespace projcone {

std::vector<int> AxisSet::axes() const {
  std::vector<int> out;
  for (int i = 1; i <= kMaxDimension; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string AxisSet::str() const {
  std::ostringstream os;
  bool first = true;
  for (int axis : axes()) {
    if (!first) os << ',';
    os << axis;
    first = false;
  }
  return os.str();
}

bool canonical_less(AxisSet a, AxisSet b) {
  int ca = a.cardinality();
  int cb = b.cardinality();
  if (ca != cb) return ca < cb;
  // Equal cardinality: lexicographic on ascending element lists.
  std::uint32_t xa = a.bits();
  std::uint32_t xb = b.bits();
  while (xa && xb) {
    int la = __builtin_ctz(xa);
    int lb = __builtin_ctz(xb);
    if (la != lb) return la < lb;
    xa &= xa - 1;
    xb &= xb - 1;
  }
  return false;
}

namespace {

struct SubsetTables {
  std::vector<AxisSet> order;
  std::vector<int> position;  // indexed by bitmask
};

const SubsetTables& tables_for(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw DomainError("dimension out of range [1, 16]: " + std::to_string(n));
  }
  static std::map<int, SubsetTables> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    SubsetTables t;
    for (std::uint32_t m = 1; m < (1u << n); ++m) t.order.push_back(AxisSet(m));
    std::sort(t.order.begin(), t.order.end(),
              [](AxisSet a, AxisSet b) { return canonical_less(a, b); });
    t.position.assign(1u << n, -1);
    for (int i = 0; i < static_cast<int>(t.order.size()); ++i) {
      t.position[t.order[i].bits()] = i;
    }
    it = cache.emplace(n, std::move(t)).first;
  }
  return it->second;
}

}  // namespace

const std::vector<AxisSet>& enumerate_subsets(int n) {
  return tables_for(n).order;
}

int subset_position(AxisSet set, int n) {
  const SubsetTables& t = tables_for(n);
  if (set.empty() || set.bits() >= t.position.size()) {
    throw DomainError("subset out of range for dimension " + std::to_string(n));
  }
  return t.position[set.bits()];
}

AxisSet parse_axis_set(const std::string& text, int n) {
  AxisSet out;
  std::istringstream is(text);
  std::string field;
  while (std::getline(is, field, ',')) {
    int axis = 0;
    try {
      size_t used = 0;
      axis = std::stoi(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw SchemaError("bad axis '" + field + "' in subset '" + text + "'");
    }
    if (axis < 1 || axis > n) {
      throw SchemaError("axis " + std::to_string(axis) + " outside 1.." +
                        std::to_string(n) + " in subset '" + text + "'");
    }
    if (out.contains(axis)) {
      throw SchemaError("duplicate axis " + std::to_string(axis) +
                        " in subset '" + text + "'");
    }
    out = out.with(axis);
  }
  if (out.empty()) throw SchemaError("empty subset");
  return out;
}

}  // namespace projcone

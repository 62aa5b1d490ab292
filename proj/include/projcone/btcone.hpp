#pragma once

#include <optional>
#include <vector>

#include "projcone/inequality.hpp"
#include "projcone/rational.hpp"
#include "projcone/subsets.hpp"

namespace projcone {

// One uniform-cover inequality k*x_S <= sum_A w_A*x_A scaled by a positive
// multiplier. The cover is fractional: for every axis x in S the weights of
// the A containing x sum to k.
struct BtTerm {
  AxisSet set;                     // S
  std::vector<WeightedSet> cover;  // proper nonempty subsets of S
  Rat k;
  Rat multiplier;
};

struct BtCombination {
  int dimension = 0;
  std::vector<BtTerm> terms;
  // True when every weight, k and multiplier is an integer.
  bool integral = false;
};

// Recombines the terms into a coefficient vector and compares with ineq.
bool recombines_to(const BtCombination& comb, const ProjectionInequality& ineq);

// Exact LP membership in the fractional uniform-cover cone. Dimension
// capped at 6 (variable count grows as 3^n). Present implies is_fnc.
std::optional<BtCombination> in_bt_cone(const ProjectionInequality& ineq);

struct DecomposeResult {
  bool ok = false;
  std::string reason;                        // set when !ok
  std::vector<ProjectionInequality> parts;   // BT inequalities summing to input
};

// Splits ineq into one BT inequality per B-side set. Requires linearly
// independent A-side indicator vectors; the single-cover certificates then
// force a unique split.
DecomposeResult decompose_independent(const ProjectionInequality& ineq);

// Same splitting for at most two B-side sets: a certificate for the first
// set fixes c, the remainder alpha - c serves the second.
DecomposeResult decompose_m_le_2(const ProjectionInequality& ineq);

// Appendix eliminator for n = 3: repeatedly absorbs each negative pair
// coefficient with a singleton-cover term x_i + x_j - x_{ij}; the residue
// is a fractional cover of {1,2,3}. Requires is_fnc. Output recombines to
// the input exactly.
BtCombination bt3_eliminate(const ProjectionInequality& ineq);

}  // namespace projcone

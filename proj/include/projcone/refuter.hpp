#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projcone/boxgeom.hpp"
#include "projcone/inequality.hpp"
#include "projcone/rational.hpp"
#include "projcone/subsets.hpp"

namespace projcone {

// Graph on axes: edge {i,j} iff the pair lies jointly in some B-side set
// and jointly in no A-side set.
struct ConnectionGraph {
  int dimension = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted

  bool has_edge(int i, int j) const;
};

ConnectionGraph connection_graph(const ProjectionInequality& ineq);

// Exact maximum clique size of the subgraph induced on S; 0 for empty S,
// 1 for nonempty S without internal edges.
int max_clique_size(const ConnectionGraph& g, AxisSet s);

// All maximal cliques of g, each as an AxisSet, in canonical order.
std::vector<AxisSet> maximal_cliques(const ConnectionGraph& g);

// One box per maximal clique: side M on clique axes, 1 elsewhere.
BoxUnion skeleton_build(const ConnectionGraph& g, const Int& m);

struct RefutationReport {
  std::string method;  // flower | skeleton | unionbox | singlecover+unionbox | hybrid | staircase
  BoxUnion witness;
  std::map<std::string, std::string> params;
  Rat lhs;
  Rat rhs;
  Rat margin;  // lhs / rhs, < 1
};

// Lemma test sum(alpha) < sum(beta_j * Delta(B_j)); on success doubles M
// from 4 (cap mcap) until the skeleton violates the inequality exactly.
std::optional<RefutationReport> skeleton_refute(const ProjectionInequality& ineq,
                                                long mcap = 1 << 20);

// Unit cube plus a box with sides M^{t_i} translated beyond it. Applies
// when sum_i alpha_i |sum_{s in A_i} t_s| < sum_j beta_j |sum_{s in B_j} t_s|;
// M doubles from 4 until exact violation.
std::optional<RefutationReport> unionbox_refute(const ProjectionInequality& ineq,
                                                const std::vector<long>& t,
                                                long mcap = 1 << 20);

// First t passing the union-box test: Farkas directions from
// single_cover_check first, then the lexicographic grid {-radius..radius}^n.
std::optional<std::vector<long>> search_t(const ProjectionInequality& ineq, int radius);

struct SingleCoverVerdict {
  AxisSet b_set;
  Rat beta;
  bool feasible = false;
  std::vector<Rat> c;        // per A-side entry, when feasible
  std::vector<long> t;       // integer separating direction, when infeasible
};

// Per B-side set: feasibility of { 0 <= c <= alpha, sum c_i a_i = beta_j b_j }.
// Infeasible sets carry a separating direction t with
// sum_i alpha_i max(0, a_i . t) < beta_j (b_j . t).
std::vector<SingleCoverVerdict> single_cover_check(const ProjectionInequality& ineq);

// Splits the inequality into two C1-balanced parts, refutes part one by a
// skeleton and neutralizes part two with a box of sides R^{r_i} found by
// LP; the union is verified exactly at the given (M, R). r_override forces
// a specific exponent vector instead of the LP solution.
std::optional<RefutationReport> hybrid_refute(
    const ProjectionInequality& ineq, const Int& m, const Int& r,
    const std::optional<std::vector<long>>& r_override = std::nullopt);

// Origin-cornered boxes with sides base^{e_i}, one exponent vector per claim
// term, from an exact feasibility system: each term's own box attains the
// term's projection exponent, every other box stays at or below it, and the
// coefficient-weighted exponent sum is negative. Feasibility guarantees an
// exact violation; base doubles from 2 (cap bcap) until it appears.
std::optional<RefutationReport> staircase_refute(const ProjectionInequality& ineq,
                                                 long bcap = 1 << 20);

struct PipelineOptions {
  long mcap = 1 << 20;   // doubling cap for skeleton / union-box / staircase
  int t_radius = 2;      // grid radius for search_t
  bool allow_flower = true;
  bool allow_skeleton = true;
  bool allow_unionbox = true;
  bool allow_hybrid = true;
  bool allow_staircase = true;
};

// Orchestration: violating flower for non-FNC inputs, then skeleton, then
// t-search union-box (labeled singlecover+unionbox when the winning t came
// from a Farkas direction), then the hybrid grid M in {4,8,...,256} x
// R = M^kappa, kappa in 2..8, then the staircase feasibility system. Every
// report re-verifies before being returned.
std::optional<RefutationReport> refute_pipeline(const ProjectionInequality& ineq,
                                                const PipelineOptions& options = {});

}  // namespace projcone

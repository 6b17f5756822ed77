/**
 * @file constructions.hpp
 * @brief Explicit instance families: the spanning-tree gadget, the unit-weight
 *        multiobjective knapsack, and the cloning-step parameter schedule.
 */

#ifndef PARETOLAB_CONSTRUCTIONS_HPP
#define PARETOLAB_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>

#include "paretolab/core.hpp"
#include "paretolab/enumeration.hpp"
#include "paretolab/sampling.hpp"

namespace paretolab {

/// Largest vertex count for which gadget claims are verified by exhausting
/// all m^(m-2) spanning trees.
inline constexpr int kDefaultGadgetVertexLimit = 8;

/**
 * @brief Spanning-tree instance on K_m with profit distributions chosen per
 *        edge: (s,t) uniform on [1/2,1]; (s,u_j) and (t,u_j) uniform on
 *        [-1/2,1/2]; every other edge uniform on [-1,-1/2].
 *
 * Vertices are labeled s=0, t=1, u_j=1+j. Every interval has width >= 1/4, so
 * each density is bounded by 4.
 */
struct TreeGadgetInstance {
  int m = 0;
  int d = 0;
  MatrixDistribution edge_profits;
  FeasibleSet spanning_trees;
  /// Lower-bound target ((m-3) / (2(d-1)))^(d-1) for the expected Pareto count.
  double bound_target = 0.0;
};

TreeGadgetInstance build_tree_gadget(int m, int d);

/// True iff the tree (as an incidence vector over K_m's edges) lies in the
/// gadget family: contains (s,t) and exactly one of (s,u_j),(t,u_j) per j.
bool is_gadget_tree(const Solution& tree, int m);

struct GadgetClaimResult {
  /// Every Pareto-optimal spanning tree belongs to the gadget family.
  bool all_pareto_in_gadget_set = false;
  /// A Pareto-optimal tree outside the family, when one exists.
  std::optional<Solution> escaped_tree;
  /// Pareto count over all m^(m-2) spanning trees.
  std::uint64_t pareto_count_all_trees = 0;
};

/// Exhaustively checks the containment claim for a sampled profit matrix.
GadgetClaimResult verify_gadget_claim(const ObjectiveMatrix& edge_profits, int m,
                                      int d,
                                      int vertex_limit = kDefaultGadgetVertexLimit);

/// Pareto count over the 2^(m-2) gadget trees only.
std::uint64_t gadget_pareto_count(const ObjectiveMatrix& edge_profits, int m, int d);

/**
 * @brief Knapsack instance: d maximized profit objectives plus one minimized
 *        weight objective.
 */
struct KnapsackInstance {
  ObjectiveMatrix profits;       // d x n, entries in [0,1]
  std::vector<double> weights;   // length n, all >= 0
  DominanceOrder order;          // Maximize^d then Minimize
};

/// Unit weights, profits i.i.d. uniform on [0,1).
KnapsackInstance build_unit_weight_knapsack(int n, int d, const RandomStream& stream);

/**
 * @brief Checks that every Pareto optimum of the centered profit problem
 *        restricted to solutions with exactly k ones is also Pareto-optimal in
 *        the full knapsack problem over {0,1}^n.
 */
bool verify_knapsack_embedding(const KnapsackInstance& instance,
                               std::optional<int> k = std::nullopt,
                               std::uint64_t budget = kDefaultEnumerationBudget);

/**
 * @brief Parameter schedule for the cloning-step lower-bound construction.
 *
 * n_q_hat = log(phi) / log(2 phi / (phi - d)); n_q = floor(n_q_hat);
 * n_p = floor(n/2); objects_used = ceil of
 * n_p + d n_q + (2 d^2/(phi-d)) (2 phi/(phi-d))^{n_q}. When phi exceeds the
 * saturation point phi_hat = (2 phi_hat/(phi_hat-d))^{n/2d}, phi is replaced
 * by phi_hat and n_q_hat becomes n/(2d).
 */
struct BRParameters {
  int n = 0;
  int d = 0;
  double phi = 0.0;
  long long n_p = 0;
  long long n_q = 0;
  double n_q_hat = 0.0;
  /// Saturation density; equals phi when no substitution was needed.
  double phi_hat = 0.0;
  bool saturated = false;
  /// Relative fixed-point residual of phi_hat (0 when not saturated).
  double phi_hat_residual = 0.0;
  long long objects_used = 0;
  /// n_p^(d-1.5) * (2^d / d)^(n_q)
  double bound_value = 0.0;
};

/// Requires d >= 2, n >= 16 d^2, phi >= 2d; violations name the inequality.
BRParameters br_parameters(int n, int d, double phi);

/// The explicit lower-bound product n_p^(d-1.5) * (2^d/d)^(n_q).
double br_bound_value(const BRParameters& params);

/// Left side of the object-budget check: does the schedule satisfy
/// n_q_hat <= n/(2d) (equivalently phi <= (2 phi/(phi-d))^{n/2d})?
bool br_density_within_saturation(int n, int d, double phi);

}  // namespace paretolab

#endif  // PARETOLAB_CONSTRUCTIONS_HPP

/**
 * @file enumeration.hpp
 * @brief Feasible-set families and exact Pareto-set enumeration: a brute-force
 *        oracle, a divide-and-conquer maxima routine, and the incremental
 *        item-by-item algorithm for the full 0/1 cube.
 */

#ifndef PARETOLAB_ENUMERATION_HPP
#define PARETOLAB_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "paretolab/core.hpp"
#include "paretolab/rational.hpp"

namespace paretolab {

/// Default cap on enumerated feasible solutions.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1ull << 26;
/// Default cap on stored Pareto points in the incremental algorithm.
inline constexpr std::uint64_t kDefaultParetoBudget = 1ull << 22;

/**
 * @brief A finitely enumerable family of feasible solutions.
 *
 * Variants: the full 0/1 cube, the sign cube {-1,1}^n, all 0/1 vectors of a
 * fixed cardinality, incidence vectors of spanning trees of the complete
 * graph K_m, the restricted "gadget" tree family (edge (s,t) plus exactly one
 * of (s,u_j),(t,u_j) per j), and explicit lists.
 *
 * Edge indexing for tree variants: vertices are 0..m-1 with s=0, t=1,
 * u_j = 1+j; edge {a,b} with a < b has index a*(m-1) - a*(a-1)/2 + (b-a-1),
 * i.e. pairs in lexicographic order (0,1),(0,2),...,(1,2),...
 */
class FeasibleSet {
 public:
  enum class Kind : std::uint8_t {
    kFullCube,
    kSignCube,
    kFixedCardinality,
    kSpanningTreesComplete,
    kGadgetTrees,
    kExplicitList,
  };

  static FeasibleSet full_cube(int n);
  static FeasibleSet sign_cube(int n);
  static FeasibleSet fixed_cardinality(int n, int k);
  static FeasibleSet spanning_trees_complete(int m);
  static FeasibleSet gadget_trees(int m);
  static FeasibleSet explicit_list(std::vector<Solution> items);

  /// Parses `cube:<n>`, `signcube:<n>`, `fixedcard:<n>:<k>`, `trees:<m>`,
  /// `gadgettrees:<m>`.
  static FeasibleSet parse(const std::string& text);

  Kind kind() const { return kind_; }
  /// Length of every solution vector in the family.
  int vector_length() const;
  SolutionDomain domain() const;
  /// Exact number of feasible solutions.
  BigInt cardinality() const;

  int param_n() const { return n_; }
  int param_k() const { return k_; }
  int param_m() const { return m_; }
  const std::vector<Solution>& explicit_items() const { return items_; }

 private:
  FeasibleSet() = default;
  Kind kind_ = Kind::kFullCube;
  int n_ = 0;  // variables (cube variants)
  int k_ = 0;  // cardinality (fixed-cardinality variant)
  int m_ = 0;  // vertices (tree variants)
  std::vector<Solution> items_;
};

/// Edge index of {a,b} (a != b) among the C(m,2) edges of K_m.
int edge_index(int a, int b, int m);

/**
 * @brief Visits every feasible solution exactly once in a deterministic order.
 *
 * The Solution reference passed to the callback is a reused buffer; copy it if
 * it must outlive the call. Throws CapacityError (naming the cardinality) when
 * the family exceeds `budget`.
 */
void for_each_solution(const FeasibleSet& fs,
                       const std::function<void(const Solution&)>& visit,
                       std::uint64_t budget = kDefaultEnumerationBudget);

/// Materialized enumeration, same order and budget rules as for_each_solution.
std::vector<Solution> enumerate_feasible(
    const FeasibleSet& fs, std::uint64_t budget = kDefaultEnumerationBudget);

/**
 * @brief Exact Pareto set of an instance.
 *
 * `count` counts feasible solutions whose values are non-dominated; under
 * exact value ties among distinct solutions (probability zero for density
 * distributions) `solutions`/`values` may hold one representative per distinct
 * value while `count` still counts all solutions.
 */
struct ParetoSet {
  std::vector<Solution> solutions;
  std::vector<ObjectiveVector> values;
  std::uint64_t count = 0;
};

/// Pairwise-domination oracle over any enumerable feasible set.
ParetoSet pareto_bruteforce(const ObjectiveMatrix& V, const FeasibleSet& fs,
                            const DominanceOrder& order,
                            std::uint64_t budget = kDefaultEnumerationBudget);

/**
 * @brief Divide-and-conquer maximal-vector computation.
 *
 * Returns exactly the index set of pareto_filter; expected cost
 * O(m log^(d-1) m) on m random points.
 */
std::vector<std::size_t> pareto_maxima_dc(const std::vector<ObjectiveVector>& points,
                                          const DominanceOrder& order);

/**
 * @brief Exact Pareto set over the full cube {0,1}^n by item-by-item merging:
 *        P_j = filter(P_{j-1} + {0, v_j}).
 *
 * Stores values plus one representative solution per value; exact value ties
 * are merged with multiplicity so the final count still counts solutions.
 * Throws CapacityError (with the partial count) when the stored frontier
 * exceeds `pareto_budget`.
 */
ParetoSet pareto_incremental_cube(const ObjectiveMatrix& V,
                                  const DominanceOrder& order,
                                  std::uint64_t pareto_budget = kDefaultParetoBudget);

/// Number of Pareto-optimal solutions, dispatching to the cheapest exact method.
std::uint64_t count_pareto(const ObjectiveMatrix& V, const FeasibleSet& fs,
                           const DominanceOrder& order,
                           std::uint64_t enumeration_budget = kDefaultEnumerationBudget,
                           std::uint64_t pareto_budget = kDefaultParetoBudget);

/// True iff x is Pareto-optimal for V over fs (no feasible value dominates Vx).
bool is_pareto_optimal(const ObjectiveMatrix& V, const FeasibleSet& fs,
                       const DominanceOrder& order, const Solution& x,
                       std::uint64_t budget = kDefaultEnumerationBudget);

/**
 * @brief Column-flip transform: column j of the result equals column j of V
 *        when r_j = 1 and its negation when r_j = 0.
 *
 * r is Pareto-optimal for V over the full cube iff the all-ones solution is
 * Pareto-optimal for the flipped matrix.
 */
ObjectiveMatrix flip_columns_by(const ObjectiveMatrix& V, const Solution& r);

}  // namespace paretolab

#endif  // PARETOLAB_ENUMERATION_HPP

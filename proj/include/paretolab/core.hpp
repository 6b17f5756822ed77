/**
 * @file core.hpp
 * @brief Objective matrices, solutions, dominance orders, and the
 *        dominance / Pareto-filter primitives.
 */

#ifndef PARETOLAB_CORE_HPP
#define PARETOLAB_CORE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace paretolab {

/// Optimization sense of a single objective coordinate.
enum class Sense : std::uint8_t { kMaximize, kMinimize };

/// Domain of solution coordinates: {0,1} or {-1,+1}.
enum class SolutionDomain : std::uint8_t { kZeroOne, kPlusMinusOne };

/// A point in objective space (length d, all coordinates finite).
using ObjectiveVector = std::vector<double>;

/// Raised when an enumeration or Pareto-set size exceeds its configured budget.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * @brief A 0/1 (or -1/+1) assignment to n binary variables.
 *
 * Bits are stored as 0/1; the domain decides their numeric value:
 * kZeroOne maps b -> b, kPlusMinusOne maps b -> 2b - 1.
 */
class Solution {
 public:
  Solution(std::vector<std::uint8_t> bits, SolutionDomain domain);

  std::size_t size() const { return bits_.size(); }
  SolutionDomain domain() const { return domain_; }
  std::uint8_t bit(std::size_t j) const { return bits_[j]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  /// Numeric value of coordinate j under the domain.
  double coordinate(std::size_t j) const {
    return domain_ == SolutionDomain::kZeroOne ? double(bits_[j])
                                               : double(2 * int(bits_[j]) - 1);
  }

  /// Builds a solution from the low n bits of a mask (bit j -> variable j).
  static Solution from_mask(std::uint64_t mask, int n, SolutionDomain domain);

  bool operator==(const Solution&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
  SolutionDomain domain_;
};

/**
 * @brief Dense d x n matrix of linear objective coefficients.
 *
 * Row i is the coefficient vector of objective i; column j collects the
 * per-objective coefficients of variable j. All entries must be finite.
 */
class ObjectiveMatrix {
 public:
  ObjectiveMatrix(int objectives, int variables, std::vector<double> entries);

  static ObjectiveMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int objectives() const { return d_; }
  int variables() const { return n_; }

  double entry(int i, int j) const { return entries_[std::size_t(i) * n_ + j]; }
  std::span<const double> row(int i) const {
    return {entries_.data() + std::size_t(i) * n_, std::size_t(n_)};
  }
  std::vector<double> column(int j) const;
  const std::vector<double>& entries() const { return entries_; }

 private:
  int d_;
  int n_;
  std::vector<double> entries_;  // row-major
};

/// Per-coordinate optimization senses defining the domination order.
class DominanceOrder {
 public:
  explicit DominanceOrder(std::vector<Sense> senses);

  static DominanceOrder all_maximize(int d);
  /// d maximized profits followed by one minimized weight.
  static DominanceOrder knapsack(int profit_count);

  std::size_t size() const { return senses_.size(); }
  Sense sense(std::size_t i) const { return senses_[i]; }
  const std::vector<Sense>& senses() const { return senses_; }

 private:
  std::vector<Sense> senses_;
};

/// Objective values V x of a solution. Throws on dimension mismatch.
ObjectiveVector evaluate(const ObjectiveMatrix& V, const Solution& x);

/**
 * @brief True iff b dominates a: at least as good in every coordinate under
 *        `order` and strictly better in at least one.
 *
 * Equal vectors never dominate each other. Comparisons are exact (no epsilon).
 */
bool dominates(const ObjectiveVector& b, const ObjectiveVector& a,
               const DominanceOrder& order);

/**
 * @brief Indices of all points not dominated by any point of the list.
 *
 * Points with coordinate-wise equal values are all retained. Indices are
 * returned in ascending order. Throws on empty input.
 */
std::vector<std::size_t> pareto_filter(const std::vector<ObjectiveVector>& points,
                                       const DominanceOrder& order);

}  // namespace paretolab

#endif  // PARETOLAB_CORE_HPP

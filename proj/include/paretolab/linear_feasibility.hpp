/**
 * @file linear_feasibility.hpp
 * @brief Phase-I simplex for equality-form feasibility: find x >= 0 with
 *        A x = b, or a Farkas certificate y with yᵀA <= 0 and yᵀb > 0.
 *
 * Instantiated with double (Dantzig rule, iteration cap, tolerances) and with
 * exact rationals (Bland's rule, guaranteed termination, no tolerances).
 */

#ifndef PARETOLAB_LINEAR_FEASIBILITY_HPP
#define PARETOLAB_LINEAR_FEASIBILITY_HPP

#include <cstddef>
#include <type_traits>
#include <vector>

#include "paretolab/rational.hpp"

namespace paretolab {

enum class LpStatus : std::uint8_t {
  kFeasible,
  kInfeasible,
  kStalled,  // double mode only: iteration cap or numeric trouble
};

template <typename Scalar>
struct LinearFeasibilityResult {
  LpStatus status = LpStatus::kStalled;
  std::vector<Scalar> x;  // primal point, size n, when feasible
  std::vector<Scalar> y;  // Farkas certificate, size m, when infeasible
};

/**
 * @brief Solves the Phase-I problem for {x >= 0 : A x = b}.
 *
 * A is row-major m x n. The returned certificates are candidates; in double
 * mode callers must re-verify them against the original data.
 */
template <typename Scalar>
LinearFeasibilityResult<Scalar> solve_equality_feasibility(
    std::size_t m, std::size_t n, const std::vector<Scalar>& A,
    const std::vector<Scalar>& b) {
  constexpr bool kExact = std::is_same_v<Scalar, Rational>;
  LinearFeasibilityResult<Scalar> result;

  // Tableau: m rows of [original columns | artificial columns | rhs], plus a
  // reduced-cost row for the Phase-I objective (minimize sum of artificials).
  const std::size_t cols = n + m + 1;
  const std::size_t rhs = n + m;
  std::vector<Scalar> T(m * cols, Scalar(0));
  std::vector<Scalar> sign(m, Scalar(1));  // row flips applied to make b >= 0
  for (std::size_t i = 0; i < m; ++i) {
    const Scalar s = b[i] < Scalar(0) ? Scalar(-1) : Scalar(1);
    sign[i] = s;
    for (std::size_t j = 0; j < n; ++j) T[i * cols + j] = s * A[i * n + j];
    T[i * cols + n + i] = Scalar(1);
    T[i * cols + rhs] = s * b[i];
  }
  std::vector<Scalar> cost(cols, Scalar(0));  // reduced costs and -objective
  for (std::size_t j = 0; j < n; ++j) {
    Scalar acc(0);
    for (std::size_t i = 0; i < m; ++i) acc += T[i * cols + j];
    cost[j] = -acc;
  }
  {
    Scalar acc(0);
    for (std::size_t i = 0; i < m; ++i) acc += T[i * cols + rhs];
    cost[rhs] = -acc;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  const double tol = 1e-11;
  auto negative = [&](const Scalar& v) {
    if constexpr (kExact) {
      return v < Scalar(0);
    } else {
      return v < -tol;
    }
  };
  auto positive_pivot = [&](const Scalar& v) {
    if constexpr (kExact) {
      return v > Scalar(0);
    } else {
      return v > 1e-10;
    }
  };

  const std::size_t max_iters = 100 * (m + n) + 1000;
  for (std::size_t iter = 0;; ++iter) {
    if (iter >= max_iters) {
      result.status = LpStatus::kStalled;
      return result;
    }
    // entering column: Bland (exact) or most negative reduced cost (double)
    std::size_t enter = cols;
    if constexpr (kExact) {
      for (std::size_t j = 0; j < n + m; ++j) {
        if (negative(cost[j])) {
          enter = j;
          break;
        }
      }
    } else {
      Scalar best(0);
      for (std::size_t j = 0; j < n + m; ++j) {
        if (cost[j] < best - tol && negative(cost[j])) {
          best = cost[j];
          enter = j;
        }
      }
    }
    if (enter == cols) break;  // optimal

    std::size_t leave = m;
    bool have_ratio = false;
    Scalar best_num(0), best_den(1);
    for (std::size_t i = 0; i < m; ++i) {
      const Scalar& a = T[i * cols + enter];
      if (!positive_pivot(a)) continue;
      const Scalar& bi = T[i * cols + rhs];
      // compare bi/a against best_num/best_den without dividing
      if (!have_ratio || bi * best_den < best_num * a ||
          (bi * best_den == best_num * a && basis[i] < basis[leave])) {
        best_num = bi;
        best_den = a;
        leave = i;
        have_ratio = true;
      }
    }
    if (!have_ratio) {
      // Phase-I objective is bounded below by zero, so this is numeric noise.
      result.status = LpStatus::kStalled;
      return result;
    }

    // pivot on (leave, enter)
    const Scalar piv = T[leave * cols + enter];
    for (std::size_t j = 0; j < cols; ++j) T[leave * cols + j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const Scalar f = T[i * cols + enter];
      if (f == Scalar(0)) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        T[i * cols + j] -= f * T[leave * cols + j];
      }
    }
    {
      const Scalar f = cost[enter];
      if (f != Scalar(0)) {
        for (std::size_t j = 0; j < cols; ++j) {
          cost[j] -= f * T[leave * cols + j];
        }
      }
    }
    basis[leave] = enter;
  }

  // objective value = -cost[rhs]
  const Scalar objective = -cost[rhs];
  bool feasible;
  if constexpr (kExact) {
    feasible = objective == Scalar(0);
  } else {
    feasible = objective <= 1e-9;
  }
  if (feasible) {
    result.status = LpStatus::kFeasible;
    result.x.assign(n, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) result.x[basis[i]] = T[i * cols + rhs];
    }
    return result;
  }
  result.status = LpStatus::kInfeasible;
  // y_i = 1 - reduced cost of artificial i, undoing the row sign flips.
  result.y.assign(m, Scalar(0));
  for (std::size_t i = 0; i < m; ++i) {
    result.y[i] = sign[i] * (Scalar(1) - cost[n + i]);
  }
  return result;
}

}  // namespace paretolab

#endif  // PARETOLAB_LINEAR_FEASIBILITY_HPP

/**
 * @file geometry.hpp
 * @brief Exact combinatorial formulas (Wendel probability, zonotope vertex
 *        counts, expectation lower bounds) and geometric predicates
 *        (origin-in-hull, cone vs orthant, hull vertices, sign-flip cover).
 */

#ifndef PARETOLAB_GEOMETRY_HPP
#define PARETOLAB_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "paretolab/core.hpp"
#include "paretolab/enumeration.hpp"
#include "paretolab/rational.hpp"
#include "paretolab/sampling.hpp"

namespace paretolab {

/// One of the 2^d orthant sign assignments, entries in {-1, +1}.
using SignVector = std::vector<int>;

/// All 2^d sign vectors in a fixed deterministic order.
std::vector<SignVector> all_sign_vectors(int d);

// ---- exact formulas -------------------------------------------------------

/**
 * @brief Probability that the origin lies outside the convex hull of n
 *        independent origin-symmetric random points in R^d:
 *        (1/2^(n-1)) * sum_{k=0}^{d-1} C(n-1, k). Equals 1 for n <= d.
 */
Rational wendel_probability(int n, int d);

/// Maximal vertex count of a d-dimensional zonotope generated by n segments
/// in general position: 2 * sum_{k=0}^{d-1} C(n-1, k). Requires n >= d >= 1.
BigInt zonotope_vertex_count_generic(int n, int d);

/// Lower bound on the expected Pareto count over the full cube:
/// (1/2^(d-1)) * sum_{k=0}^{d-1} C(n-1, k).
Rational lower_bound_basic(int n, int d);

/// The weaker closed form ((n-1) / (2(d-1)))^(d-1); requires n >= 2, d >= 2.
double lower_bound_simple(int n, int d);

/// Restricted-feasible-set bound (|S| / 2^(n+d-1)) * sum_{k=0}^{d-1} C(n-1,k).
Rational lower_bound_restricted(int n, int d, const BigInt& s_card);

// ---- linear-feasibility-backed predicates ---------------------------------

enum class PredicateVerdict : std::uint8_t { kTrue, kFalse, kNumericFailure };

enum class ArithmeticMode : std::uint8_t { kFloat64, kExactRational };

/// What to do when the float path cannot certify a verdict within tolerance.
enum class AmbiguityPolicy : std::uint8_t { kFallbackToExact, kReportFailure };

struct GeometryOptions {
  ArithmeticMode arithmetic = ArithmeticMode::kFloat64;
  double tolerance = 1e-9;
  AmbiguityPolicy on_ambiguity = AmbiguityPolicy::kFallbackToExact;
};

struct OriginInHullResult {
  PredicateVerdict verdict = PredicateVerdict::kNumericFailure;
  /// When kFalse: direction u with u . v_i > 0 for every point.
  std::vector<double> separating_direction;
  /// When kTrue: convex weights witnessing the containment.
  std::vector<double> hull_weights;
};

/**
 * @brief Decides whether the origin is a convex combination of the points.
 *
 * Verdicts from the float path are re-verified against the input data; an
 * ambiguous result is resolved per the ambiguity policy (exact re-solve by
 * default) and never silently guessed.
 */
OriginInHullResult origin_in_hull(const std::vector<std::vector<double>>& points,
                                  const GeometryOptions& options = {});

/// True iff cone(v_1..v_n) meets the closed negative orthant in a point other
/// than the origin; decided by one feasibility problem per strict coordinate.
PredicateVerdict cone_meets_negative_orthant(
    const std::vector<std::vector<double>>& points,
    const GeometryOptions& options = {});

struct HullVerticesResult {
  bool computed = false;
  std::vector<std::size_t> vertices;           // ascending indices
  std::optional<std::size_t> ambiguous_point;  // set when not computed
};

/// Indices of extreme points: i is a vertex iff p_i is not in the convex hull
/// of the remaining points (per-point linear feasibility test).
HullVerticesResult hull_vertices(const std::vector<std::vector<double>>& points,
                                 const GeometryOptions& options = {});

struct BentleyCoverResult {
  bool computed = false;
  bool covered = false;
  std::optional<std::size_t> uncovered_vertex;
};

/**
 * @brief Checks that every hull vertex is maximal under at least one of the
 *        2^d coordinate sign assignments (always true; serves as a
 *        cross-validation oracle of the vertex and maximality codes).
 */
BentleyCoverResult bentley_cover_check(
    const std::vector<std::vector<double>>& points,
    const GeometryOptions& options = {});

/// Is point `idx` maximal (all-maximize) among the points after flipping every
/// coordinate c by signs[c]?
bool maximal_under_flip(const std::vector<std::vector<double>>& points,
                        std::size_t idx, const SignVector& signs);

/**
 * @brief Projects the feasible set onto a uniformly random d-dimensional
 *        subspace (row space of a d x n standard Gaussian matrix) and counts
 *        hull vertices of the image.
 */
std::uint64_t random_projection_vertex_count(
    const FeasibleSet& S, int d, const RandomStream& stream,
    std::uint64_t budget = kDefaultEnumerationBudget,
    const GeometryOptions& options = {});

/**
 * @brief The k vectors of {0,1}^n closest to `center` in Hamming distance,
 *        ties at the boundary radius broken by lexicographic order of the bit
 *        vectors. Returned as an explicit-list feasible set.
 */
FeasibleSet hamming_ball(int n, const Solution& center, std::uint64_t k);

/// Image points {V r : r in {0,1}^n} in enumeration (mask) order.
std::vector<std::vector<double>> cube_image_points(const ObjectiveMatrix& V);

}  // namespace paretolab

#endif  // PARETOLAB_GEOMETRY_HPP

#include "paretolab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "paretolab/linear_feasibility.hpp"

namespace paretolab {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

BigInt binomial_prefix_sum(long long n, long long k_max) {
  BigInt acc = 0;
  for (long long k = 0; k <= k_max; ++k) acc += binomial(n, k);
  return acc;
}

void check_points(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw std::invalid_argument("need at least one point");
  const std::size_t d = points.front().size();
  if (d == 0) throw std::invalid_argument("points must have dimension >= 1");
  for (const auto& p : points) {
    if (p.size() != d) throw std::invalid_argument("ragged point list");
    for (double c : p) {
      if (!std::isfinite(c)) throw std::invalid_argument("non-finite point");
    }
  }
}

// ---- membership of a target point in the convex hull of (points \ exclude)

// Columns are (v_j - shift, 1); rhs is (0, 1). Exact path re-derives the
// shifted columns in rational arithmetic from the raw inputs.
struct MembershipProblem {
  const std::vector<std::vector<double>>* points;
  const double* shift;  // length d, may be null for the origin
  std::size_t exclude = kNone;
};

OriginInHullResult membership_exact(const MembershipProblem& prob) {
  const auto& pts = *prob.points;
  const std::size_t d = pts.front().size();
  const std::size_t m_rows = d + 1;
  std::vector<std::size_t> col_of;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j != prob.exclude) col_of.push_back(j);
  }
  const std::size_t n_cols = col_of.size();
  OriginInHullResult out;
  if (n_cols == 0) {
    out.verdict = PredicateVerdict::kFalse;
    out.separating_direction.assign(d, 0.0);
    return out;  // empty hull: no separating direction is meaningful
  }
  std::vector<Rational> A(m_rows * n_cols, Rational(0));
  std::vector<Rational> b(m_rows, Rational(0));
  for (std::size_t cj = 0; cj < n_cols; ++cj) {
    const auto& p = pts[col_of[cj]];
    for (std::size_t c = 0; c < d; ++c) {
      Rational v = exact_rational(p[c]);
      if (prob.shift != nullptr) v -= exact_rational(prob.shift[c]);
      A[c * n_cols + cj] = std::move(v);
    }
    A[d * n_cols + cj] = Rational(1);
  }
  b[d] = Rational(1);
  const auto res = solve_equality_feasibility<Rational>(m_rows, n_cols, A, b);
  if (res.status == LpStatus::kFeasible) {
    out.verdict = PredicateVerdict::kTrue;
    out.hull_weights.assign(pts.size(), 0.0);
    for (std::size_t cj = 0; cj < n_cols; ++cj) {
      out.hull_weights[col_of[cj]] = to_double(res.x[cj]);
    }
    return out;
  }
  // Farkas y = (w, t): w.(v_j - shift) + t <= 0 for all j and t > 0, so
  // u = -w strictly separates.
  out.verdict = PredicateVerdict::kFalse;
  out.separating_direction.assign(d, 0.0);
  double norm = 0.0;
  for (std::size_t c = 0; c < d; ++c) {
    out.separating_direction[c] = -to_double(res.y[c]);
    norm += out.separating_direction[c] * out.separating_direction[c];
  }
  norm = std::sqrt(norm);
  if (norm > 0) {
    for (double& u : out.separating_direction) u /= norm;
  }
  return out;
}

OriginInHullResult membership_resolve(const MembershipProblem& prob,
                                      const GeometryOptions& opts) {
  if (opts.arithmetic == ArithmeticMode::kExactRational) {
    return membership_exact(prob);
  }
  const auto& pts = *prob.points;
  const std::size_t d = pts.front().size();
  const std::size_t m_rows = d + 1;
  std::vector<std::size_t> col_of;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j != prob.exclude) col_of.push_back(j);
  }
  const std::size_t n_cols = col_of.size();
  OriginInHullResult out;
  if (n_cols == 0) {
    out.verdict = PredicateVerdict::kFalse;
    out.separating_direction.assign(d, 0.0);
    return out;
  }
  std::vector<double> A(m_rows * n_cols, 0.0);
  std::vector<double> b(m_rows, 0.0);
  double scale = 1.0;
  for (std::size_t cj = 0; cj < n_cols; ++cj) {
    const auto& p = pts[col_of[cj]];
    for (std::size_t c = 0; c < d; ++c) {
      double v = p[c];
      if (prob.shift != nullptr) v -= prob.shift[c];
      A[c * n_cols + cj] = v;
      scale = std::max(scale, std::abs(v));
    }
    A[d * n_cols + cj] = 1.0;
  }
  b[d] = 1.0;
  const double tol = opts.tolerance;
  const auto res = solve_equality_feasibility<double>(m_rows, n_cols, A, b);
  if (res.status == LpStatus::kFeasible) {
    // verify the convex combination against the (shifted) data
    std::vector<double> residual(d, 0.0);
    double weight_sum = 0.0;
    bool weights_ok = true;
    for (std::size_t cj = 0; cj < n_cols; ++cj) {
      const double w = res.x[cj];
      if (w < -tol) weights_ok = false;
      const double wc = std::max(w, 0.0);
      weight_sum += wc;
      for (std::size_t c = 0; c < d; ++c) residual[c] += wc * A[c * n_cols + cj];
    }
    double max_res = std::abs(weight_sum - 1.0);
    for (double r : residual) max_res = std::max(max_res, std::abs(r) / scale);
    if (weights_ok && max_res <= tol * 10) {
      out.verdict = PredicateVerdict::kTrue;
      out.hull_weights.assign(pts.size(), 0.0);
      for (std::size_t cj = 0; cj < n_cols; ++cj) {
        out.hull_weights[col_of[cj]] = std::max(res.x[cj], 0.0) / weight_sum;
      }
      return out;
    }
  } else if (res.status == LpStatus::kInfeasible) {
    // candidate separation u = -w; certify min_j u.(v_j - shift) > 0
    std::vector<double> u(d, 0.0);
    double norm = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      u[c] = -res.y[c];
      norm += u[c] * u[c];
    }
    norm = std::sqrt(norm);
    if (norm > 0) {
      double margin = std::numeric_limits<double>::infinity();
      for (std::size_t cj = 0; cj < n_cols; ++cj) {
        double dot = 0.0;
        for (std::size_t c = 0; c < d; ++c) dot += u[c] * A[c * n_cols + cj];
        margin = std::min(margin, dot / norm);
      }
      if (margin > tol * scale) {
        out.verdict = PredicateVerdict::kFalse;
        out.separating_direction.resize(d);
        for (std::size_t c = 0; c < d; ++c) out.separating_direction[c] = u[c] / norm;
        return out;
      }
    }
  }
  if (opts.on_ambiguity == AmbiguityPolicy::kFallbackToExact) {
    return membership_exact(prob);
  }
  out.verdict = PredicateVerdict::kNumericFailure;
  return out;
}

// ---- cone vs negative orthant ---------------------------------------------

// Feasibility of {alpha >= 0, s >= 0 : sum alpha v_j + slacks = -e_c} where
// the slack columns cover every coordinate except c.
PredicateVerdict cone_coordinate_exact(const std::vector<std::vector<double>>& pts,
                                       std::size_t d, std::size_t c) {
  const std::size_t n_pts = pts.size();
  const std::size_t n_cols = n_pts + d - 1;
  std::vector<Rational> A(d * n_cols, Rational(0));
  std::vector<Rational> b(d, Rational(0));
  for (std::size_t j = 0; j < n_pts; ++j) {
    for (std::size_t r = 0; r < d; ++r) {
      A[r * n_cols + j] = exact_rational(pts[j][r]);
    }
  }
  std::size_t sc = n_pts;
  for (std::size_t r = 0; r < d; ++r) {
    if (r == c) continue;
    A[r * n_cols + sc] = Rational(1);
    ++sc;
  }
  b[c] = Rational(-1);
  const auto res = solve_equality_feasibility<Rational>(d, n_cols, A, b);
  return res.status == LpStatus::kFeasible ? PredicateVerdict::kTrue
                                           : PredicateVerdict::kFalse;
}

PredicateVerdict cone_coordinate(const std::vector<std::vector<double>>& pts,
                                 std::size_t d, std::size_t c,
                                 const GeometryOptions& opts) {
  if (opts.arithmetic == ArithmeticMode::kExactRational) {
    return cone_coordinate_exact(pts, d, c);
  }
  const std::size_t n_pts = pts.size();
  const std::size_t n_cols = n_pts + d - 1;
  std::vector<double> A(d * n_cols, 0.0);
  std::vector<double> b(d, 0.0);
  double scale = 1.0;
  for (std::size_t j = 0; j < n_pts; ++j) {
    for (std::size_t r = 0; r < d; ++r) {
      A[r * n_cols + j] = pts[j][r];
      scale = std::max(scale, std::abs(pts[j][r]));
    }
  }
  std::size_t sc = n_pts;
  for (std::size_t r = 0; r < d; ++r) {
    if (r == c) continue;
    A[r * n_cols + sc] = 1.0;
    ++sc;
  }
  b[c] = -1.0;
  const double tol = opts.tolerance;
  const auto res = solve_equality_feasibility<double>(d, n_cols, A, b);
  if (res.status == LpStatus::kFeasible) {
    // verify: w = sum alpha v_j has w_c ~ -1 and w_r <~ 0 elsewhere
    std::vector<double> w(d, 0.0);
    bool weights_ok = true;
    for (std::size_t j = 0; j < n_pts; ++j) {
      const double a = res.x[j];
      if (a < -tol) weights_ok = false;
      const double ac = std::max(a, 0.0);
      for (std::size_t r = 0; r < d; ++r) w[r] += ac * pts[j][r];
    }
    bool ok = weights_ok && std::abs(w[c] + 1.0) <= tol * 10 * scale;
    for (std::size_t r = 0; r < d && ok; ++r) {
      if (r != c && w[r] > tol * 10 * scale) ok = false;
    }
    if (ok) return PredicateVerdict::kTrue;
  } else if (res.status == LpStatus::kInfeasible) {
    // Farkas y: y.v_j <= 0, y_r <= 0 (r != c), -y_c > 0
    double norm = 0.0;
    for (std::size_t r = 0; r < d; ++r) norm = std::max(norm, std::abs(res.y[r]));
    if (norm > 0) {
      bool ok = -res.y[c] > tol * norm;
      for (std::size_t r = 0; r < d && ok; ++r) {
        if (r != c && res.y[r] > tol * norm) ok = false;
      }
      for (std::size_t j = 0; j < n_pts && ok; ++j) {
        double dot = 0.0;
        for (std::size_t r = 0; r < d; ++r) dot += res.y[r] * pts[j][r];
        if (dot > tol * norm * scale) ok = false;
      }
      if (ok) return PredicateVerdict::kFalse;
    }
  }
  if (opts.on_ambiguity == AmbiguityPolicy::kFallbackToExact) {
    return cone_coordinate_exact(pts, d, c);
  }
  return PredicateVerdict::kNumericFailure;
}

}  // namespace

std::vector<SignVector> all_sign_vectors(int d) {
  if (d < 1) throw std::invalid_argument("sign vectors need d >= 1");
  std::vector<SignVector> out;
  out.reserve(std::size_t(1) << d);
  for (std::uint64_t mask = 0; mask < (1ull << d); ++mask) {
    SignVector s(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) s[std::size_t(c)] = ((mask >> c) & 1u) ? 1 : -1;
    out.push_back(std::move(s));
  }
  return out;
}

Rational wendel_probability(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("wendel needs n >= 1, d >= 1");
  return Rational(binomial_prefix_sum(n - 1, d - 1), pow2(n - 1));
}

BigInt zonotope_vertex_count_generic(int n, int d) {
  if (d < 1 || n < d) throw std::invalid_argument("zonotope count needs n >= d >= 1");
  return 2 * binomial_prefix_sum(n - 1, d - 1);
}

Rational lower_bound_basic(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("bound needs n >= 1, d >= 1");
  return Rational(binomial_prefix_sum(n - 1, d - 1), pow2(d - 1));
}

double lower_bound_simple(int n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("simple bound needs n >= 2, d >= 2");
  return std::pow(double(n - 1) / (2.0 * (d - 1)), double(d - 1));
}

Rational lower_bound_restricted(int n, int d, const BigInt& s_card) {
  if (n < 1 || d < 1) throw std::invalid_argument("bound needs n >= 1, d >= 1");
  if (s_card < 1 || s_card > pow2(n)) {
    throw std::invalid_argument("s_card must lie in [1, 2^n]");
  }
  return Rational(s_card * binomial_prefix_sum(n - 1, d - 1), pow2(n + d - 1));
}

OriginInHullResult origin_in_hull(const std::vector<std::vector<double>>& points,
                                  const GeometryOptions& options) {
  check_points(points);
  MembershipProblem prob{&points, nullptr, kNone};
  return membership_resolve(prob, options);
}

PredicateVerdict cone_meets_negative_orthant(
    const std::vector<std::vector<double>>& points,
    const GeometryOptions& options) {
  check_points(points);
  const std::size_t d = points.front().size();
  bool any_failure = false;
  for (std::size_t c = 0; c < d; ++c) {
    const PredicateVerdict v = cone_coordinate(points, d, c, options);
    if (v == PredicateVerdict::kTrue) return PredicateVerdict::kTrue;
    if (v == PredicateVerdict::kNumericFailure) any_failure = true;
  }
  return any_failure ? PredicateVerdict::kNumericFailure : PredicateVerdict::kFalse;
}

HullVerticesResult hull_vertices(const std::vector<std::vector<double>>& points,
                                 const GeometryOptions& options) {
  check_points(points);
  HullVerticesResult out;
  if (points.size() == 1) {
    out.computed = true;
    out.vertices = {0};
    return out;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    MembershipProblem prob{&points, points[i].data(), i};
    const OriginInHullResult r = membership_resolve(prob, options);
    if (r.verdict == PredicateVerdict::kNumericFailure) {
      out.computed = false;
      out.ambiguous_point = i;
      return out;
    }
    if (r.verdict == PredicateVerdict::kFalse) out.vertices.push_back(i);
  }
  out.computed = true;
  return out;
}

bool maximal_under_flip(const std::vector<std::vector<double>>& points,
                        std::size_t idx, const SignVector& signs) {
  const std::size_t d = points.front().size();
  if (signs.size() != d) throw std::invalid_argument("sign vector length mismatch");
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (j == idx) continue;
    bool weakly_better = true;
    bool strict = false;
    for (std::size_t c = 0; c < d && weakly_better; ++c) {
      const double a = signs[c] * points[j][c];
      const double b = signs[c] * points[idx][c];
      if (a < b) weakly_better = false;
      if (a > b) strict = true;
    }
    if (weakly_better && strict) return false;
  }
  return true;
}

BentleyCoverResult bentley_cover_check(
    const std::vector<std::vector<double>>& points,
    const GeometryOptions& options) {
  check_points(points);
  BentleyCoverResult out;
  const HullVerticesResult hv = hull_vertices(points, options);
  if (!hv.computed) return out;
  out.computed = true;
  const auto flips = all_sign_vectors(int(points.front().size()));
  for (std::size_t v : hv.vertices) {
    bool covered = false;
    for (const auto& eps : flips) {
      if (maximal_under_flip(points, v, eps)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      out.covered = false;
      out.uncovered_vertex = v;
      return out;
    }
  }
  out.covered = true;
  return out;
}

std::uint64_t random_projection_vertex_count(const FeasibleSet& S, int d,
                                             const RandomStream& stream,
                                             std::uint64_t budget,
                                             const GeometryOptions& options) {
  const int n = S.vector_length();
  if (d < 1 || d > n) throw std::invalid_argument("projection needs 1 <= d <= n");
  const ObjectiveMatrix G =
      sample_matrix(MatrixDistribution::iid(d, n, DistributionSpec::gaussian(1.0)),
                    stream);
  std::vector<std::vector<double>> image;
  for_each_solution(
      S, [&](const Solution& x) { image.push_back(evaluate(G, x)); }, budget);
  const HullVerticesResult hv = hull_vertices(image, options);
  if (!hv.computed) {
    throw std::runtime_error("projection vertex count: ambiguous hull test");
  }
  return hv.vertices.size();
}

FeasibleSet hamming_ball(int n, const Solution& center, std::uint64_t k) {
  if (n < 1 || center.size() != std::size_t(n)) {
    throw std::invalid_argument("hamming ball center length mismatch");
  }
  if (center.domain() != SolutionDomain::kZeroOne) {
    throw std::invalid_argument("hamming ball center must be a 0/1 vector");
  }
  if (k < 1 || BigInt(k) > pow2(n)) {
    throw std::invalid_argument("hamming ball size must lie in [1, 2^n]");
  }
  std::vector<Solution> picked;
  picked.reserve(k);
  auto lex_less = [](const Solution& a, const Solution& b) {
    return a.bits() < b.bits();
  };
  for (int radius = 0; radius <= n && picked.size() < k; ++radius) {
    // all vectors at exactly this Hamming distance from the center
    std::vector<Solution> ring;
    FeasibleSet masks = FeasibleSet::fixed_cardinality(n, radius);
    for_each_solution(masks, [&](const Solution& mask) {
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        bits[std::size_t(j)] = center.bit(std::size_t(j)) ^ mask.bit(std::size_t(j));
      }
      ring.emplace_back(std::move(bits), SolutionDomain::kZeroOne);
    });
    std::sort(ring.begin(), ring.end(), lex_less);
    for (auto& s : ring) {
      if (picked.size() >= k) break;
      picked.push_back(std::move(s));
    }
  }
  return FeasibleSet::explicit_list(std::move(picked));
}

std::vector<std::vector<double>> cube_image_points(const ObjectiveMatrix& V) {
  const int n = V.variables();
  const int d = V.objectives();
  if (n > 26) throw CapacityError("cube image with n > 26 is too large");
  const std::uint64_t total = 1ull << n;
  std::vector<std::vector<double>> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<double> p(std::size_t(d), 0.0);
    for (int j = 0; j < n; ++j) {
      if ((mask >> j) & 1u) {
        for (int c = 0; c < d; ++c) p[std::size_t(c)] += V.entry(c, j);
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace paretolab

#include "paretolab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace paretolab {

namespace {

// log of the cloning-base 2*phi/(phi-d), evaluated from log(phi) so that the
// saturation search can work far beyond double range.
double log_base_from_log_phi(double log_phi, int d) {
  // 2 phi/(phi-d) = 2 / (1 - d e^{-log_phi})
  const double x = double(d) * std::exp(-log_phi);
  return std::log(2.0) - std::log1p(-x);
}

}  // namespace

TreeGadgetInstance build_tree_gadget(int m, int d) {
  if (m < 3) throw std::invalid_argument("tree gadget needs m >= 3");
  if (d < 2) throw std::invalid_argument("tree gadget needs d >= 2");
  const int edges = m * (m - 1) / 2;
  const DistributionSpec st = DistributionSpec::uniform(0.5, 1.0);
  const DistributionSpec spoke = DistributionSpec::uniform(-0.5, 0.5);
  const DistributionSpec outside = DistributionSpec::uniform(-1.0, -0.5);
  std::vector<DistributionSpec> grid;
  grid.reserve(std::size_t(d) * edges);
  std::vector<DistributionSpec> row(std::size_t(edges), outside);
  row[std::size_t(edge_index(0, 1, m))] = st;
  for (int j = 1; j <= m - 2; ++j) {
    row[std::size_t(edge_index(0, 1 + j, m))] = spoke;
    row[std::size_t(edge_index(1, 1 + j, m))] = spoke;
  }
  for (int i = 0; i < d; ++i) grid.insert(grid.end(), row.begin(), row.end());
  TreeGadgetInstance inst{
      m, d, MatrixDistribution(d, edges, std::move(grid)),
      FeasibleSet::spanning_trees_complete(m),
      std::pow(double(m - 3) / (2.0 * (d - 1)), double(d - 1))};
  return inst;
}

bool is_gadget_tree(const Solution& tree, int m) {
  const int edges = m * (m - 1) / 2;
  if (tree.size() != std::size_t(edges)) {
    throw std::invalid_argument("tree vector length does not match K_m");
  }
  if (!tree.bit(std::size_t(edge_index(0, 1, m)))) return false;
  int used = 1;
  for (int j = 1; j <= m - 2; ++j) {
    const int u = 1 + j;
    const int su = tree.bit(std::size_t(edge_index(0, u, m)));
    const int tu = tree.bit(std::size_t(edge_index(1, u, m)));
    if (su + tu != 1) return false;
    ++used;
  }
  // a spanning tree has exactly m-1 edges, so nothing else may be set
  int total = 0;
  for (std::size_t e = 0; e < tree.size(); ++e) total += tree.bit(e);
  return total == used;
}

GadgetClaimResult verify_gadget_claim(const ObjectiveMatrix& edge_profits, int m,
                                      int d, int vertex_limit) {
  if (m > vertex_limit) {
    throw CapacityError("gadget claim verification limited to m <= " +
                        std::to_string(vertex_limit) + " (requested m = " +
                        std::to_string(m) + ")");
  }
  if (edge_profits.objectives() != d ||
      edge_profits.variables() != m * (m - 1) / 2) {
    throw std::invalid_argument("profit matrix shape does not match gadget");
  }
  const ParetoSet ps =
      pareto_bruteforce(edge_profits, FeasibleSet::spanning_trees_complete(m),
                        DominanceOrder::all_maximize(d));
  GadgetClaimResult out;
  out.pareto_count_all_trees = ps.count;
  out.all_pareto_in_gadget_set = true;
  for (const Solution& tree : ps.solutions) {
    if (!is_gadget_tree(tree, m)) {
      out.all_pareto_in_gadget_set = false;
      out.escaped_tree = tree;
      break;
    }
  }
  return out;
}

std::uint64_t gadget_pareto_count(const ObjectiveMatrix& edge_profits, int m,
                                  int d) {
  return pareto_bruteforce(edge_profits, FeasibleSet::gadget_trees(m),
                           DominanceOrder::all_maximize(d))
      .count;
}

KnapsackInstance build_unit_weight_knapsack(int n, int d,
                                            const RandomStream& stream) {
  if (n < 2) throw std::invalid_argument("knapsack needs n >= 2");
  if (d < 1) throw std::invalid_argument("knapsack needs d >= 1");
  const ObjectiveMatrix profits = sample_matrix(
      MatrixDistribution::iid(d, n, DistributionSpec::uniform(0.0, 1.0)), stream);
  return KnapsackInstance{profits, std::vector<double>(std::size_t(n), 1.0),
                          DominanceOrder::knapsack(d)};
}

bool verify_knapsack_embedding(const KnapsackInstance& instance,
                               std::optional<int> k, std::uint64_t budget) {
  const int n = instance.profits.variables();
  const int d = instance.profits.objectives();
  const int card = k.value_or(n / 2);
  if (card < 0 || card > n) throw std::invalid_argument("cardinality out of range");

  // centered profit instance restricted to solutions with exactly `card` ones
  std::vector<double> centered(instance.profits.entries());
  for (double& v : centered) v -= 0.5;
  const ObjectiveMatrix basic(d, n, std::move(centered));
  const FeasibleSet restricted = FeasibleSet::fixed_cardinality(n, card);
  const ParetoSet ps =
      pareto_bruteforce(basic, restricted, DominanceOrder::all_maximize(d), budget);

  // combined (d+1)-objective matrix of the knapsack: profits plus weight row
  std::vector<double> combined(instance.profits.entries());
  combined.insert(combined.end(), instance.weights.begin(), instance.weights.end());
  const ObjectiveMatrix knap(d + 1, n, std::move(combined));
  const FeasibleSet cube = FeasibleSet::full_cube(n);
  for (const Solution& x : ps.solutions) {
    if (!is_pareto_optimal(knap, cube, instance.order, x, budget)) return false;
  }
  return true;
}

bool br_density_within_saturation(int n, int d, double phi) {
  // phi <= (2 phi/(phi-d))^{n/2d}  <=>  n_q_hat <= n/(2d)
  const double log_phi = std::log(phi);
  return log_phi <= (double(n) / (2.0 * d)) * log_base_from_log_phi(log_phi, d);
}

BRParameters br_parameters(int n, int d, double phi) {
  if (d < 2) throw std::invalid_argument("schedule requires d >= 2");
  if (n < 16 * d * d) {
    throw std::invalid_argument("schedule requires n >= 16 d^2 (4 d^2 <= n/4)");
  }
  if (!(phi >= 2.0 * d)) {
    throw std::invalid_argument("schedule requires phi >= 2d");
  }

  BRParameters p;
  p.n = n;
  p.d = d;
  p.phi = phi;
  p.n_p = n / 2;
  p.saturated = !br_density_within_saturation(n, d, phi);

  if (!p.saturated) {
    p.phi_hat = phi;
    p.phi_hat_residual = 0.0;
    p.n_q_hat = std::log(phi) / log_base_from_log_phi(std::log(phi), d);
  } else {
    // solve L = (n/2d) log(2/(1 - d e^{-L})) for L = log(phi_hat) by bisection;
    // g is strictly increasing in L
    const double t = double(n) / (2.0 * d);
    auto g = [&](double L) { return L - t * log_base_from_log_phi(L, d); };
    // g(L) -> -inf as L -> log(d)+ and g grows ~linearly past the root
    double lo = std::log(double(d)) + 1e-9;
    double hi = (t + 2.0) * std::log(2.0) + std::log(double(n));
    while (g(hi) < 0) hi += t;
    for (int it = 0; it < 200 && (hi - lo) > 1e-14 * std::max(1.0, std::abs(hi));
         ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) <= 0 ? lo : hi) = mid;
    }
    const double L = 0.5 * (lo + hi);
    p.phi_hat = std::exp(L);
    // |g(L)| approximates the relative fixed-point residual
    p.phi_hat_residual = std::abs(std::expm1(g(L)));
    p.n_q_hat = t;
  }
  p.n_q = (long long)(std::floor(p.n_q_hat));

  // object budget: n_p + d n_q + (2 d^2/(phi-d)) (2 phi/(phi-d))^{n_q},
  // third term evaluated in log space with the effective density
  const double eff_log_phi = std::log(p.phi_hat);
  const double log_third = std::log(2.0 * d * d) -
                           (eff_log_phi + std::log1p(-double(d) / p.phi_hat)) +
                           double(p.n_q) * log_base_from_log_phi(eff_log_phi, d);
  const double third = std::exp(log_third);
  p.objects_used = (long long)(std::ceil(double(p.n_p) + double(d) * double(p.n_q) + third));

  p.bound_value = br_bound_value(p);
  return p;
}

double br_bound_value(const BRParameters& params) {
  const double log_value =
      (double(params.d) - 1.5) * std::log(double(params.n_p)) +
      double(params.n_q) * (double(params.d) * std::log(2.0) - std::log(double(params.d)));
  return std::exp(log_value);
}

}  // namespace paretolab

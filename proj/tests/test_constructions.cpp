#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "paretolab/constructions.hpp"
#include "paretolab/geometry.hpp"
#include "test_util.hpp"

using namespace paretolab;

namespace {

std::set<std::uint64_t> gadget_pareto_masks(const ObjectiveMatrix& V, int m, int d) {
  const ParetoSet ps = pareto_bruteforce(V, FeasibleSet::gadget_trees(m),
                                         DominanceOrder::all_maximize(d));
  std::set<std::uint64_t> masks;
  for (const auto& s : ps.solutions) masks.insert(testutil::solution_mask(s));
  return masks;
}

}  // namespace

TEST_CASE("tree gadget distribution grid") {
  const TreeGadgetInstance g3 = build_tree_gadget(3, 2);
  CHECK(g3.edge_profits.variables() == 3);
  CHECK(g3.spanning_trees.cardinality() == 3);
  CHECK(FeasibleSet::gadget_trees(3).cardinality() == 2);

  const TreeGadgetInstance g6 = build_tree_gadget(6, 2);
  CHECK(g6.bound_target == doctest::Approx(1.5));
  const int m = 6;
  for (int i = 0; i < 2; ++i) {
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        const DistributionSpec& spec = g6.edge_profits.spec(i, edge_index(a, b, m));
        CHECK(phi_of(spec) <= 4.0);
        if (a == 0 && b == 1) {
          CHECK(spec.lo() == 0.5);
          CHECK(spec.hi() == 1.0);
        } else if (a <= 1) {
          CHECK(spec.lo() == -0.5);
          CHECK(spec.hi() == 0.5);
        } else {
          CHECK(spec.lo() == -1.0);
          CHECK(spec.hi() == -0.5);
        }
      }
    }
  }
  CHECK_THROWS_AS(build_tree_gadget(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_tree_gadget(5, 1), std::invalid_argument);
}

TEST_CASE("gadget tree membership test") {
  const int m = 4;
  for (const auto& s : enumerate_feasible(FeasibleSet::gadget_trees(m))) {
    CHECK(is_gadget_tree(s, m));
  }
  // path s - t - u1 - u2 uses (t,u1) and (u1,u2): not in the family
  std::vector<std::uint8_t> path(std::size_t(6), 0);
  path[std::size_t(edge_index(0, 1, m))] = 1;
  path[std::size_t(edge_index(1, 2, m))] = 1;
  path[std::size_t(edge_index(2, 3, m))] = 1;
  CHECK_FALSE(is_gadget_tree(Solution(path, SolutionDomain::kZeroOne), m));
}

TEST_CASE("sampled gadget instances keep all Pareto trees inside the family") {
  for (const auto& [m, d, samples] :
       std::vector<std::tuple<int, int, int>>{{4, 2, 25}, {5, 3, 10}}) {
    const TreeGadgetInstance gadget = build_tree_gadget(m, d);
    const RandomStream root(500 + std::uint64_t(10 * m + d));
    for (int t = 0; t < samples; ++t) {
      const ObjectiveMatrix V =
          sample_matrix(gadget.edge_profits, root.child(std::uint64_t(t)));
      const GadgetClaimResult res = verify_gadget_claim(V, m, d);
      CHECK(res.all_pareto_in_gadget_set);
      CHECK_FALSE(res.escaped_tree.has_value());
      CHECK(res.pareto_count_all_trees >= 1);
      CHECK(res.pareto_count_all_trees <= (1ull << (m - 2)));
    }
  }
}

TEST_CASE("profits violating the interval structure can escape the family") {
  // all profits zero except a large bonus on the (u1,u2) edge
  const int m = 4, d = 2;
  std::vector<double> entries(std::size_t(d) * 6, 0.0);
  entries[std::size_t(edge_index(2, 3, m))] = 1.0;
  entries[std::size_t(6 + edge_index(2, 3, m))] = 1.0;
  const GadgetClaimResult res =
      verify_gadget_claim(ObjectiveMatrix(d, 6, entries), m, d);
  CHECK_FALSE(res.all_pareto_in_gadget_set);
  REQUIRE(res.escaped_tree.has_value());
  CHECK(res.escaped_tree->bit(std::size_t(edge_index(2, 3, m))));
}

TEST_CASE("gadget claim verification respects the vertex limit") {
  const TreeGadgetInstance gadget = build_tree_gadget(5, 2);
  const ObjectiveMatrix V = sample_matrix(gadget.edge_profits, RandomStream(1));
  CHECK_THROWS_AS(verify_gadget_claim(V, 5, 2, 4), CapacityError);
}

TEST_CASE("counting over gadget trees equals counting over all trees") {
  for (int m : {4, 5}) {
    const int d = 2;
    const TreeGadgetInstance gadget = build_tree_gadget(m, d);
    const RandomStream root(600 + std::uint64_t(m));
    for (int t = 0; t < 10; ++t) {
      const ObjectiveMatrix V =
          sample_matrix(gadget.edge_profits, root.child(std::uint64_t(t)));
      const GadgetClaimResult all = verify_gadget_claim(V, m, d);
      CHECK(gadget_pareto_count(V, m, d) == all.pareto_count_all_trees);
    }
  }
}

TEST_CASE("a single objective leaves one Pareto-optimal gadget tree") {
  const TreeGadgetInstance gadget = build_tree_gadget(5, 2);
  const ObjectiveMatrix both = sample_matrix(gadget.edge_profits, RandomStream(77));
  std::vector<double> first_row(both.entries().begin(),
                                both.entries().begin() + both.variables());
  const ObjectiveMatrix single(1, both.variables(), std::move(first_row));
  CHECK(gadget_pareto_count(single, 5, 1) == 1);
}

TEST_CASE("pareto set over gadget trees depends only on spoke differences") {
  const int m = 5, d = 2;
  const TreeGadgetInstance gadget = build_tree_gadget(m, d);
  const RandomStream root(700);
  for (int t = 0; t < 10; ++t) {
    const ObjectiveMatrix V =
        sample_matrix(gadget.edge_profits, root.child(std::uint64_t(t)));
    const auto base = gadget_pareto_masks(V, m, d);

    // shift both spoke profits of each u_j by a common offset per objective,
    // keeping every difference v(s,u_j) - v(t,u_j) fixed
    std::vector<double> shifted = V.entries();
    const RandomStream offsets = root.child(std::uint64_t(1000 + t));
    for (int i = 0; i < d; ++i) {
      for (int j = 1; j <= m - 2; ++j) {
        const double c =
            offsets.child(std::uint64_t(i)).uniform01(std::uint64_t(j)) - 0.5;
        shifted[std::size_t(i) * V.variables() + edge_index(0, 1 + j, m)] += c;
        shifted[std::size_t(i) * V.variables() + edge_index(1, 1 + j, m)] += c;
      }
    }
    const ObjectiveMatrix W(d, V.variables(), std::move(shifted));
    CHECK(gadget_pareto_masks(W, m, d) == base);
  }
}

TEST_CASE("unit-weight knapsack construction") {
  const KnapsackInstance inst = build_unit_weight_knapsack(6, 2, RandomStream(3));
  CHECK(inst.weights == std::vector<double>(6, 1.0));
  for (double p : inst.profits.entries()) {
    CHECK(p >= 0.0);
    CHECK(p < 1.0);
  }
  CHECK(inst.order.size() == 3);
  CHECK(inst.order.sense(2) == Sense::kMinimize);
  const KnapsackInstance again = build_unit_weight_knapsack(6, 2, RandomStream(3));
  CHECK(inst.profits.entries() == again.profits.entries());
}

TEST_CASE("two-item knapsack keeps both singletons Pareto-optimal") {
  const KnapsackInstance inst = build_unit_weight_knapsack(2, 2, RandomStream(9));
  std::vector<double> combined(inst.profits.entries());
  combined.insert(combined.end(), inst.weights.begin(), inst.weights.end());
  const ObjectiveMatrix knap(3, 2, std::move(combined));
  const FeasibleSet cube = FeasibleSet::full_cube(2);
  CHECK(is_pareto_optimal(knap, cube, inst.order,
                          Solution::from_mask(0b01, 2, SolutionDomain::kZeroOne)));
  CHECK(is_pareto_optimal(knap, cube, inst.order,
                          Solution::from_mask(0b10, 2, SolutionDomain::kZeroOne)));
  CHECK(verify_knapsack_embedding(inst, 1));
}

TEST_CASE("restricted Pareto optima embed into the full knapsack") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const KnapsackInstance inst =
        build_unit_weight_knapsack(10, 2, RandomStream(40 + seed));
    CHECK(verify_knapsack_embedding(inst));
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const KnapsackInstance inst =
        build_unit_weight_knapsack(12, 3, RandomStream(70 + seed));
    CHECK(verify_knapsack_embedding(inst));
  }
}

TEST_CASE("parameter schedule on the worked example") {
  const BRParameters p = br_parameters(100, 2, 16.0);
  CHECK(p.n_p == 50);
  CHECK(p.n_q_hat == doctest::Approx(std::log(16.0) / std::log(32.0 / 14.0)));
  CHECK(p.n_q == 3);
  CHECK_FALSE(p.saturated);
  CHECK(p.bound_value == doctest::Approx(std::sqrt(50.0) * 8.0).epsilon(1e-9));
  CHECK(p.objects_used <= 100);
}

TEST_CASE("schedule at the minimum density has a unit step count") {
  const BRParameters p = br_parameters(64, 2, 4.0);  // phi = 2d
  CHECK(p.n_q_hat == doctest::Approx(1.0));
  CHECK(p.n_q == 1);
}

TEST_CASE("schedule preconditions are named") {
  CHECK_THROWS_WITH_AS(br_parameters(100, 1, 10.0),
                       doctest::Contains("d >= 2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(br_parameters(30, 2, 10.0),
                       doctest::Contains("16 d^2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(br_parameters(100, 2, 3.0),
                       doctest::Contains("2d"), std::invalid_argument);
}

TEST_CASE("object budget holds across the schedule grid") {
  for (int d : {2, 3, 4}) {
    for (double phi : {double(2 * d), 10.0, 100.0, 1000.0}) {
      for (int n : {16 * d * d, 1000, 10000}) {
        CHECK(br_density_within_saturation(n, d, phi));
        const BRParameters p = br_parameters(n, d, phi);
        CHECK_FALSE(p.saturated);
        CHECK(p.objects_used <= n);
      }
    }
  }
}

TEST_CASE("saturated schedules solve the fixed point accurately") {
  const BRParameters p = br_parameters(80, 2, 3.0e6);
  CHECK(p.saturated);
  CHECK(p.n_q_hat == doctest::Approx(20.0));
  CHECK(p.n_q == 20);
  CHECK(p.phi_hat_residual < 1e-9);
  // magnitude check: the fixed point sits near 2^{n/2d} = 2^20
  CHECK(p.phi_hat > 0.5 * std::pow(2.0, 20.0));
  CHECK(p.phi_hat < 2.0 * std::pow(2.0, 20.0));
  CHECK(p.objects_used <= 80);

  const BRParameters q = br_parameters(120, 3, 1.0e7);
  CHECK(q.saturated);
  CHECK(q.phi_hat_residual < 1e-9);
  CHECK(q.objects_used <= 120);
}

TEST_CASE("bound product is monotone in the step count") {
  BRParameters p = br_parameters(1000, 3, 100.0);
  double prev = 0.0;
  for (long long nq = 0; nq <= 12; ++nq) {
    p.n_q = nq;
    const double v = br_bound_value(p);
    if (nq == 0) {
      CHECK(v == doctest::Approx(std::pow(double(p.n_p), 1.5)));
    } else {
      CHECK(v >= prev);
    }
    prev = v;
  }
}

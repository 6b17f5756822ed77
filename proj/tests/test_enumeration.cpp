#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "paretolab/enumeration.hpp"
#include "paretolab/sampling.hpp"
#include "test_util.hpp"

using namespace paretolab;

namespace {

std::vector<double> sorted_flat_values(const std::vector<ObjectiveVector>& values) {
  std::vector<std::vector<double>> copy = values;
  std::sort(copy.begin(), copy.end());
  std::vector<double> flat;
  for (const auto& v : copy) flat.insert(flat.end(), v.begin(), v.end());
  return flat;
}

}  // namespace

TEST_CASE("full cube enumerates 2^n solutions in mask order") {
  const auto sols = enumerate_feasible(FeasibleSet::full_cube(2));
  REQUIRE(sols.size() == 4);
  CHECK(testutil::solution_mask(sols[0]) == 0);
  CHECK(testutil::solution_mask(sols[1]) == 1);
  CHECK(testutil::solution_mask(sols[2]) == 2);
  CHECK(testutil::solution_mask(sols[3]) == 3);
}

TEST_CASE("sign cube solutions live in the plus-minus domain") {
  const auto sols = enumerate_feasible(FeasibleSet::sign_cube(2));
  REQUIRE(sols.size() == 4);
  for (const auto& s : sols) {
    CHECK(s.domain() == SolutionDomain::kPlusMinusOne);
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(std::abs(s.coordinate(j)) == 1.0);
    }
  }
}

TEST_CASE("fixed cardinality enumerates the binomial-many solutions") {
  const auto sols = enumerate_feasible(FeasibleSet::fixed_cardinality(4, 2));
  CHECK(sols.size() == 6);
  for (const auto& s : sols) {
    int ones = 0;
    for (std::size_t j = 0; j < 4; ++j) ones += s.bit(j);
    CHECK(ones == 2);
  }
  CHECK(FeasibleSet::fixed_cardinality(4, 0).cardinality() == 1);
  CHECK(FeasibleSet::fixed_cardinality(4, 4).cardinality() == 1);
}

TEST_CASE("spanning trees of K_4 are the 16 distinct Cayley trees") {
  const auto sols = enumerate_feasible(FeasibleSet::spanning_trees_complete(4));
  CHECK(sols.size() == 16);
  std::set<std::uint64_t> distinct;
  for (const auto& s : sols) {
    distinct.insert(testutil::solution_mask(s));
    CHECK(testutil::is_spanning_tree(s, 4));
  }
  CHECK(distinct.size() == 16);
}

TEST_CASE("gadget trees are spanning trees with the prescribed shape") {
  for (int m : {3, 5, 8}) {
    const auto sols = enumerate_feasible(FeasibleSet::gadget_trees(m));
    CHECK(sols.size() == (1ull << (m - 2)));
    for (const auto& s : sols) {
      CHECK(testutil::is_spanning_tree(s, m));
      CHECK(s.bit(std::size_t(edge_index(0, 1, m))));
    }
  }
}

TEST_CASE("enumeration is deterministic across runs") {
  for (const FeasibleSet& fs :
       {FeasibleSet::spanning_trees_complete(5), FeasibleSet::fixed_cardinality(6, 3)}) {
    const auto a = enumerate_feasible(fs);
    const auto b = enumerate_feasible(fs);
    CHECK(a == b);
  }
}

TEST_CASE("budget violations raise a capacity error naming the cardinality") {
  try {
    enumerate_feasible(FeasibleSet::full_cube(30));
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("1073741824") != std::string::npos);
  }
  CHECK_THROWS_AS(enumerate_feasible(FeasibleSet::spanning_trees_complete(5), 100),
                  CapacityError);
}

TEST_CASE("feasible-set grammar parses and validates") {
  CHECK(FeasibleSet::parse("cube:5").kind() == FeasibleSet::Kind::kFullCube);
  CHECK(FeasibleSet::parse("signcube:3").domain() == SolutionDomain::kPlusMinusOne);
  const FeasibleSet fc = FeasibleSet::parse("fixedcard:10:5");
  CHECK(fc.param_n() == 10);
  CHECK(fc.param_k() == 5);
  CHECK(FeasibleSet::parse("trees:4").cardinality() == 16);
  CHECK(FeasibleSet::parse("gadgettrees:6").cardinality() == 16);
  CHECK_THROWS_AS(FeasibleSet::parse("orchard:3"), std::invalid_argument);
  CHECK_THROWS_AS(FeasibleSet::parse("cube"), std::invalid_argument);
}

TEST_CASE("brute force matches the worked instances") {
  const DominanceOrder max2 = DominanceOrder::all_maximize(2);
  const ObjectiveMatrix V = ObjectiveMatrix::from_rows({{1, 0}, {0, 1}});
  const ParetoSet ps = pareto_bruteforce(V, FeasibleSet::full_cube(2), max2);
  CHECK(ps.count == 3);
  std::set<std::uint64_t> masks;
  for (const auto& s : ps.solutions) masks.insert(testutil::solution_mask(s));
  CHECK(masks == std::set<std::uint64_t>{1, 2, 3});

  const ObjectiveMatrix W = ObjectiveMatrix::from_rows({{1, 1}});
  const ParetoSet single =
      pareto_bruteforce(W, FeasibleSet::full_cube(2), DominanceOrder::all_maximize(1));
  CHECK(single.count == 1);
  CHECK(single.values[0] == ObjectiveVector{2});

  const Solution only = Solution::from_mask(0b1, 1, SolutionDomain::kZeroOne);
  const ParetoSet explicit_one = pareto_bruteforce(
      ObjectiveMatrix::from_rows({{3}}), FeasibleSet::explicit_list({only}),
      DominanceOrder::all_maximize(1));
  CHECK(explicit_one.count == 1);
}

TEST_CASE("divide-and-conquer maxima equals the quadratic filter") {
  const RandomStream root(31);
  SUBCASE("small inputs and ties") {
    const DominanceOrder max2 = DominanceOrder::all_maximize(2);
    CHECK(pareto_maxima_dc({{1, 2}}, max2) == std::vector<std::size_t>{0});
    CHECK(pareto_maxima_dc({{1, 2}, {1, 2}, {1, 2}, {1, 2}}, max2) ==
          std::vector<std::size_t>{0, 1, 2, 3});
  }
  SUBCASE("random clouds in d = 2 and d = 3") {
    for (int d : {1, 2, 3}) {
      const DominanceOrder order = DominanceOrder::all_maximize(d);
      for (std::uint64_t it = 0; it < 10; ++it) {
        const auto pts =
            testutil::random_points(1000, d, root.child(100 * std::uint64_t(d) + it));
        std::vector<ObjectiveVector> cloud(pts.begin(), pts.end());
        CHECK(pareto_maxima_dc(cloud, order) == pareto_filter(cloud, order));
      }
    }
  }
  SUBCASE("large d = 2 cloud") {
    const auto pts = testutil::random_points(10000, 2, root.child(999));
    std::vector<ObjectiveVector> cloud(pts.begin(), pts.end());
    CHECK(pareto_maxima_dc(cloud, DominanceOrder::all_maximize(2)) ==
          pareto_filter(cloud, DominanceOrder::all_maximize(2)));
  }
  SUBCASE("duplicated coordinates force the tie paths") {
    const RandomStream s = root.child(777);
    std::vector<ObjectiveVector> cloud;
    for (std::uint64_t i = 0; i < 400; ++i) {
      // lattice coordinates create many exact ties in every dimension
      cloud.push_back({double(s.bits(3 * i) % 5), double(s.bits(3 * i + 1) % 5),
                       double(s.bits(3 * i + 2) % 5)});
    }
    const DominanceOrder order = DominanceOrder::all_maximize(3);
    CHECK(pareto_maxima_dc(cloud, order) == pareto_filter(cloud, order));
  }
}

TEST_CASE("incremental cube matches brute force on the full cube") {
  const DominanceOrder max1 = DominanceOrder::all_maximize(1);
  const ObjectiveMatrix tiny = ObjectiveMatrix::from_rows({{1}});
  const ParetoSet ps = pareto_incremental_cube(tiny, max1);
  CHECK(ps.count == 1);
  CHECK(ps.values[0] == ObjectiveVector{1});

  const RandomStream root(17);
  for (std::uint64_t it = 0; it < 20; ++it) {
    const ObjectiveMatrix V = testutil::random_matrix(2, 10, root.child(it));
    const DominanceOrder order = DominanceOrder::all_maximize(2);
    const ParetoSet fast = pareto_incremental_cube(V, order);
    const ParetoSet slow = pareto_bruteforce(V, FeasibleSet::full_cube(10), order);
    CHECK(fast.count == slow.count);
    CHECK(sorted_flat_values(fast.values) == sorted_flat_values(slow.values));
  }
}

TEST_CASE("opposite-sign rows keep both cube extremes Pareto-optimal") {
  const ObjectiveMatrix V =
      ObjectiveMatrix::from_rows({{-1, -2, -0.5}, {2, 1, 0.25}});
  const ParetoSet ps = pareto_incremental_cube(V, DominanceOrder::all_maximize(2));
  std::set<std::uint64_t> masks;
  for (const auto& s : ps.solutions) masks.insert(testutil::solution_mask(s));
  CHECK(masks.count(0));       // all zeros maximizes the negative row
  CHECK(masks.count(0b111));   // all ones maximizes the positive row
}

TEST_CASE("exact value ties are counted as solutions, not values") {
  // every solution value is non-dominated here and 01/10 collide exactly
  const ObjectiveMatrix V = ObjectiveMatrix::from_rows({{1, 1}, {-1, -1}});
  const DominanceOrder order = DominanceOrder::all_maximize(2);
  const ParetoSet fast = pareto_incremental_cube(V, order);
  CHECK(fast.count == 4);
  CHECK(fast.solutions.size() == 3);  // one representative for the tied value
  CHECK(pareto_bruteforce(V, FeasibleSet::full_cube(2), order).count == 4);
  CHECK(count_pareto(V, FeasibleSet::full_cube(2), order) == 4);
}

TEST_CASE("count_pareto agrees across all three enumerators") {
  const RandomStream root(53);
  for (std::uint64_t it = 0; it < 30; ++it) {
    const int n = 4 + int(root.child(it).bits(0) % 5);  // 4..8
    const int d = 1 + int(root.child(it).bits(1) % 3);  // 1..3
    const ObjectiveMatrix V = testutil::random_matrix(d, n, root.child(it).child(9));
    const DominanceOrder order = DominanceOrder::all_maximize(d);
    const FeasibleSet cube = FeasibleSet::full_cube(n);

    const std::uint64_t fast = pareto_incremental_cube(V, order).count;
    const ParetoSet slow = pareto_bruteforce(V, cube, order);
    std::vector<ObjectiveVector> values;
    for_each_solution(cube, [&](const Solution& s) { values.push_back(evaluate(V, s)); });
    const std::uint64_t via_dc = pareto_maxima_dc(values, order).size();

    CHECK(fast == slow.count);
    CHECK(via_dc == slow.count);
    CHECK(count_pareto(V, cube, order) == slow.count);
  }
  CHECK(count_pareto(ObjectiveMatrix::from_rows({{1}}), FeasibleSet::full_cube(1),
                     DominanceOrder::all_maximize(1)) == 1);
}

TEST_CASE("pareto frontier budget raises a capacity error with a partial count") {
  const RandomStream root(61);
  const ObjectiveMatrix V = testutil::random_matrix(2, 12, root.child(0));
  try {
    pareto_incremental_cube(V, DominanceOrder::all_maximize(2), 2);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("partial count") != std::string::npos);
  }
}

TEST_CASE("solutions Pareto-optimal in the cube stay optimal in subsets") {
  const RandomStream root(71);
  for (std::uint64_t it = 0; it < 15; ++it) {
    const int n = 6;
    const int k = 3;
    const ObjectiveMatrix V = testutil::random_matrix(2, n, root.child(it));
    const DominanceOrder order = DominanceOrder::all_maximize(2);
    const ParetoSet cube_set =
        pareto_bruteforce(V, FeasibleSet::full_cube(n), order);
    const FeasibleSet slice = FeasibleSet::fixed_cardinality(n, k);
    for (const Solution& s : cube_set.solutions) {
      int ones = 0;
      for (std::size_t j = 0; j < s.size(); ++j) ones += s.bit(j);
      if (ones != k) continue;
      CHECK(is_pareto_optimal(V, slice, order, s));
    }
  }
}

TEST_CASE("column-flip bijection relates r to the all-ones solution") {
  const RandomStream root(83);
  const FeasibleSet cube6 = FeasibleSet::full_cube(6);
  const Solution ones = Solution::from_mask((1ull << 6) - 1, 6, SolutionDomain::kZeroOne);
  for (std::uint64_t it = 0; it < 40; ++it) {
    const ObjectiveMatrix V = testutil::random_matrix(2, 6, root.child(it));
    const Solution r = testutil::random_mask(6, root.child(1000 + it));
    const DominanceOrder order = DominanceOrder::all_maximize(2);
    const bool direct = is_pareto_optimal(V, cube6, order, r);
    const bool flipped = is_pareto_optimal(flip_columns_by(V, r), cube6, order, ones);
    CHECK(direct == flipped);
  }
}

TEST_CASE("pareto count equals the number of flips fixing the all-ones solution") {
  const RandomStream root(97);
  const int n = 7;
  const FeasibleSet cube = FeasibleSet::full_cube(n);
  const Solution ones = Solution::from_mask((1ull << n) - 1, n, SolutionDomain::kZeroOne);
  for (std::uint64_t it = 0; it < 5; ++it) {
    const ObjectiveMatrix V = testutil::random_matrix(2, n, root.child(it));
    const DominanceOrder order = DominanceOrder::all_maximize(2);
    std::uint64_t flips_fixing = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      const Solution r = Solution::from_mask(mask, n, SolutionDomain::kZeroOne);
      if (is_pareto_optimal(flip_columns_by(V, r), cube, order, ones)) ++flips_fixing;
    }
    CHECK(flips_fixing == count_pareto(V, cube, order));
  }
}

// Shared helpers for the unit and acceptance suites: seeded generators backed
// by the library's own streams, empirical-distribution distances, and a
// union-find spanning-tree check used as an independent oracle.

#ifndef PARETOLAB_TEST_UTIL_HPP
#define PARETOLAB_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "paretolab/core.hpp"
#include "paretolab/enumeration.hpp"
#include "paretolab/sampling.hpp"

namespace paretolab::testutil {

inline ObjectiveMatrix random_matrix(int d, int n, const RandomStream& stream,
                                     const DistributionSpec& spec =
                                         DistributionSpec::symmetric_uniform(1.0)) {
  return sample_matrix(MatrixDistribution::iid(d, n, spec), stream);
}

inline std::vector<std::vector<double>> random_points(
    std::size_t m, int d, const RandomStream& stream,
    const DistributionSpec& spec = DistributionSpec::gaussian(1.0)) {
  std::vector<std::vector<double>> pts;
  pts.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> p(static_cast<std::size_t>(d));
    const RandomStream row = stream.child(i);
    for (int c = 0; c < d; ++c) {
      p[std::size_t(c)] = sample_entry(spec, row.child(std::uint64_t(c)));
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

inline Solution random_mask(int n, const RandomStream& stream,
                            SolutionDomain domain = SolutionDomain::kZeroOne) {
  return Solution::from_mask(stream.bits(0) & ((n == 64) ? ~0ull : ((1ull << n) - 1)),
                             n, domain);
}

/// Kolmogorov-Smirnov distance between the empirical CDFs of two samples.
inline double ks_distance(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double sup = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    sup = std::max(sup, std::abs(double(i) / double(a.size()) -
                                 double(j) / double(b.size())));
  }
  return sup;
}

/// Independent spanning-tree oracle: exactly m-1 edges forming one component.
inline bool is_spanning_tree(const Solution& incidence, int m) {
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[std::size_t(v)] != v) {
      parent[std::size_t(v)] = parent[std::size_t(parent[std::size_t(v)])];
      v = parent[std::size_t(v)];
    }
    return v;
  };
  int edges = 0;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (!incidence.bit(std::size_t(edge_index(a, b, m)))) continue;
      ++edges;
      const int ra = find(a), rb = find(b);
      if (ra == rb) return false;  // cycle
      parent[std::size_t(ra)] = rb;
    }
  }
  if (edges != m - 1) return false;
  const int root = find(0);
  for (int v = 1; v < m; ++v) {
    if (find(v) != root) return false;
  }
  return true;
}

inline std::uint64_t solution_mask(const Solution& s) {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s.bit(j)) mask |= 1ull << j;
  }
  return mask;
}

}  // namespace paretolab::testutil

#endif  // PARETOLAB_TEST_UTIL_HPP

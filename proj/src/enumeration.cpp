#include "paretolab/enumeration.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string>

namespace paretolab {

namespace {

std::string cap_message(const BigInt& cardinality, std::uint64_t budget,
                        const char* what) {
  return std::string(what) + " cardinality " + cardinality.str() +
         " exceeds enumeration budget " + std::to_string(budget);
}

int parse_int_field(const std::string& text, std::size_t from, std::size_t to) {
  return std::stoi(text.substr(from, to - from));
}

// ---- flat-point maxima (shared by pareto_maxima_dc and the incremental cube)

// a dominates b on coordinates [dim, d)?
bool dominates_from(const double* a, const double* b, std::size_t d,
                    std::size_t dim) {
  bool strict = false;
  for (std::size_t c = dim; c < d; ++c) {
    if (a[c] < b[c]) return false;
    if (a[c] > b[c]) strict = true;
  }
  return strict;
}

// Maximal elements of `items` under dominance restricted to coords [dim, d).
// Precondition: coordinates [0, dim) are equal across all items.
std::vector<std::uint32_t> maxima_rec(const double* pts, std::size_t d,
                                      std::vector<std::uint32_t> items,
                                      std::size_t dim) {
  const std::size_t m = items.size();
  if (m <= 3) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < m; ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < m && !dominated; ++j) {
        if (j != i && dominates_from(pts + std::size_t(items[j]) * d,
                                     pts + std::size_t(items[i]) * d, d, dim)) {
          dominated = true;
        }
      }
      if (!dominated) out.push_back(items[i]);
    }
    return out;
  }
  if (dim == d - 1) {
    double best = pts[std::size_t(items[0]) * d + dim];
    for (std::uint32_t i : items) best = std::max(best, pts[std::size_t(i) * d + dim]);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i : items) {
      if (pts[std::size_t(i) * d + dim] == best) out.push_back(i);
    }
    return out;
  }

  auto key = [&](std::uint32_t i) { return pts[std::size_t(i) * d + dim]; };
  std::sort(items.begin(), items.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (key(a) != key(b)) return key(a) > key(b);
    return a < b;
  });
  const double pivot = key(items[m / 2]);
  // High side takes every tie of the pivot so the low side is strictly worse
  // in this coordinate; then no low point can dominate a high point.
  auto split = std::partition_point(
      items.begin(), items.end(), [&](std::uint32_t i) { return key(i) >= pivot; });
  if (split == items.end()) {
    if (key(items.front()) == key(items.back())) {
      // all equal in this coordinate
      return maxima_rec(pts, d, std::move(items), dim + 1);
    }
    // pivot is the minimum value; split off its tie group instead
    split = std::partition_point(items.begin(), items.end(),
                                 [&](std::uint32_t i) { return key(i) > pivot; });
  }
  std::vector<std::uint32_t> high(items.begin(), split);
  std::vector<std::uint32_t> low(split, items.end());
  std::vector<std::uint32_t> mh = maxima_rec(pts, d, std::move(high), dim);
  std::vector<std::uint32_t> ml = maxima_rec(pts, d, std::move(low), dim);
  std::vector<std::uint32_t> out = mh;
  for (std::uint32_t r : ml) {
    bool dominated = false;
    for (std::uint32_t h : mh) {
      if (dominates_from(pts + std::size_t(h) * d, pts + std::size_t(r) * d, d,
                         dim)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(r);
  }
  return out;
}

// Flattens points and flips minimized coordinates so maxima_rec sees all-max.
std::vector<double> flatten_oriented(const std::vector<ObjectiveVector>& points,
                                     const DominanceOrder& order) {
  const std::size_t d = order.size();
  std::vector<double> flat(points.size() * d);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d) {
      throw std::invalid_argument("point length does not match order");
    }
    for (std::size_t c = 0; c < d; ++c) {
      flat[i * d + c] =
          order.sense(c) == Sense::kMaximize ? points[i][c] : -points[i][c];
    }
  }
  return flat;
}

// ---- Pruefer decoding

void decode_pruefer(const std::vector<int>& seq, int m,
                    std::vector<std::pair<int, int>>& edges,
                    std::vector<int>& degree) {
  degree.assign(std::size_t(m), 1);
  for (int x : seq) degree[std::size_t(x)]++;
  edges.clear();
  int ptr = 0;
  while (degree[std::size_t(ptr)] != 1) ++ptr;
  int leaf = ptr;
  for (int x : seq) {
    edges.emplace_back(leaf, x);
    if (--degree[std::size_t(x)] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[std::size_t(ptr)] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, m - 1);
}

}  // namespace

int edge_index(int a, int b, int m) {
  if (a == b || a < 0 || b < 0 || a >= m || b >= m) {
    throw std::invalid_argument("bad edge endpoints");
  }
  if (a > b) std::swap(a, b);
  return a * (m - 1) - a * (a - 1) / 2 + (b - a - 1);
}

FeasibleSet FeasibleSet::full_cube(int n) {
  if (n < 1) throw std::invalid_argument("full cube needs n >= 1");
  FeasibleSet fs;
  fs.kind_ = Kind::kFullCube;
  fs.n_ = n;
  return fs;
}

FeasibleSet FeasibleSet::sign_cube(int n) {
  if (n < 1) throw std::invalid_argument("sign cube needs n >= 1");
  FeasibleSet fs;
  fs.kind_ = Kind::kSignCube;
  fs.n_ = n;
  return fs;
}

FeasibleSet FeasibleSet::fixed_cardinality(int n, int k) {
  if (n < 1 || k < 0 || k > n) {
    throw std::invalid_argument("fixed cardinality needs 0 <= k <= n, n >= 1");
  }
  FeasibleSet fs;
  fs.kind_ = Kind::kFixedCardinality;
  fs.n_ = n;
  fs.k_ = k;
  return fs;
}

FeasibleSet FeasibleSet::spanning_trees_complete(int m) {
  if (m < 2) throw std::invalid_argument("spanning trees need m >= 2");
  FeasibleSet fs;
  fs.kind_ = Kind::kSpanningTreesComplete;
  fs.m_ = m;
  return fs;
}

FeasibleSet FeasibleSet::gadget_trees(int m) {
  if (m < 3) throw std::invalid_argument("gadget trees need m >= 3");
  FeasibleSet fs;
  fs.kind_ = Kind::kGadgetTrees;
  fs.m_ = m;
  return fs;
}

FeasibleSet FeasibleSet::explicit_list(std::vector<Solution> items) {
  if (items.empty()) throw std::invalid_argument("explicit list must be nonempty");
  const std::size_t len = items.front().size();
  const SolutionDomain dom = items.front().domain();
  for (const auto& s : items) {
    if (s.size() != len || s.domain() != dom) {
      throw std::invalid_argument("explicit list items must share length and domain");
    }
  }
  FeasibleSet fs;
  fs.kind_ = Kind::kExplicitList;
  fs.n_ = int(len);
  fs.items_ = std::move(items);
  return fs;
}

FeasibleSet FeasibleSet::parse(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    throw std::invalid_argument("feasible set needs kind:params");
  }
  const std::string kind = text.substr(0, c1);
  if (kind == "cube") return full_cube(parse_int_field(text, c1 + 1, text.size()));
  if (kind == "signcube") return sign_cube(parse_int_field(text, c1 + 1, text.size()));
  if (kind == "fixedcard") {
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) {
      throw std::invalid_argument("fixedcard needs fixedcard:<n>:<k>");
    }
    return fixed_cardinality(parse_int_field(text, c1 + 1, c2),
                             parse_int_field(text, c2 + 1, text.size()));
  }
  if (kind == "trees") {
    return spanning_trees_complete(parse_int_field(text, c1 + 1, text.size()));
  }
  if (kind == "gadgettrees") {
    return gadget_trees(parse_int_field(text, c1 + 1, text.size()));
  }
  throw std::invalid_argument("unknown feasible set kind '" + kind + "'");
}

int FeasibleSet::vector_length() const {
  switch (kind_) {
    case Kind::kFullCube:
    case Kind::kSignCube:
    case Kind::kFixedCardinality:
    case Kind::kExplicitList:
      return n_;
    case Kind::kSpanningTreesComplete:
    case Kind::kGadgetTrees:
      return m_ * (m_ - 1) / 2;
  }
  return 0;
}

SolutionDomain FeasibleSet::domain() const {
  if (kind_ == Kind::kSignCube) return SolutionDomain::kPlusMinusOne;
  if (kind_ == Kind::kExplicitList) return items_.front().domain();
  return SolutionDomain::kZeroOne;
}

BigInt FeasibleSet::cardinality() const {
  switch (kind_) {
    case Kind::kFullCube:
    case Kind::kSignCube:
      return pow2(n_);
    case Kind::kFixedCardinality:
      return binomial(n_, k_);
    case Kind::kSpanningTreesComplete: {
      if (m_ == 2) return 1;
      BigInt r = 1;
      for (int i = 0; i < m_ - 2; ++i) r *= m_;
      return r;
    }
    case Kind::kGadgetTrees:
      return pow2(m_ - 2);
    case Kind::kExplicitList:
      return BigInt(items_.size());
  }
  return 0;
}

void for_each_solution(const FeasibleSet& fs,
                       const std::function<void(const Solution&)>& visit,
                       std::uint64_t budget) {
  const BigInt card = fs.cardinality();
  if (card > BigInt(budget)) {
    throw CapacityError(cap_message(card, budget, "feasible set"));
  }
  switch (fs.kind()) {
    case FeasibleSet::Kind::kFullCube:
    case FeasibleSet::Kind::kSignCube: {
      const int n = fs.param_n();
      const SolutionDomain dom = fs.domain();
      const std::uint64_t total = 1ull << n;
      std::vector<std::uint8_t> bits(std::size_t(n), 0);
      Solution sol(bits, dom);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        sol = Solution::from_mask(mask, n, dom);
        visit(sol);
      }
      return;
    }
    case FeasibleSet::Kind::kFixedCardinality: {
      const int n = fs.param_n();
      const int k = fs.param_k();
      std::vector<int> pos(static_cast<std::size_t>(k));
      std::iota(pos.begin(), pos.end(), 0);
      std::vector<std::uint8_t> bits(std::size_t(n), 0);
      while (true) {
        std::fill(bits.begin(), bits.end(), 0);
        for (int p : pos) bits[std::size_t(p)] = 1;
        visit(Solution(bits, SolutionDomain::kZeroOne));
        // advance to the next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && pos[std::size_t(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pos[std::size_t(i)];
        for (int j = i + 1; j < k; ++j) pos[std::size_t(j)] = pos[std::size_t(j - 1)] + 1;
      }
      return;
    }
    case FeasibleSet::Kind::kSpanningTreesComplete: {
      const int m = fs.param_m();
      const int len = fs.vector_length();
      std::vector<int> seq(std::size_t(std::max(0, m - 2)), 0);
      std::vector<std::pair<int, int>> edges;
      std::vector<int> degree;
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(len));
      while (true) {
        decode_pruefer(seq, m, edges, degree);
        std::fill(bits.begin(), bits.end(), 0);
        for (auto [a, b] : edges) bits[std::size_t(edge_index(a, b, m))] = 1;
        visit(Solution(bits, SolutionDomain::kZeroOne));
        // next Pruefer sequence, odometer order
        int i = int(seq.size()) - 1;
        while (i >= 0 && seq[std::size_t(i)] == m - 1) {
          seq[std::size_t(i)] = 0;
          --i;
        }
        if (i < 0) break;
        ++seq[std::size_t(i)];
      }
      return;
    }
    case FeasibleSet::Kind::kGadgetTrees: {
      const int m = fs.param_m();
      const int len = fs.vector_length();
      const std::uint64_t total = 1ull << (m - 2);
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(len));
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(bits.begin(), bits.end(), 0);
        bits[std::size_t(edge_index(0, 1, m))] = 1;  // edge (s,t)
        for (int j = 1; j <= m - 2; ++j) {
          const int u = 1 + j;
          const int attach = ((mask >> (j - 1)) & 1u) ? 0 : 1;  // s or t
          bits[std::size_t(edge_index(attach, u, m))] = 1;
        }
        visit(Solution(bits, SolutionDomain::kZeroOne));
      }
      return;
    }
    case FeasibleSet::Kind::kExplicitList: {
      for (const Solution& s : fs.explicit_items()) visit(s);
      return;
    }
  }
}

std::vector<Solution> enumerate_feasible(const FeasibleSet& fs,
                                         std::uint64_t budget) {
  std::vector<Solution> out;
  for_each_solution(fs, [&](const Solution& s) { out.push_back(s); }, budget);
  return out;
}

ParetoSet pareto_bruteforce(const ObjectiveMatrix& V, const FeasibleSet& fs,
                            const DominanceOrder& order, std::uint64_t budget) {
  if (fs.vector_length() != V.variables()) {
    throw std::invalid_argument("feasible set length does not match matrix");
  }
  std::vector<Solution> solutions;
  std::vector<ObjectiveVector> values;
  for_each_solution(
      fs,
      [&](const Solution& s) {
        solutions.push_back(s);
        values.push_back(evaluate(V, s));
      },
      budget);
  const std::vector<std::size_t> keep = pareto_filter(values, order);
  ParetoSet ps;
  ps.count = keep.size();
  ps.solutions.reserve(keep.size());
  ps.values.reserve(keep.size());
  for (std::size_t i : keep) {
    ps.solutions.push_back(std::move(solutions[i]));
    ps.values.push_back(std::move(values[i]));
  }
  return ps;
}

std::vector<std::size_t> pareto_maxima_dc(const std::vector<ObjectiveVector>& points,
                                          const DominanceOrder& order) {
  if (points.empty()) throw std::invalid_argument("pareto_maxima_dc: empty input");
  const std::vector<double> flat = flatten_oriented(points, order);
  std::vector<std::uint32_t> items(points.size());
  std::iota(items.begin(), items.end(), 0u);
  std::vector<std::uint32_t> kept =
      maxima_rec(flat.data(), order.size(), std::move(items), 0);
  std::vector<std::size_t> out(kept.begin(), kept.end());
  std::sort(out.begin(), out.end());
  return out;
}

ParetoSet pareto_incremental_cube(const ObjectiveMatrix& V,
                                  const DominanceOrder& order,
                                  std::uint64_t pareto_budget) {
  const int n = V.variables();
  const int d = V.objectives();
  if (order.size() != std::size_t(d)) {
    throw std::invalid_argument("order length does not match matrix");
  }
  if (n > 64) {
    throw CapacityError("full cube with n > 64 variables is not representable");
  }

  // One frontier entry per distinct value vector (oriented so that larger is
  // better in every coordinate); mult counts solutions sharing the value.
  struct Entry {
    std::uint64_t mask;
    std::uint64_t mult;
  };
  std::vector<double> vals;   // frontier values, flat d per entry
  std::vector<Entry> entries;
  vals.assign(std::size_t(d), 0.0);
  entries.push_back({0, 1});

  std::vector<double> oriented_col(static_cast<std::size_t>(d));
  std::vector<double> cand_vals;
  std::vector<Entry> cand_entries;
  for (int j = 0; j < n; ++j) {
    for (int c = 0; c < d; ++c) {
      const double v = V.entry(c, j);
      oriented_col[std::size_t(c)] = order.sense(std::size_t(c)) == Sense::kMaximize ? v : -v;
    }
    const std::size_t m = entries.size();
    cand_vals.resize(2 * m * std::size_t(d));
    cand_entries.resize(2 * m);
    std::memcpy(cand_vals.data(), vals.data(), m * d * sizeof(double));
    std::copy(entries.begin(), entries.end(), cand_entries.begin());
    for (std::size_t i = 0; i < m; ++i) {
      for (int c = 0; c < d; ++c) {
        cand_vals[(m + i) * d + c] = vals[i * d + c] + oriented_col[std::size_t(c)];
      }
      cand_entries[m + i] = {entries[i].mask | (1ull << j), entries[i].mult};
    }

    // merge exact value ties before filtering
    std::vector<std::uint32_t> idx(cand_entries.size());
    std::iota(idx.begin(), idx.end(), 0u);
    auto value_less = [&](std::uint32_t a, std::uint32_t b) {
      const double* pa = cand_vals.data() + std::size_t(a) * d;
      const double* pb = cand_vals.data() + std::size_t(b) * d;
      for (int c = 0; c < d; ++c) {
        if (pa[c] != pb[c]) return pa[c] < pb[c];
      }
      return cand_entries[a].mask < cand_entries[b].mask;
    };
    auto value_eq = [&](std::uint32_t a, std::uint32_t b) {
      const double* pa = cand_vals.data() + std::size_t(a) * d;
      const double* pb = cand_vals.data() + std::size_t(b) * d;
      for (int c = 0; c < d; ++c) {
        if (pa[c] != pb[c]) return false;
      }
      return true;
    };
    std::sort(idx.begin(), idx.end(), value_less);
    std::vector<double> merged_vals;
    std::vector<Entry> merged_entries;
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t r = i + 1;
      Entry e = cand_entries[idx[i]];
      while (r < idx.size() && value_eq(idx[i], idx[r])) {
        e.mult += cand_entries[idx[r]].mult;
        ++r;
      }
      const double* pv = cand_vals.data() + std::size_t(idx[i]) * d;
      merged_vals.insert(merged_vals.end(), pv, pv + d);
      merged_entries.push_back(e);
      i = r;
    }

    std::vector<std::uint32_t> items(merged_entries.size());
    std::iota(items.begin(), items.end(), 0u);
    std::vector<std::uint32_t> kept =
        maxima_rec(merged_vals.data(), std::size_t(d), std::move(items), 0);
    std::sort(kept.begin(), kept.end(), [&](std::uint32_t a, std::uint32_t b) {
      return merged_entries[a].mask < merged_entries[b].mask;
    });
    vals.clear();
    entries.clear();
    for (std::uint32_t i : kept) {
      const double* pv = merged_vals.data() + std::size_t(i) * d;
      vals.insert(vals.end(), pv, pv + d);
      entries.push_back(merged_entries[i]);
    }
    if (entries.size() > pareto_budget) {
      std::uint64_t partial = 0;
      for (const Entry& e : entries) partial += e.mult;
      throw CapacityError("Pareto frontier size " + std::to_string(entries.size()) +
                          " exceeds budget " + std::to_string(pareto_budget) +
                          " after item " + std::to_string(j + 1) +
                          " (partial count " + std::to_string(partial) + ")");
    }
  }

  ParetoSet ps;
  ps.count = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    ps.count += entries[i].mult;
    ps.solutions.push_back(
        Solution::from_mask(entries[i].mask, n, SolutionDomain::kZeroOne));
    ObjectiveVector value(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
      const double v = vals[i * std::size_t(d) + std::size_t(c)];
      value[std::size_t(c)] = order.sense(std::size_t(c)) == Sense::kMaximize ? v : -v;
    }
    ps.values.push_back(std::move(value));
  }
  return ps;
}

std::uint64_t count_pareto(const ObjectiveMatrix& V, const FeasibleSet& fs,
                           const DominanceOrder& order,
                           std::uint64_t enumeration_budget,
                           std::uint64_t pareto_budget) {
  if (fs.kind() == FeasibleSet::Kind::kFullCube &&
      fs.param_n() == V.variables()) {
    return pareto_incremental_cube(V, order, pareto_budget).count;
  }
  return pareto_bruteforce(V, fs, order, enumeration_budget).count;
}

bool is_pareto_optimal(const ObjectiveMatrix& V, const FeasibleSet& fs,
                       const DominanceOrder& order, const Solution& x,
                       std::uint64_t budget) {
  const ObjectiveVector vx = evaluate(V, x);
  bool dominated = false;
  for_each_solution(
      fs,
      [&](const Solution& y) {
        if (!dominated && dominates(evaluate(V, y), vx, order)) dominated = true;
      },
      budget);
  return !dominated;
}

ObjectiveMatrix flip_columns_by(const ObjectiveMatrix& V, const Solution& r) {
  if (r.size() != std::size_t(V.variables())) {
    throw std::invalid_argument("flip vector length does not match matrix");
  }
  if (r.domain() != SolutionDomain::kZeroOne) {
    throw std::invalid_argument("flip vector must be a 0/1 solution");
  }
  std::vector<double> entries(V.entries());
  for (int i = 0; i < V.objectives(); ++i) {
    for (int j = 0; j < V.variables(); ++j) {
      if (!r.bit(std::size_t(j))) {
        entries[std::size_t(i) * V.variables() + j] = -V.entry(i, j);
      }
    }
  }
  return ObjectiveMatrix(V.objectives(), V.variables(), std::move(entries));
}

}  // namespace paretolab

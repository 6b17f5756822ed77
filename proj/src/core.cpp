#include "paretolab/core.hpp"

#include <cmath>

namespace paretolab {

Solution::Solution(std::vector<std::uint8_t> bits, SolutionDomain domain)
    : bits_(std::move(bits)), domain_(domain) {
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::invalid_argument("solution bits must be 0 or 1");
  }
}

Solution Solution::from_mask(std::uint64_t mask, int n, SolutionDomain domain) {
  if (n < 0 || n > 64) throw std::invalid_argument("mask width out of range");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) bits[std::size_t(j)] = (mask >> j) & 1u;
  return Solution(std::move(bits), domain);
}

ObjectiveMatrix::ObjectiveMatrix(int objectives, int variables,
                                 std::vector<double> entries)
    : d_(objectives), n_(variables), entries_(std::move(entries)) {
  if (d_ < 1 || n_ < 1) {
    throw std::invalid_argument("objective matrix needs d >= 1 and n >= 1");
  }
  if (entries_.size() != std::size_t(d_) * std::size_t(n_)) {
    throw std::invalid_argument("objective matrix entry count mismatch");
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("objective matrix entries must be finite");
    }
  }
}

ObjectiveMatrix ObjectiveMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("objective matrix needs d >= 1 and n >= 1");
  }
  const std::size_t n = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("ragged objective rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return ObjectiveMatrix(int(rows.size()), int(n), std::move(flat));
}

std::vector<double> ObjectiveMatrix::column(int j) const {
  std::vector<double> col(static_cast<std::size_t>(d_));
  for (int i = 0; i < d_; ++i) col[std::size_t(i)] = entry(i, j);
  return col;
}

DominanceOrder::DominanceOrder(std::vector<Sense> senses)
    : senses_(std::move(senses)) {
  if (senses_.empty()) throw std::invalid_argument("empty dominance order");
}

DominanceOrder DominanceOrder::all_maximize(int d) {
  if (d < 1) throw std::invalid_argument("order needs d >= 1");
  return DominanceOrder(std::vector<Sense>(std::size_t(d), Sense::kMaximize));
}

DominanceOrder DominanceOrder::knapsack(int profit_count) {
  if (profit_count < 1) throw std::invalid_argument("order needs d >= 1");
  std::vector<Sense> s(std::size_t(profit_count), Sense::kMaximize);
  s.push_back(Sense::kMinimize);
  return DominanceOrder(std::move(s));
}

ObjectiveVector evaluate(const ObjectiveMatrix& V, const Solution& x) {
  if (x.size() != std::size_t(V.variables())) {
    throw std::invalid_argument("solution length does not match variable count");
  }
  ObjectiveVector out(std::size_t(V.objectives()), 0.0);
  for (int i = 0; i < V.objectives(); ++i) {
    const auto r = V.row(i);
    double acc = 0.0;
    if (x.domain() == SolutionDomain::kZeroOne) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (x.bit(j)) acc += r[j];
      }
    } else {
      for (std::size_t j = 0; j < r.size(); ++j) {
        acc += x.bit(j) ? r[j] : -r[j];
      }
    }
    out[std::size_t(i)] = acc;
  }
  return out;
}

bool dominates(const ObjectiveVector& b, const ObjectiveVector& a,
               const DominanceOrder& order) {
  if (b.size() != a.size() || b.size() != order.size()) {
    throw std::invalid_argument("dominance comparison length mismatch");
  }
  bool strict = false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double bi = order.sense(i) == Sense::kMaximize ? b[i] : -b[i];
    const double ai = order.sense(i) == Sense::kMaximize ? a[i] : -a[i];
    if (bi < ai) return false;
    if (bi > ai) strict = true;
  }
  return strict;
}

std::vector<std::size_t> pareto_filter(const std::vector<ObjectiveVector>& points,
                                       const DominanceOrder& order) {
  if (points.empty()) throw std::invalid_argument("pareto_filter: empty input");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      if (j != i && dominates(points[j], points[i], order)) dominated = true;
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

}  // namespace paretolab

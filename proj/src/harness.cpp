#include "paretolab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "paretolab/constructions.hpp"
#include "paretolab/enumeration.hpp"
#include "paretolab/geometry.hpp"
#include "paretolab/sampling.hpp"

namespace paretolab {

namespace {

// stream index reserved for non-trial draws (e.g. random subset selection)
constexpr std::uint64_t kAuxStreamIndex = 1ull << 63;

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

DistributionSpec resolve_distribution(const ExperimentConfig& config) {
  const bool takes_dist =
      config.family == Family::kBasicCube || config.family == Family::kSignCube ||
      config.family == Family::kRestricted || config.family == Family::kWendel ||
      config.family == Family::kZonotope;
  if (!takes_dist) {
    if (!config.dist.empty()) {
      throw std::invalid_argument("family " + family_name(config.family) +
                                  " does not take a distribution spec");
    }
    return DistributionSpec::gaussian(1.0);  // unused
  }
  DistributionSpec spec =
      config.dist.empty()
          ? (config.family == Family::kWendel || config.family == Family::kZonotope
                 ? DistributionSpec::gaussian(1.0)
                 : DistributionSpec::symmetric_uniform(1.0))
          : DistributionSpec::parse(config.dist);
  if (!spec.symmetric_about_origin()) {
    throw std::invalid_argument(
        "family " + family_name(config.family) +
        " requires a distribution symmetric about the origin");
  }
  return spec;
}

// Distinct masks from [0, 2^n), uniform without replacement, deterministic in
// the stream.
std::vector<std::uint64_t> sample_distinct_masks(int n, std::uint64_t size,
                                                 const RandomStream& stream) {
  const std::uint64_t total = 1ull << n;
  if (size > total) throw std::invalid_argument("subset size exceeds 2^n");
  if (total <= (1ull << 22)) {
    std::vector<std::uint64_t> pool(total);
    for (std::uint64_t i = 0; i < total; ++i) pool[i] = i;
    for (std::uint64_t i = 0; i < size; ++i) {
      const std::uint64_t j = i + stream.bits(i) % (total - i);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(size);
    return pool;
  }
  if (size > total / 2) {
    throw std::invalid_argument("random subset too dense for rejection sampling");
  }
  std::vector<std::uint64_t> out;
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t counter = 0;
  while (out.size() < size) {
    const std::uint64_t mask = stream.bits(counter++) % total;
    if (seen.insert(mask).second) out.push_back(mask);
  }
  return out;
}

// Per-run immutable state shared by all trials.
struct RunContext {
  ExperimentConfig config;
  DistributionSpec dist = DistributionSpec::gaussian(1.0);
  std::optional<MatrixDistribution> matrix_dist;  // instance sampler
  std::optional<FeasibleSet> feasible;            // counting domain
  std::optional<DominanceOrder> order;
  std::optional<FeasibleSet> projection_points;
  std::optional<double> target;
};

RunContext prepare(const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (config.d < 1) throw std::invalid_argument("d must be >= 1");
  if (config.n < 1) throw std::invalid_argument("n must be >= 1");

  RunContext ctx;
  ctx.config = config;
  ctx.dist = resolve_distribution(config);
  const int n = config.n;
  const int d = config.d;

  switch (config.family) {
    case Family::kBasicCube:
      ctx.matrix_dist = MatrixDistribution::iid(d, n, ctx.dist);
      ctx.order = DominanceOrder::all_maximize(d);
      break;
    case Family::kSignCube:
      if (std::uint64_t(1) << std::min(n, 63) > config.enumeration_budget) {
        throw CapacityError("sign cube cardinality 2^" + std::to_string(n) +
                            " exceeds enumeration budget");
      }
      ctx.matrix_dist = MatrixDistribution::iid(d, n, ctx.dist);
      ctx.feasible = FeasibleSet::sign_cube(n);
      ctx.order = DominanceOrder::all_maximize(d);
      break;
    case Family::kRestricted: {
      if (!config.k) throw std::invalid_argument("restricted family requires k");
      ctx.matrix_dist = MatrixDistribution::iid(d, n, ctx.dist);
      ctx.feasible = FeasibleSet::fixed_cardinality(n, *config.k);
      ctx.order = DominanceOrder::all_maximize(d);
      break;
    }
    case Family::kTreeGadget: {
      const TreeGadgetInstance gadget = build_tree_gadget(n, d);
      ctx.matrix_dist = gadget.edge_profits;
      ctx.feasible = gadget.spanning_trees;
      ctx.order = DominanceOrder::all_maximize(d);
      break;
    }
    case Family::kKnapsack:
      if (n < 2) throw std::invalid_argument("knapsack needs n >= 2");
      ctx.order = DominanceOrder::knapsack(d);
      break;
    case Family::kWendel:
      ctx.matrix_dist = MatrixDistribution::iid(d, n, ctx.dist);
      break;
    case Family::kZonotope:
      if (n < d) throw std::invalid_argument("zonotope family needs n >= d");
      if (std::uint64_t(1) << std::min(n, 63) > config.enumeration_budget) {
        throw CapacityError("cube cardinality 2^" + std::to_string(n) +
                            " exceeds enumeration budget");
      }
      ctx.matrix_dist = MatrixDistribution::iid(d, n, ctx.dist);
      break;
    case Family::kProjection: {
      switch (config.projection_set) {
        case ProjectionSetKind::kCube:
          ctx.projection_points = FeasibleSet::full_cube(n);
          break;
        case ProjectionSetKind::kHammingBall: {
          if (!config.projection_size) {
            throw std::invalid_argument("projection family requires a set size");
          }
          const Solution center(std::vector<std::uint8_t>(std::size_t(n), 0),
                                SolutionDomain::kZeroOne);
          ctx.projection_points = hamming_ball(n, center, *config.projection_size);
          break;
        }
        case ProjectionSetKind::kRandomSubset: {
          if (!config.projection_size) {
            throw std::invalid_argument("projection family requires a set size");
          }
          const auto masks = sample_distinct_masks(
              n, *config.projection_size,
              RandomStream(config.seed).child(kAuxStreamIndex));
          std::vector<Solution> items;
          items.reserve(masks.size());
          for (std::uint64_t mask : masks) {
            items.push_back(Solution::from_mask(mask, n, SolutionDomain::kZeroOne));
          }
          ctx.projection_points = FeasibleSet::explicit_list(std::move(items));
          break;
        }
      }
      break;
    }
  }
  ctx.target = bound_target_for(config);
  return ctx;
}

double evaluate_trial(const RunContext& ctx, const RandomStream& trial_stream) {
  const ExperimentConfig& cfg = ctx.config;
  switch (cfg.family) {
    case Family::kBasicCube: {
      const ObjectiveMatrix V = sample_matrix(*ctx.matrix_dist, trial_stream);
      return double(pareto_incremental_cube(V, *ctx.order, cfg.pareto_budget).count);
    }
    case Family::kSignCube:
    case Family::kRestricted:
    case Family::kTreeGadget: {
      const ObjectiveMatrix V = sample_matrix(*ctx.matrix_dist, trial_stream);
      return double(pareto_bruteforce(V, *ctx.feasible, *ctx.order,
                                      cfg.enumeration_budget)
                        .count);
    }
    case Family::kKnapsack: {
      const KnapsackInstance inst =
          build_unit_weight_knapsack(cfg.n, cfg.d, trial_stream);
      if (cfg.knapsack_verify_embedding) {
        return verify_knapsack_embedding(inst, cfg.k, cfg.enumeration_budget) ? 1.0
                                                                              : 0.0;
      }
      std::vector<double> combined(inst.profits.entries());
      combined.insert(combined.end(), inst.weights.begin(), inst.weights.end());
      const ObjectiveMatrix knap(cfg.d + 1, cfg.n, std::move(combined));
      return double(pareto_incremental_cube(knap, inst.order, cfg.pareto_budget).count);
    }
    case Family::kWendel: {
      const ObjectiveMatrix V = sample_matrix(*ctx.matrix_dist, trial_stream);
      std::vector<std::vector<double>> points;
      points.reserve(std::size_t(cfg.n));
      for (int j = 0; j < cfg.n; ++j) points.push_back(V.column(j));
      const OriginInHullResult r = origin_in_hull(points);
      if (r.verdict == PredicateVerdict::kNumericFailure) {
        throw std::runtime_error("origin-in-hull test was ambiguous");
      }
      return r.verdict == PredicateVerdict::kFalse ? 1.0 : 0.0;
    }
    case Family::kZonotope: {
      const ObjectiveMatrix V = sample_matrix(*ctx.matrix_dist, trial_stream);
      const HullVerticesResult hv = hull_vertices(cube_image_points(V));
      if (!hv.computed) throw std::runtime_error("hull vertex test was ambiguous");
      return double(hv.vertices.size());
    }
    case Family::kProjection:
      return double(random_projection_vertex_count(
          *ctx.projection_points, cfg.d, trial_stream, cfg.enumeration_budget));
  }
  throw std::logic_error("unhandled family");
}

nlohmann::ordered_json config_json(const ExperimentConfig& config) {
  nlohmann::ordered_json j;
  j["family"] = family_name(config.family);
  j["n"] = config.n;
  j["d"] = config.d;
  if (config.k) j["k"] = *config.k;
  j["trials"] = config.trials;
  j["seed"] = config.seed;
  j["dist"] = config.dist;
  j["out"] = config.out;
  j["format"] = config.format == OutputFormat::kCsv ? "csv" : "json";
  if (config.family == Family::kProjection) {
    j["set"] = projection_set_name(config.projection_set);
    if (config.projection_size) j["size"] = *config.projection_size;
  }
  if (config.family == Family::kKnapsack) {
    j["verify_embedding"] = config.knapsack_verify_embedding;
  }
  return j;
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::kBasicCube: return "basic-cube";
    case Family::kSignCube: return "sign-cube";
    case Family::kRestricted: return "restricted";
    case Family::kTreeGadget: return "tree-gadget";
    case Family::kKnapsack: return "knapsack";
    case Family::kWendel: return "wendel";
    case Family::kZonotope: return "zonotope";
    case Family::kProjection: return "projection";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::kBasicCube, Family::kSignCube, Family::kRestricted,
                   Family::kTreeGadget, Family::kKnapsack, Family::kWendel,
                   Family::kZonotope, Family::kProjection}) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::string projection_set_name(ProjectionSetKind kind) {
  switch (kind) {
    case ProjectionSetKind::kHammingBall: return "hammingball";
    case ProjectionSetKind::kCube: return "cube";
    case ProjectionSetKind::kRandomSubset: return "randomsubset";
  }
  return "unknown";
}

ProjectionSetKind parse_projection_set(const std::string& name) {
  for (ProjectionSetKind k :
       {ProjectionSetKind::kHammingBall, ProjectionSetKind::kCube,
        ProjectionSetKind::kRandomSubset}) {
    if (projection_set_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown projection set '" + name + "'");
}

std::string verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "unknown";
}

SummaryStats summarize(const std::vector<TrialRecord>& records,
                       std::optional<double> bound_target) {
  if (records.empty()) throw std::invalid_argument("summarize: no records");
  SummaryStats s;
  s.trials = records.size();
  double acc = 0.0;
  for (const TrialRecord& r : records) acc += r.statistic;
  s.mean = acc / double(s.trials);
  double ss = 0.0;
  for (const TrialRecord& r : records) {
    const double dlt = r.statistic - s.mean;
    ss += dlt * dlt;
  }
  s.sample_stddev = s.trials > 1 ? std::sqrt(ss / double(s.trials - 1)) : 0.0;
  s.standard_error = s.sample_stddev / std::sqrt(double(s.trials));
  s.ci95_lo = s.mean - 1.96 * s.standard_error;
  s.ci95_hi = s.mean + 1.96 * s.standard_error;
  s.bound_target = bound_target;
  if (s.trials < 30 || !bound_target) {
    s.verdict = Verdict::kInconclusive;
  } else if (s.mean + 3.0 * s.standard_error < *bound_target) {
    s.verdict = Verdict::kFail;
  } else {
    s.verdict = Verdict::kPass;
  }
  return s;
}

std::optional<double> bound_target_for(const ExperimentConfig& config) {
  const int n = config.n;
  const int d = config.d;
  switch (config.family) {
    case Family::kBasicCube:
    case Family::kSignCube:
      return to_double(lower_bound_basic(n, d));
    case Family::kRestricted:
      if (!config.k) throw std::invalid_argument("restricted family requires k");
      return to_double(lower_bound_restricted(n, d, binomial(n, *config.k)));
    case Family::kTreeGadget:
      return d >= 2 ? std::optional<double>(std::pow(
                          double(n - 3) / (2.0 * (d - 1)), double(d - 1)))
                    : std::nullopt;
    case Family::kKnapsack:
      return config.knapsack_verify_embedding ? std::optional<double>(1.0)
                                              : std::nullopt;
    case Family::kWendel:
      return to_double(wendel_probability(n, d));
    case Family::kZonotope:
      return to_double(Rational(zonotope_vertex_count_generic(n, d)));
    case Family::kProjection:
      return std::nullopt;
  }
  return std::nullopt;
}

unsigned resolve_thread_count(const ExperimentConfig& config) {
  if (config.threads) return std::max(1u, *config.threads);
  if (const char* env = std::getenv("PARETO_LAB_THREADS")) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
    if (ec != std::errc() || *ptr != '\0' || v < 1) {
      throw std::runtime_error("PARETO_LAB_THREADS must be a positive integer");
    }
    return unsigned(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  const RunContext ctx = prepare(config);
  const RandomStream root(config.seed);
  const std::uint64_t trials = config.trials;
  const unsigned workers =
      unsigned(std::min<std::uint64_t>(resolve_thread_count(config), trials));

  std::vector<TrialRecord> records(trials);
  std::vector<char> done(trials, 0);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&]() {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::uint64_t t = next.fetch_add(1, std::memory_order_relaxed);
      if (t >= trials) break;
      try {
        const auto t0 = std::chrono::steady_clock::now();
        const double stat = evaluate_trial(ctx, root.child(t));
        const auto t1 = std::chrono::steady_clock::now();
        TrialRecord rec;
        rec.trial_index = t;
        rec.derived_seed_path = {t};
        rec.statistic = stat;
        rec.elapsed_ms = std::max(
            std::chrono::duration<double, std::milli>(t1 - t0).count(), 1e-6);
        records[t] = std::move(rec);
        done[t] = 1;
      } catch (...) {
        {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
        stop.store(true, std::memory_order_relaxed);
        break;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  if (first_error) {
    // flush the completed contiguous prefix before propagating
    std::uint64_t prefix = 0;
    while (prefix < trials && done[prefix]) ++prefix;
    records.resize(prefix);
    if (!config.out.empty() && prefix > 0) {
      const SummaryStats partial = summarize(records, ctx.target);
      export_results(config, records, partial, config.out, config.format);
    }
    std::rethrow_exception(first_error);
  }

  ExperimentResult result;
  result.records = std::move(records);
  result.summary = summarize(result.records, ctx.target);
  if (!config.out.empty()) {
    export_results(config, result.records, result.summary, config.out,
                   config.format);
  }
  return result;
}

void export_results(const ExperimentConfig& config,
                    const std::vector<TrialRecord>& records,
                    const SummaryStats& summary, const std::string& path,
                    OutputFormat format) {
  if (path.empty()) throw std::invalid_argument("export path must not be empty");
  std::string payload;
  if (format == OutputFormat::kCsv) {
    payload = "trial,family,n,d,k,seed,statistic,elapsed_ms\n";
    std::string k_field;
    if (config.k) {
      k_field = std::to_string(*config.k);
    } else if (config.family == Family::kProjection && config.projection_size) {
      k_field = std::to_string(*config.projection_size);
    }
    const std::string family = csv_quote(family_name(config.family));
    for (const TrialRecord& r : records) {
      payload += std::to_string(r.trial_index);
      payload += ',';
      payload += family;
      payload += ',';
      payload += std::to_string(config.n);
      payload += ',';
      payload += std::to_string(config.d);
      payload += ',';
      payload += k_field;
      payload += ',';
      payload += std::to_string(config.seed);
      payload += ',';
      payload += format_double(r.statistic);
      // elapsed is wall-clock and would break byte-reproducibility
      payload += ",0\n";
    }
  } else {
    nlohmann::ordered_json j;
    j["config"] = config_json(config);
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const TrialRecord& r : records) {
      nlohmann::ordered_json rec;
      rec["trial"] = r.trial_index;
      rec["path"] = r.derived_seed_path;
      rec["statistic"] = r.statistic;
      rec["elapsed_ms"] = 0;
      recs.push_back(std::move(rec));
    }
    j["records"] = std::move(recs);
    nlohmann::ordered_json sum;
    sum["trials"] = summary.trials;
    sum["mean"] = summary.mean;
    sum["sample_stddev"] = summary.sample_stddev;
    sum["standard_error"] = summary.standard_error;
    sum["ci95_lo"] = summary.ci95_lo;
    sum["ci95_hi"] = summary.ci95_hi;
    if (summary.bound_target) sum["bound_target"] = *summary.bound_target;
    sum["verdict"] = verdict_name(summary.verdict);
    j["summary"] = std::move(sum);
    payload = j.dump(2);
    payload += '\n';
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(payload.data(), std::streamsize(payload.size()));
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace paretolab

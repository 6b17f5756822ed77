/**
 * @file harness.hpp
 * @brief Reproducible Monte Carlo experiment runner: per-trial derived random
 *        streams, summary statistics with bound-comparison verdicts, and
 *        deterministic CSV/JSON persistence.
 */

#ifndef PARETOLAB_HARNESS_HPP
#define PARETOLAB_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paretolab/core.hpp"

namespace paretolab {

enum class Family : std::uint8_t {
  kBasicCube,   // Pareto count over {0,1}^n
  kSignCube,    // Pareto count over {-1,1}^n
  kRestricted,  // Pareto count over the fixed-cardinality slice
  kTreeGadget,  // Pareto count over all spanning trees of the gadget instance
  kKnapsack,    // knapsack Pareto count, or embedding check with --verify
  kWendel,      // indicator[origin outside hull of n random points]
  kZonotope,    // hull vertex count of {V r}
  kProjection,  // hull vertex count of a random projection of a solution set
};

std::string family_name(Family family);
Family parse_family(const std::string& name);

enum class OutputFormat : std::uint8_t { kCsv, kJson };

enum class ProjectionSetKind : std::uint8_t { kHammingBall, kCube, kRandomSubset };

std::string projection_set_name(ProjectionSetKind kind);
ProjectionSetKind parse_projection_set(const std::string& name);

struct ExperimentConfig {
  Family family = Family::kBasicCube;
  int n = 0;  // vertex count m for the tree-gadget family
  int d = 0;
  std::optional<int> k;  // cardinality (restricted family)
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::string dist;  // distribution grammar string; empty selects the default
  std::string out;   // export path; empty disables persistence
  OutputFormat format = OutputFormat::kCsv;
  ProjectionSetKind projection_set = ProjectionSetKind::kHammingBall;
  std::optional<std::uint64_t> projection_size;
  bool knapsack_verify_embedding = false;
  std::uint64_t enumeration_budget = 1ull << 26;
  std::uint64_t pareto_budget = 1ull << 22;
  std::optional<unsigned> threads;  // unset: PARETO_LAB_THREADS, then hardware
};

struct TrialRecord {
  std::uint64_t trial_index = 0;
  std::vector<std::uint64_t> derived_seed_path;
  double statistic = 0.0;
  double elapsed_ms = 0.0;  // measured; canonicalized to 0 in exports
};

enum class Verdict : std::uint8_t { kPass, kFail, kInconclusive };

std::string verdict_name(Verdict verdict);

/**
 * @brief Aggregated statistics over one run.
 *
 * verdict is kInconclusive below 30 trials or without a bound target,
 * kFail iff mean + 3 * standard_error < bound_target, else kPass. The
 * one-sided rule reflects that the targets are lower bounds on expectations.
 */
struct SummaryStats {
  std::uint64_t trials = 0;
  double mean = 0.0;
  double sample_stddev = 0.0;
  double standard_error = 0.0;
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
  std::optional<double> bound_target;
  Verdict verdict = Verdict::kInconclusive;
};

SummaryStats summarize(const std::vector<TrialRecord>& records,
                       std::optional<double> bound_target);

struct ExperimentResult {
  std::vector<TrialRecord> records;
  SummaryStats summary;
};

/**
 * @brief Runs config.trials independent trials, trial t on the derived stream
 *        (seed, [t]), and aggregates in trial order.
 *
 * Results are identical regardless of the parallelism degree. When config.out
 * is set the records and summary are exported before returning. A capacity
 * error aborts the run after flushing the completed prefix of trials.
 */
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Closed-form bound target of a family, when one exists.
std::optional<double> bound_target_for(const ExperimentConfig& config);

/**
 * @brief Writes records and summary to `path`.
 *
 * CSV columns: trial,family,n,d,k,seed,statistic,elapsed_ms. JSON object keys:
 * config, records, summary. Output bytes depend only on the config and
 * statistics, so equal-config runs export byte-identical files.
 */
void export_results(const ExperimentConfig& config,
                    const std::vector<TrialRecord>& records,
                    const SummaryStats& summary, const std::string& path,
                    OutputFormat format);

/// Resolved worker count: config override, then PARETO_LAB_THREADS, then
/// hardware concurrency; always >= 1. Throws on a malformed variable.
unsigned resolve_thread_count(const ExperimentConfig& config);

}  // namespace paretolab

#endif  // PARETOLAB_HARNESS_HPP

// Command-line front end: closed-form bound calculators, instance builders,
// and the Monte Carlo experiment runner.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "paretolab/constructions.hpp"
#include "paretolab/enumeration.hpp"
#include "paretolab/geometry.hpp"
#include "paretolab/harness.hpp"

namespace {

using namespace paretolab;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;

void print_summary(const ExperimentConfig& config, const SummaryStats& s) {
  std::cout << "family=" << family_name(config.family) << " n=" << config.n
            << " d=" << config.d;
  if (config.k) std::cout << " k=" << *config.k;
  std::cout << " trials=" << config.trials << " seed=" << config.seed << "\n";
  std::cout << "mean = " << s.mean << "  stddev = " << s.sample_stddev
            << "  se = " << s.standard_error << "\n";
  std::cout << "ci95 = [" << s.ci95_lo << ", " << s.ci95_hi << "]\n";
  if (s.bound_target) {
    std::cout << "target = " << *s.bound_target << "\n";
  }
  std::cout << "verdict = " << verdict_name(s.verdict) << "\n";
}

int run_and_report(const ExperimentConfig& config) {
  const ExperimentResult result = run_experiment(config);
  print_summary(config, result.summary);
  if (!config.out.empty()) {
    std::cout << "wrote " << config.out << "\n";
  }
  return result.summary.verdict == Verdict::kFail ? kExitFail : kExitOk;
}

void load_config_file(const std::string& path, ExperimentConfig& config) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  nlohmann::json j;
  in >> j;
  if (j.contains("family")) config.family = parse_family(j["family"]);
  if (j.contains("n")) config.n = j["n"];
  if (j.contains("m")) config.n = j["m"];
  if (j.contains("d")) config.d = j["d"];
  if (j.contains("k")) config.k = int(j["k"]);
  if (j.contains("trials")) config.trials = j["trials"];
  if (j.contains("seed")) config.seed = j["seed"];
  if (j.contains("dist")) config.dist = j["dist"];
  if (j.contains("out")) config.out = j["out"];
  if (j.contains("format")) {
    const std::string f = j["format"];
    if (f != "csv" && f != "json") {
      throw std::runtime_error("format must be csv or json");
    }
    config.format = f == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
  }
  if (j.contains("set")) config.projection_set = parse_projection_set(j["set"]);
  if (j.contains("size")) config.projection_size = std::uint64_t(j["size"]);
  if (j.contains("verify_embedding")) {
    config.knapsack_verify_embedding = j["verify_embedding"];
  }
  if (j.contains("enum_budget")) config.enumeration_budget = j["enum_budget"];
  if (j.contains("pareto_budget")) config.pareto_budget = j["pareto_budget"];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paretolab: Pareto-optima counting experiments on random "
               "multiobjective 0-1 instances"};
  app.require_subcommand(1);

  // ---- bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form lower bounds");
  int b_n = 0, b_d = 0;
  std::optional<long long> b_scard;
  bounds->add_option("--n", b_n, "variables")->required();
  bounds->add_option("--d", b_d, "objectives")->required();
  bounds->add_option("--s-card", b_scard, "restricted feasible-set size");

  // ---- experiment families (shared flag storage)
  ExperimentConfig cfg;
  std::string dist_text, out_path, format_text = "csv", family_text, set_text;
  std::optional<int> k_opt;
  std::optional<std::uint64_t> size_opt;
  std::optional<unsigned> threads_opt;
  bool verify_embedding = false;
  std::string config_path;

  auto add_run_flags = [&](CLI::App* cmd, bool with_n, bool with_m) {
    if (with_n) cmd->add_option("--n", cfg.n, "variables");
    if (with_m) cmd->add_option("--m", cfg.n, "vertices of the complete graph");
    cmd->add_option("--d", cfg.d, "objectives");
    cmd->add_option("--trials", cfg.trials, "Monte Carlo trials");
    cmd->add_option("--seed", cfg.seed, "root seed");
    cmd->add_option("--out", out_path, "export path");
    cmd->add_option("--format", format_text, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--threads", threads_opt,
                    "worker threads (default: PARETO_LAB_THREADS or hardware)");
    cmd->add_option("--enum-budget", cfg.enumeration_budget, "enumeration budget");
    cmd->add_option("--pareto-budget", cfg.pareto_budget,
                    "stored-frontier budget");
  };

  auto* wendel = app.add_subcommand(
      "wendel", "origin-outside-hull frequency vs. the exact probability");
  add_run_flags(wendel, true, false);
  wendel->get_option("--n")->required();
  wendel->get_option("--d")->required();

  auto* zonotope = app.add_subcommand(
      "zonotope", "hull vertex count of {Vr} vs. the generic-position formula");
  add_run_flags(zonotope, true, false);
  zonotope->get_option("--n")->required();
  zonotope->get_option("--d")->required();

  auto* experiment = app.add_subcommand("experiment", "general experiment runner");
  experiment->add_option("--family", family_text,
                         "basic-cube|sign-cube|restricted|tree-gadget|knapsack|"
                         "wendel|zonotope|projection");
  experiment->add_option("--k", k_opt, "cardinality (restricted family)");
  experiment->add_option(
      "--dist", dist_text, "uniform:<lo>:<hi> | symuniform:<h> | gaussian:<sigma>");
  experiment->add_option("--set", set_text, "hammingball|cube|randomsubset");
  experiment->add_option("--size", size_opt, "projection set size");
  experiment->add_flag("--verify-embedding", verify_embedding,
                       "check the fixed-cardinality embedding instead of counting");
  experiment->add_option("--config", config_path,
                         "JSON config file (flags override)");
  add_run_flags(experiment, true, false);

  auto* tree_gadget = app.add_subcommand(
      "tree-gadget", "Pareto counts over spanning trees of the gadget instance");
  add_run_flags(tree_gadget, false, true);
  tree_gadget->get_option("--m")->required();
  tree_gadget->get_option("--d")->required();

  auto* knapsack = app.add_subcommand(
      "knapsack", "unit-weight knapsack counts or embedding checks");
  add_run_flags(knapsack, true, false);
  knapsack->get_option("--n")->required();
  knapsack->get_option("--d")->required();
  knapsack->add_flag("--verify-embedding", verify_embedding,
                     "check the fixed-cardinality embedding instead of counting");
  knapsack->add_option("--k", k_opt, "embedding cardinality (default floor(n/2))");

  auto* br = app.add_subcommand("br-params", "cloning-step parameter schedule");
  int br_n = 0, br_d = 0;
  double br_phi = 0.0;
  br->add_option("--n", br_n, "object budget")->required();
  br->add_option("--d", br_d, "profit objectives")->required();
  br->add_option("--phi", br_phi, "density bound")->required();

  auto* projection = app.add_subcommand(
      "projection", "hull vertices of random projections of a solution set");
  add_run_flags(projection, true, false);
  projection->get_option("--n")->required();
  projection->get_option("--d")->required();
  projection->add_option("--set", set_text, "hammingball|cube|randomsubset")
      ->required();
  projection->add_option("--size", size_opt, "set size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (bounds->parsed()) {
      const Rational basic = lower_bound_basic(b_n, b_d);
      std::cout << "lower_bound_basic(" << b_n << ", " << b_d << ") = "
                << numerator(basic) << "/" << denominator(basic) << " = "
                << to_double(basic) << "\n";
      if (b_n >= 2 && b_d >= 2) {
        std::cout << "lower_bound_simple = " << lower_bound_simple(b_n, b_d)
                  << "\n";
      }
      if (b_scard) {
        const Rational restricted =
            lower_bound_restricted(b_n, b_d, BigInt(*b_scard));
        std::cout << "lower_bound_restricted(|S|=" << *b_scard << ") = "
                  << numerator(restricted) << "/" << denominator(restricted)
                  << " = " << to_double(restricted) << "\n";
      }
      return kExitOk;
    }

    if (br->parsed()) {
      const BRParameters p = br_parameters(br_n, br_d, br_phi);
      std::cout << "n_p = " << p.n_p << "\n"
                << "n_q_hat = " << p.n_q_hat << "\n"
                << "n_q = " << p.n_q << "\n"
                << "saturated = " << (p.saturated ? "yes" : "no") << "\n"
                << "phi_hat = " << p.phi_hat << "\n";
      if (p.saturated) {
        std::cout << "phi_hat_residual = " << p.phi_hat_residual << "\n";
      }
      std::cout << "objects_used = " << p.objects_used << "\n"
                << "bound_value = " << p.bound_value << "\n";
      return kExitOk;
    }

    // experiment-style subcommands
    if (!config_path.empty()) load_config_file(config_path, cfg);
    if (wendel->parsed()) cfg.family = Family::kWendel;
    if (zonotope->parsed()) cfg.family = Family::kZonotope;
    if (tree_gadget->parsed()) cfg.family = Family::kTreeGadget;
    if (knapsack->parsed()) cfg.family = Family::kKnapsack;
    if (projection->parsed()) cfg.family = Family::kProjection;
    if (experiment->parsed() && !family_text.empty()) {
      cfg.family = parse_family(family_text);
    }
    if (experiment->parsed() && family_text.empty() && config_path.empty()) {
      throw std::invalid_argument("experiment requires --family or --config");
    }
    if (k_opt) cfg.k = k_opt;
    if (threads_opt) cfg.threads = threads_opt;
    if (!dist_text.empty()) cfg.dist = dist_text;
    if (!set_text.empty()) cfg.projection_set = parse_projection_set(set_text);
    if (size_opt) cfg.projection_size = size_opt;
    if (verify_embedding) cfg.knapsack_verify_embedding = true;
    if (!out_path.empty()) cfg.out = out_path;
    cfg.format = format_text == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
    return run_and_report(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}

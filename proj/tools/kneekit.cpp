// kneekit: knee identification, benchmark fronts, I(S) evaluation and
// NSGA-II-KPITU runs from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "kneekit/baselines.hpp"
#include "kneekit/benchmarks.hpp"
#include "kneekit/emo.hpp"
#include "kneekit/io.hpp"
#include "kneekit/kpitu.hpp"
#include "kneekit/metrics.hpp"

using json = nlohmann::json;
using namespace kneekit;

namespace {

constexpr int kFormatVersion = 1;

std::size_t default_workers() {
  const char* env = std::getenv("KNEEKIT_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1) throw UsageError("KNEEKIT_THREADS must be a positive integer, got '" + std::string(env) + "'");
  return static_cast<std::size_t>(value);
}

void emit(const json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct IdentifyArgs {
  std::string input;
  std::string method = "kpitu";
  double phi = 135.0;
  std::optional<double> weights_frac;
  std::optional<std::size_t> workers;
  std::string out;
  bool timing = false;
};

int cmd_identify(const IdentifyArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  const std::string bytes = read_file(args.input);
  const TradeoffSet set = read_csv(args.input);
  const std::size_t workers = args.workers.value_or(default_workers());

  json report;
  report["format_version"] = kFormatVersion;
  report["method"] = args.method;
  report["input_digest"] = "sha256:" + sha256_hex(bytes);
  report["points"] = set.size();
  report["dimension"] = set.dimension();

  IndexList knees;
  if (args.method == "kpitu") {
    const auto result = workers > 1 ? identify_parallel(set, workers) : identify(set);
    knees = result.knees;
    report["accumulative_utility"] = result.accumulative;
  } else if (args.method == "cd") {
    const ConeParams params(args.phi);
    knees = cone_knees(set, params);
    report["parameters"] = {{"phi", params.phi()}};
  } else if (args.method == "emu") {
    std::size_t count = default_emu_weights(set.size());
    if (args.weights_frac) {
      if (!(*args.weights_frac > 0.0)) throw UsageError("--weights-frac must be positive");
      count = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(*args.weights_frac * static_cast<double>(set.size()))));
    }
    const auto result = emu_knees(set, count);
    knees = result.knees;
    report["scores"] = result.scores;
    report["parameters"] = {{"weights", count}};
  } else if (args.method == "ra") {
    knees = reflex_angle_knee(set);
  } else if (args.method == "chim") {
    knees = chim_knees(set);
  } else if (args.method == "mmd") {
    knees = mmd_knee(set);
  } else if (args.method == "mu") {
    const auto result = mu_metric(set);
    knees = result.knees;
    report["scores"] = result.mu;
  } else {
    throw UsageError("unknown method '" + args.method + "'");
  }

  report["knees"] = knees;
  json points = json::array();
  for (std::size_t k : knees) points.push_back(set.row(k));
  report["knee_objectives"] = points;
  if (args.timing) report["wall_clock_ms"] = elapsed_ms(start);
  emit(report, args.out);
  return 0;
}

struct BenchArgs {
  std::string family;
  std::optional<std::size_t> objectives;
  std::size_t knees = 1;
  int skew = 0;
  std::optional<std::size_t> samples;
  std::string front_out;
  std::string truth_out;
};

int cmd_bench(const BenchArgs& args) {
  BenchmarkSpec spec = BenchmarkSpec::standard(parse_family(args.family), args.knees, args.skew);
  if (args.objectives) spec.objectives = *args.objectives;
  if (args.samples) spec.samples = *args.samples;
  spec.validate();
  const auto front = sample_front(spec);
  const auto truth = ground_truth(spec);
  write_csv_file(args.front_out, front.rows(), front.dimension());
  write_csv_file(args.truth_out, truth.knees.rows(), truth.knees.dimension());
  std::cerr << "wrote " << front.size() << " front points and " << truth.knees.size()
            << " true knees (tolerance " << format_scientific(truth.tolerance) << ")\n";
  return 0;
}

int cmd_eval(const std::string& found_path, const std::string& truth_path) {
  const auto found = read_csv(found_path);
  const auto truth = read_csv(truth_path);
  if (found.dimension() != truth.dimension()) {
    throw UsageError("dimension mismatch: " + std::to_string(found.dimension()) + " vs " +
                     std::to_string(truth.dimension()));
  }
  std::cout << format_scientific(indicator(found, truth)) << '\n';
  return 0;
}

struct EvolveArgs {
  std::string family = "deb2dk";
  std::size_t knees = 1;
  int skew = 0;
  std::size_t variables = 30;
  EvoConfig config;
  std::string selection = "kpitu";
  std::optional<std::size_t> workers;
  bool trace = false;
  bool timing = false;
  std::string manifest_out;
  std::string population_out;
};

int cmd_evolve(EvolveArgs args) {
  const auto start = std::chrono::steady_clock::now();
  const BenchmarkSpec spec = BenchmarkSpec::standard(parse_family(args.family), args.knees, args.skew);
  if (args.selection == "kpitu") {
    args.config.selection = Selection::Kpitu;
  } else if (args.selection == "crowding") {
    args.config.selection = Selection::Crowding;
  } else {
    throw UsageError("unknown selection '" + args.selection + "'");
  }
  args.config.workers = args.workers.value_or(default_workers());
  args.config.validate();
  const Problem problem = benchmark_problem(spec, args.variables);
  const RunResult result = run(problem, args.config);

  const auto& c = args.config;
  json manifest;
  manifest["format_version"] = kFormatVersion;
  manifest["problem"] = {{"family", std::string(family_name(spec.family))},
                         {"objectives", spec.objectives},
                         {"knees", spec.knees},
                         {"skew", spec.skew},
                         {"variables", args.variables}};
  manifest["config"] = {{"population", c.population},
                        {"generations", c.generations},
                        {"crossover_probability", c.crossover_probability},
                        {"crossover_index", c.crossover_index},
                        {"mutation_probability", c.mutation_rate(args.variables)},
                        {"mutation_index", c.mutation_index},
                        {"selection", args.selection}};
  manifest["seed"] = c.seed;
  manifest["final_indicator"] = result.trace.back();
  manifest["final_front_size"] = first_front(result.population).size();
  manifest["backfilled"] = result.backfilled;
  if (args.trace) manifest["trace"] = result.trace;
  if (args.timing) manifest["wall_clock_ms"] = elapsed_ms(start);
  emit(manifest, args.manifest_out);

  if (!args.population_out.empty()) {
    std::vector<Point> objectives;
    for (const auto& ind : result.population) objectives.push_back(ind.objectives);
    write_csv_file(args.population_out, objectives, spec.objectives);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knee point identification toolkit"};
  app.require_subcommand(1);
  app.failure_message([](const CLI::App*, const CLI::Error& e) { return std::string("error: ") + e.what() + "\n"; });

  IdentifyArgs identify_args;
  auto* identify_cmd = app.add_subcommand("identify", "Find knees in a CSV of objective vectors");
  identify_cmd->add_option("input", identify_args.input, "CSV file, one point per row")->required();
  identify_cmd->add_option("--method", identify_args.method, "kpitu, cd, emu, ra, chim, mmd or mu")
      ->check(CLI::IsMember({"kpitu", "cd", "emu", "ra", "chim", "mmd", "mu"}));
  identify_cmd->add_option("--phi", identify_args.phi, "Cone angle in degrees for cd (90, 180)");
  identify_cmd->add_option("--weights-frac", identify_args.weights_frac, "EMU weight vectors as a fraction of N");
  identify_cmd->add_option("--parallel", identify_args.workers, "Worker threads (default $KNEEKIT_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  identify_cmd->add_option("-o,--out", identify_args.out, "Report path (default stdout)");
  identify_cmd->add_flag("--timing", identify_args.timing, "Include wall-clock time in the report");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Sample a benchmark front and its true knees");
  bench_cmd->add_option("--family", bench_args.family, "do2dk, deb2dk, deb3dk or ckp")->required();
  bench_cmd->add_option("-m,--objectives", bench_args.objectives, "Objective count");
  bench_cmd->add_option("-K,--knees", bench_args.knees, "Knee-count parameter");
  bench_cmd->add_option("-s,--skew", bench_args.skew, "DO2DK skew");
  bench_cmd->add_option("-n,--samples", bench_args.samples, "Sample count (200 for m=2, 676 for m=3)");
  bench_cmd->add_option("--front", bench_args.front_out, "Front CSV path")->required();
  bench_cmd->add_option("--truth", bench_args.truth_out, "True knees CSV path")->required();

  std::string found_path;
  std::string truth_path;
  auto* eval_cmd = app.add_subcommand("eval", "Print I(S) of identified knees against true knees");
  eval_cmd->add_option("knees", found_path, "Identified knees CSV")->required();
  eval_cmd->add_option("truth", truth_path, "True knees CSV")->required();

  EvolveArgs evolve_args;
  auto* evolve_cmd = app.add_subcommand("evolve", "Run NSGA-II-KPITU on a benchmark family");
  evolve_cmd->add_option("--family", evolve_args.family, "Benchmark family");
  evolve_cmd->add_option("-K,--knees", evolve_args.knees, "Knee-count parameter");
  evolve_cmd->add_option("-s,--skew", evolve_args.skew, "DO2DK skew");
  evolve_cmd->add_option("--variables", evolve_args.variables, "Decision variables");
  evolve_cmd->add_option("--pop", evolve_args.config.population, "Population size (even)");
  evolve_cmd->add_option("--gens", evolve_args.config.generations, "Generations");
  evolve_cmd->add_option("--seed", evolve_args.config.seed, "RNG seed");
  evolve_cmd->add_option("--pc", evolve_args.config.crossover_probability, "Crossover probability");
  evolve_cmd->add_option("--pm", evolve_args.config.mutation_probability, "Per-variable mutation probability (default 1/n)");
  evolve_cmd->add_option("--eta-c", evolve_args.config.crossover_index, "SBX distribution index");
  evolve_cmd->add_option("--eta-m", evolve_args.config.mutation_index, "Polynomial mutation index");
  evolve_cmd->add_option("--selection", evolve_args.selection, "kpitu or crowding");
  evolve_cmd->add_option("--parallel", evolve_args.workers, "Worker threads")->check(CLI::PositiveNumber);
  evolve_cmd->add_flag("--trace", evolve_args.trace, "Record I(S) per generation in the manifest");
  evolve_cmd->add_flag("--timing", evolve_args.timing, "Include wall-clock time in the manifest");
  evolve_cmd->add_option("--manifest", evolve_args.manifest_out, "Run manifest path (default stdout)");
  evolve_cmd->add_option("--population", evolve_args.population_out, "Final population CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*identify_cmd) return cmd_identify(identify_args);
    if (*bench_cmd) return cmd_bench(bench_args);
    if (*eval_cmd) return cmd_eval(found_path, truth_path);
    if (*evolve_cmd) return cmd_evolve(evolve_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

// Copyright 2026 The logcut developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logcut/experiment.hpp"
#include "logcut/version.hpp"

namespace {

using logcut::EvalMode;
using logcut::Instance;
using logcut::SolveOptions;

// Options naming the instance to run on; exactly one source must be given.
struct InstanceCli {
  std::string graph_path;
  std::string random_spec;

  void add_to(CLI::App& cmd) {
    auto* file = cmd.add_option("--graph", graph_path,
                                "Edge-list file with the input graph");
    auto* random =
        cmd.add_option("--random-regular", random_spec,
                       "Generate a random regular graph, format N,D,SEED");
    file->excludes(random);
    random->excludes(file);
  }

  Instance build() const {
    if (!graph_path.empty()) return logcut::instance_from_file(graph_path);
    if (random_spec.empty()) {
      throw CLI::RequiredError("--graph or --random-regular");
    }
    long long n = 0;
    long long d = 0;
    unsigned long long seed = 0;
    char c1 = 0;
    char c2 = 0;
    std::istringstream in(random_spec);
    if (!(in >> n >> c1 >> d >> c2 >> seed) || c1 != ',' || c2 != ',' ||
        in.rdbuf()->in_avail() != 0) {
      throw CLI::ValidationError("--random-regular",
                                 "expected the form N,D,SEED");
    }
    return logcut::instance_random_regular(static_cast<int>(n),
                                           static_cast<int>(d), seed);
  }
};

struct OutputCli {
  std::string path;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--out", path, "Write output here instead of stdout");
  }

  // Keeps the file stream alive while returning a plain ostream reference.
  std::ostream& open(std::unique_ptr<std::ofstream>& holder) const {
    if (path.empty()) return std::cout;
    holder = std::make_unique<std::ofstream>(path);
    if (!*holder) {
      throw std::runtime_error("could not open " + path + " for writing");
    }
    return *holder;
  }
};

void add_ga_options(CLI::App& cmd, logcut::GAConfig& ga,
                    std::optional<int>& stall) {
  cmd.add_option("--population", ga.population, "Population size")
      ->check(CLI::Range(2, 100000));
  cmd.add_option("--iterations", ga.max_iterations, "Generation count")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--mutation", ga.mutation_prob,
                 "Per-gene mutation probability")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--crossover", ga.crossover_prob,
                 "Per-gene crossover probability")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--elitism", ga.elitism_count,
                 "Individuals copied unchanged each generation")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--parents-fraction", ga.parents_fraction,
                 "Top fraction of the population eligible as parents");
  cmd.add_option("--stall-limit", stall,
                 "Stop after this many generations without improvement")
      ->check(CLI::PositiveNumber);
}

void add_mode_options(CLI::App& cmd, std::string& mode, int& shots) {
  cmd.add_option("--mode", mode, "Objective evaluation mode")
      ->check(CLI::IsMember({"dense", "pauli-exact", "pauli-sampled"}));
  cmd.add_option("--shots", shots, "Samples per term in pauli-sampled mode")
      ->check(CLI::PositiveNumber);
}

EvalMode::Kind parse_kind(const std::string& mode) {
  if (mode == "pauli-exact") return EvalMode::Kind::kPauliExact;
  if (mode == "pauli-sampled") return EvalMode::Kind::kPauliSampled;
  return EvalMode::Kind::kDense;
}

void add_config_option(CLI::App& cmd) {
  cmd.add_option("--config",
                 "Flat key=value file supplying any flags left unset; "
                 "command-line flags win")
      ->type_name("TEXT");
}

std::string trimmed(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Tokens for every config entry whose option the command line left unset.
// Lines are `key = value`; blank lines and # comments are skipped.
std::vector<std::string> config_tokens(const CLI::App& cmd,
                                       const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);

  std::vector<std::string> tokens;
  std::vector<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string entry = trimmed(line);
    if (entry.empty() || entry[0] == '#') continue;
    const auto eq = entry.find('=');
    const std::string key = eq == std::string::npos ? "" : trimmed(entry.substr(0, eq));
    if (key.empty()) {
      throw CLI::ValidationError(
          "--config", "expected key=value on line " + std::to_string(line_no));
    }
    if (key == "config") {
      throw CLI::ValidationError("--config", "config files cannot nest");
    }
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw CLI::ValidationError(
          "--config", "duplicate key '" + key + "' on line " +
                          std::to_string(line_no));
    }
    seen.push_back(key);
    const std::string name = "--" + key;
    const CLI::Option* opt = cmd.get_option_no_throw(name);
    if (opt == nullptr) {
      throw CLI::ValidationError(
          "--config", "unknown key '" + key + "' on line " +
                          std::to_string(line_no));
    }
    if (opt->count() > 0) continue;
    tokens.push_back(name);
    tokens.push_back(trimmed(entry.substr(eq + 1)));
  }
  return tokens;
}

void add_baseline_options(CLI::App& cmd, SolveOptions& opts) {
  cmd.add_option("--gw-seed", opts.gw_seed, "Rounding heuristic seed");
  cmd.add_option("--gw-rank", opts.gw_rank,
                 "Relaxation rank, 0 for the default")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--gw-roundings", opts.gw_roundings,
                 "Hyperplanes tried by the rounding heuristic")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--random-samples", opts.random_samples,
                 "Samples for the random bipartition baseline")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--random-seed", opts.random_seed,
                 "Random bipartition baseline seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational MaxCut solver on logarithmically many qubits"};
  app.require_subcommand(1);
  std::ostringstream version;
  version << logcut::kToolName << ' ' << logcut::kToolVersion;
  app.set_version_flag("--version", version.str());

  // solve
  auto* solve = app.add_subcommand(
      "solve", "Optimize the ansatz and report cuts with baselines");
  InstanceCli solve_instance;
  solve_instance.add_to(*solve);
  OutputCli solve_out;
  solve_out.add_to(*solve);
  SolveOptions solve_opts;
  std::string solve_mode = "dense";
  std::optional<int> solve_steepness;
  std::optional<int> solve_stall;
  solve->add_option("--vars", solve_opts.vars,
                    "Number of optimization variables")
      ->check(CLI::PositiveNumber);
  solve->add_option("--steepness", solve_steepness,
                    "Relaxation steepness exponent (default block size + 2)");
  add_mode_options(*solve, solve_mode, solve_opts.shots);
  solve->add_option("--noise", solve_opts.noise,
                    "Multiplicative objective noise level")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--seeds", solve_opts.seeds,
                    "Optimizer seeds, one run per seed")
      ->delimiter(',');
  add_ga_options(*solve, solve_opts.ga, solve_stall);
  add_baseline_options(*solve, solve_opts);
  add_config_option(*solve);

  // landscape
  auto* landscape = app.add_subcommand(
      "landscape", "Profile the single-variable objective over [0, 2pi)");
  InstanceCli landscape_instance;
  landscape_instance.add_to(*landscape);
  OutputCli landscape_out;
  landscape_out.add_to(*landscape);
  logcut::LandscapeOptions landscape_opts;
  std::string landscape_mode = "dense";
  landscape->add_option("--points", landscape_opts.points, "Grid points")
      ->check(CLI::PositiveNumber);
  add_mode_options(*landscape, landscape_mode, landscape_opts.shots);
  landscape->add_option("--sample-seed", landscape_opts.sample_seed,
                        "Base seed for pauli-sampled grid points");
  add_config_option(*landscape);

  // sweep-vars
  auto* sweep = app.add_subcommand(
      "sweep-vars", "Sweep the variable count and report cut statistics");
  InstanceCli sweep_instance;
  sweep_instance.add_to(*sweep);
  OutputCli sweep_out;
  sweep_out.add_to(*sweep);
  logcut::SweepOptions sweep_opts;
  std::optional<int> sweep_stall;
  sweep->add_option("--vars", sweep_opts.vars_list,
                    "Variable counts to sweep")
      ->required()
      ->delimiter(',');
  sweep->add_option("--repeats", sweep_opts.repeats,
                    "Noisy repetitions per variable count")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--noise", sweep_opts.noise,
                    "Multiplicative objective noise level")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--seed", sweep_opts.ga.seed, "Optimizer seed");
  sweep->add_option("--noise-seed", sweep_opts.noise_seed_base,
                    "Base seed for the per-repeat noise streams");
  add_ga_options(*sweep, sweep_opts.ga, sweep_stall);
  add_config_option(*sweep);

  // compare
  auto* compare = app.add_subcommand(
      "compare", "Run several methods on one instance side by side");
  InstanceCli compare_instance;
  compare_instance.add_to(*compare);
  OutputCli compare_out;
  compare_out.add_to(*compare);
  SolveOptions compare_opts;
  std::vector<std::string> compare_methods;
  std::string compare_mode = "dense";
  std::optional<int> compare_steepness;
  std::optional<int> compare_stall;
  compare->add_option("--methods", compare_methods, "Methods to run")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember({"ansatz", "gw", "exact", "random"}));
  compare->add_option("--vars", compare_opts.vars,
                      "Number of optimization variables")
      ->check(CLI::PositiveNumber);
  compare->add_option("--steepness", compare_steepness,
                      "Relaxation steepness exponent");
  add_mode_options(*compare, compare_mode, compare_opts.shots);
  compare->add_option("--noise", compare_opts.noise,
                      "Multiplicative objective noise level")
      ->check(CLI::NonNegativeNumber);
  compare->add_option("--seeds", compare_opts.seeds,
                      "Optimizer seeds, one run per seed")
      ->delimiter(',');
  add_ga_options(*compare, compare_opts.ga, compare_stall);
  add_baseline_options(*compare, compare_opts);
  add_config_option(*compare);

  try {
    app.parse(argc, argv);
    // A config file fills in flags the command line left unset; applying it
    // is a reparse of the original arguments plus the file-derived ones.
    CLI::App* active = app.get_subcommands().at(0);
    const std::string config_path =
        active->get_option("--config")->as<std::string>();
    if (!config_path.empty()) {
      const std::vector<std::string> extra =
          config_tokens(*active, config_path);
      if (!extra.empty()) {
        std::vector<std::string> args;
        for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
        args.insert(args.end(), extra.begin(), extra.end());
        std::reverse(args.begin(), args.end());
        app.parse(args);
      }
    }
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    std::unique_ptr<std::ofstream> file_holder;
    if (solve->parsed()) {
      solve_opts.mode = parse_kind(solve_mode);
      solve_opts.steepness = solve_steepness;
      solve_opts.ga.stall_limit = solve_stall;
      const Instance inst = solve_instance.build();
      logcut::run_solve(inst, solve_opts, solve_out.open(file_holder));
    } else if (landscape->parsed()) {
      landscape_opts.mode = parse_kind(landscape_mode);
      const Instance inst = landscape_instance.build();
      logcut::run_landscape(inst, landscape_opts,
                            landscape_out.open(file_holder));
    } else if (sweep->parsed()) {
      sweep_opts.ga.stall_limit = sweep_stall;
      const Instance inst = sweep_instance.build();
      logcut::run_sweep_vars(inst, sweep_opts, sweep_out.open(file_holder));
    } else if (compare->parsed()) {
      compare_opts.mode = parse_kind(compare_mode);
      compare_opts.steepness = compare_steepness;
      compare_opts.ga.stall_limit = compare_stall;
      const Instance inst = compare_instance.build();
      std::ostream& out = compare_out.open(file_holder);
      out << logcut::run_compare(inst, compare_methods, compare_opts).dump(2)
          << '\n';
    }
  } catch (const CLI::ParseError& e) {
    // Missing or malformed instance flags surface here, after parsing.
    app.exit(e);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

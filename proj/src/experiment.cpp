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

#include "logcut/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "logcut/parallel.hpp"
#include "logcut/relaxation.hpp"
#include "logcut/rng.hpp"
#include "logcut/version.hpp"

namespace logcut {

namespace {

constexpr std::uint64_t kSampleSalt = 0x73616d70ULL;
constexpr std::uint64_t kNoiseSeedSalt = 0x6e6fULL;

const char* kind_name(EvalMode::Kind kind) {
  switch (kind) {
    case EvalMode::Kind::kDense:
      return "dense";
    case EvalMode::Kind::kPauliExact:
      return "pauli-exact";
    case EvalMode::Kind::kPauliSampled:
      return "pauli-sampled";
  }
  return "unknown";
}

int default_gw_rank(const Graph& g) {
  const int rank =
      static_cast<int>(std::ceil(std::sqrt(2.0 * g.num_vertices())));
  return std::max(rank, 2);
}

AnsatzLayout layout_for(const Instance& inst, const SolveOptions& opts) {
  if (opts.steepness) {
    return AnsatzLayout(inst.qubits, opts.vars, *opts.steepness);
  }
  return AnsatzLayout(inst.qubits, opts.vars);
}

// Objective evaluating the diagonal ansatz in the requested mode. In the
// sampled mode each call gets its own sampling stream, keyed by the call
// counter, so repeated evaluations stay independent yet reproducible.
Objective make_objective(const Instance& inst, const AnsatzLayout& layout,
                         const SolveOptions& opts, std::uint64_t ga_seed) {
  std::shared_ptr<const CutEvaluator> evaluator;
  if (opts.mode != EvalMode::Kind::kDense) {
    evaluator = std::make_shared<const CutEvaluator>(inst.lap);
  }
  const std::uint64_t sample_base = rng::derive_key(ga_seed, {kSampleSalt});
  auto calls = std::make_shared<std::atomic<std::uint64_t>>(0);

  Objective objective = [&inst, layout, mode = opts.mode, shots = opts.shots,
                         evaluator, sample_base,
                         calls](const std::vector<double>& xs) {
    const PhaseVector u = encode_phases(xs, layout);
    switch (mode) {
      case EvalMode::Kind::kDense:
        return n_cuts(inst.lap, u, EvalMode::dense());
      case EvalMode::Kind::kPauliExact:
        return evaluator->evaluate(u, EvalMode::pauli_exact());
      case EvalMode::Kind::kPauliSampled: {
        const std::uint64_t k = calls->fetch_add(1);
        return evaluator->evaluate(
            u, EvalMode::pauli_sampled(shots,
                                       rng::derive_key(sample_base, {k})));
      }
    }
    throw std::logic_error("unreachable evaluation mode");
  };

  if (opts.noise > 0.0) {
    objective = with_noise(std::move(objective), opts.noise,
                           rng::derive_key(ga_seed, {kNoiseSeedSalt}));
  }
  return objective;
}

nlohmann::json graph_json(const Instance& inst) {
  nlohmann::json j;
  j["source"] = inst.source.kind;
  j["path"] = inst.source.kind == "file" ? nlohmann::json(inst.source.path)
                                         : nlohmann::json(nullptr);
  j["degree"] = inst.source.kind == "random-regular"
                    ? nlohmann::json(inst.source.degree)
                    : nlohmann::json(nullptr);
  j["generator_seed"] = inst.source.kind == "random-regular"
                            ? nlohmann::json(inst.source.seed)
                            : nlohmann::json(nullptr);
  j["vertices"] = inst.graph.num_vertices();
  j["edges"] = inst.graph.num_edges();
  j["padded_vertices"] = inst.padded.num_vertices();
  j["hash"] = inst.hash;
  return j;
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << h;
  return out.str();
}

Instance::Instance(Graph g, GraphSource src)
    : graph(std::move(g)),
      padded(pad_to_power_of_two(graph)),
      lap(laplacian(padded)),
      source(std::move(src)),
      hash(fnv1a_hex(to_edge_list(graph))),
      qubits(std::countr_zero(
          static_cast<unsigned>(padded.num_vertices()))) {
  if (graph.num_vertices() < 2) {
    throw std::invalid_argument("an instance needs at least two vertices");
  }
}

Instance instance_from_file(const std::string& path) {
  return Instance(load_graph(path), GraphSource{"file", path, 0, 0});
}

Instance instance_random_regular(int n_vertices, int degree,
                                 std::uint64_t seed) {
  return Instance(random_regular_graph(n_vertices, degree, seed),
                  GraphSource{"random-regular", "", degree, seed});
}

nlohmann::json solve_record(const Instance& inst, const SolveOptions& opts,
                            std::uint64_t ga_seed) {
  const auto start = std::chrono::steady_clock::now();
  const AnsatzLayout layout = layout_for(inst, opts);
  const Objective objective = make_objective(inst, layout, opts, ga_seed);

  GAConfig ga = opts.ga;
  ga.seed = ga_seed;
  ga.bounds.assign(static_cast<std::size_t>(opts.vars),
                   {0.0, 2.0 * std::numbers::pi});
  const RunResult run = optimize(objective, ga);

  const PartitionVector partition = decode_partition(run.best_xs, layout);
  const double cut = cut_value(inst.lap, partition);

  const int gw_rank =
      opts.gw_rank > 0 ? opts.gw_rank : default_gw_rank(inst.graph);
  const MaxCutResult gw =
      gw_maxcut(inst.graph, gw_rank, opts.gw_roundings, opts.gw_seed);
  const BipartitionStats stats = random_bipartition_stats(
      inst.graph, opts.random_samples, opts.random_seed);

  nlohmann::json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["graph"] = graph_json(inst);
  j["layout"] = {{"qubits", layout.qubits},
                 {"vars", layout.vars},
                 {"block_size", layout.block_size},
                 {"steepness", layout.steepness}};
  j["mode"] = {
      {"kind", kind_name(opts.mode)},
      {"shots", opts.mode == EvalMode::Kind::kPauliSampled
                    ? nlohmann::json(opts.shots)
                    : nlohmann::json(nullptr)},
      {"sample_seed_base",
       opts.mode == EvalMode::Kind::kPauliSampled
           ? nlohmann::json(rng::derive_key(ga_seed, {kSampleSalt}))
           : nlohmann::json(nullptr)}};
  j["noise"] = {
      {"level", opts.noise},
      {"seed", opts.noise > 0.0
                   ? nlohmann::json(rng::derive_key(ga_seed, {kNoiseSeedSalt}))
                   : nlohmann::json(nullptr)}};
  j["ga"] = {{"population", ga.population},
             {"max_iterations", ga.max_iterations},
             {"mutation_prob", ga.mutation_prob},
             {"crossover_prob", ga.crossover_prob},
             {"elitism_count", ga.elitism_count},
             {"parents_fraction", ga.parents_fraction},
             {"bound_lo", 0.0},
             {"bound_hi", 2.0 * std::numbers::pi},
             {"seed", ga.seed},
             {"stall_limit", ga.stall_limit ? nlohmann::json(*ga.stall_limit)
                                            : nlohmann::json(nullptr)}};
  j["result"] = {{"best_objective", run.best_objective},
                 {"best_xs", run.best_xs},
                 {"history", run.history},
                 {"evaluations", run.evaluations},
                 {"nan_evaluations", run.nan_evaluations}};
  j["partition"] = partition.signs;
  j["cut"] = cut;
  j["baselines"] = {
      {"gw_cut", gw.cut},
      {"gw_rank", gw_rank},
      {"gw_roundings", opts.gw_roundings},
      {"gw_seed", opts.gw_seed},
      {"random_mean", stats.mean},
      {"random_stddev", stats.stddev},
      {"random_samples", opts.random_samples},
      {"random_seed", opts.random_seed},
      {"exact_cut", inst.graph.num_vertices() <= 24
                        ? nlohmann::json(exact_maxcut(inst.graph).cut)
                        : nlohmann::json(nullptr)}};
  if (gw.cut > 0.0) {
    const RatioBounds bounds = ratio_bounds(cut, gw.cut);
    j["ratio_bounds"] = {{"lower", bounds.lower}, {"upper", bounds.upper}};
  } else {
    j["ratio_bounds"] = nullptr;
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  j["duration_seconds"] = elapsed.count();
  return j;
}

void run_solve(const Instance& inst, const SolveOptions& opts,
               std::ostream& out) {
  if (opts.seeds.empty()) {
    throw std::invalid_argument("need at least one seed");
  }
  std::vector<std::string> lines(opts.seeds.size());
  parallel_for(opts.seeds.size(), [&](std::size_t i) {
    lines[i] = solve_record(inst, opts, opts.seeds[i]).dump();
  });
  for (const std::string& line : lines) out << line << '\n';
}

void run_landscape(const Instance& inst, const LandscapeOptions& opts,
                   std::ostream& out) {
  if (opts.points < 1) {
    throw std::invalid_argument("need at least one grid point");
  }
  const AnsatzLayout layout(inst.qubits, 1);
  std::shared_ptr<const CutEvaluator> evaluator;
  if (opts.mode != EvalMode::Kind::kDense) {
    evaluator = std::make_shared<const CutEvaluator>(inst.lap);
  }

  std::vector<double> xs(static_cast<std::size_t>(opts.points));
  std::vector<double> values(static_cast<std::size_t>(opts.points));
  parallel_for(static_cast<std::size_t>(opts.points), [&](std::size_t i) {
    const double x = 2.0 * std::numbers::pi * static_cast<double>(i) /
                     static_cast<double>(opts.points);
    const PhaseVector u = encode_phases(std::span<const double>(&x, 1),
                                        layout);
    double value = 0.0;
    switch (opts.mode) {
      case EvalMode::Kind::kDense:
        value = n_cuts(inst.lap, u, EvalMode::dense());
        break;
      case EvalMode::Kind::kPauliExact:
        value = evaluator->evaluate(u, EvalMode::pauli_exact());
        break;
      case EvalMode::Kind::kPauliSampled:
        value = evaluator->evaluate(
            u, EvalMode::pauli_sampled(
                   opts.shots, rng::derive_key(opts.sample_seed, {i})));
        break;
    }
    xs[i] = x;
    values[i] = value;
  });

  out << "x,n_cuts\n" << std::setprecision(17);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << xs[i] << ',' << values[i] << '\n';
  }
}

void run_sweep_vars(const Instance& inst, const SweepOptions& opts,
                    std::ostream& out) {
  if (opts.vars_list.empty()) {
    throw std::invalid_argument("need at least one variable count");
  }
  if (opts.repeats < 1) {
    throw std::invalid_argument("need at least one repeat");
  }

  const std::size_t n_rows = opts.vars_list.size();
  const std::size_t repeats = static_cast<std::size_t>(opts.repeats);
  std::vector<double> cuts(n_rows * repeats, 0.0);

  parallel_for(n_rows * repeats, [&](std::size_t item) {
    const std::size_t row = item / repeats;
    const std::size_t rep = item % repeats;
    const int vars = opts.vars_list[row];
    const AnsatzLayout layout(inst.qubits, vars);

    Objective objective = [&inst, layout](const std::vector<double>& xs) {
      return n_cuts(inst.lap, encode_phases(xs, layout), EvalMode::dense());
    };
    if (opts.noise > 0.0) {
      objective = with_noise(
          std::move(objective), opts.noise,
          rng::derive_key(opts.noise_seed_base,
                          {static_cast<std::uint64_t>(vars), rep}));
    }

    GAConfig ga = opts.ga;
    ga.bounds.assign(static_cast<std::size_t>(vars),
                     {0.0, 2.0 * std::numbers::pi});
    const RunResult run = optimize(objective, ga);
    cuts[item] = cut_value(inst.lap, decode_partition(run.best_xs, layout));
  });

  out << "vars,mean_cut,min_cut,max_cut\n" << std::setprecision(17);
  for (std::size_t row = 0; row < n_rows; ++row) {
    double sum = 0.0;
    double lo = cuts[row * repeats];
    double hi = lo;
    for (std::size_t rep = 0; rep < repeats; ++rep) {
      const double c = cuts[row * repeats + rep];
      sum += c;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    out << opts.vars_list[row] << ',' << sum / static_cast<double>(repeats)
        << ',' << lo << ',' << hi << '\n';
  }
}

nlohmann::json run_compare(const Instance& inst,
                           const std::vector<std::string>& methods,
                           const SolveOptions& opts) {
  if (methods.empty()) {
    throw std::invalid_argument("need at least one method to compare");
  }
  for (const std::string& m : methods) {
    if (m != "ansatz" && m != "gw" && m != "exact" && m != "random") {
      throw std::invalid_argument("unknown method: " + m);
    }
  }
  const auto requested = [&](const char* name) {
    return std::find(methods.begin(), methods.end(), name) != methods.end();
  };

  nlohmann::json result;
  result["tool"] = kToolName;
  result["version"] = kToolVersion;
  result["graph"] = graph_json(inst);
  nlohmann::json& out = result["methods"];
  out = nlohmann::json::object();

  double ansatz_cut = -1.0;
  if (requested("ansatz")) {
    if (opts.seeds.empty()) {
      throw std::invalid_argument("need at least one seed");
    }
    const AnsatzLayout layout = layout_for(inst, opts);
    std::vector<double> cuts(opts.seeds.size(), 0.0);
    std::vector<double> objectives(opts.seeds.size(), 0.0);
    parallel_for(opts.seeds.size(), [&](std::size_t i) {
      const std::uint64_t seed = opts.seeds[i];
      GAConfig ga = opts.ga;
      ga.seed = seed;
      ga.bounds.assign(static_cast<std::size_t>(opts.vars),
                       {0.0, 2.0 * std::numbers::pi});
      const RunResult run =
          optimize(make_objective(inst, layout, opts, seed), ga);
      cuts[i] = cut_value(inst.lap, decode_partition(run.best_xs, layout));
      objectives[i] = run.best_objective;
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      if (cuts[i] > cuts[best]) best = i;
    }
    ansatz_cut = cuts[best];
    out["ansatz"] = {{"cut", cuts[best]},
                     {"best_objective", objectives[best]},
                     {"best_seed", opts.seeds[best]},
                     {"vars", opts.vars},
                     {"mode", kind_name(opts.mode)},
                     {"seeds", opts.seeds}};
  }

  double gw_cut = -1.0;
  if (requested("gw")) {
    const int rank =
        opts.gw_rank > 0 ? opts.gw_rank : default_gw_rank(inst.graph);
    const MaxCutResult gw =
        gw_maxcut(inst.graph, rank, opts.gw_roundings, opts.gw_seed);
    gw_cut = gw.cut;
    out["gw"] = {{"cut", gw.cut},
                 {"rank", rank},
                 {"roundings", opts.gw_roundings},
                 {"seed", opts.gw_seed}};
  }

  if (requested("exact")) {
    out["exact"] = {{"cut", exact_maxcut(inst.graph).cut}};
  }

  if (requested("random")) {
    const BipartitionStats stats = random_bipartition_stats(
        inst.graph, opts.random_samples, opts.random_seed);
    out["random"] = {{"mean", stats.mean},
                     {"stddev", stats.stddev},
                     {"samples", opts.random_samples},
                     {"seed", opts.random_seed}};
  }

  if (ansatz_cut >= 0.0 && gw_cut > 0.0) {
    const RatioBounds bounds = ratio_bounds(ansatz_cut, gw_cut);
    result["ratio_bounds"] = {{"lower", bounds.lower},
                              {"upper", bounds.upper}};
  }
  return result;
}

}  // namespace logcut

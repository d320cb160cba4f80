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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "logcut/baselines.hpp"
#include "logcut/genetic.hpp"
#include "logcut/graph.hpp"
#include "logcut/statevector.hpp"

namespace logcut {

// 64-bit FNV-1a of a byte string, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

// Where a benchmark instance came from, enough to regenerate it when the
// source was a generator.
struct GraphSource {
  std::string kind;  // "file" or "random-regular"
  std::string path;
  int degree = 0;
  std::uint64_t seed = 0;
};

// A benchmark instance with its padded form and Laplacian built once.
struct Instance {
  Graph graph;
  Graph padded;
  Laplacian lap;
  GraphSource source;
  std::string hash;  // over the canonical edge list of the original graph
  int qubits = 0;

  explicit Instance(Graph g, GraphSource src = {"file", "", 0, 0});
};

Instance instance_from_file(const std::string& path);
Instance instance_random_regular(int n_vertices, int degree,
                                 std::uint64_t seed);

// Options shared by the solve and compare runs. The genetic bounds are
// always [0, 2*pi] per variable and need not be set.
struct SolveOptions {
  int vars = 8;
  std::optional<int> steepness;
  EvalMode::Kind mode = EvalMode::Kind::kDense;
  int shots = 8192;
  double noise = 0.0;
  GAConfig ga;
  std::vector<std::uint64_t> seeds = {1};
  int gw_rank = 0;  // 0 selects the default rank
  int gw_roundings = 200;
  std::uint64_t gw_seed = 1;
  int random_samples = 20000;
  std::uint64_t random_seed = 1;
};

// One optimization run plus baselines, as a self-contained JSON record.
// The reported cut is always recomputed classically from the decoded
// partition, never taken from the objective value.
nlohmann::json solve_record(const Instance& inst, const SolveOptions& opts,
                            std::uint64_t ga_seed);

// One JSON line per seed in opts.seeds, in seed order.
void run_solve(const Instance& inst, const SolveOptions& opts,
               std::ostream& out);

struct LandscapeOptions {
  int points = 100;
  EvalMode::Kind mode = EvalMode::Kind::kDense;
  int shots = 8192;
  std::uint64_t sample_seed = 1;
};

// Single-variable objective profile over a uniform grid on [0, 2*pi), as
// CSV with header "x,n_cuts". In the sampled mode each grid point uses a
// sampling stream keyed by (sample_seed, point index).
void run_landscape(const Instance& inst, const LandscapeOptions& opts,
                   std::ostream& out);

struct SweepOptions {
  std::vector<int> vars_list;
  int repeats = 20;
  double noise = 0.15;
  GAConfig ga;
  std::uint64_t noise_seed_base = 0;
};

// Cut quality as a function of the variable count, as CSV with header
// "vars,mean_cut,min_cut,max_cut". Repeats share the genetic seed and
// differ only in the noise stream, so with zero noise min equals max.
void run_sweep_vars(const Instance& inst, const SweepOptions& opts,
                    std::ostream& out);

// Runs the requested methods ("ansatz", "gw", "exact", "random") on one
// instance and reports their cuts side by side.
nlohmann::json run_compare(const Instance& inst,
                           const std::vector<std::string>& methods,
                           const SolveOptions& opts);

}  // namespace logcut

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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace logcut {

// Real-coded genetic maximizer. Candidates live in a box; selection is
// tournament of two over the best fraction of the population, crossover is
// per-gene uniform, mutation is per-gene uniform reset, and a fixed number
// of elites survive each generation. Elites are re-evaluated every
// generation so noisy objectives cannot lock in a lucky draw.
struct GAConfig {
  int population = 14;
  int max_iterations = 200;
  double mutation_prob = 0.1;
  double crossover_prob = 0.5;
  int elitism_count = 1;
  double parents_fraction = 0.3;
  std::vector<std::array<double, 2>> bounds;
  std::uint64_t seed = 0;
  std::optional<int> stall_limit;
};

struct RunResult {
  std::vector<double> best_xs;
  double best_objective = 0.0;
  // Best objective seen up to each generation; never decreases.
  std::vector<double> history;
  std::int64_t evaluations = 0;
  std::int64_t nan_evaluations = 0;
};

using Objective = std::function<double(const std::vector<double>&)>;

// Maximizes the objective over the configured box. Internally minimizes the
// negated objective; an evaluation returning NaN is treated as minus
// infinity and counted, never propagated. Deterministic in config.seed:
// every random decision draws from a stream keyed by (seed, generation,
// slot), so results do not depend on threading or evaluation order.
RunResult optimize(const Objective& objective, const GAConfig& config);

// Wraps an objective with multiplicative noise: call number k returns
// value * (1 + level * u_k) with u_k uniform in [-1, 1] drawn from a stream
// keyed by (seed, k). A level of zero returns the objective unchanged.
Objective with_noise(Objective objective, double level, std::uint64_t seed);

}  // namespace logcut

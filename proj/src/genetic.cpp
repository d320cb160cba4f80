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

#include "logcut/genetic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "logcut/rng.hpp"

namespace logcut {

namespace {

constexpr std::uint64_t kInitSalt = 0;
constexpr std::uint64_t kNoiseSalt = 0x6e6f697365ULL;

void check_config(const GAConfig& config) {
  if (config.population < 2) {
    throw std::invalid_argument("population must be at least 2");
  }
  if (config.max_iterations < 1) {
    throw std::invalid_argument("need at least one iteration");
  }
  if (config.mutation_prob < 0.0 || config.mutation_prob > 1.0 ||
      config.crossover_prob < 0.0 || config.crossover_prob > 1.0) {
    throw std::invalid_argument("probabilities must lie in [0, 1]");
  }
  if (config.elitism_count < 0 || config.elitism_count >= config.population) {
    throw std::invalid_argument(
        "elitism count must lie in [0, population)");
  }
  if (!(config.parents_fraction > 0.0) || config.parents_fraction > 1.0) {
    throw std::invalid_argument("parents fraction must lie in (0, 1]");
  }
  if (config.bounds.empty()) {
    throw std::invalid_argument("bounds must name at least one variable");
  }
  for (const auto& b : config.bounds) {
    if (!(b[0] < b[1]) || !std::isfinite(b[0]) || !std::isfinite(b[1])) {
      throw std::invalid_argument("each bound needs finite lo < hi");
    }
  }
  if (config.stall_limit && *config.stall_limit < 1) {
    throw std::invalid_argument("stall limit must be positive");
  }
}

}  // namespace

RunResult optimize(const Objective& objective, const GAConfig& config) {
  check_config(config);
  const int pop = config.population;
  const std::size_t n_vars = config.bounds.size();
  const double inf = std::numeric_limits<double>::infinity();

  RunResult result;
  std::vector<std::vector<double>> genes(
      static_cast<std::size_t>(pop), std::vector<double>(n_vars, 0.0));
  std::vector<double> cost(static_cast<std::size_t>(pop), inf);

  double best_cost = inf;
  std::vector<double> best_xs;

  // Cost is the negated objective, so the loop below minimizes. A NaN
  // evaluation becomes +inf cost: it loses every comparison and can never
  // become the incumbent unless nothing finite was ever seen.
  auto evaluate = [&](const std::vector<double>& xs) {
    const double value = objective(xs);
    ++result.evaluations;
    double c = inf;
    if (std::isnan(value)) {
      ++result.nan_evaluations;
    } else {
      c = -value;
    }
    if (best_xs.empty() || c < best_cost) {
      best_cost = c;
      best_xs = xs;
    }
    return c;
  };

  for (int i = 0; i < pop; ++i) {
    auto gen = rng::derive_stream(config.seed, {kInitSalt,
                                                static_cast<std::uint64_t>(i)});
    for (std::size_t j = 0; j < n_vars; ++j) {
      genes[static_cast<std::size_t>(i)][j] =
          rng::uniform(gen, config.bounds[j][0], config.bounds[j][1]);
    }
    cost[static_cast<std::size_t>(i)] =
        evaluate(genes[static_cast<std::size_t>(i)]);
  }

  const int pool_size = std::clamp(
      static_cast<int>(std::ceil(config.parents_fraction * pop)), 1, pop);
  std::vector<int> order(static_cast<std::size_t>(pop));
  double last_improvement = best_cost;
  int since_improvement = 0;

  for (int generation = 1; generation <= config.max_iterations; ++generation) {
    // Rank with index tiebreak so the ordering is reproducible.
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const double ca = cost[static_cast<std::size_t>(a)];
      const double cb = cost[static_cast<std::size_t>(b)];
      return ca != cb ? ca < cb : a < b;
    });

    std::vector<std::vector<double>> next(genes.size());
    for (int i = 0; i < config.elitism_count; ++i) {
      next[static_cast<std::size_t>(i)] =
          genes[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    }

    for (int slot = config.elitism_count; slot < pop; ++slot) {
      auto gen = rng::derive_stream(
          config.seed, {static_cast<std::uint64_t>(generation),
                        static_cast<std::uint64_t>(slot)});
      auto pick_parent = [&] {
        const int a = order[rng::uniform_index(
            gen, static_cast<std::uint64_t>(pool_size))];
        const int b = order[rng::uniform_index(
            gen, static_cast<std::uint64_t>(pool_size))];
        const double ca = cost[static_cast<std::size_t>(a)];
        const double cb = cost[static_cast<std::size_t>(b)];
        if (ca != cb) return ca < cb ? a : b;
        return std::min(a, b);
      };
      const int pa = pick_parent();
      const int pb = pick_parent();

      std::vector<double> child = genes[static_cast<std::size_t>(pa)];
      for (std::size_t j = 0; j < n_vars; ++j) {
        if (rng::uniform01(gen) < config.crossover_prob) {
          child[j] = genes[static_cast<std::size_t>(pb)][j];
        }
      }
      for (std::size_t j = 0; j < n_vars; ++j) {
        if (rng::uniform01(gen) < config.mutation_prob) {
          child[j] = rng::uniform(gen, config.bounds[j][0],
                                  config.bounds[j][1]);
        }
      }
      next[static_cast<std::size_t>(slot)] = std::move(child);
    }

    genes = std::move(next);
    // Everyone is evaluated fresh, elites included, in slot order so that
    // objectives with internal call counters stay reproducible.
    for (int i = 0; i < pop; ++i) {
      cost[static_cast<std::size_t>(i)] =
          evaluate(genes[static_cast<std::size_t>(i)]);
    }

    result.history.push_back(best_cost == inf ? -inf : -best_cost);

    if (best_cost < last_improvement) {
      last_improvement = best_cost;
      since_improvement = 0;
    } else {
      ++since_improvement;
    }
    if (config.stall_limit && since_improvement >= *config.stall_limit) break;
  }

  result.best_xs = std::move(best_xs);
  result.best_objective = best_cost == inf ? -inf : -best_cost;
  return result;
}

Objective with_noise(Objective objective, double level, std::uint64_t seed) {
  if (level < 0.0 || !std::isfinite(level)) {
    throw std::invalid_argument("noise level must be finite and nonnegative");
  }
  if (level == 0.0) return objective;
  auto calls = std::make_shared<std::atomic<std::uint64_t>>(0);
  return [objective = std::move(objective), level, seed,
          calls](const std::vector<double>& xs) {
    const std::uint64_t index = calls->fetch_add(1);
    auto gen = rng::derive_stream(seed, {kNoiseSalt, index});
    const double u = 2.0 * rng::uniform01(gen) - 1.0;
    return objective(xs) * (1.0 + level * u);
  };
}

}  // namespace logcut

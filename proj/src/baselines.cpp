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

#include "logcut/baselines.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "logcut/rng.hpp"

namespace logcut {

namespace {

constexpr int kExactLimit = 24;
constexpr int kGwRestarts = 20;
constexpr int kGwMaxSweeps = 500;
constexpr std::uint64_t kRestartSalt = 1;
constexpr std::uint64_t kRoundingSalt = 2;

}  // namespace

MaxCutResult exact_maxcut(const Graph& g) {
  const int nv = g.num_vertices();
  if (nv > kExactLimit) {
    throw std::invalid_argument(
        "exact search is limited to 24 vertices; use gw_maxcut for larger "
        "graphs");
  }

  std::vector<std::vector<std::pair<int, double>>> adj(
      static_cast<std::size_t>(nv));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.weight});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.weight});
  }

  // Walk all partitions with vertex 0 pinned to one side, flipping a single
  // vertex per step along a Gray code and updating the cut incrementally.
  std::vector<int> signs(static_cast<std::size_t>(nv), 1);
  double cut = 0.0;
  double best_cut = 0.0;
  std::uint32_t best_code = 0;

  const std::uint32_t steps =
      nv > 1 ? (std::uint32_t{1} << (nv - 1)) - 1 : 0;
  for (std::uint32_t t = 1; t <= steps; ++t) {
    const int v = std::countr_zero(t) + 1;
    signs[static_cast<std::size_t>(v)] = -signs[static_cast<std::size_t>(v)];
    for (const auto& [u, w] : adj[static_cast<std::size_t>(v)]) {
      if (signs[static_cast<std::size_t>(u)] !=
          signs[static_cast<std::size_t>(v)]) {
        cut += w;
      } else {
        cut -= w;
      }
    }
    if (cut > best_cut) {
      best_cut = cut;
      best_code = t ^ (t >> 1);
    }
  }

  MaxCutResult result;
  result.partition.signs.assign(static_cast<std::size_t>(nv), 1);
  for (int v = 1; v < nv; ++v) {
    if ((best_code >> (v - 1)) & 1) {
      result.partition.signs[static_cast<std::size_t>(v)] = -1;
    }
  }
  // Recompute from the winning partition so float weights do not carry
  // accumulated increment error into the reported value.
  result.cut = cut_weight(g, result.partition);
  return result;
}

namespace {

double relaxation_objective(const Graph& g, const Eigen::MatrixXd& v) {
  double sum = 0.0;
  for (const Edge& e : g.edges()) {
    sum += e.weight * (1.0 - v.row(e.u).dot(v.row(e.v))) * 0.5;
  }
  return sum;
}

Eigen::MatrixXd optimize_relaxation(const Graph& g, int rank,
                                    std::uint64_t seed) {
  const int nv = g.num_vertices();
  const double max_deg = g.max_weighted_degree();
  // The objective gradient is (max_deg / 2)-Lipschitz on the product of
  // spheres, so this step size keeps plain projected ascent stable.
  const double step = max_deg > 0.0 ? 2.0 / max_deg : 1.0;

  Eigen::MatrixXd best;
  double best_value = -1.0;

  for (int restart = 0; restart < kGwRestarts; ++restart) {
    auto gen = rng::derive_stream(
        seed, {kRestartSalt, static_cast<std::uint64_t>(restart)});
    Eigen::MatrixXd v(nv, rank);
    for (int i = 0; i < nv; ++i) {
      for (int j = 0; j < rank; ++j) v(i, j) = rng::normal(gen);
      const double norm = v.row(i).norm();
      if (norm > 1e-12) {
        v.row(i) /= norm;
      } else {
        v(i, 0) = 1.0;
      }
    }

    double value = relaxation_objective(g, v);
    Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(nv, rank);
    for (int sweep = 0; sweep < kGwMaxSweeps; ++sweep) {
      grad.setZero();
      for (const Edge& e : g.edges()) {
        grad.row(e.u) -= 0.5 * e.weight * v.row(e.v);
        grad.row(e.v) -= 0.5 * e.weight * v.row(e.u);
      }
      for (int i = 0; i < nv; ++i) {
        v.row(i) += step * grad.row(i);
        const double norm = v.row(i).norm();
        if (norm > 1e-12) v.row(i) /= norm;
      }
      const double next_value = relaxation_objective(g, v);
      const bool converged =
          next_value - value <= 1e-10 * (1.0 + std::abs(value));
      value = next_value;
      if (converged) break;
    }

    if (value > best_value) {
      best_value = value;
      best = v;
    }
  }
  return best;
}

}  // namespace

MaxCutResult gw_maxcut(const Graph& g, int rank, int roundings,
                       std::uint64_t seed) {
  if (rank < 2) {
    throw std::invalid_argument("relaxation rank must be at least 2");
  }
  if (roundings < 1) {
    throw std::invalid_argument("need at least one rounding");
  }
  const int nv = g.num_vertices();
  MaxCutResult result;
  result.partition.signs.assign(static_cast<std::size_t>(nv), 1);
  if (g.num_edges() == 0) return result;

  const Eigen::MatrixXd v = optimize_relaxation(g, rank, seed);

  result.cut = -1.0;
  PartitionVector candidate;
  candidate.signs.resize(static_cast<std::size_t>(nv));
  Eigen::VectorXd normal(rank);
  for (int t = 0; t < roundings; ++t) {
    auto gen = rng::derive_stream(
        seed, {kRoundingSalt, static_cast<std::uint64_t>(t)});
    for (int j = 0; j < rank; ++j) normal(j) = rng::normal(gen);
    for (int i = 0; i < nv; ++i) {
      candidate.signs[static_cast<std::size_t>(i)] =
          v.row(i).dot(normal) >= 0.0 ? 1 : -1;
    }
    const double cut = cut_weight(g, candidate);
    if (cut > result.cut) {
      result.cut = cut;
      result.partition = candidate;
    }
  }

  if (result.partition.signs[0] < 0) {
    for (int& s : result.partition.signs) s = -s;
  }
  return result;
}

MaxCutResult gw_maxcut(const Graph& g, std::uint64_t seed) {
  const int rank = static_cast<int>(
      std::ceil(std::sqrt(2.0 * g.num_vertices())));
  return gw_maxcut(g, std::max(rank, 2), 200, seed);
}

RatioBounds ratio_bounds(double cut, double gw_cut) {
  if (!(gw_cut > 0.0)) {
    throw std::invalid_argument("the reference cut must be positive");
  }
  if (cut < 0.0) {
    throw std::invalid_argument("cut weights are nonnegative");
  }
  return RatioBounds{kGwAlpha * cut / gw_cut, cut / gw_cut};
}

}  // namespace logcut

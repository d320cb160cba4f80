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

#include "logcut/graph.hpp"

namespace logcut {

// Approximation guarantee of hyperplane rounding on the semidefinite
// relaxation of MaxCut.
inline constexpr double kGwAlpha = 0.87856;

struct MaxCutResult {
  double cut = 0.0;
  PartitionVector partition;
};

// Exhaustive optimum by Gray-code enumeration of all partitions with the
// first vertex fixed. Exact for integer weights. Guarded to 24 vertices;
// beyond that use gw_maxcut.
MaxCutResult exact_maxcut(const Graph& g);

// MaxCut heuristic in the semidefinite-relaxation family: the relaxation is
// optimized in low-rank factored form by projected gradient ascent with
// restarts, then rounded by random hyperplanes, keeping the best cut. The
// returned cut is always achievable, so it never exceeds the optimum.
// Deterministic in seed; restart r and rounding t draw from streams keyed
// by (seed, r) and (seed, t).
MaxCutResult gw_maxcut(const Graph& g, int rank, int roundings,
                       std::uint64_t seed);

// Defaults: rank ceil(sqrt(2 |V|)), which is above the Barvinok-Pataki
// bound where the factored relaxation has no spurious local optima, and
// 200 roundings.
MaxCutResult gw_maxcut(const Graph& g, std::uint64_t seed);

// Performance window implied by comparing a cut against the relaxation
// heuristic: the true ratio to the optimum lies between
// alpha * cut / gw_cut and cut / gw_cut.
struct RatioBounds {
  double lower = 0.0;
  double upper = 0.0;
};

RatioBounds ratio_bounds(double cut, double gw_cut);

}  // namespace logcut

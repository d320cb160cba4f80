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

#include <Eigen/Dense>
#include <span>

#include "logcut/graph.hpp"

namespace logcut {

// Phase shift that centers the relaxation: with this offset added to its
// argument, relaxation(0, freq, steep) == 0.5 exactly. Requires
// steep >= freq; defined for steepness exponents up to well past 1000.
double centering_offset(int freq, int steep);

// Smoothed counter bit: a [0, 1]-valued function of x that, over one period
// [0, 2*pi), approximates bit `freq` of a binary counter driven by x. The
// transition sharpness grows as 2^(steep - freq); the value at x = 0 is 0.5
// by construction. Never returns NaN or infinity.
double relaxation(double x, int freq, int steep);

// Shape of the diagonal ansatz: `vars` optimization variables drive a
// 2^qubits diagonal, each variable controlling one contiguous block of
// entries through relaxations of increasing frequency. The final diagonal
// entry is pinned to one, which fixes the global phase.
struct AnsatzLayout {
  int qubits;
  int vars;
  int block_size;
  int steepness;

  // Default steepness is block_size + 2, the smallest value that keeps the
  // highest-frequency block saturated.
  AnsatzLayout(int qubits, int vars);
  AnsatzLayout(int qubits, int vars, int steepness);

  int dim() const { return 1 << qubits; }
};

// Unit-modulus diagonal entries of the ansatz.
struct PhaseVector {
  Eigen::VectorXcd phases;

  explicit PhaseVector(Eigen::VectorXcd values);
  int dim() const { return static_cast<int>(phases.size()); }
};

// Diagonal of the ansatz at parameter values xs: entry k carries phase
// pi * relaxation(xs[k / block_size], k % block_size, steepness), and the
// last entry is one.
PhaseVector encode_phases(std::span<const double> xs,
                          const AnsatzLayout& layout);

// Rounds each diagonal entry to the nearer of the two cut phases: a
// relaxation value above one half decodes to -1, otherwise +1. The last
// entry is always +1.
PartitionVector decode_partition(std::span<const double> xs,
                                 const AnsatzLayout& layout);

}  // namespace logcut

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

#include "logcut/relaxation.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace logcut {

namespace {

// ln(-ln(1/2)); the sine level whose double exponential equals one half.
constexpr double kHalfLevel = -0.36651292058166435;

void check_relax_params(int freq, int steep) {
  if (freq < 0) {
    throw std::invalid_argument("frequency index must be nonnegative");
  }
  if (steep < freq) {
    throw std::invalid_argument(
        "steepness exponent must be at least the frequency index");
  }
}

int checked_block_size(int qubits, int vars) {
  if (qubits < 1 || qubits > 20) {
    throw std::invalid_argument("qubit count must be between 1 and 20");
  }
  const int d = 1 << qubits;
  if (vars < 1 || vars > d || d % vars != 0) {
    throw std::invalid_argument(
        "variable count must divide the diagonal dimension");
  }
  return d / vars;
}

}  // namespace

double centering_offset(int freq, int steep) {
  check_relax_params(freq, steep);
  // For steep - freq beyond roughly 1070 the scaled level underflows to
  // zero and the centering property degrades, so the supported range stops
  // just short of that.
  return std::asin(std::ldexp(kHalfLevel, freq - steep));
}

double relaxation(double x, int freq, int steep) {
  const double x0 = centering_offset(freq, steep);
  double y = std::ldexp(x, freq);
  if (!std::isfinite(y)) {
    // The band scaling overflowed; any sine argument this large carries no
    // phase information, so fall back to the centering point to keep the
    // output finite and in range.
    y = 0.0;
  }
  const double s = std::sin(y + x0);
  // Scaling by 2^(steep - freq) may saturate to infinity; the double
  // exponential maps +inf to 0 and -inf to 1, which are the correct limits.
  const double t = std::ldexp(s, steep - freq);
  return std::exp(-std::exp(t));
}

AnsatzLayout::AnsatzLayout(int qubits, int vars)
    : AnsatzLayout(qubits, vars, checked_block_size(qubits, vars) + 2) {}

AnsatzLayout::AnsatzLayout(int qubits, int vars, int steepness)
    : qubits(qubits),
      vars(vars),
      block_size(checked_block_size(qubits, vars)),
      steepness(steepness) {
  if (steepness < block_size + 2) {
    throw std::invalid_argument(
        "steepness must be at least block_size + 2, got " +
        std::to_string(steepness));
  }
}

PhaseVector::PhaseVector(Eigen::VectorXcd values) : phases(std::move(values)) {
  const auto n = phases.size();
  if (n < 1 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("phase vector length must be a power of two");
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    if (std::abs(std::abs(phases(k)) - 1.0) > 1e-12) {
      throw std::invalid_argument("phase vector entries must have modulus 1");
    }
  }
}

PhaseVector encode_phases(std::span<const double> xs,
                          const AnsatzLayout& layout) {
  if (static_cast<int>(xs.size()) != layout.vars) {
    throw std::invalid_argument("expected one parameter per variable");
  }
  const int d = layout.dim();
  Eigen::VectorXcd values(d);
  for (int k = 0; k + 1 < d; ++k) {
    const double theta = relaxation(xs[static_cast<std::size_t>(
                                        k / layout.block_size)],
                                    k % layout.block_size, layout.steepness);
    values(k) = std::polar(1.0, std::numbers::pi * theta);
  }
  values(d - 1) = 1.0;
  return PhaseVector(std::move(values));
}

PartitionVector decode_partition(std::span<const double> xs,
                                 const AnsatzLayout& layout) {
  if (static_cast<int>(xs.size()) != layout.vars) {
    throw std::invalid_argument("expected one parameter per variable");
  }
  const int d = layout.dim();
  PartitionVector v;
  v.signs.resize(static_cast<std::size_t>(d));
  for (int k = 0; k + 1 < d; ++k) {
    const double theta = relaxation(xs[static_cast<std::size_t>(
                                        k / layout.block_size)],
                                    k % layout.block_size, layout.steepness);
    v.signs[static_cast<std::size_t>(k)] = theta > 0.5 ? -1 : 1;
  }
  v.signs[static_cast<std::size_t>(d - 1)] = 1;
  return v;
}

}  // namespace logcut

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
#include <cstdint>
#include <string>
#include <vector>

#include "logcut/graph.hpp"
#include "logcut/statevector.hpp"

namespace logcut {

// One Pauli string with a real coefficient. The string has one character
// per qubit from {I, X, Y, Z}; the leftmost character acts on the highest
// basis-index bit.
struct PauliTerm {
  double coeff = 0.0;
  std::string ops;
};

// Real linear combination of Pauli strings. Terms are unique and sorted by
// string, so equal operators print identically.
struct PauliSum {
  int qubits = 0;
  std::vector<PauliTerm> terms;
};

// Expands a real symmetric matrix of power-of-two dimension in the Pauli
// string basis, dropping zero coefficients. Strings with an odd number of
// Y factors have imaginary matrix elements and cancel for real symmetric
// input, so only even-Y strings are scanned.
PauliSum decompose_symmetric(const Eigen::MatrixXd& matrix);
PauliSum decompose(const Laplacian& lap);

// Dense matrix of the sum; inverse of decompose_symmetric up to roundoff.
Eigen::MatrixXd reconstruct(const PauliSum& sum);

// Exact expectation value of the sum in the given state.
double expectation_exact(const PauliSum& sum, const StateVector& state);

// Monte Carlo estimate: each term is measured with `shots` samples in its
// own rotated basis and the estimates are combined. Identity terms carry no
// sampling error and enter exactly. Deterministic in (seed, shots) and
// independent of thread count.
double expectation_sampled(const PauliSum& sum, const StateVector& state,
                           int shots, std::uint64_t seed);

// Text form, one "<coefficient> <string>" line per term in sorted order
// with 17 significant digits, so reading back reproduces the sum exactly.
std::string to_text(const PauliSum& sum);
PauliSum pauli_sum_from_text(const std::string& text);

}  // namespace logcut

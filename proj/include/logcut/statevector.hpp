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
#include <memory>

#include "logcut/graph.hpp"
#include "logcut/relaxation.hpp"

namespace logcut {

struct PauliSum;

// Normalized pure state over `qubits` qubits, amplitudes in computational
// basis order. Basis index bit b holds qubit b, so the highest bit is the
// leftmost qubit of a ket label.
struct StateVector {
  int qubits;
  Eigen::VectorXcd amps;

  StateVector(int qubits, Eigen::VectorXcd amps);
  int dim() const { return static_cast<int>(amps.size()); }
};

// Uniform superposition over all basis states, the result of one Hadamard
// per qubit on the all-zeros state.
StateVector uniform_state(int qubits);

// Applies a diagonal unitary given by its phase vector.
StateVector apply_diagonal(const StateVector& state, const PhaseVector& u);

// Gate totals for preparing and unpreparing the ansatz on hardware. Not
// used by the simulator, which works on the diagonal directly; reported so
// runs can be costed against a circuit implementation.
struct GateCounts {
  std::int64_t cnot = 0;
  std::int64_t single_qubit = 0;
  std::int64_t total = 0;
};

GateCounts gate_count_estimate(int qubits);

// How a cut objective is evaluated: from the dense quadratic form, from an
// exact Pauli expectation, or from finite sampling of each Pauli term.
struct EvalMode {
  enum class Kind { kDense, kPauliExact, kPauliSampled };

  Kind kind = Kind::kDense;
  int shots = 0;
  std::uint64_t seed = 0;

  static EvalMode dense();
  static EvalMode pauli_exact();
  static EvalMode pauli_sampled(int shots, std::uint64_t seed);
};

// Expected cut weight of the state obtained by pushing the uniform state
// through the diagonal: 2^(qubits-2) times the Laplacian expectation. For
// +-1 phase vectors this equals the classical cut weight exactly.
double n_cuts(const Laplacian& lap, const PhaseVector& u, const EvalMode& mode);

// Caches the Pauli decomposition of one Laplacian so repeated objective
// evaluations share it. Immutable after construction; safe to use from
// several threads at once.
class CutEvaluator {
 public:
  explicit CutEvaluator(Laplacian lap);
  ~CutEvaluator();

  double evaluate(const PhaseVector& u, const EvalMode& mode) const;
  const Laplacian& lap() const { return lap_; }
  const PauliSum& decomposition() const { return *decomposition_; }

 private:
  Laplacian lap_;
  std::shared_ptr<const PauliSum> decomposition_;
};

}  // namespace logcut

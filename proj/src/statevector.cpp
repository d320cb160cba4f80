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

#include "logcut/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "logcut/pauli.hpp"

namespace logcut {

StateVector::StateVector(int qubits, Eigen::VectorXcd amps)
    : qubits(qubits), amps(std::move(amps)) {
  if (qubits < 0 || qubits > 20) {
    throw std::invalid_argument("qubit count must be between 0 and 20");
  }
  if (this->amps.size() != (Eigen::Index{1} << qubits)) {
    throw std::invalid_argument("amplitude count must be 2^qubits");
  }
  if (std::abs(this->amps.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("state vector must be normalized");
  }
}

StateVector uniform_state(int qubits) {
  if (qubits < 0 || qubits > 20) {
    throw std::invalid_argument("qubit count must be between 0 and 20");
  }
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  return StateVector(qubits, Eigen::VectorXcd::Constant(dim, amp));
}

StateVector apply_diagonal(const StateVector& state, const PhaseVector& u) {
  if (u.dim() != state.dim()) {
    throw std::invalid_argument(
        "diagonal dimension does not match the state");
  }
  return StateVector(state.qubits,
                     state.amps.cwiseProduct(u.phases));
}

GateCounts gate_count_estimate(int qubits) {
  if (qubits < 1 || qubits > 40) {
    throw std::invalid_argument("qubit count must be between 1 and 40");
  }
  GateCounts counts;
  counts.cnot = (std::int64_t{1} << qubits) - 2;
  counts.single_qubit = (std::int64_t{1} << qubits) - 2 * qubits + 5;
  counts.total = counts.cnot + counts.single_qubit;
  return counts;
}

EvalMode EvalMode::dense() { return EvalMode{Kind::kDense, 0, 0}; }

EvalMode EvalMode::pauli_exact() { return EvalMode{Kind::kPauliExact, 0, 0}; }

EvalMode EvalMode::pauli_sampled(int shots, std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("shot count must be positive");
  }
  return EvalMode{Kind::kPauliSampled, shots, seed};
}

namespace {

int qubits_for_dim(int dim) {
  if (dim < 1 || !std::has_single_bit(static_cast<unsigned>(dim))) {
    throw std::invalid_argument("dimension must be a power of two");
  }
  return std::countr_zero(static_cast<unsigned>(dim));
}

// The quadratic form u* L u is real for real symmetric L: the cross terms
// of the real and imaginary parts cancel, so it is evaluated as two real
// forms. For +-1 phases this reduces to integer arithmetic.
double dense_quadratic_form(const Laplacian& lap, const PhaseVector& u) {
  const Eigen::VectorXd re = u.phases.real();
  const Eigen::VectorXd im = u.phases.imag();
  return re.dot(lap.m * re) + im.dot(lap.m * im);
}

StateVector prepared_state(const Laplacian& lap, const PhaseVector& u) {
  const int n = qubits_for_dim(lap.dim());
  const double scale = 1.0 / std::sqrt(static_cast<double>(lap.dim()));
  return StateVector(n, u.phases * scale);
}

double from_expectation(int qubits, double expectation) {
  return std::ldexp(expectation, qubits - 2);
}

}  // namespace

double n_cuts(const Laplacian& lap, const PhaseVector& u,
              const EvalMode& mode) {
  if (lap.dim() != u.dim()) {
    throw std::invalid_argument(
        "Laplacian and phase vector dimensions differ");
  }
  const int n = qubits_for_dim(lap.dim());
  switch (mode.kind) {
    case EvalMode::Kind::kDense:
      return 0.25 * dense_quadratic_form(lap, u);
    case EvalMode::Kind::kPauliExact: {
      const PauliSum sum = decompose(lap);
      return from_expectation(n, expectation_exact(sum, prepared_state(lap, u)));
    }
    case EvalMode::Kind::kPauliSampled: {
      const PauliSum sum = decompose(lap);
      return from_expectation(
          n, expectation_sampled(sum, prepared_state(lap, u), mode.shots,
                                 mode.seed));
    }
  }
  throw std::logic_error("unreachable evaluation mode");
}

CutEvaluator::CutEvaluator(Laplacian lap)
    : lap_(std::move(lap)),
      decomposition_(std::make_shared<const PauliSum>(decompose(lap_))) {}

CutEvaluator::~CutEvaluator() = default;

double CutEvaluator::evaluate(const PhaseVector& u,
                              const EvalMode& mode) const {
  if (lap_.dim() != u.dim()) {
    throw std::invalid_argument(
        "Laplacian and phase vector dimensions differ");
  }
  const int n = qubits_for_dim(lap_.dim());
  switch (mode.kind) {
    case EvalMode::Kind::kDense:
      return 0.25 * dense_quadratic_form(lap_, u);
    case EvalMode::Kind::kPauliExact:
      return from_expectation(
          n, expectation_exact(*decomposition_, prepared_state(lap_, u)));
    case EvalMode::Kind::kPauliSampled:
      return from_expectation(
          n, expectation_sampled(*decomposition_, prepared_state(lap_, u),
                                 mode.shots, mode.seed));
  }
  throw std::logic_error("unreachable evaluation mode");
}

}  // namespace logcut

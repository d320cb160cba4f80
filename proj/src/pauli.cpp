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

#include "logcut/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "logcut/parallel.hpp"
#include "logcut/rng.hpp"

namespace logcut {

namespace {

using complexd = std::complex<double>;

constexpr double kDropTolerance = 1e-12;
constexpr std::uint64_t kSamplingSalt = 0x7061756c69ULL;

// Bit masks equivalent to one Pauli string. Acting on a basis state,
// the string sends |k> to i^y_count * (-1)^popcount(k & zy_mask) |k ^ flip_mask>:
// X and Y flip their bit, Z and Y pick up the sign, and each Y contributes
// one factor of i.
struct StringMasks {
  std::uint64_t flip_mask = 0;
  std::uint64_t zy_mask = 0;
  std::uint64_t support = 0;
  int y_count = 0;
};

StringMasks masks_for(const std::string& ops) {
  StringMasks m;
  const int n = static_cast<int>(ops.size());
  for (int p = 0; p < n; ++p) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - p);
    switch (ops[static_cast<std::size_t>(p)]) {
      case 'I':
        break;
      case 'X':
        m.flip_mask |= bit;
        m.support |= bit;
        break;
      case 'Y':
        m.flip_mask |= bit;
        m.zy_mask |= bit;
        m.support |= bit;
        ++m.y_count;
        break;
      case 'Z':
        m.zy_mask |= bit;
        m.support |= bit;
        break;
      default:
        throw std::invalid_argument("Pauli strings may only contain IXYZ");
    }
  }
  return m;
}

int checked_qubits(const PauliSum& sum) {
  if (sum.qubits < 0 || sum.qubits > 16) {
    throw std::invalid_argument("qubit count must be between 0 and 16");
  }
  for (const PauliTerm& term : sum.terms) {
    if (static_cast<int>(term.ops.size()) != sum.qubits) {
      throw std::invalid_argument("term length does not match qubit count");
    }
  }
  return sum.qubits;
}

// Real sign of i^y for even y.
double even_y_sign(int y_count) { return y_count % 4 == 0 ? 1.0 : -1.0; }

void normalize_terms(PauliSum& sum) {
  std::map<std::string, double> combined;
  for (const PauliTerm& term : sum.terms) {
    masks_for(term.ops);  // character validation
    combined[term.ops] += term.coeff;
  }
  sum.terms.clear();
  for (auto& [ops, coeff] : combined) {
    if (coeff != 0.0) sum.terms.push_back({coeff, ops});
  }
}

}  // namespace

PauliSum decompose_symmetric(const Eigen::MatrixXd& matrix) {
  const Eigen::Index dim = matrix.rows();
  if (dim < 1 || matrix.cols() != dim ||
      !std::has_single_bit(static_cast<std::uint64_t>(dim))) {
    throw std::invalid_argument(
        "matrix must be square with power-of-two dimension");
  }
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("matrix must be symmetric");
  }
  const int n = std::countr_zero(static_cast<std::uint64_t>(dim));
  if (n > 10) {
    throw std::invalid_argument(
        "decomposition supports at most 10 qubits; the string count grows "
        "as 4^qubits");
  }

  const std::uint64_t n_strings = std::uint64_t{1} << (2 * n);
  const std::size_t n_chunks = std::min<std::uint64_t>(
      n_strings, static_cast<std::uint64_t>(max_threads()) * 8);
  const std::uint64_t chunk_len = (n_strings + n_chunks - 1) / n_chunks;
  std::vector<std::vector<PauliTerm>> found(n_chunks);

  parallel_for(n_chunks, [&](std::size_t chunk) {
    const std::uint64_t begin = chunk * chunk_len;
    const std::uint64_t end = std::min(n_strings, begin + chunk_len);
    std::string ops(static_cast<std::size_t>(n), 'I');
    for (std::uint64_t code = begin; code < end; ++code) {
      int y_count = 0;
      for (int p = 0; p < n; ++p) {
        const int digit =
            static_cast<int>((code >> (2 * (n - 1 - p))) & 3);
        ops[static_cast<std::size_t>(p)] = "IXYZ"[digit];
        if (digit == 2) ++y_count;
      }
      if (y_count % 2 != 0) continue;

      const StringMasks m = masks_for(ops);
      double trace = 0.0;
      for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(dim); ++k) {
        const double sign =
            (std::popcount(k & m.zy_mask) & 1) ? -1.0 : 1.0;
        trace += sign * matrix(static_cast<Eigen::Index>(k),
                               static_cast<Eigen::Index>(k ^ m.flip_mask));
      }
      const double coeff =
          even_y_sign(y_count) * trace / static_cast<double>(dim);
      if (std::abs(coeff) > kDropTolerance) {
        found[chunk].push_back({coeff, ops});
      }
    }
  });

  PauliSum sum;
  sum.qubits = n;
  for (auto& chunk : found) {
    sum.terms.insert(sum.terms.end(), chunk.begin(), chunk.end());
  }
  return sum;
}

PauliSum decompose(const Laplacian& lap) { return decompose_symmetric(lap.m); }

Eigen::MatrixXd reconstruct(const PauliSum& sum) {
  const int n = checked_qubits(sum);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXd matrix = Eigen::MatrixXd::Zero(dim, dim);
  for (const PauliTerm& term : sum.terms) {
    const StringMasks m = masks_for(term.ops);
    if (m.y_count % 2 != 0) {
      throw std::invalid_argument(
          "strings with an odd number of Y factors have imaginary elements "
          "and cannot enter a real matrix");
    }
    const double base = term.coeff * even_y_sign(m.y_count);
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(dim); ++k) {
      const double sign = (std::popcount(k & m.zy_mask) & 1) ? -1.0 : 1.0;
      matrix(static_cast<Eigen::Index>(k ^ m.flip_mask),
             static_cast<Eigen::Index>(k)) += base * sign;
    }
  }
  return matrix;
}

double expectation_exact(const PauliSum& sum, const StateVector& state) {
  if (checked_qubits(sum) != state.qubits) {
    throw std::invalid_argument("operator and state qubit counts differ");
  }
  const std::uint64_t dim = std::uint64_t{1} << sum.qubits;
  double result = 0.0;
  for (const PauliTerm& term : sum.terms) {
    const StringMasks m = masks_for(term.ops);
    // i^y for the possibly odd y of hand-built sums.
    complexd unit{1.0, 0.0};
    for (int y = 0; y < m.y_count; ++y) unit *= complexd{0.0, 1.0};
    complexd acc{0.0, 0.0};
    for (std::uint64_t k = 0; k < dim; ++k) {
      const double sign = (std::popcount(k & m.zy_mask) & 1) ? -1.0 : 1.0;
      acc += std::conj(state.amps(static_cast<Eigen::Index>(k ^ m.flip_mask))) *
             sign * state.amps(static_cast<Eigen::Index>(k));
    }
    result += term.coeff * (unit * acc).real();
  }
  return result;
}

namespace {

void apply_hadamard(Eigen::VectorXcd& amps, int qubit) {
  const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const double inv_sqrt2 = 0.70710678118654752;
  for (std::uint64_t k = 0; k < dim; ++k) {
    if (k & bit) continue;
    const complexd a = amps(static_cast<Eigen::Index>(k));
    const complexd b = amps(static_cast<Eigen::Index>(k | bit));
    amps(static_cast<Eigen::Index>(k)) = (a + b) * inv_sqrt2;
    amps(static_cast<Eigen::Index>(k | bit)) = (a - b) * inv_sqrt2;
  }
}

void apply_s_dagger(Eigen::VectorXcd& amps, int qubit) {
  const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  for (std::uint64_t k = 0; k < dim; ++k) {
    if (k & bit) {
      amps(static_cast<Eigen::Index>(k)) *= complexd{0.0, -1.0};
    }
  }
}

}  // namespace

double expectation_sampled(const PauliSum& sum, const StateVector& state,
                           int shots, std::uint64_t seed) {
  if (checked_qubits(sum) != state.qubits) {
    throw std::invalid_argument("operator and state qubit counts differ");
  }
  if (shots < 1) {
    throw std::invalid_argument("shot count must be positive");
  }
  const int n = sum.qubits;
  std::vector<double> estimates(sum.terms.size(), 0.0);

  parallel_for(sum.terms.size(), [&](std::size_t i) {
    const PauliTerm& term = sum.terms[i];
    const StringMasks m = masks_for(term.ops);
    if (m.support == 0) {
      estimates[i] = 1.0;
      return;
    }

    // Rotate so the term diagonalizes: X measures through H, Y through
    // S-dagger then H, both of which map the factor to Z.
    Eigen::VectorXcd rotated = state.amps;
    for (int p = 0; p < n; ++p) {
      const int qubit = n - 1 - p;
      const char op = term.ops[static_cast<std::size_t>(p)];
      if (op == 'X') {
        apply_hadamard(rotated, qubit);
      } else if (op == 'Y') {
        apply_s_dagger(rotated, qubit);
        apply_hadamard(rotated, qubit);
      }
    }

    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<double> cdf(dim);
    double total = 0.0;
    for (std::uint64_t k = 0; k < dim; ++k) {
      total += std::norm(rotated(static_cast<Eigen::Index>(k)));
      cdf[k] = total;
    }

    auto gen = rng::derive_stream(seed, {kSamplingSalt, i});
    std::int64_t parity_sum = 0;
    for (int shot = 0; shot < shots; ++shot) {
      const double r = rng::uniform01(gen) * total;
      const std::uint64_t k = static_cast<std::uint64_t>(
          std::upper_bound(cdf.begin(), cdf.end(), r) - cdf.begin());
      const std::uint64_t outcome = std::min(k, dim - 1);
      parity_sum += (std::popcount(outcome & m.support) & 1) ? -1 : 1;
    }
    estimates[i] = static_cast<double>(parity_sum) / shots;
  });

  double result = 0.0;
  for (std::size_t i = 0; i < sum.terms.size(); ++i) {
    result += sum.terms[i].coeff * estimates[i];
  }
  return result;
}

std::string to_text(const PauliSum& sum) {
  checked_qubits(sum);
  std::ostringstream out;
  out << std::setprecision(17);
  for (const PauliTerm& term : sum.terms) {
    out << term.coeff << ' ' << term.ops << '\n';
  }
  return out.str();
}

PauliSum pauli_sum_from_text(const std::string& text) {
  PauliSum sum;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    PauliTerm term;
    if (!(fields >> term.coeff >> term.ops)) {
      throw std::runtime_error("Pauli sum text: bad line " +
                               std::to_string(line_no));
    }
    std::string extra;
    if (fields >> extra) {
      throw std::runtime_error("Pauli sum text: trailing data on line " +
                               std::to_string(line_no));
    }
    if (sum.terms.empty()) {
      sum.qubits = static_cast<int>(term.ops.size());
    } else if (static_cast<int>(term.ops.size()) != sum.qubits) {
      throw std::runtime_error("Pauli sum text: inconsistent string length "
                               "on line " +
                               std::to_string(line_no));
    }
    sum.terms.push_back(std::move(term));
  }
  normalize_terms(sum);
  checked_qubits(sum);
  return sum;
}

}  // namespace logcut

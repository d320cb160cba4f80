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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <string>

#include "logcut/graph.hpp"
#include "logcut/pauli.hpp"
#include "logcut/rng.hpp"
#include "logcut/statevector.hpp"
#include "test_support.hpp"

using namespace logcut;

namespace {

// All length-n strings over IXYZ in lexicographic order.
std::vector<std::string> all_strings(int n) {
  std::vector<std::string> out = {""};
  for (int p = 0; p < n; ++p) {
    std::vector<std::string> next;
    for (const std::string& s : out) {
      for (const char c : {'I', 'X', 'Y', 'Z'}) next.push_back(s + c);
    }
    out = std::move(next);
  }
  return out;
}

Eigen::MatrixXd random_symmetric(int dim, std::uint64_t seed) {
  auto gen = rng::derive_stream(seed, {});
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      m(i, j) = rng::uniform(gen, -2.0, 2.0);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

StateVector random_state(int qubits, std::uint64_t seed) {
  auto gen = rng::derive_stream(seed, {});
  Eigen::VectorXcd amps(Eigen::Index{1} << qubits);
  for (Eigen::Index k = 0; k < amps.size(); ++k) {
    amps(k) = std::complex<double>(rng::normal(gen), rng::normal(gen));
  }
  amps /= amps.norm();
  return StateVector(qubits, std::move(amps));
}

}  // namespace

TEST_CASE("single edge decomposes into identity minus flip") {
  const PauliSum sum = decompose(laplacian(oracle::k2()));
  REQUIRE(sum.qubits == 1);
  REQUIRE(sum.terms.size() == 2);
  CHECK(sum.terms[0].ops == "I");
  CHECK(sum.terms[0].coeff == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sum.terms[1].ops == "X");
  CHECK(sum.terms[1].coeff == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("edgeless graphs decompose to nothing") {
  const PauliSum sum = decompose(laplacian(Graph(4, {})));
  CHECK(sum.qubits == 2);
  CHECK(sum.terms.empty());
}

TEST_CASE("coefficients match the dense trace oracle exhaustively") {
  for (const int n : {1, 2, 3}) {
    const Eigen::MatrixXd m = random_symmetric(1 << n, 100 + n);
    const PauliSum sum = decompose_symmetric(m);

    std::map<std::string, double> coeffs;
    for (const PauliTerm& term : sum.terms) {
      CHECK(!coeffs.count(term.ops));
      coeffs[term.ops] = term.coeff;
    }
    for (const std::string& ops : all_strings(n)) {
      const double expected = oracle::string_coefficient(ops, m);
      const double got = coeffs.count(ops) ? coeffs[ops] : 0.0;
      CHECK(std::abs(got - expected) <= 1e-12);
    }
  }
}

TEST_CASE("odd-Y strings carry no weight for real symmetric input") {
  for (const int n : {1, 2, 3}) {
    const Eigen::MatrixXd m = random_symmetric(1 << n, 200 + n);
    const PauliSum sum = decompose_symmetric(m);
    for (const PauliTerm& term : sum.terms) {
      CHECK(std::count(term.ops.begin(), term.ops.end(), 'Y') % 2 == 0);
    }
    // The oracle agrees that those coefficients vanish.
    for (const std::string& ops : all_strings(n)) {
      if (std::count(ops.begin(), ops.end(), 'Y') % 2 == 1) {
        CHECK(std::abs(oracle::string_coefficient(ops, m)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("terms come out sorted and unique") {
  const PauliSum sum =
      decompose(laplacian(pad_to_power_of_two(random_regular_graph(8, 3, 5))));
  REQUIRE(!sum.terms.empty());
  for (std::size_t i = 1; i < sum.terms.size(); ++i) {
    CHECK(sum.terms[i - 1].ops < sum.terms[i].ops);
  }
}

TEST_CASE("reconstruct inverts decompose") {
  for (const auto& [nv, degree, seed] :
       {std::tuple{4, 3, 1}, {8, 3, 2}, {16, 3, 3}, {16, 5, 4}}) {
    const Laplacian lap =
        laplacian(pad_to_power_of_two(random_regular_graph(nv, degree, seed)));
    const PauliSum sum = decompose(lap);
    const Eigen::MatrixXd back = reconstruct(sum);
    CHECK((back - lap.m).cwiseAbs().maxCoeff() <= 1e-10);
  }
  for (const int n : {1, 2, 3}) {
    const Eigen::MatrixXd m = random_symmetric(1 << n, 300 + n);
    CHECK((reconstruct(decompose_symmetric(m)) - m).cwiseAbs().maxCoeff() <=
          1e-10);
  }
}

TEST_CASE("decompose validates its input") {
  CHECK_THROWS_AS(decompose_symmetric(Eigen::MatrixXd::Zero(3, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(decompose_symmetric(Eigen::MatrixXd::Zero(2, 4)),
                  std::invalid_argument);
  Eigen::MatrixXd asym(2, 2);
  asym << 0.0, 1.0, -1.0, 0.0;
  CHECK_THROWS_AS(decompose_symmetric(asym), std::invalid_argument);
}

TEST_CASE("reconstruct rejects odd-Y strings") {
  PauliSum sum;
  sum.qubits = 1;
  sum.terms = {{1.0, "Y"}};
  CHECK_THROWS_AS(reconstruct(sum), std::invalid_argument);
}

TEST_CASE("exact expectations of single strings") {
  // Z on |0>.
  Eigen::VectorXcd zero(2);
  zero << 1.0, 0.0;
  const StateVector ket0(1, zero);
  CHECK(expectation_exact(PauliSum{1, {{1.0, "Z"}}}, ket0) ==
        doctest::Approx(1.0));
  CHECK(expectation_exact(PauliSum{1, {{1.0, "X"}}}, ket0) ==
        doctest::Approx(0.0));

  // X on |+> and on |->.
  Eigen::VectorXcd plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(expectation_exact(PauliSum{1, {{1.0, "X"}}}, StateVector(1, plus)) ==
        doctest::Approx(1.0));
  Eigen::VectorXcd minus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  CHECK(expectation_exact(PauliSum{1, {{1.0, "X"}}}, StateVector(1, minus)) ==
        doctest::Approx(-1.0));

  // Y on its own eigenstate (|0> + i|1>)/sqrt(2).
  Eigen::VectorXcd yplus(2);
  yplus << 1.0 / std::sqrt(2.0), std::complex<double>(0.0, 1.0 / std::sqrt(2.0));
  CHECK(expectation_exact(PauliSum{1, {{1.0, "Y"}}}, StateVector(1, yplus)) ==
        doctest::Approx(1.0));
}

TEST_CASE("exact expectation matches the dense oracle on random states") {
  for (const int n : {1, 2, 3}) {
    const Eigen::MatrixXd m = random_symmetric(1 << n, 400 + n);
    const PauliSum sum = decompose_symmetric(m);
    for (int trial = 0; trial < 20; ++trial) {
      const StateVector psi =
          random_state(n, static_cast<std::uint64_t>(500 + 10 * n + trial));
      const Eigen::VectorXcd mv = m.cast<std::complex<double>>() * psi.amps;
      const double direct = psi.amps.dot(mv).real();
      CHECK(std::abs(expectation_exact(sum, psi) - direct) <= 1e-9);
    }
  }
}

TEST_CASE("expectation dimension mismatches throw") {
  const PauliSum sum = decompose(laplacian(oracle::k2()));
  const StateVector psi = uniform_state(2);
  CHECK_THROWS_AS(expectation_exact(sum, psi), std::invalid_argument);
  CHECK_THROWS_AS(expectation_sampled(sum, psi, 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(expectation_sampled(sum, uniform_state(1), 0, 1),
                  std::invalid_argument);
}

TEST_CASE("sampling a diagonal eigenstate has no variance") {
  Eigen::VectorXcd zero(2);
  zero << 1.0, 0.0;
  const StateVector ket0(1, zero);
  const PauliSum z{1, {{1.0, "Z"}}};
  for (const int shots : {1, 7, 100}) {
    CHECK(expectation_sampled(z, ket0, shots, 9) == 1.0);
  }
  // Identity terms never consume samples and enter exactly.
  const PauliSum ident{1, {{0.75, "I"}}};
  CHECK(expectation_sampled(ident, ket0, 3, 1) == 0.75);
}

TEST_CASE("sampled expectation is deterministic in the seed") {
  const PauliSum sum = decompose(laplacian(oracle::c4()));
  const StateVector psi = random_state(2, 42);
  const double a = expectation_sampled(sum, psi, 512, 7);
  const double b = expectation_sampled(sum, psi, 512, 7);
  const double c = expectation_sampled(sum, psi, 512, 8);
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("sampled expectation converges to the exact value") {
  const PauliSum sum = decompose(laplacian(oracle::c4()));
  const StateVector psi = random_state(2, 43);
  const double exact = expectation_exact(sum, psi);
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    worst = std::max(
        worst, std::abs(expectation_sampled(sum, psi, 65536, seed) - exact));
  }
  // Coefficient magnitudes bound the estimator scale; 65536 shots put the
  // standard error well under 0.05 here.
  CHECK(worst <= 0.15);
}

TEST_CASE("sampling error mean shrinks with the shot count") {
  const PauliSum sum = decompose(laplacian(oracle::c4()));
  const StateVector psi = random_state(2, 44);
  const double exact = expectation_exact(sum, psi);
  auto mse = [&](int shots) {
    double acc = 0.0;
    const int reps = 60;
    for (int r = 0; r < reps; ++r) {
      const double err =
          expectation_sampled(sum, psi, shots,
                              static_cast<std::uint64_t>(1000 + r)) -
          exact;
      acc += err * err;
    }
    return acc / reps;
  };
  const double coarse = mse(64);
  const double fine = mse(4096);
  CHECK(coarse > 0.0);
  // 64x the shots should cut the mean squared error by roughly 64; allow a
  // factor-of-3 band for the finite replication count.
  CHECK(fine * 20.0 < coarse);
  CHECK(fine * 200.0 > coarse);
}

TEST_CASE("rotated bases are consistent with exact expectations") {
  // One term of each flavor on a generic two-qubit state.
  const StateVector psi = random_state(2, 45);
  for (const std::string ops : {"XI", "IX", "YI", "IY", "ZI", "XX", "XY",
                                "YY", "ZX", "YZ"}) {
    const PauliSum term{2, {{1.0, ops}}};
    const double exact = expectation_exact(term, psi);
    double acc = 0.0;
    const int reps = 40;
    for (int r = 0; r < reps; ++r) {
      acc += expectation_sampled(term, psi, 2048,
                                 static_cast<std::uint64_t>(2000 + r));
    }
    const double mean = acc / reps;
    // Standard error of the mean is at most 1/sqrt(2048*40) ~ 0.0035.
    CHECK(std::abs(mean - exact) <= 0.02);
  }
}

TEST_CASE("serialization round trips and is sorted") {
  const PauliSum sum =
      decompose(laplacian(pad_to_power_of_two(random_regular_graph(12, 3, 6))));
  const std::string text = to_text(sum);
  const PauliSum back = pauli_sum_from_text(text);
  REQUIRE(back.terms.size() == sum.terms.size());
  CHECK(back.qubits == sum.qubits);
  for (std::size_t i = 0; i < sum.terms.size(); ++i) {
    CHECK(back.terms[i].ops == sum.terms[i].ops);
    CHECK(back.terms[i].coeff == sum.terms[i].coeff);
  }
  CHECK(to_text(back) == text);
}

TEST_CASE("serialization golden text") {
  const PauliSum sum = decompose(laplacian(oracle::k2()));
  CHECK(to_text(sum) == "1 I\n-1 X\n");
}

TEST_CASE("text parser normalizes and validates") {
  const PauliSum sum = pauli_sum_from_text("0.5 ZZ\n0.25 XX\n0.25 XX\n");
  REQUIRE(sum.terms.size() == 2);
  CHECK(sum.terms[0].ops == "XX");
  CHECK(sum.terms[0].coeff == 0.5);
  CHECK(sum.terms[1].ops == "ZZ");

  CHECK(pauli_sum_from_text("1 XX\n-1 XX\n").terms.empty());
  CHECK_THROWS_AS(pauli_sum_from_text("1 XA\n"), std::invalid_argument);
  CHECK_THROWS_AS(pauli_sum_from_text("1 X 2\n"), std::runtime_error);
  CHECK_THROWS_AS(pauli_sum_from_text("abc X\n"), std::runtime_error);
  CHECK_THROWS_AS(pauli_sum_from_text("1 XX\n1 X\n"), std::runtime_error);
}

TEST_CASE("coefficients are preserved bit for bit through text") {
  PauliSum sum;
  sum.qubits = 2;
  sum.terms = {{1.0 / 3.0, "IZ"}, {-0.1234567890123456789, "ZI"}};
  const PauliSum back = pauli_sum_from_text(to_text(sum));
  REQUIRE(back.terms.size() == 2);
  CHECK(back.terms[0].coeff == sum.terms[0].coeff);
  CHECK(back.terms[1].coeff == sum.terms[1].coeff);
}

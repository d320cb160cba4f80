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

#include <cmath>
#include <set>
#include <sstream>

#include "logcut/graph.hpp"
#include "logcut/rng.hpp"
#include "test_support.hpp"

using namespace logcut;

TEST_CASE("graph construction normalizes and validates") {
  Graph g(3, {{2, 0, 1.5}, {0, 1, 2.0}});
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 1);
  CHECK(g.edges()[1].u == 0);
  CHECK(g.edges()[1].v == 2);
  CHECK(g.edges()[1].weight == 1.5);

  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1, 1.0}, {1, 0, 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("degree helpers") {
  const Graph g = oracle::c4();
  CHECK(g.weighted_degree(0) == 2.0);
  CHECK(g.max_weighted_degree() == 2.0);
  CHECK(g.total_weight() == 4.0);
  const Graph star(4, {{0, 1, 1.0}, {0, 2, 2.0}, {0, 3, 3.0}});
  CHECK(star.weighted_degree(0) == 6.0);
  CHECK(star.weighted_degree(3) == 3.0);
  CHECK(star.max_weighted_degree() == 6.0);
}

TEST_CASE("random regular graphs are simple and regular") {
  for (const auto& [n, d] : {std::pair{4, 3}, {8, 3}, {32, 3}, {16, 5}}) {
    const Graph g = random_regular_graph(n, d, 42);
    CHECK(g.num_vertices() == n);
    CHECK(g.num_edges() == n * d / 2);
    for (int v = 0; v < n; ++v) {
      CHECK(g.weighted_degree(v) == static_cast<double>(d));
    }
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) {
      CHECK(e.u < e.v);
      CHECK(seen.emplace(e.u, e.v).second);
    }
  }
}

TEST_CASE("degree three on four vertices forces the complete graph") {
  const Graph g = random_regular_graph(4, 3, 7);
  CHECK(g.num_edges() == 6);
}

TEST_CASE("random regular generation is deterministic in the seed") {
  const Graph a = random_regular_graph(32, 3, 5);
  const Graph b = random_regular_graph(32, 3, 5);
  const Graph c = random_regular_graph(32, 3, 6);
  CHECK(to_edge_list(a) == to_edge_list(b));
  CHECK(to_edge_list(a) != to_edge_list(c));
}

TEST_CASE("random regular rejects impossible parameters") {
  CHECK_THROWS_AS(random_regular_graph(5, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_regular_graph(4, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_regular_graph(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_regular_graph(4, -1, 1), std::invalid_argument);
  CHECK(random_regular_graph(4, 0, 1).num_edges() == 0);
}

TEST_CASE("padding appends isolated vertices up to a power of two") {
  const Graph five(5, {{0, 4, 1.0}});
  const Graph padded = pad_to_power_of_two(five);
  CHECK(padded.num_vertices() == 8);
  CHECK(padded.num_edges() == 1);
  for (int v = 5; v < 8; ++v) CHECK(padded.weighted_degree(v) == 0.0);

  CHECK(pad_to_power_of_two(oracle::c4()).num_vertices() == 4);
  CHECK(pad_to_power_of_two(Graph(1, {})).num_vertices() == 1);
  CHECK(pad_to_power_of_two(Graph(33, {})).num_vertices() == 64);
}

TEST_CASE("laplacian entries") {
  const Laplacian lk2 = laplacian(oracle::k2());
  CHECK(lk2.dim() == 2);
  CHECK(lk2.m(0, 0) == 1.0);
  CHECK(lk2.m(1, 1) == 1.0);
  CHECK(lk2.m(0, 1) == -1.0);
  CHECK(lk2.m(1, 0) == -1.0);

  const Laplacian lc4 = laplacian(oracle::c4());
  for (int i = 0; i < 4; ++i) CHECK(lc4.m(i, i) == 2.0);
  CHECK(lc4.m(0, 2) == 0.0);
  CHECK(lc4.m(1, 3) == 0.0);
  CHECK(lc4.m(0, 1) == -1.0);

  CHECK_THROWS_AS(laplacian(Graph(3, {})), std::invalid_argument);
}

TEST_CASE("laplacian rows sum to zero and padding gives zero rows") {
  const Graph g = pad_to_power_of_two(random_regular_graph(11, 4, 3));
  const Laplacian lap = laplacian(g);
  CHECK(lap.dim() == 16);
  for (int i = 0; i < lap.dim(); ++i) {
    CHECK(std::abs(lap.m.row(i).sum()) <= 1e-12);
  }
  for (int i = 11; i < 16; ++i) {
    CHECK(lap.m.row(i).cwiseAbs().sum() == 0.0);
  }
  CHECK((lap.m - lap.m.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("cut value on known partitions") {
  const Laplacian lk2 = laplacian(oracle::k2());
  CHECK(cut_value(lk2, {{1, -1}}) == 1.0);
  CHECK(cut_value(lk2, {{1, 1}}) == 0.0);

  const Laplacian lc4 = laplacian(oracle::c4());
  CHECK(cut_value(lc4, {{1, -1, 1, -1}}) == 4.0);
  CHECK(cut_value(lc4, {{1, 1, -1, -1}}) == 2.0);
  CHECK(cut_value(lc4, {{1, 1, 1, 1}}) == 0.0);

  CHECK_THROWS_AS(cut_value(lc4, {{1, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(cut_value(lc4, {{1, -1, 0, 1}}), std::invalid_argument);
}

TEST_CASE("cut value matches direct edge counting on every partition") {
  // Small battery, exhaustive over all partitions of each graph.
  const std::vector<Graph> battery = {
      oracle::k2(),
      oracle::c4(),
      oracle::k4(),
      pad_to_power_of_two(random_regular_graph(7, 2, 9)),
      pad_to_power_of_two(random_regular_graph(12, 3, 1)),
      pad_to_power_of_two(Graph(5, {{0, 1, 0.5}, {2, 4, 2.25}, {1, 3, 3.0}})),
  };
  for (const Graph& g : battery) {
    const Laplacian lap = laplacian(g);
    const int nv = g.num_vertices();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << nv); ++mask) {
      const PartitionVector v = oracle::mask_partition(nv, mask);
      const double direct = oracle::mask_cut(g, mask);
      CHECK(cut_value(lap, v) == doctest::Approx(direct).epsilon(1e-12));
      CHECK(cut_weight(g, v) == doctest::Approx(direct).epsilon(1e-12));
    }
  }
}

TEST_CASE("cut value is invariant under global sign flip") {
  const Graph g = pad_to_power_of_two(random_regular_graph(13, 4, 17));
  const Laplacian lap = laplacian(g);
  auto gen = rng::derive_stream(3, {});
  for (int trial = 0; trial < 50; ++trial) {
    PartitionVector v, flipped;
    for (int i = 0; i < g.num_vertices(); ++i) {
      const int s = (gen() & 1) ? 1 : -1;
      v.signs.push_back(s);
      flipped.signs.push_back(-s);
    }
    CHECK(cut_value(lap, v) == cut_value(lap, flipped));
  }
}

TEST_CASE("padding does not change cut values") {
  const Graph g = random_regular_graph(6, 3, 11);
  const Graph padded = pad_to_power_of_two(g);
  const Laplacian lap = laplacian(padded);
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    PartitionVector full = oracle::mask_partition(8, mask);
    CHECK(cut_value(lap, full) ==
          oracle::mask_cut(g, mask & 0x3f));
  }
}

TEST_CASE("random bipartition statistics") {
  const Graph g = random_regular_graph(32, 3, 2);
  const BipartitionStats stats = random_bipartition_stats(g, 20000, 4);
  // Each of the 48 edges crosses with probability 1/2.
  const double se = stats.stddev / std::sqrt(20000.0);
  CHECK(std::abs(stats.mean - 24.0) <= 5.0 * se);
  CHECK(stats.stddev > 0.0);

  const BipartitionStats one = random_bipartition_stats(g, 1, 4);
  CHECK(one.stddev == 0.0);
  CHECK_THROWS_AS(random_bipartition_stats(g, 0, 4), std::invalid_argument);

  const BipartitionStats again = random_bipartition_stats(g, 1000, 4);
  const BipartitionStats same = random_bipartition_stats(g, 1000, 4);
  CHECK(again.mean == same.mean);
  CHECK(again.stddev == same.stddev);
}

TEST_CASE("edge list round trip") {
  const Graph g = random_regular_graph(16, 3, 8);
  const std::string text = to_edge_list(g);
  const Graph back = graph_from_edge_list(text);
  CHECK(back.num_vertices() == g.num_vertices());
  CHECK(to_edge_list(back) == text);

  const Graph weighted(
      3, {{0, 1, 0.1}, {1, 2, 1.0 / 3.0}, {0, 2, 12345.6789012345678}});
  const Graph wback = graph_from_edge_list(to_edge_list(weighted));
  for (int i = 0; i < 3; ++i) {
    CHECK(wback.edges()[static_cast<std::size_t>(i)].weight ==
          weighted.edges()[static_cast<std::size_t>(i)].weight);
  }
}

TEST_CASE("edge list format is the documented plain text") {
  const std::string text = to_edge_list(oracle::k2());
  CHECK(text == "2 1\n0 1 1\n");
  const Graph g = graph_from_edge_list("3 2\n0 1 2.5\n1 2 1\n");
  CHECK(g.num_edges() == 2);
  CHECK(g.edges()[0].weight == 2.5);
}

TEST_CASE("edge list reader rejects malformed input") {
  CHECK_THROWS_AS(graph_from_edge_list(""), std::runtime_error);
  CHECK_THROWS_AS(graph_from_edge_list("2\n"), std::runtime_error);
  CHECK_THROWS_AS(graph_from_edge_list("2 1\n0 1\n"), std::runtime_error);
  CHECK_THROWS_AS(graph_from_edge_list("2 1\n0 2 1.0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_edge_list("2 1\n0 0 1.0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_edge_list("2 1\n0 1 -3.0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_edge_list("2 2\n0 1 1\n1 0 2\n"),
                  std::invalid_argument);
}

TEST_CASE("graph files save and load") {
  const Graph g = random_regular_graph(8, 3, 77);
  const std::string path = "test_graph_roundtrip.txt";
  save_graph(path, g);
  const Graph back = load_graph(path);
  CHECK(to_edge_list(back) == to_edge_list(g));
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_graph("does_not_exist.txt"), std::runtime_error);
}

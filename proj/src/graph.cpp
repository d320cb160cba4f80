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

#include "logcut/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "logcut/rng.hpp"

namespace logcut {

namespace {

bool is_power_of_two(int n) {
  return n > 0 && std::has_single_bit(static_cast<unsigned>(n));
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ <= 0) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  for (Edge& e : edges_) {
    if (e.u < 0 || e.u >= num_vertices_ || e.v < 0 || e.v >= num_vertices_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self loops are not allowed");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument("edge weights must be positive and finite");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
      throw std::invalid_argument("duplicate edge between vertices " +
                                  std::to_string(edges_[i].u) + " and " +
                                  std::to_string(edges_[i].v));
    }
  }
}

double Graph::total_weight() const {
  double sum = 0.0;
  for (const Edge& e : edges_) sum += e.weight;
  return sum;
}

double Graph::weighted_degree(int v) const {
  if (v < 0 || v >= num_vertices_) {
    throw std::invalid_argument("vertex index out of range");
  }
  double sum = 0.0;
  for (const Edge& e : edges_) {
    if (e.u == v || e.v == v) sum += e.weight;
  }
  return sum;
}

double Graph::max_weighted_degree() const {
  std::vector<double> deg(static_cast<std::size_t>(num_vertices_), 0.0);
  for (const Edge& e : edges_) {
    deg[static_cast<std::size_t>(e.u)] += e.weight;
    deg[static_cast<std::size_t>(e.v)] += e.weight;
  }
  return *std::max_element(deg.begin(), deg.end());
}

Graph random_regular_graph(int n_vertices, int degree, std::uint64_t seed) {
  if (n_vertices <= 0) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  if (degree < 0 || degree >= n_vertices) {
    throw std::invalid_argument(
        "degree must satisfy 0 <= degree < n_vertices");
  }
  if ((static_cast<std::int64_t>(n_vertices) * degree) % 2 != 0) {
    throw std::invalid_argument(
        "n_vertices * degree must be even for a regular graph to exist");
  }
  if (degree == 0) return Graph(n_vertices, {});

  const std::size_t n_stubs =
      static_cast<std::size_t>(n_vertices) * static_cast<std::size_t>(degree);
  std::vector<int> stubs(n_stubs);
  auto gen = rng::derive_stream(seed, {});

  constexpr int kMaxAttempts = 200000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (std::size_t i = 0; i < n_stubs; ++i) {
      stubs[i] = static_cast<int>(i) / degree;
    }
    for (std::size_t i = n_stubs - 1; i > 0; --i) {
      const std::size_t j = rng::uniform_index(gen, i + 1);
      std::swap(stubs[i], stubs[j]);
    }

    bool simple = true;
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> edges;
    edges.reserve(n_stubs / 2);
    for (std::size_t i = 0; i < n_stubs; i += 2) {
      int u = stubs[i];
      int v = stubs[i + 1];
      if (u == v) {
        simple = false;
        break;
      }
      if (u > v) std::swap(u, v);
      if (!seen.emplace(u, v).second) {
        simple = false;
        break;
      }
      edges.push_back({u, v, 1.0});
    }
    if (simple) return Graph(n_vertices, std::move(edges));
  }
  throw std::runtime_error(
      "failed to sample a simple regular graph; the degree is too close to "
      "the vertex count");
}

Graph pad_to_power_of_two(const Graph& g) {
  int n = 1;
  while (n < g.num_vertices()) n *= 2;
  return Graph(n, g.edges());
}

Laplacian laplacian(const Graph& g) {
  const int n = g.num_vertices();
  if (!is_power_of_two(n)) {
    throw std::invalid_argument(
        "laplacian expects a power-of-two vertex count; call "
        "pad_to_power_of_two first");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    m(e.u, e.u) += e.weight;
    m(e.v, e.v) += e.weight;
    m(e.u, e.v) -= e.weight;
    m(e.v, e.u) -= e.weight;
  }
  return Laplacian{std::move(m)};
}

double cut_value(const Laplacian& lap, const PartitionVector& v) {
  const int n = lap.dim();
  if (static_cast<int>(v.signs.size()) != n) {
    throw std::invalid_argument("partition size does not match Laplacian");
  }
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) {
    if (v.signs[static_cast<std::size_t>(i)] != 1 &&
        v.signs[static_cast<std::size_t>(i)] != -1) {
      throw std::invalid_argument("partition entries must be +1 or -1");
    }
    x(i) = static_cast<double>(v.signs[static_cast<std::size_t>(i)]);
  }
  return x.dot(lap.m * x) / 4.0;
}

double cut_weight(const Graph& g, const PartitionVector& v) {
  if (static_cast<int>(v.signs.size()) != g.num_vertices()) {
    throw std::invalid_argument("partition size does not match graph");
  }
  double sum = 0.0;
  for (const Edge& e : g.edges()) {
    if (v.signs[static_cast<std::size_t>(e.u)] !=
        v.signs[static_cast<std::size_t>(e.v)]) {
      sum += e.weight;
    }
  }
  return sum;
}

BipartitionStats random_bipartition_stats(const Graph& g, int samples,
                                          std::uint64_t seed) {
  if (samples < 1) {
    throw std::invalid_argument("need at least one sample");
  }
  auto gen = rng::derive_stream(seed, {});
  PartitionVector v;
  v.signs.resize(static_cast<std::size_t>(g.num_vertices()));
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int s = 0; s < samples; ++s) {
    std::uint64_t bits = 0;
    int have = 0;
    for (auto& sign : v.signs) {
      if (have == 0) {
        bits = gen();
        have = 64;
      }
      sign = (bits & 1) ? 1 : -1;
      bits >>= 1;
      --have;
    }
    const double cut = cut_weight(g, v);
    sum += cut;
    sum_sq += cut * cut;
  }
  BipartitionStats stats;
  stats.mean = sum / samples;
  if (samples > 1) {
    const double var =
        (sum_sq - samples * stats.mean * stats.mean) / (samples - 1);
    stats.stddev = std::sqrt(std::max(var, 0.0));
  }
  return stats;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  out << std::setprecision(17);
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
  }
}

Graph read_edge_list(std::istream& in) {
  int n = 0;
  long long m = 0;
  if (!(in >> n >> m)) {
    throw std::runtime_error("edge list: could not read header");
  }
  if (m < 0) {
    throw std::runtime_error("edge list: negative edge count");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    Edge e;
    if (!(in >> e.u >> e.v >> e.weight)) {
      throw std::runtime_error("edge list: could not read edge " +
                               std::to_string(i));
    }
    edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("could not open " + path + " for writing");
  }
  write_edge_list(out, g);
  if (!out) {
    throw std::runtime_error("failed while writing " + path);
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("could not open " + path);
  }
  return read_edge_list(in);
}

}  // namespace logcut

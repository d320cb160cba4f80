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
#include <iosfwd>
#include <string>
#include <vector>

namespace logcut {

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

// Undirected weighted graph, simple by construction: vertices are
// 0..num_vertices-1, there are no self loops, at most one edge per vertex
// pair, and weights are positive. Edges are stored with u < v and sorted,
// so equal graphs have identical edge lists.
class Graph {
 public:
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  double total_weight() const;
  double weighted_degree(int v) const;
  double max_weighted_degree() const;

 private:
  int num_vertices_;
  std::vector<Edge> edges_;
};

// Connects vertices of a d-regular multigraph candidate by repeatedly
// pairing vertex stubs until the pairing happens to be simple
// (configuration model with rejection). Requires 0 <= degree < n_vertices
// and n_vertices * degree even.
Graph random_regular_graph(int n_vertices, int degree, std::uint64_t seed);

// Appends isolated vertices until the vertex count is a power of two.
Graph pad_to_power_of_two(const Graph& g);

// Dense graph Laplacian: degree matrix minus adjacency matrix. Only
// power-of-two dimensions are accepted, matching the padded graphs the
// solver operates on.
struct Laplacian {
  Eigen::MatrixXd m;

  int dim() const { return static_cast<int>(m.rows()); }
};

Laplacian laplacian(const Graph& g);

// Partition of the vertex set encoded as one sign per vertex.
struct PartitionVector {
  std::vector<int> signs;
};

// Weight of the edges crossing the partition, computed as the Laplacian
// quadratic form v^T L v / 4. Exact for integer weights: every intermediate
// value is an integer well below 2^53.
double cut_value(const Laplacian& lap, const PartitionVector& v);

// Same cut weight computed directly from the edge list.
double cut_weight(const Graph& g, const PartitionVector& v);

struct BipartitionStats {
  double mean = 0.0;
  double stddev = 0.0;
};

// Mean and sample standard deviation of the cut weight over uniformly
// random partitions.
BipartitionStats random_bipartition_stats(const Graph& g, int samples,
                                          std::uint64_t seed);

// Edge-list text format: a "<num_vertices> <num_edges>" header line
// followed by one "u v weight" line per edge. Weights are printed with 17
// significant digits so the reader recovers them bit for bit.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);
std::string to_edge_list(const Graph& g);
Graph graph_from_edge_list(const std::string& text);
void save_graph(const std::string& path, const Graph& g);
Graph load_graph(const std::string& path);

}  // namespace logcut

#pragma once

// Small undirected simple graphs stored as per-vertex neighbor bit masks.
//
// Vertices are 0-based inside the library. Everything that crosses the
// process boundary (JSON, the CLI, certificates) uses 1-based labels.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"

namespace fsg {

inline constexpr int kMaxVertices = 20;

using VertexMask = std::uint32_t;

/// Output documents keep their keys in insertion (schema) order.
using Json = nlohmann::ordered_json;
using Edge = std::pair<int, int>;

class Graph {
 public:
  /// The empty graph on zero vertices.
  Graph() = default;

  /// Edgeless graph on `n` vertices. Throws SizeError when n > kMaxVertices.
  explicit Graph(int n);

  /// Builds a graph from 0-based edges. Throws RangeError on out-of-range
  /// endpoints or self-loops; duplicate edges are merged.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int edge_count() const;

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  VertexMask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;

  /// Mask with one bit per vertex.
  VertexMask all_vertices() const {
    return (VertexMask{1} << n_) - 1;
  }

  /// 0-based edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<VertexMask, kMaxVertices> adj_{};
};

/// Injection from pattern vertices to host vertices; mapping[p] is the host
/// vertex assigned to pattern vertex p.
struct IsoWitness {
  std::vector<int> mapping;
};

Graph complement(const Graph& g);

/// Vertices of `h` follow those of `g`, shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Removes `v` and compacts the remaining labels preserving their order.
Graph delete_vertex(const Graph& g, int v);

/// Applies a relabelling: vertex v of `g` becomes `perm[v]`.
Graph relabel(const Graph& g, const std::vector<int>& perm);

std::vector<int> degrees(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);

/// Vertices reachable from `start` inside the vertex subset `allowed`.
VertexMask reachable(const Graph& g, int start, VertexMask allowed);

int component_count(const Graph& g);
int component_count(const Graph& g, VertexMask allowed);

/// A graph with at most one vertex is connected.
bool is_connected(const Graph& g);

/// Vertices whose removal increases the number of components.
VertexMask cut_vertices(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Finds an injection that maps every pattern edge onto a host edge
/// (non-induced containment).
std::optional<IsoWitness> contains_subgraph(const Graph& pattern, const Graph& host);

/// True iff `w` is injective and carries every pattern edge to a host edge.
bool is_valid_embedding(const Graph& pattern, const Graph& host, const IsoWitness& w);

std::vector<int> mask_to_vertices(VertexMask mask);

// JSON form: {"n": int, "edges": [[u,v], ...]} with 1-based u < v, sorted.
void to_json(Json& j, const Graph& g);
void from_json(const Json& j, Graph& g);

}  // namespace fsg

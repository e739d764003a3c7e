#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scar/errors.hpp"

namespace scar {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public ValidationError {
 public:
  enum class Kind { kSelfLoop, kDuplicateEdge, kDisconnected, kMalformed, kInvalidVertex, kUnknownName };

  GraphError(Kind kind, const std::string& what) : ValidationError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Finite, simple, connected, undirected graph on vertices 0..n-1.
// Immutable after construction.
class Graph {
 public:
  // Validates: ids in range, no self-loops, no parallel edges, connected.
  static Graph from_edges(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }

  // Sorted open neighborhood N(u).
  std::span<const Vertex> neighbors(Vertex u) const { return adjacency_[u]; }
  // Sorted closed neighborhood N[u] = N(u) + {u}: the legal move targets from u.
  std::span<const Vertex> closed_neighbors(Vertex u) const { return closed_[u]; }
  int degree(Vertex u) const { return static_cast<int>(adjacency_[u].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool is_leaf(Vertex u) const { return degree(u) == 1; }
  int max_degree() const;

  // Canonical edge list, each edge (u,v) with u<v, sorted.
  std::vector<Edge> edges() const;

  // True for P_k (k >= 2).
  bool is_path() const;
  // Vertices in path order starting from the lower-numbered endpoint;
  // nullopt if the graph is not a path.
  std::optional<std::vector<Vertex>> path_order() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  Graph() = default;

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<Vertex>> closed_;
  int edge_count_ = 0;
};

// "#" starts a comment; each remaining non-blank line is "u v".
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// name in {path, cycle, complete, star, petersen, dodecahedron}; k is the
// family parameter (star k = number of leaves).
Graph builtin(std::string_view name, std::optional<int> k = std::nullopt);

Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_graph(int k);
Graph star_graph(int leaves);
Graph generalized_petersen(int n, int k);
Graph petersen_graph();
Graph dodecahedron_graph();

Graph attach_leaf(const Graph& g, Vertex v);
// Disjoint union of g and h (h shifted by g.vertex_count()) plus edge {u, w'}.
Graph bridge(const Graph& g, Vertex u, const Graph& h, Vertex w);

int distance(const Graph& g, Vertex u, Vertex v);
// All-pairs BFS distances, row-major n*n.
std::vector<int> all_distances(const Graph& g);

}  // namespace scar

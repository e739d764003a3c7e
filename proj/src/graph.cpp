#include "scar/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <queue>
#include <set>
#include <sstream>

namespace scar {
namespace {

void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (v < 0 || v >= g.vertex_count())
    throw GraphError(GraphError::Kind::kInvalidVertex,
                     std::string(what) + ": vertex " + std::to_string(v) + " out of range [0," +
                         std::to_string(g.vertex_count()) + ")");
}

std::vector<int> bfs(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

std::optional<int> parse_int(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 1) throw GraphError(GraphError::Kind::kMalformed, "graph must have at least one vertex");
  Graph g;
  g.adjacency_.assign(vertex_count, {});
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw GraphError(GraphError::Kind::kInvalidVertex,
                       "edge " + std::to_string(u) + "-" + std::to_string(v) + " references a vertex out of range");
    if (u == v) throw GraphError(GraphError::Kind::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    Edge key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw GraphError(GraphError::Kind::kDuplicateEdge,
                       "duplicate edge " + std::to_string(key.first) + "-" + std::to_string(key.second));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  g.edge_count_ = static_cast<int>(seen.size());
  g.closed_.resize(vertex_count);
  for (Vertex u = 0; u < vertex_count; ++u) {
    std::sort(g.adjacency_[u].begin(), g.adjacency_[u].end());
    g.closed_[u] = g.adjacency_[u];
    g.closed_[u].insert(std::lower_bound(g.closed_[u].begin(), g.closed_[u].end(), u), u);
  }
  auto dist = bfs(g, 0);
  if (auto it = std::find(dist.begin(), dist.end(), -1); it != dist.end())
    throw GraphError(GraphError::Kind::kDisconnected,
                     "graph is disconnected: vertex " + std::to_string(it - dist.begin()) +
                         " is unreachable from vertex 0");
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_path() const { return path_order().has_value(); }

std::optional<std::vector<Vertex>> Graph::path_order() const {
  int n = vertex_count();
  if (n < 2 || edge_count_ != n - 1) return std::nullopt;
  Vertex start = -1;
  for (Vertex u = 0; u < n; ++u) {
    if (degree(u) > 2) return std::nullopt;
    if (degree(u) == 1 && start < 0) start = u;
  }
  // Connected with n-1 edges and max degree 2 means a path.
  std::vector<Vertex> order{start};
  Vertex prev = -1, cur = start;
  while (static_cast<int>(order.size()) < n) {
    Vertex next = adjacency_[cur][0] != prev ? adjacency_[cur][0] : adjacency_[cur][1];
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw GraphError(GraphError::Kind::kMalformed,
                       "line " + std::to_string(line_no) + ": expected two vertex ids, got " +
                           std::to_string(tokens.size()) + " fields");
    auto u = parse_int(tokens[0]);
    auto v = parse_int(tokens[1]);
    if (!u || !v || *u < 0 || *v < 0)
      throw GraphError(GraphError::Kind::kMalformed,
                       "line " + std::to_string(line_no) + ": vertex ids must be non-negative base-10 integers");
    edges.emplace_back(*u, *v);
    max_id = std::max({max_id, *u, *v});
  }
  if (edges.empty()) throw GraphError(GraphError::Kind::kMalformed, "edge list is empty");
  return Graph::from_edges(max_id + 1, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph path_graph(int k) {
  if (k < 2) throw GraphError(GraphError::Kind::kMalformed, "path needs k >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(k, edges);
}

Graph cycle_graph(int k) {
  if (k < 3) throw GraphError(GraphError::Kind::kMalformed, "cycle needs k >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, edges);
}

Graph complete_graph(int k) {
  if (k < 2) throw GraphError(GraphError::Kind::kMalformed, "complete graph needs k >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(k, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 3) throw GraphError(GraphError::Kind::kMalformed, "star needs k >= 3 leaves");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

// Outer cycle 0..n-1, spokes i -- n+i, inner edges n+i -- n+(i+k mod n).
Graph generalized_petersen(int n, int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph::from_edges(2 * n, edges);
}

Graph petersen_graph() { return generalized_petersen(5, 2); }
Graph dodecahedron_graph() { return generalized_petersen(10, 2); }

Graph builtin(std::string_view name, std::optional<int> k) {
  auto need_k = [&]() {
    if (!k) throw GraphError(GraphError::Kind::kMalformed, std::string(name) + " requires a size parameter");
    return *k;
  };
  if (name == "path") return path_graph(need_k());
  if (name == "cycle") return cycle_graph(need_k());
  if (name == "complete") return complete_graph(need_k());
  if (name == "star") return star_graph(need_k());
  if (name == "petersen" || name == "dodecahedron") {
    if (k) throw GraphError(GraphError::Kind::kMalformed, std::string(name) + " takes no size parameter");
    return name == "petersen" ? petersen_graph() : dodecahedron_graph();
  }
  throw GraphError(GraphError::Kind::kUnknownName, "unknown builtin graph '" + std::string(name) + "'");
}

Graph attach_leaf(const Graph& g, Vertex v) {
  check_vertex(g, v, "attach_leaf");
  auto edges = g.edges();
  edges.emplace_back(v, g.vertex_count());
  return Graph::from_edges(g.vertex_count() + 1, edges);
}

Graph bridge(const Graph& g, Vertex u, const Graph& h, Vertex w) {
  check_vertex(g, u, "bridge");
  check_vertex(h, w, "bridge");
  int shift = g.vertex_count();
  auto edges = g.edges();
  for (auto [a, b] : h.edges()) edges.emplace_back(a + shift, b + shift);
  edges.emplace_back(u, w + shift);
  return Graph::from_edges(shift + h.vertex_count(), edges);
}

int distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u, "distance");
  check_vertex(g, v, "distance");
  return bfs(g, u)[v];
}

std::vector<int> all_distances(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (Vertex u = 0; u < n; ++u) {
    auto row = bfs(g, u);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace scar

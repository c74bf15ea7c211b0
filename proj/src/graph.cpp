#include "posetdim/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <istream>
#include <ostream>
#include <set>

#include "posetdim/errors.hpp"
#include "posetdim/text.hpp"

namespace posetdim {

Graph::Graph(int vertex_count, std::span<const Edge> edges, std::vector<std::string> labels)
    : adjacency_(vertex_count < 0 ? 0 : vertex_count), labels_(std::move(labels)) {
  if (vertex_count < 0) throw ArgumentError("negative vertex count");
  if (!labels_.empty()) labels_.resize(vertex_count);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw ArgumentError("parallel edge " + std::to_string(dup->first) + " " + std::to_string(dup->second));
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw ArgumentError("invalid vertex id " + std::to_string(v) + " (graph has " +
                        std::to_string(vertex_count()) + " vertices)");
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool Graph::adjacent(int u, int v) const {
  const auto& row = neighbors(u);
  check_vertex(v);
  return std::binary_search(row.begin(), row.end(), v);
}

const std::string& Graph::label(int v) const {
  static const std::string empty;
  check_vertex(v);
  return labels_.empty() ? empty : labels_[v];
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

Length distance(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  int d = bfs_distances(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

Length girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge closing at depths du, dv bounds a
  // cycle of length du + dv + 1 through the root, and the minimum over all
  // roots is exact.
  Length best;
  const int n = g.vertex_count();
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (best && 2 * dist[u] + 1 >= *best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          int length = dist[u] + dist[w] + 1;
          if (!best || length < *best) best = length;
        }
      }
    }
  }
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> parts;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> part{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (int w : g.neighbors(part[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          part.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

bool is_connected_subset(const Graph& g, std::span<const char> in_subset) {
  const int n = g.vertex_count();
  int start = -1, size = 0;
  for (int v = 0; v < n; ++v) {
    if (in_subset[v]) {
      if (start < 0) start = v;
      ++size;
    }
  }
  if (size == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (in_subset[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == size;
}

namespace {

using Mask = std::uint32_t;

// Smallest r such that some centre reaches all of `part` within r steps
// inside the induced subgraph; -1 if disconnected.
int mask_radius(const std::vector<Mask>& nbr, Mask part) {
  int best = -1;
  for (Mask rest = part; rest; rest &= rest - 1) {
    int centre = std::countr_zero(rest);
    Mask reached = Mask{1} << centre;
    Mask frontier = reached;
    int steps = 0;
    while (reached != part) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= nbr[std::countr_zero(f)];
      next &= part & ~reached;
      if (!next) break;
      reached |= next;
      frontier = next;
      ++steps;
    }
    if (reached == part && (best < 0 || steps < best)) best = steps;
  }
  return best;
}

struct GradSearch {
  int n;
  int r;
  std::vector<Mask> nbr;
  std::vector<char> feasible;  // per mask: connected with radius <= r
  std::vector<Mask> blocks;
  Density best{0};

  void leaf() {
    if (blocks.empty()) return;
    for (Mask b : blocks)
      if (!feasible[b]) return;
    std::int64_t edges = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      Mask reach = 0;
      for (Mask f = blocks[i]; f; f &= f - 1) reach |= nbr[std::countr_zero(f)];
      for (std::size_t j = i + 1; j < blocks.size(); ++j)
        if (reach & blocks[j]) ++edges;
    }
    Density ratio(edges, static_cast<std::int64_t>(blocks.size()));
    if (ratio > best) best = ratio;
  }

  // Vertex v is deleted, joins an existing block, or opens a new block.
  void assign(int v) {
    if (v == n) {
      leaf();
      return;
    }
    assign(v + 1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i] |= Mask{1} << v;
      assign(v + 1);
      blocks[i] &= ~(Mask{1} << v);
    }
    blocks.push_back(Mask{1} << v);
    assign(v + 1);
    blocks.pop_back();
  }
};

}  // namespace

Density grad(const Graph& g, int r) {
  const int n = g.vertex_count();
  if (n > kGradMaxVertices)
    throw CapacityError("grad: exhaustive depth-r minor enumeration supports at most " +
                            std::to_string(kGradMaxVertices) + " vertices, got " + std::to_string(n),
                        kGradMaxVertices);
  if (r < 0) throw ArgumentError("grad: negative rank");
  GradSearch search{n, r, std::vector<Mask>(n, 0), std::vector<char>(std::size_t{1} << n, 0), {}, Density(0)};
  for (auto [u, v] : g.edges()) {
    search.nbr[u] |= Mask{1} << v;
    search.nbr[v] |= Mask{1} << u;
  }
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    int radius = mask_radius(search.nbr, m);
    search.feasible[m] = radius >= 0 && radius <= r;
  }
  search.assign(0);
  return search.best;
}

Graph read_graph(std::istream& in) {
  auto lines = text::significant_lines(in);
  if (lines.empty() || lines.front().tokens.size() != 2 || lines.front().tokens[0] != "graph")
    throw ParseError("expected header 'graph <n>'", lines.empty() ? 0 : lines.front().number);
  const int n = text::parse_index(lines.front().tokens[1], lines.front().number);
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto check_id = [n](int id, std::size_t line) {
    if (id >= n) throw ParseError("vertex id " + std::to_string(id) + " out of range", line);
  };
  std::set<Edge> normalized;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& tok = line.tokens;
    if (tok[0] == "label") {
      if (tok.size() < 3) throw ParseError("expected 'label <id> <text>'", line.number);
      int id = text::parse_index(tok[1], line.number);
      check_id(id, line.number);
      if (labels.empty()) labels.resize(n);
      labels[id] = text::rest_after_tokens(line.content, 2);
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) throw ParseError("expected 'edge <u> <v>'", line.number);
      int u = text::parse_index(tok[1], line.number);
      int v = text::parse_index(tok[2], line.number);
      check_id(u, line.number);
      check_id(v, line.number);
      if (u == v) throw ParseError("self-loop edge", line.number);
      Edge key{std::min(u, v), std::max(u, v)};
      if (!normalized.insert(key).second) throw ParseError("duplicate edge", line.number);
      edges.emplace_back(u, v);
    } else {
      throw ParseError("unknown directive '" + tok[0] + "'", line.number);
    }
  }
  return Graph(n, edges, std::move(labels));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.vertex_count() << '\n';
  if (g.has_labels())
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!g.label(v).empty()) out << "label " << v << ' ' << g.label(v) << '\n';
  for (auto [u, v] : g.edges()) out << "edge " << u << ' ' << v << '\n';
}

}  // namespace posetdim

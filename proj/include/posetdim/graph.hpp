#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace posetdim {

using Edge = std::pair<int, int>;

// Graph distances and girth; std::nullopt stands for infinity.
using Length = std::optional<int>;

using Density = boost::rational<std::int64_t>;

/// Finite simple undirected graph on dense vertex ids 0..n-1.
///
/// Immutable after construction. Edges are stored normalized (u < v) and
/// sorted; adjacency lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Throws ArgumentError on a self-loop, a repeated edge or an id out of range.
  Graph(int vertex_count, std::span<const Edge> edges, std::vector<std::string> labels = {});

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;

  // Empty string when the vertex has no label.
  const std::string& label(int v) const;
  bool has_labels() const { return !labels_.empty(); }

  void check_vertex(int v) const;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

Length distance(const Graph& g, int u, int v);

Length girth(const Graph& g);

int max_degree(const Graph& g);

// Parts are sorted ascending internally and ordered by their smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Vertex set given as a membership mask over g's vertices.
bool is_connected_subset(const Graph& g, std::span<const char> in_subset);

inline constexpr int kGradMaxVertices = 10;

/// Greatest reduced average density of rank r: the maximum |E(H)|/|V(H)|
/// over all depth-r minors H of g, by exhaustive enumeration of vertex
/// subsets partitioned into connected parts of radius at most r.
/// Throws CapacityError when g has more than kGradMaxVertices vertices.
Density grad(const Graph& g, int r);

// Text format: `graph <n>`, `label <id> <text>`, `edge <u> <v>`, `#` comments.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace posetdim

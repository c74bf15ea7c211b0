#pragma once

#include <iosfwd>
#include <vector>

#include "posetdim/graph.hpp"

namespace posetdim {

/// Vertex coloring with dense color ids 0..color_count-1.
struct Coloring {
  std::vector<int> colors;
  int color_count = 0;

  // Throws ArgumentError unless every vertex of an n-vertex graph is colored
  // with an id below color_count.
  void check_covers(int vertex_count) const;

  static Coloring constant(int vertex_count);
  static Coloring injective(int vertex_count);
  static Coloring from_colors(std::vector<int> colors);  // color_count = max + 1
  bool operator==(const Coloring&) const = default;
};

// Common refinement: vertices share a color iff they share it in both inputs.
// Ids are assigned in order of first appearance by vertex id.
Coloring product_coloring(const Coloring& a, const Coloring& b);

/// Rooted forest on the vertices; parent -1 marks a root, depth of a root is 1.
struct EliminationForest {
  std::vector<int> parent;
  std::vector<int> depth;

  int max_depth() const;
  bool is_ancestor(int ancestor, int v) const;

  // Rebuilds depth from parent; throws ArgumentError on a parent cycle or an
  // out-of-range parent.
  static EliminationForest from_parents(std::vector<int> parent);
};

struct CenteredCheck {
  bool centered = true;
  // Vertex set (sorted) of a connected subgraph with no unique color and
  // fewer than p colors. Empty when centered.
  std::vector<int> witness;
};

inline constexpr int kSubsetVerifierMaxColors = 20;
inline constexpr int kLiteralVerifierMaxVertices = 16;

/// p-centered test by color subsets: for every color set C with |C| < p,
/// each component of the subgraph induced by C-colored vertices must use
/// some color exactly once. Subsets are scanned in increasing bitmask order
/// so the reported witness is the first failing component of the first
/// failing subset. Costs O(2^c (n + m)); c is capped at
/// kSubsetVerifierMaxColors (p larger than c behaves like p = c + 1).
CenteredCheck is_p_centered(const Graph& g, const Coloring& col, int p);

// Literal definition: every connected vertex subset either has a color used
// exactly once or uses at least p colors. Exponential in n; capped at
// kLiteralVerifierMaxVertices.
CenteredCheck is_p_centered_literal(const Graph& g, const Coloring& col, int p);

/// color(v) = depth(v) - 1. Throws ArgumentError naming the first edge whose
/// endpoints are not in ancestor/descendant relation.
Coloring coloring_from_forest(const Graph& g, const EliminationForest& f);

enum class ForestMode { exact_small, heuristic };

inline constexpr int kExactForestMaxVertices = 12;

/// exact_small: minimum-depth elimination forest by memoized branch and bound
/// over root choices per connected component (at most 12 vertices).
/// heuristic: repeatedly root each component at its maximum-degree vertex
/// (smallest id on ties) and recurse on what remains.
EliminationForest build_elimination_forest(const Graph& g, ForestMode mode);

inline constexpr int kExactCenteredMaxVertices = 9;

// Minimum-color p-centered coloring by exhaustive search over canonical
// colorings with growing color budget.
Coloring exact_min_p_centered(const Graph& g, int p);

// Format: `coloring <n> <c>` followed by one `col <vertex> <color>` per vertex.
Coloring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& col);

}  // namespace posetdim

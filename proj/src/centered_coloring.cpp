#include "posetdim/centered_coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_map>

#include "posetdim/errors.hpp"
#include "posetdim/text.hpp"

namespace posetdim {

void Coloring::check_covers(int vertex_count) const {
  if (static_cast<int>(colors.size()) != vertex_count)
    throw ArgumentError("coloring has " + std::to_string(colors.size()) + " entries for " +
                        std::to_string(vertex_count) + " vertices");
  for (int v = 0; v < vertex_count; ++v)
    if (colors[v] < 0 || colors[v] >= color_count)
      throw ArgumentError("vertex " + std::to_string(v) + " is uncolored or has color id out of range");
  if (vertex_count > 0 && color_count < 1) throw ArgumentError("nonempty graph needs at least one color");
}

Coloring Coloring::constant(int vertex_count) {
  return {std::vector<int>(vertex_count, 0), vertex_count > 0 ? 1 : 0};
}

Coloring Coloring::injective(int vertex_count) {
  Coloring col{std::vector<int>(vertex_count), vertex_count};
  for (int v = 0; v < vertex_count; ++v) col.colors[v] = v;
  return col;
}

Coloring Coloring::from_colors(std::vector<int> colors) {
  int count = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  return {std::move(colors), count};
}

Coloring product_coloring(const Coloring& a, const Coloring& b) {
  if (a.colors.size() != b.colors.size()) throw ArgumentError("product_coloring: size mismatch");
  std::map<std::pair<int, int>, int> ids;
  Coloring out;
  for (std::size_t v = 0; v < a.colors.size(); ++v) {
    auto [it, fresh] = ids.try_emplace({a.colors[v], b.colors[v]}, static_cast<int>(ids.size()));
    out.colors.push_back(it->second);
  }
  out.color_count = static_cast<int>(ids.size());
  return out;
}

int EliminationForest::max_depth() const {
  return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

bool EliminationForest::is_ancestor(int ancestor, int v) const {
  for (int w = v; w >= 0; w = parent[w])
    if (w == ancestor) return true;
  return false;
}

EliminationForest EliminationForest::from_parents(std::vector<int> parent) {
  const int n = static_cast<int>(parent.size());
  std::vector<int> depth(n, 0);
  for (int v = 0; v < n; ++v) {
    if (parent[v] < -1 || parent[v] >= n) throw ArgumentError("parent of " + std::to_string(v) + " out of range");
  }
  for (int v = 0; v < n; ++v) {
    // Walk up until a vertex of known depth; a walk longer than n is a cycle.
    std::vector<int> path;
    int w = v;
    while (w >= 0 && depth[w] == 0) {
      path.push_back(w);
      if (static_cast<int>(path.size()) > n) throw ArgumentError("parent map contains a cycle");
      w = parent[w];
    }
    int base = w < 0 ? 0 : depth[w];
    for (auto it = path.rbegin(); it != path.rend(); ++it) depth[*it] = ++base;
  }
  return {std::move(parent), std::move(depth)};
}

namespace {

using Mask = std::uint64_t;

void require_colors_within_cap(const Coloring& col) {
  if (col.color_count > kSubsetVerifierMaxColors)
    throw CapacityError("is_p_centered: subset verifier enumerates 2^c color sets; c = " +
                            std::to_string(col.color_count) + " is too many",
                        kSubsetVerifierMaxColors);
}

}  // namespace

CenteredCheck is_p_centered(const Graph& g, const Coloring& col, int p) {
  const int n = g.vertex_count();
  col.check_covers(n);
  if (p < 1) throw ArgumentError("p must be at least 1");
  require_colors_within_cap(col);
  const int c = col.color_count;
  const int limit = std::min(p, c + 1);  // |C| < limit
  std::vector<int> mark(n, -1);
  std::vector<int> count(c, 0);
  std::vector<int> component;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << c); ++mask) {
    if (std::popcount(mask) >= limit) continue;
    for (int s = 0; s < n; ++s) {
      if (!(mask >> col.colors[s] & 1) || mark[s] == static_cast<int>(mask)) continue;
      component.assign(1, s);
      mark[s] = static_cast<int>(mask);
      for (std::size_t i = 0; i < component.size(); ++i)
        for (int w : g.neighbors(component[i]))
          if ((mask >> col.colors[w] & 1) && mark[w] != static_cast<int>(mask)) {
            mark[w] = static_cast<int>(mask);
            component.push_back(w);
          }
      for (int v : component) ++count[col.colors[v]];
      bool unique = false;
      for (int v : component) unique = unique || count[col.colors[v]] == 1;
      for (int v : component) count[col.colors[v]] = 0;
      if (!unique) {
        std::sort(component.begin(), component.end());
        return {false, component};
      }
    }
  }
  return {true, {}};
}

CenteredCheck is_p_centered_literal(const Graph& g, const Coloring& col, int p) {
  const int n = g.vertex_count();
  col.check_covers(n);
  if (p < 1) throw ArgumentError("p must be at least 1");
  if (n > kLiteralVerifierMaxVertices)
    throw CapacityError("is_p_centered_literal: enumerates all 2^n vertex subsets", kLiteralVerifierMaxVertices);
  std::vector<Mask> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= Mask{1} << v;
    nbr[v] |= Mask{1} << u;
  }
  std::vector<int> count(col.color_count, 0);
  for (Mask subset = 1; subset < (Mask{1} << n); ++subset) {
    Mask reached = subset & (~subset + 1);
    for (Mask frontier = reached; frontier;) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= nbr[std::countr_zero(f)];
      frontier = next & subset & ~reached;
      reached |= frontier;
    }
    if (reached != subset) continue;
    int distinct = 0;
    for (Mask s = subset; s; s &= s - 1)
      if (count[col.colors[std::countr_zero(s)]]++ == 0) ++distinct;
    bool unique = false;
    for (Mask s = subset; s; s &= s - 1) unique = unique || count[col.colors[std::countr_zero(s)]] == 1;
    for (Mask s = subset; s; s &= s - 1) count[col.colors[std::countr_zero(s)]] = 0;
    if (!unique && distinct < p) {
      std::vector<int> witness;
      for (Mask s = subset; s; s &= s - 1) witness.push_back(std::countr_zero(s));
      return {false, witness};
    }
  }
  return {true, {}};
}

Coloring coloring_from_forest(const Graph& g, const EliminationForest& f) {
  const int n = g.vertex_count();
  if (static_cast<int>(f.parent.size()) != n || static_cast<int>(f.depth.size()) != n)
    throw ArgumentError("forest does not cover the graph");
  auto rebuilt = EliminationForest::from_parents(f.parent);
  if (rebuilt.depth != f.depth) throw ArgumentError("forest depths are inconsistent with its parent map");
  for (auto [u, v] : g.edges())
    if (!f.is_ancestor(u, v) && !f.is_ancestor(v, u))
      throw ArgumentError("elimination property violated by edge " + std::to_string(u) + " " + std::to_string(v));
  Coloring col{std::vector<int>(n), f.max_depth()};
  for (int v = 0; v < n; ++v) col.colors[v] = f.depth[v] - 1;
  return col;
}

namespace {

std::vector<Mask> mask_components(const std::vector<Mask>& nbr, Mask set) {
  std::vector<Mask> parts;
  while (set) {
    Mask reached = set & (~set + 1);
    for (Mask frontier = reached; frontier;) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= nbr[std::countr_zero(f)];
      frontier = next & set & ~reached;
      reached |= frontier;
    }
    parts.push_back(reached);
    set &= ~reached;
  }
  return parts;
}

struct ExactForest {
  std::vector<Mask> nbr;
  std::unordered_map<Mask, std::pair<int, int>> memo;  // connected set -> (depth, root)

  int solve(Mask set) {
    if (std::popcount(set) == 1) return 1;
    if (auto it = memo.find(set); it != memo.end()) return it->second.first;
    // Higher-degree roots first find good bounds early.
    std::vector<int> roots;
    for (Mask s = set; s; s &= s - 1) roots.push_back(std::countr_zero(s));
    std::stable_sort(roots.begin(), roots.end(), [&](int a, int b) {
      return std::popcount(nbr[a] & set) > std::popcount(nbr[b] & set);
    });
    int best = std::popcount(set) + 1, best_root = roots.front();
    for (int root : roots) {
      int worst = 0;
      for (Mask part : mask_components(nbr, set & ~(Mask{1} << root))) {
        if (1 + std::popcount(part) <= worst) continue;
        worst = std::max(worst, solve(part));
        if (1 + worst >= best) break;
      }
      if (1 + worst < best) {
        best = 1 + worst;
        best_root = root;
      }
    }
    memo[set] = {best, best_root};
    return best;
  }

  void assign(Mask set, int parent, int depth, EliminationForest& f) {
    int root = std::popcount(set) == 1 ? std::countr_zero(set) : (solve(set), memo.at(set).second);
    f.parent[root] = parent;
    f.depth[root] = depth;
    for (Mask part : mask_components(nbr, set & ~(Mask{1} << root))) assign(part, root, depth + 1, f);
  }
};

void heuristic_assign(const Graph& g, std::vector<int> vertices, std::vector<char>& removed, int parent, int depth,
                      EliminationForest& f) {
  // `vertices` is one connected component of the remaining graph.
  int root = -1, best_degree = -1;
  for (int v : vertices) {
    int deg = 0;
    for (int w : g.neighbors(v)) deg += !removed[w];
    if (deg > best_degree) {
      best_degree = deg;
      root = v;
    }
  }
  f.parent[root] = parent;
  f.depth[root] = depth;
  removed[root] = 1;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int s : vertices) {
    if (removed[s] || seen[s]) continue;
    std::vector<int> part{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < part.size(); ++i)
      for (int w : g.neighbors(part[i]))
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          part.push_back(w);
        }
    std::sort(part.begin(), part.end());
    heuristic_assign(g, std::move(part), removed, root, depth + 1, f);
  }
}

}  // namespace

EliminationForest build_elimination_forest(const Graph& g, ForestMode mode) {
  const int n = g.vertex_count();
  EliminationForest f{std::vector<int>(n, -1), std::vector<int>(n, 0)};
  if (mode == ForestMode::exact_small) {
    if (n > kExactForestMaxVertices)
      throw CapacityError("build_elimination_forest: exact search supports at most " +
                              std::to_string(kExactForestMaxVertices) + " vertices",
                          kExactForestMaxVertices);
    ExactForest search{std::vector<Mask>(n, 0), {}};
    for (auto [u, v] : g.edges()) {
      search.nbr[u] |= Mask{1} << v;
      search.nbr[v] |= Mask{1} << u;
    }
    Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
    for (Mask part : mask_components(search.nbr, all)) search.assign(part, -1, 1, f);
    return f;
  }
  std::vector<char> removed(n, 0);
  for (const auto& part : connected_components(g)) heuristic_assign(g, part, removed, -1, 1, f);
  return f;
}

namespace {

struct MinCenteredSearch {
  const Graph& g;
  int p;
  int budget;
  std::vector<int> colors;

  bool extend(int v, int used) {
    if (v == g.vertex_count()) {
      Coloring col{colors, used};
      return is_p_centered(g, col, p).centered;
    }
    for (int c = 0; c <= std::min(used, budget - 1); ++c) {
      colors[v] = c;
      if (extend(v + 1, std::max(used, c + 1))) return true;
    }
    return false;
  }
};

}  // namespace

Coloring exact_min_p_centered(const Graph& g, int p) {
  const int n = g.vertex_count();
  if (n > kExactCenteredMaxVertices)
    throw CapacityError("exact_min_p_centered: exhaustive search supports at most " +
                            std::to_string(kExactCenteredMaxVertices) + " vertices",
                        kExactCenteredMaxVertices);
  if (p < 1) throw ArgumentError("p must be at least 1");
  if (n == 0) return {};
  for (int budget = 1; budget <= n; ++budget) {
    MinCenteredSearch search{g, p, budget, std::vector<int>(n, 0)};
    if (search.extend(0, 0)) return Coloring::from_colors(search.colors);
  }
  return Coloring::injective(n);  // unreachable: an injective coloring is always centered
}

Coloring read_coloring(std::istream& in) {
  auto lines = text::significant_lines(in);
  if (lines.empty() || lines.front().tokens.size() != 3 || lines.front().tokens[0] != "coloring")
    throw ParseError("expected header 'coloring <n> <c>'", lines.empty() ? 0 : lines.front().number);
  const int n = text::parse_index(lines.front().tokens[1], lines.front().number);
  const int c = text::parse_index(lines.front().tokens[2], lines.front().number);
  Coloring col{std::vector<int>(n, -1), c};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 3 || line.tokens[0] != "col")
      throw ParseError("expected 'col <vertex> <color>'", line.number);
    int v = text::parse_index(line.tokens[1], line.number);
    int color = text::parse_index(line.tokens[2], line.number);
    if (v >= n) throw ParseError("vertex id out of range", line.number);
    if (color >= c) throw ParseError("color id out of range", line.number);
    if (col.colors[v] >= 0) throw ParseError("vertex colored twice", line.number);
    col.colors[v] = color;
  }
  for (int v = 0; v < n; ++v)
    if (col.colors[v] < 0) throw ParseError("vertex " + std::to_string(v) + " is uncolored", 0);
  return col;
}

void write_coloring(std::ostream& out, const Coloring& col) {
  out << "coloring " << col.colors.size() << ' ' << col.color_count << '\n';
  for (std::size_t v = 0; v < col.colors.size(); ++v) out << "col " << v << ' ' << col.colors[v] << '\n';
}

}  // namespace posetdim

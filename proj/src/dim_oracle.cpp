#include "posetdim/dim_oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "posetdim/errors.hpp"
#include "posetdim/generators.hpp"

namespace posetdim {

std::vector<ElementPair> critical_pairs(const Poset& p) {
  std::vector<ElementPair> out;
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (p.comparable(x, y)) continue;
      ElementSet below_x = p.downset(x);
      below_x.reset(x);
      ElementSet above_y = p.upset(y);
      above_y.reset(y);
      if (below_x.is_subset_of(p.downset(y)) && above_y.is_subset_of(p.upset(x))) out.emplace_back(x, y);
    }
  }
  return out;
}

namespace {

using Row = std::uint32_t;
using Closure = std::array<Row, kDimensionMaxElements>;  // closure[a] = {b : a <=_L b}

struct PartitionSearch {
  int n;
  int classes;
  std::vector<ElementPair> pairs;
  std::vector<Closure> state;  // one closure per class
  std::vector<int> assignment;
  int used = 0;

  static bool reversed(const Closure& c, ElementPair pr) { return c[pr.second] >> pr.first & 1; }
  static bool blocked(const Closure& c, ElementPair pr) { return c[pr.first] >> pr.second & 1; }

  // Forces y below x: everything at or below y now lies below everything at
  // or above x.
  void reverse(Closure& c, ElementPair pr) const {
    const Row above_x = c[pr.first];
    for (int a = 0; a < n; ++a)
      if (c[a] >> pr.second & 1) c[a] |= above_x;
  }

  bool solve(std::size_t k) {
    if (k == pairs.size()) return true;
    const auto pr = pairs[k];
    for (int c = 0; c < used; ++c) {
      if (reversed(state[c], pr)) {
        assignment[k] = c;
        return solve(k + 1);
      }
    }
    const int limit = std::min(used + 1, classes);
    for (int c = 0; c < limit; ++c) {
      if (blocked(state[c], pr)) continue;
      Closure saved = state[c];
      const int saved_used = used;
      reverse(state[c], pr);
      used = std::max(used, c + 1);
      assignment[k] = c;
      if (solve(k + 1)) return true;
      state[c] = saved;
      used = saved_used;
    }
    return false;
  }
};

}  // namespace

DimensionCertificate exact_dimension(const Poset& p) {
  const int n = p.size();
  if (n > kDimensionMaxElements)
    throw CapacityError("exact_dimension: backtracking supports at most " + std::to_string(kDimensionMaxElements) +
                            " elements, got " + std::to_string(n),
                        kDimensionMaxElements);
  DimensionCertificate cert;
  auto critical = critical_pairs(p);
  if (critical.empty()) {
    // Inc(P) empty: a chain (or a single point).
    cert.value = 1;
    cert.realizer.push_back(extend_reversed(p, {}));
    return cert;
  }
  Closure order{};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.leq(a, b)) order[a] |= Row{1} << b;

  for (int d = 1;; ++d) {
    PartitionSearch search{n, d, critical, std::vector<Closure>(d, order), std::vector<int>(critical.size(), -1), 0};
    if (!search.solve(0)) continue;
    cert.value = d;
    std::vector<std::vector<ElementPair>> parts(d);
    for (std::size_t k = 0; k < critical.size(); ++k) parts[search.assignment[k]].push_back(critical[k]);
    for (const auto& part : parts) cert.realizer.push_back(extend_reversed(p, part));
    cert.hard_core = critical;
    cert.lower_bound_exhausted = true;
    return cert;
  }
}

namespace {

struct ColoringSearch {
  const Graph& g;
  int k;
  std::vector<int> order;  // vertices by decreasing degree
  std::vector<int> colors;

  bool extend(std::size_t i, int used) {
    if (i == order.size()) return true;
    int v = order[i];
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      bool clash = false;
      for (int w : g.neighbors(v)) clash = clash || colors[w] == c;
      if (clash) continue;
      colors[v] = c;
      if (extend(i + 1, std::max(used, c + 1))) return true;
      colors[v] = -1;
    }
    return false;
  }
};

}  // namespace

ChromaticResult exact_chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kChromaticMaxVertices)
    throw CapacityError("exact_chromatic_number: branch and bound supports at most " +
                            std::to_string(kChromaticMaxVertices) + " vertices",
                        kChromaticMaxVertices);
  if (n == 0) return {};
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = 1; k <= n; ++k) {
    ColoringSearch search{g, k, order, std::vector<int>(n, -1)};
    if (search.extend(0, 0)) return {k, Coloring{search.colors, k}};
  }
  return {n, Coloring::injective(n)};
}

namespace {

struct StandardExampleSearch {
  const Poset& p;
  int d;
  std::vector<int> a, b;

  bool fits(int x, int y) const {
    if (p.comparable(x, y)) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (p.comparable(x, a[j]) || p.comparable(y, b[j])) return false;
      if (!p.less(x, b[j]) || !p.less(a[j], y)) return false;
    }
    return true;
  }

  bool extend() {
    if (static_cast<int>(a.size()) == d) return true;
    int start = a.empty() ? 0 : a.back() + 1;
    for (int x = start; x < p.size(); ++x) {
      for (int y = 0; y < p.size(); ++y) {
        if (!fits(x, y)) continue;
        a.push_back(x);
        b.push_back(y);
        if (extend()) return true;
        a.pop_back();
        b.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

std::optional<StandardExampleWitness> contains_standard_example(const Poset& p, int d) {
  if (d < 1) throw ArgumentError("contains_standard_example: d must be at least 1");
  if (d > kStandardExampleMaxD)
    throw CapacityError("contains_standard_example: witness search supports d up to " +
                            std::to_string(kStandardExampleMaxD),
                        kStandardExampleMaxD);
  StandardExampleSearch search{p, d, {}, {}};
  if (!search.extend()) return std::nullopt;
  return StandardExampleWitness{search.a, search.b};
}

LogLogCheck loglog_check(int n) {
  if (n < 1 || n > 5) throw CapacityError("loglog_check: supports n in 1..5", 5);
  int dim = exact_dimension(incidence_poset(complete_graph(n))).value;
  // dim >= log2 log2 n  <=>  2^(2^dim) >= n, exact for n >= 1.
  bool holds = dim >= 5 || (std::uint64_t{1} << (1u << dim)) >= static_cast<std::uint64_t>(n);
  return {holds, dim};
}

}  // namespace posetdim

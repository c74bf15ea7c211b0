#include "posetdim/generators.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>

namespace posetdim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ArgumentError(what);
}

std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Poset standard_example(int d) {
  require(d >= 1, "standard_example: d must be at least 1");
  std::vector<ElementPair> rels;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) rels.emplace_back(i, d + j);
  auto labels = numbered("a", d);
  for (auto& l : numbered("b", d)) labels.push_back(l);
  return Poset(2 * d, rels, std::move(labels));
}

Poset kelly(int d) {
  require(d >= 1, "kelly: d must be at least 1");
  auto a = [](int i) { return i - 1; };
  auto b = [d](int i) { return d + i - 1; };
  auto u = [d](int i) { return 2 * d + i - 1; };
  auto v = [d](int i) { return 3 * d + i - 2; };
  std::vector<ElementPair> rels;
  for (int i = 1; i <= d - 2; ++i) rels.emplace_back(u(i), u(i + 1));
  for (int j = 1; j <= d - 2; ++j) rels.emplace_back(v(j + 1), v(j));
  for (int i = 1; i <= d - 1; ++i) rels.emplace_back(a(i), u(i));
  for (int k = 2; k <= d; ++k) rels.emplace_back(u(k - 1), b(k));
  for (int i = 2; i <= d; ++i) rels.emplace_back(a(i), v(i - 1));
  for (int k = 1; k <= d - 1; ++k) rels.emplace_back(v(k), b(k));
  auto labels = numbered("a", d);
  for (auto& l : numbered("b", d)) labels.push_back(l);
  for (auto& l : numbered("u", d - 1)) labels.push_back(l);
  for (auto& l : numbered("v", d - 1)) labels.push_back(l);
  return Poset(4 * d - 2, rels, std::move(labels));
}

Poset incidence_poset(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<ElementPair> rels;
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back(g.label(v).empty() ? "v" + std::to_string(v) : g.label(v));
  int id = n;
  for (auto [x, y] : g.edges()) {
    rels.emplace_back(x, id);
    rels.emplace_back(y, id);
    labels.push_back("e_{" + std::to_string(x) + "," + std::to_string(y) + "}");
    ++id;
  }
  return Poset(id, rels, std::move(labels));
}

Poset adjacency_poset(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<ElementPair> rels;
  for (auto [x, y] : g.edges()) {
    rels.emplace_back(x, n + y);
    rels.emplace_back(y, n + x);
  }
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back("a" + std::to_string(v));
  for (int v = 0; v < n; ++v) labels.push_back("b" + std::to_string(v));
  return Poset(2 * n, rels, std::move(labels));
}

Poset chain(int n) {
  require(n >= 1, "chain: n must be at least 1");
  std::vector<ElementPair> rels;
  for (int i = 0; i + 1 < n; ++i) rels.emplace_back(i, i + 1);
  return Poset(n, rels);
}

Poset antichain(int n) {
  require(n >= 1, "antichain: n must be at least 1");
  return Poset(n, std::vector<ElementPair>{});
}

Poset boolean_lattice(int n) {
  require(n >= 1 && n <= kBooleanLatticeMax, "boolean_lattice: n must be in 1..4");
  const int size = 1 << n;
  std::vector<ElementPair> rels;
  std::vector<std::string> labels;
  for (int s = 0; s < size; ++s) {
    std::string label = "{";
    for (int i = 0; i < n; ++i) {
      if (s & (1 << i)) {
        if (label.size() > 1) label += ",";
        label += std::to_string(i);
      } else {
        rels.emplace_back(s, s | (1 << i));
      }
    }
    labels.push_back(label + "}");
  }
  return Poset(size, rels, std::move(labels));
}

Poset random_poset(int n, double density, std::uint64_t seed) {
  require(n >= 0, "random_poset: negative size");
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<ElementPair> rels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) rels.emplace_back(perm[i], perm[j]);
  return Poset(n, rels);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  require(leaves >= 0, "star needs a non-negative leaf count");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph grid_2xk(int k) {
  require(k >= 1, "grid2x<k> needs k >= 1");
  // Row r, column c -> r * k + c.
  std::vector<Edge> edges;
  for (int c = 0; c < k; ++c) {
    edges.emplace_back(c, k + c);
    if (c + 1 < k) {
      edges.emplace_back(c, c + 1);
      edges.emplace_back(k + c, k + c + 1);
    }
  }
  return Graph(2 * k, edges);
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

namespace {

std::optional<int> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  int value = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

int parse_parameter(const std::string& token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
    throw ArgumentError("expected a non-negative integer parameter, got '" + token + "'");
  return value;
}

}  // namespace

Graph named_graph(const std::string& name) {
  if (name == "petersen") return petersen_graph();
  if (auto k = suffix_number(name, "grid2x")) return grid_2xk(*k);
  if (auto k = suffix_number(name, "star")) return star_graph(*k);
  if (auto k = suffix_number(name, "K")) return complete_graph(*k);
  if (auto k = suffix_number(name, "C")) return cycle_graph(*k);
  if (auto k = suffix_number(name, "P")) return path_graph(*k);
  throw ArgumentError("unknown graph name '" + name + "' (expected K<n>, C<n>, P<n>, star<k>, grid2x<k>, petersen)");
}

namespace {

struct FamilyName {
  Family family;
  const char* name;
  bool takes_graph;
};

constexpr FamilyName kFamilies[] = {
    {Family::standard_example, "standard_example", false},
    {Family::kelly, "kelly", false},
    {Family::incidence, "incidence", true},
    {Family::adjacency, "adjacency", true},
    {Family::chain, "chain", false},
    {Family::antichain, "antichain", false},
    {Family::boolean_lattice, "boolean_lattice", false},
    {Family::graph, "graph", true},
};

Graph resolve_graph(const std::string& ref) {
  try {
    return named_graph(ref);
  } catch (const ArgumentError&) {
    std::ifstream in(ref);
    if (!in) throw;
    return read_graph(in);
  }
}

}  // namespace

NamedFamilyId NamedFamilyId::parse(const std::vector<std::string>& args) {
  if (args.size() != 2) throw ArgumentError("expected '<family> <parameter>'");
  for (const auto& f : kFamilies) {
    if (args[0] != f.name) continue;
    NamedFamilyId id{f.family, 0, {}};
    if (f.takes_graph)
      id.graph = args[1];
    else
      id.parameter = parse_parameter(args[1]);
    return id;
  }
  throw ArgumentError("unknown family '" + args[0] +
                      "' (expected standard_example, kelly, incidence, adjacency, chain, antichain, "
                      "boolean_lattice, graph)");
}

std::string NamedFamilyId::to_string() const {
  for (const auto& f : kFamilies)
    if (f.family == family)
      return std::string(f.name) + " " + (f.takes_graph ? graph : std::to_string(parameter));
  return "?";
}

std::variant<Poset, Graph> generate(const NamedFamilyId& id) {
  switch (id.family) {
    case Family::standard_example: return standard_example(id.parameter);
    case Family::kelly: return kelly(id.parameter);
    case Family::incidence: return incidence_poset(resolve_graph(id.graph));
    case Family::adjacency: return adjacency_poset(resolve_graph(id.graph));
    case Family::chain: return chain(id.parameter);
    case Family::antichain: return antichain(id.parameter);
    case Family::boolean_lattice: return boolean_lattice(id.parameter);
    case Family::graph: return resolve_graph(id.graph);
  }
  throw ArgumentError("unhandled family");
}

}  // namespace posetdim

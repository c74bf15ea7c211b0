#include "posetdim/poset.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>

#include "posetdim/text.hpp"

namespace posetdim {

namespace {

// Kahn's algorithm, smallest ready id first. Returns fewer than n ids when
// the digraph has a cycle.
std::vector<int> smallest_first_topological_sort(int n, const std::vector<std::vector<int>>& out) {
  std::vector<int> indegree(n, 0);
  for (const auto& row : out)
    for (int w : row) ++indegree[w];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : out[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  return order;
}

std::string pair_text(ElementPair pr) {
  return "(" + std::to_string(pr.first) + "," + std::to_string(pr.second) + ")";
}

}  // namespace

Poset::Poset(int element_count, std::span<const ElementPair> relations, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (element_count < 0) throw ArgumentError("negative element count");
  const int n = element_count;
  if (!labels_.empty()) labels_.resize(n);
  std::vector<std::vector<int>> succ(n);
  for (auto [a, b] : relations) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ArgumentError("relation " + pair_text({a, b}) + " has an element id out of range");
    if (a == b) throw ArgumentError("reflexive relation " + pair_text({a, b}) + " is not strict");
    succ[a].push_back(b);
  }
  for (auto& row : succ) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  auto topo = smallest_first_topological_sort(n, succ);
  if (static_cast<int>(topo.size()) != n) throw ArgumentError("relations contain a cycle");

  up_.assign(n, ElementSet(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int x = *it;
    up_[x].set(x);
    for (int s : succ[x]) up_[x] |= up_[s];
  }
  down_.assign(n, ElementSet(n));
  for (int x = 0; x < n; ++x)
    for (auto y = up_[x].find_first(); y != ElementSet::npos; y = up_[x].find_next(y)) down_[y].set(x);

  // b is a cover of a iff it is a direct successor not reachable through
  // another direct successor.
  upper_.assign(n, {});
  lower_.assign(n, {});
  for (int a = 0; a < n; ++a) {
    ElementSet via(n);
    for (int s : succ[a]) {
      ElementSet strict = up_[s];
      strict.reset(s);
      via |= strict;
    }
    for (int b : succ[a]) {
      if (!via.test(b)) {
        covers_.emplace_back(a, b);
        upper_[a].push_back(b);
        lower_[b].push_back(a);
      }
    }
  }
  std::sort(covers_.begin(), covers_.end());
  for (auto& row : lower_) std::sort(row.begin(), row.end());

  // Topological order of the covers equals that of the relations.
  topo_ = smallest_first_topological_sort(n, upper_);
  element_height_.assign(n, 1);
  for (int x : topo_)
    for (int w : upper_[x]) element_height_[w] = std::max(element_height_[w], element_height_[x] + 1);
  height_ = n == 0 ? 0 : *std::max_element(element_height_.begin(), element_height_.end());
}

void Poset::check_element(int x) const {
  if (x < 0 || x >= size())
    throw ArgumentError("invalid element id " + std::to_string(x) + " (poset has " + std::to_string(size()) +
                        " elements)");
}

bool Poset::leq(int x, int y) const {
  check_element(x);
  check_element(y);
  return up_[x].test(y);
}

const ElementSet& Poset::upset(int x) const {
  check_element(x);
  return up_[x];
}

const ElementSet& Poset::downset(int x) const {
  check_element(x);
  return down_[x];
}

const std::vector<int>& Poset::upper_covers(int x) const {
  check_element(x);
  return upper_[x];
}

const std::vector<int>& Poset::lower_covers(int x) const {
  check_element(x);
  return lower_[x];
}

int Poset::element_height(int x) const {
  check_element(x);
  return element_height_[x];
}

const std::string& Poset::label(int x) const {
  static const std::string empty;
  check_element(x);
  return labels_.empty() ? empty : labels_[x];
}

std::string Poset::name(int x) const {
  const auto& l = label(x);
  return l.empty() ? std::to_string(x) : l;
}

Poset Poset::induced(std::span<const int> elements) const {
  const int k = static_cast<int>(elements.size());
  std::vector<ElementPair> rels;
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    check_element(elements[i]);
    if (has_labels()) labels.push_back(labels_[elements[i]]);
    for (int j = 0; j < k; ++j)
      if (i != j && less(elements[i], elements[j])) rels.emplace_back(i, j);
  }
  return Poset(k, rels, std::move(labels));
}

std::vector<int> LinearExtension::positions() const {
  std::vector<int> pos(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos.at(order[i]) = static_cast<int>(i);
  return pos;
}

bool leq(const Poset& p, int x, int y) { return p.leq(x, y); }
int element_height(const Poset& p, int x) { return p.element_height(x); }
int height(const Poset& p) { return p.height(); }

Graph cover_graph(const Poset& p) {
  std::vector<std::string> labels;
  if (p.has_labels())
    for (int x = 0; x < p.size(); ++x) labels.push_back(p.label(x));
  return Graph(p.size(), p.covers(), std::move(labels));
}

std::vector<ElementPair> incomparable_pairs(const Poset& p) {
  std::vector<ElementPair> pairs;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (!p.comparable(x, y)) pairs.emplace_back(x, y);
  return pairs;
}

namespace {

void require_incomparable(const Poset& p, std::span<const ElementPair> pairs) {
  for (auto pr : pairs)
    if (p.comparable(pr.first, pr.second))
      throw ArgumentError("pair " + pair_text(pr) + " is not incomparable");
}

}  // namespace

std::optional<std::vector<ElementPair>> find_alternating_cycle(const Poset& p, std::span<const ElementPair> pairs) {
  require_incomparable(p, pairs);
  const int k = static_cast<int>(pairs.size());
  auto arc = [&](int i, int j) { return p.leq(pairs[i].first, pairs[j].second); };

  std::vector<int> best;
  for (int start = 0; start < k; ++start) {
    std::vector<int> parent(k, -1), dist(k, -1);
    std::deque<int> queue{start};
    dist[start] = 0;
    int closing = -1;
    while (!queue.empty() && closing < 0) {
      int u = queue.front();
      queue.pop_front();
      if (!best.empty() && dist[u] + 1 >= static_cast<int>(best.size())) break;
      for (int w = 0; w < k; ++w) {
        if (!arc(u, w)) continue;
        if (w == start) {
          closing = u;
          break;
        }
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (closing < 0) continue;
    std::vector<int> cycle;
    for (int v = closing; v >= 0; v = parent[v]) cycle.push_back(v);
    std::reverse(cycle.begin(), cycle.end());
    if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
    if (best.size() == 2) break;
  }
  if (best.empty()) return std::nullopt;
  std::vector<ElementPair> witness;
  for (int i : best) witness.push_back(pairs[i]);
  return witness;
}

namespace {

// Topological sort of the strict order of p plus arcs y -> x per pair.
std::vector<int> reversing_order(const Poset& p, std::span<const ElementPair> pairs) {
  std::vector<std::vector<int>> out(p.size());
  for (auto [a, b] : p.covers()) out[a].push_back(b);
  for (auto [x, y] : pairs) out[y].push_back(x);
  return smallest_first_topological_sort(p.size(), out);
}

}  // namespace

bool is_reversible(const Poset& p, std::span<const ElementPair> pairs) {
  require_incomparable(p, pairs);
  return static_cast<int>(reversing_order(p, pairs).size()) == p.size();
}

LinearExtension extend_reversed(const Poset& p, std::span<const ElementPair> pairs) {
  require_incomparable(p, pairs);
  auto order = reversing_order(p, pairs);
  if (static_cast<int>(order.size()) != p.size()) {
    auto cycle = find_alternating_cycle(p, pairs);
    throw ContractViolation("pairs are not reversible: they contain an alternating cycle",
                            cycle.value_or(std::vector<ElementPair>{}));
  }
  return LinearExtension{std::move(order)};
}

void check_linear_extension(const Poset& p, const LinearExtension& ext) {
  const int n = p.size();
  if (static_cast<int>(ext.order.size()) != n)
    throw ArgumentError("extension lists " + std::to_string(ext.order.size()) + " elements, poset has " +
                        std::to_string(n));
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int x = ext.order[i];
    if (x < 0 || x >= n || pos[x] >= 0) throw ArgumentError("extension is not a permutation of the ground set");
    pos[x] = i;
  }
  for (auto [a, b] : p.covers())
    if (pos[a] > pos[b])
      throw ArgumentError("extension violates relation " + p.name(a) + " < " + p.name(b) + " " + pair_text({a, b}));
}

RealizerCheck validate_realizer(const Poset& p, std::span<const LinearExtension> extensions) {
  const int n = p.size();
  for (const auto& ext : extensions) check_linear_extension(p, ext);
  if (extensions.empty()) {
    if (n <= 1) return {true, std::nullopt, {}};
    // The empty intersection relates every pair.
    return {false, ElementPair{0, 1}, "no extensions: 0 before 1 vacuously but not 0 < 1 in P"};
  }
  // before[x] = elements after x in every extension.
  std::vector<ElementSet> before(n, ElementSet(n));
  for (auto& row : before) row.set();
  for (const auto& ext : extensions) {
    auto pos = ext.positions();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (pos[x] >= pos[y]) before[x].reset(y);
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      bool all = before[x].test(y);
      bool below = p.less(x, y);
      if (all && !below)
        return {false, ElementPair{x, y}, "x before y in every extension but not x < y in P"};
      if (!all && below)
        return {false, ElementPair{x, y}, "x < y in P but some extension puts y first"};
    }
  }
  return {true, std::nullopt, {}};
}

Poset read_poset(std::istream& in) {
  auto lines = text::significant_lines(in);
  if (lines.empty() || lines.front().tokens.size() != 2 || lines.front().tokens[0] != "poset")
    throw ParseError("expected header 'poset <n>'", lines.empty() ? 0 : lines.front().number);
  const int n = text::parse_index(lines.front().tokens[1], lines.front().number);
  std::vector<std::string> labels;
  std::vector<ElementPair> rels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& tok = line.tokens;
    if (tok[0] == "label") {
      if (tok.size() < 3) throw ParseError("expected 'label <id> <text>'", line.number);
      int id = text::parse_index(tok[1], line.number);
      if (id >= n) throw ParseError("element id " + std::to_string(id) + " out of range", line.number);
      if (labels.empty()) labels.resize(n);
      labels[id] = text::rest_after_tokens(line.content, 2);
    } else if (tok[0] == "rel") {
      if (tok.size() != 3) throw ParseError("expected 'rel <a> <b>'", line.number);
      int a = text::parse_index(tok[1], line.number);
      int b = text::parse_index(tok[2], line.number);
      if (a >= n || b >= n) throw ParseError("element id out of range", line.number);
      if (a == b) throw ParseError("reflexive relation", line.number);
      rels.emplace_back(a, b);
    } else {
      throw ParseError("unknown directive '" + tok[0] + "'", line.number);
    }
  }
  try {
    return Poset(n, rels, std::move(labels));
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), 0);
  }
}

void write_poset(std::ostream& out, const Poset& p) {
  out << "poset " << p.size() << '\n';
  if (p.has_labels())
    for (int x = 0; x < p.size(); ++x)
      if (!p.label(x).empty()) out << "label " << x << ' ' << p.label(x) << '\n';
  for (auto [a, b] : p.covers()) out << "rel " << a << ' ' << b << '\n';
}

std::vector<LinearExtension> read_realizer(std::istream& in) {
  std::vector<LinearExtension> exts;
  std::optional<int> declared;
  std::size_t declared_line = 0;
  for (const auto& line : text::significant_lines(in)) {
    const auto& tok = line.tokens;
    if (tok[0] == "ext") {
      LinearExtension ext;
      for (std::size_t i = 1; i < tok.size(); ++i) ext.order.push_back(text::parse_index(tok[i], line.number));
      exts.push_back(std::move(ext));
    } else if (tok.size() == 1 && !declared && exts.empty()) {
      declared = text::parse_index(tok[0], line.number);
      declared_line = line.number;
    } else {
      throw ParseError("expected 'ext <id...>'", line.number);
    }
  }
  if (declared && *declared != static_cast<int>(exts.size()))
    throw ParseError("declared " + std::to_string(*declared) + " extensions, found " + std::to_string(exts.size()),
                     declared_line);
  return exts;
}

void write_realizer(std::ostream& out, std::span<const LinearExtension> extensions) {
  for (const auto& ext : extensions) {
    out << "ext";
    for (int x : ext.order) out << ' ' << x;
    out << '\n';
  }
}

}  // namespace posetdim

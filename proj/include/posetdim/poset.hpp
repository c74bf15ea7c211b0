#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "posetdim/errors.hpp"
#include "posetdim/graph.hpp"

namespace posetdim {

using ElementSet = boost::dynamic_bitset<>;

/// Finite poset on dense element ids 0..n-1, stored as its cover DAG plus a
/// dense reachability cache.
///
/// Built from an arbitrary strict relation list: the closure is taken and the
/// covers are its transitive reduction, so redundant input relations are fine.
/// Immutable afterwards.
class Poset {
 public:
  Poset() = default;

  /// `relations` are pairs (a, b) meaning a < b. Throws ArgumentError on an
  /// out-of-range id, a reflexive relation or a cycle.
  Poset(int element_count, std::span<const ElementPair> relations, std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(up_.size()); }

  bool leq(int x, int y) const;
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

  // Reflexive up/down sets.
  const ElementSet& upset(int x) const;
  const ElementSet& downset(int x) const;

  // Sorted cover relations (a, b), a < b a cover.
  const std::vector<ElementPair>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int x) const;
  const std::vector<int>& lower_covers(int x) const;

  int element_height(int x) const;
  int height() const { return height_; }

  // Ids in a deterministic topological order (smallest available id first).
  const std::vector<int>& topological_order() const { return topo_; }

  const std::string& label(int x) const;
  bool has_labels() const { return !labels_.empty(); }
  // Label if present, otherwise the decimal id.
  std::string name(int x) const;

  void check_element(int x) const;

  // Subposet induced on the listed elements, renumbered 0..k-1 in list order.
  Poset induced(std::span<const int> elements) const;

 private:
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<ElementPair> covers_;
  std::vector<std::vector<int>> upper_;
  std::vector<std::vector<int>> lower_;
  std::vector<int> element_height_;
  std::vector<int> topo_;
  int height_ = 0;
  std::vector<std::string> labels_;
};

/// A linear order on the ground set, listed bottom to top.
struct LinearExtension {
  std::vector<int> order;

  // position[x] = index of x in order.
  std::vector<int> positions() const;
  bool operator==(const LinearExtension&) const = default;
};

bool leq(const Poset& p, int x, int y);
int element_height(const Poset& p, int x);
int height(const Poset& p);

Graph cover_graph(const Poset& p);

// All ordered incomparable pairs, sorted by (x, y).
std::vector<ElementPair> incomparable_pairs(const Poset& p);

/// Shortest alternating cycle among `pairs`, found by breadth-first search
/// over the digraph with an arc (x, y) -> (x', y') whenever x <= y'. The
/// result (x_1, y_1), ..., (x_k, y_k) has k >= 2 and x_i <= y_{i+1}
/// cyclically. Throws ArgumentError if some pair is comparable.
std::optional<std::vector<ElementPair>> find_alternating_cycle(const Poset& p, std::span<const ElementPair> pairs);

bool is_reversible(const Poset& p, std::span<const ElementPair> pairs);

/// Linear extension placing y below x for every (x, y) in `pairs`: a
/// topological sort of the covers plus arcs y -> x, smallest id first.
/// Throws ContractViolation with an alternating-cycle witness if `pairs` is
/// not reversible.
LinearExtension extend_reversed(const Poset& p, std::span<const ElementPair> pairs);

// Throws ArgumentError naming the violated relation if `ext` is not a linear
// extension of p.
void check_linear_extension(const Poset& p, const LinearExtension& ext);

struct RealizerCheck {
  bool valid = false;
  // Offending ordered pair and which direction of the equivalence failed.
  std::optional<ElementPair> counterexample;
  std::string failure;
};

RealizerCheck validate_realizer(const Poset& p, std::span<const LinearExtension> extensions);

// Text format: `poset <n>`, `label <id> <text>`, `rel <a> <b>` (a < b), `#`.
Poset read_poset(std::istream& in);
void write_poset(std::ostream& out, const Poset& p);

// Realizer format: one `ext <id...>` line per extension; an optional bare
// integer line states the expected number of extensions.
std::vector<LinearExtension> read_realizer(std::istream& in);
void write_realizer(std::ostream& out, std::span<const LinearExtension> extensions);

}  // namespace posetdim

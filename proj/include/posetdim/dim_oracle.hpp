#pragma once

#include <optional>
#include <vector>

#include "posetdim/centered_coloring.hpp"
#include "posetdim/graph.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

struct DimensionCertificate {
  int value = 0;
  std::vector<LinearExtension> realizer;  // upper witness, size == value
  // Pairs whose every partition into value-1 reversible parts was refuted by
  // the search (the critical pairs). Empty when value == 1.
  std::vector<ElementPair> hard_core;
  bool lower_bound_exhausted = false;
};

inline constexpr int kDimensionMaxElements = 16;

// Incomparable (x, y) with every z < x below y and every w > y above x.
std::vector<ElementPair> critical_pairs(const Poset& p);

/// Exact dimension by backtracking over assignments of pairs to classes,
/// classes kept reversible incrementally (a pair already reversed by a
/// class's forced order joins it without branching). Only the critical
/// pairs are branched on; any extensions reversing all of them form a
/// realizer. Pairs go in (x, y) order, classes in index order, and a new
/// class is opened only as the lowest unused one.
DimensionCertificate exact_dimension(const Poset& p);

struct ChromaticResult {
  int chromatic_number = 0;
  Coloring coloring;
};

inline constexpr int kChromaticMaxVertices = 16;

ChromaticResult exact_chromatic_number(const Graph& g);

struct StandardExampleWitness {
  std::vector<int> a;
  std::vector<int> b;
};

inline constexpr int kStandardExampleMaxD = 4;

/// Elements a_1..a_d (increasing ids) and b_1..b_d inducing S_d: a_i < b_j
/// iff i != j, a's and b's antichains. First witness in lexicographic order
/// of (a_1, b_1, a_2, b_2, ...).
std::optional<StandardExampleWitness> contains_standard_example(const Poset& p, int d);

struct LogLogCheck {
  bool holds = false;
  int dimension = 0;
};

/// exact_dimension(I_{K_n}) >= log2 log2 n, compared exactly as
/// 2^(2^dim) >= n. Supports n in 1..5.
LogLogCheck loglog_check(int n);

}  // namespace posetdim

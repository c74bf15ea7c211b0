#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "posetdim/centered_coloring.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

/// Base color paired with the element's height; the refined coloring the
/// signatures are built from.
struct StarredColor {
  int base_color = 0;
  int level = 1;
  auto operator<=>(const StarredColor&) const = default;
};

using StarColoring = std::vector<StarredColor>;

/// Pairs col(x) with h(x). Throws ArgumentError if col does not cover P.
StarColoring star_coloring(const Poset& p, const Coloring& col);

// Dense relabeling of a starred coloring, ordered by (base_color, level).
Coloring starred_as_coloring(const StarColoring& star);

using SignatureId = int;

/// Color sequence of a covering chain, bottom to top.
struct Signature {
  std::vector<StarredColor> seq;
  auto operator<=>(const Signature&) const = default;
};

std::string to_string(const Signature& sigma);

/// Per-signature upsets and downsets of every element.
///
/// Signature ids are dense and sorted lexicographically by sequence, so ids
/// depend only on the input. upsets[x] maps each sigma with a nonempty
/// sigma-upset of x to that upset; downsets[y] is the transpose.
struct SignatureTable {
  std::vector<Signature> signatures;
  std::vector<std::map<SignatureId, ElementSet>> upsets;
  std::vector<std::map<SignatureId, ElementSet>> downsets;
  std::vector<std::vector<SignatureId>> fingerprint;  // sorted sigma ids with U nonempty

  int element_count() const { return static_cast<int>(upsets.size()); }
  int signature_count() const { return static_cast<int>(signatures.size()); }

  // Empty set when x has no sigma-covering chain.
  ElementSet upset(int x, SignatureId sigma) const;
  ElementSet downset(int y, SignatureId sigma) const;
  // Elements with a nonempty sigma-upset, ascending.
  std::vector<int> sources(SignatureId sigma) const;
};

/// Dynamic program over the cover DAG from the maximal elements down:
/// the one-element signature (star(x)) has upset {x}, and (star(x)) + s'
/// collects the s'-upsets of the upper covers of x.
SignatureTable compute_signature_table(const Poset& p, const StarColoring& star);

/// Classes of elements whose sigma-upsets intersect, computed on the
/// elements with nonempty sigma-upset by union-find. Certifies that
/// intersecting upsets are equal; throws CertificationError(upset_equality)
/// with the offending (sigma, x, x') otherwise. Classes are sorted, ordered
/// by smallest element.
std::vector<std::vector<int>> sigma_classes(const SignatureTable& table, SignatureId sigma);

/// One realized fingerprint: its ground set, laminar family, the tree of the
/// family, and the left-to-right order of the ground set.
struct FingerprintBlock {
  std::vector<SignatureId> fingerprint;
  std::vector<int> ground;           // ascending ids
  std::vector<ElementSet> family;    // family[0] is the ground set
  std::vector<int> parent;           // index into family, -1 for the root
  std::vector<int> order;            // ground elements left to right
  std::map<int, int> position;       // element -> index in order
  // sigma -> class id per ground element (index aligned with `ground`).
  std::map<SignatureId, std::vector<int>> class_of;
};

struct LaminarIndex {
  std::vector<FingerprintBlock> blocks;  // sorted by fingerprint
  std::vector<int> block_of;             // element -> block index
};

/// Builds one block per realized fingerprint (never the empty ones).
/// Certifies laminarity of each family pairwise, builds the tree by
/// inclusion-minimal supersets, orders the ground set by a depth-first
/// preorder visiting children by smallest element id, and certifies that
/// every sigma-class is an interval of that order. Violations throw
/// CertificationError(laminarity / interval).
LaminarIndex build_laminar_index(const SignatureTable& table);

using IncVector = std::vector<bool>;

/// Bit per sigma of the block's fingerprint: 1 iff some point of
/// D_sigma(y) in the ground set lies strictly to the right of x. Throws
/// ArgumentError if x is not in the block's ground set, and
/// CertificationError(downset_sides) if D_sigma(y) has ground points on
/// both sides of x.
IncVector inc_vector(const LaminarIndex& index, const SignatureTable& table, int block, int x, int y);

struct IncClass {
  int block = 0;
  IncVector v;
  std::vector<ElementPair> pairs;  // sorted
};

struct IncPartition {
  std::vector<IncClass> classes;  // sorted by (block, v)
  std::size_t pair_count() const;
};

/// 2^exponent, kept symbolic because the exponent itself can be huge.
struct PaperBound {
  mpz_class exponent;

  bool admits(std::size_t count) const;  // count <= 2^exponent
  // Full decimal expansion when the exponent is at most max_exponent,
  // otherwise "2^<exponent>".
  std::string to_string(unsigned long max_exponent = kDecimalExponentCap) const;

  static constexpr unsigned long kDecimalExponentCap = 1ul << 20;
};

/// 2^(2 h^(h+1) c^h). Throws ArgumentError unless h, c >= 1.
PaperBound paper_bound(long h, long c);

// h * (h c)^h, the cap on the number of signatures.
mpz_class signature_count_bound(long h, long c);

struct CertificationLog {
  bool coloring_checked_upfront = false;
  std::size_t upset_checks = 0;      // (sigma, y) downsets scanned for equal upsets
  std::size_t laminarity_checks = 0; // family pairs compared
  std::size_t interval_checks = 0;   // sigma-classes checked for contiguity
  std::size_t downset_checks = 0;    // (pair, sigma) side checks
  std::size_t reversibility_checks = 0;
};

struct PipelineOptions {
  // Run the subset verifier for 2h-centeredness before anything else when
  // the color count allows it; otherwise rely on the lemma checks alone.
  bool verify_coloring = true;
};

struct PipelineResult {
  int height = 0;
  int color_count = 0;
  StarColoring star;
  SignatureTable table;
  LaminarIndex index;
  IncPartition partition;
  CertificationLog log;
};

/// star -> signature table -> sigma classes -> laminar index -> vectors ->
/// classes keyed by (fingerprint, vector). Every class is checked for
/// reversibility; a non-reversible class throws InternalInvariantError with
/// an alternating cycle. Certification failures throw CertificationError.
PipelineResult run_pipeline(const Poset& p, const Coloring& col, PipelineOptions options = {});

IncPartition partition_inc(const Poset& p, const Coloring& col, PipelineOptions options = {});

/// One linear extension per class; a single extension when Inc(P) is empty.
std::vector<LinearExtension> build_realizer_from_partition(const Poset& p, const IncPartition& part);

// `class sigma-set=<ids> v=<bits> pairs=(x,y),...`, preceded by comment
// lines naming each signature id.
void write_partition(std::ostream& out, const PipelineResult& result);

}  // namespace posetdim

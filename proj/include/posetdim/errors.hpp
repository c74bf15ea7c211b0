#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace posetdim {

// Bad vertex/element id, malformed structure passed to an operation.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact/exhaustive routine was asked to run beyond its hard size cap.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::size_t limit)
      : std::runtime_error(what + " (limit " + std::to_string(limit) + ")"), limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

// Text-format parse failure; carries the 1-based line number (0 if unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class CertificationKind {
  not_centered,     // up-front coloring check failed
  upset_equality,   // intersecting sigma-upsets that differ
  laminarity,       // two family sets cross
  interval,         // a sigma-class is not contiguous in the traversal order
  downset_sides,    // D_sigma(y) has points on both sides of x
};

const char* to_string(CertificationKind kind);

// One of the structural lemmas failed to hold. With a genuinely 2h-centered
// coloring this never happens, so it signals an invalid coloring input.
class CertificationError : public std::runtime_error {
 public:
  CertificationError(CertificationKind kind, const std::string& witness)
      : std::runtime_error(std::string("coloring is not 2h-centered: ") + to_string(kind) + ": " + witness),
        kind_(kind),
        witness_(witness) {}
  CertificationKind kind() const { return kind_; }
  const std::string& witness() const { return witness_; }

 private:
  CertificationKind kind_;
  std::string witness_;
};

using ElementPair = std::pair<int, int>;

// extend_reversed called on a set of pairs that contains an alternating cycle.
class ContractViolation : public std::logic_error {
 public:
  ContractViolation(const std::string& what, std::vector<ElementPair> cycle)
      : std::logic_error(what), cycle_(std::move(cycle)) {}
  const std::vector<ElementPair>& cycle() const { return cycle_; }

 private:
  std::vector<ElementPair> cycle_;
};

// A class of the pipeline's partition was not reversible even though every
// lemma certification passed. Unreachable for valid input.
class InternalInvariantError : public std::logic_error {
 public:
  InternalInvariantError(const std::string& what, std::vector<ElementPair> cycle)
      : std::logic_error(what), cycle_(std::move(cycle)) {}
  const std::vector<ElementPair>& cycle() const { return cycle_; }

 private:
  std::vector<ElementPair> cycle_;
};

}  // namespace posetdim

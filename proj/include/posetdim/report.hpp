#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetdim/centered_coloring.hpp"
#include "posetdim/poset.hpp"

namespace posetdim {

// Forest-depth coloring of the cover graph: exact minimum-depth forest when
// the poset is small enough, the degree heuristic otherwise. Centered, hence
// p-centered for every p.
Coloring auto_coloring(const Poset& p);

struct RunOptions {
  int oracle_max_n = 16;  // run exact_dimension up to this size (0 disables)
  bool verify_coloring = true;
};

/// Outcome of running the partition pipeline on one instance.
struct RunReport {
  std::string instance;
  std::string status = "ok";  // ok | parse-error | certification-failed | internal-error | error
  std::string detail;         // error message / witness when status != ok

  int n = 0;
  int height = 0;
  int colors = 0;
  int signatures = 0;
  int fingerprints = 0;
  int classes = 0;
  std::string paper_bound;
  bool within_bound = false;
  bool signatures_within_bound = false;
  std::optional<int> oracle_dimension;
  bool realizer_valid = false;
  std::vector<std::pair<std::string, std::string>> certifications;  // lemma -> verdict
  std::vector<std::pair<std::string, double>> timings;              // stage -> seconds

  bool ok() const { return status == "ok"; }
};

RunReport run_instance(const std::string& name, const Poset& p, const std::optional<Coloring>& col,
                       const RunOptions& options = {});

// One `key=value` line; timings only when requested so that default output is
// byte-identical across runs.
std::string format_report_line(const RunReport& report, bool with_timings = false);

void write_report_table(std::ostream& out, const std::vector<RunReport>& rows);

/// Manifest: one instance per line, either `gen <family> <parameter>` or a
/// poset file path; `#` comments and blank lines ignored.
struct ManifestEntry {
  std::string source;  // generator line or file path
  std::size_t line = 0;
};

// Relative file paths are resolved against base_dir.
std::vector<ManifestEntry> read_manifest(std::istream& in, const std::string& base_dir = "");

// Loads and runs one entry; load failures become parse-error rows.
RunReport run_manifest_entry(const ManifestEntry& entry, const RunOptions& options = {});

}  // namespace posetdim

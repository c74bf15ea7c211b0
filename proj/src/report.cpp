#include "posetdim/report.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "posetdim/dim_oracle.hpp"
#include "posetdim/generators.hpp"
#include "posetdim/realizer.hpp"
#include "posetdim/text.hpp"

namespace posetdim {

Coloring auto_coloring(const Poset& p) {
  Graph g = cover_graph(p);
  auto mode = g.vertex_count() <= kExactForestMaxVertices ? ForestMode::exact_small : ForestMode::heuristic;
  return coloring_from_forest(g, build_elimination_forest(g, mode));
}

namespace {

class StageClock {
 public:
  explicit StageClock(RunReport& report) : report_(report), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    auto now = std::chrono::steady_clock::now();
    report_.timings.emplace_back(stage, std::chrono::duration<double>(now - start_).count());
    start_ = now;
  }

 private:
  RunReport& report_;
  std::chrono::steady_clock::time_point start_;
};

std::string passed(std::size_t checks) { return "passed(" + std::to_string(checks) + ")"; }

}  // namespace

RunReport run_instance(const std::string& name, const Poset& p, const std::optional<Coloring>& col,
                       const RunOptions& options) {
  RunReport report;
  report.instance = name;
  report.n = p.size();
  report.height = p.height();
  StageClock clock(report);
  try {
    Coloring coloring = col ? *col : auto_coloring(p);
    clock.lap("color");
    report.colors = coloring.color_count;
    auto result = run_pipeline(p, coloring, PipelineOptions{options.verify_coloring});
    clock.lap("partition");
    report.signatures = result.table.signature_count();
    report.fingerprints = static_cast<int>(result.index.blocks.size());
    report.classes = static_cast<int>(result.partition.classes.size());
    const auto& log = result.log;
    report.certifications = {
        {"coloring", log.coloring_checked_upfront ? "passed" : "skipped"},
        {"upset_equality", passed(log.upset_checks)},
        {"laminarity", passed(log.laminarity_checks)},
        {"interval", passed(log.interval_checks)},
        {"downset_sides", passed(log.downset_checks)},
        {"reversible", passed(log.reversibility_checks)},
    };
    if (p.size() > 0 && coloring.color_count > 0) {
      auto bound = paper_bound(p.height(), coloring.color_count);
      report.paper_bound = bound.to_string();
      report.within_bound = bound.admits(result.partition.classes.size());
      report.signatures_within_bound =
          mpz_class(report.signatures) <= signature_count_bound(p.height(), coloring.color_count);
    } else {
      report.paper_bound = "-";
      report.within_bound = report.signatures_within_bound = true;
    }
    auto realizer = build_realizer_from_partition(p, result.partition);
    report.realizer_valid = validate_realizer(p, realizer).valid;
    clock.lap("realizer");
    if (p.size() <= options.oracle_max_n && p.size() <= kDimensionMaxElements) {
      report.oracle_dimension = exact_dimension(p).value;
      clock.lap("oracle");
    }
    std::string problem;
    if (!report.within_bound) problem = "class count exceeds the bound";
    if (!report.signatures_within_bound) problem = "signature count exceeds h(hc)^h";
    if (!report.realizer_valid) problem = "assembled realizer is invalid";
    if (report.oracle_dimension && p.size() > 0 && *report.oracle_dimension > report.classes && report.classes > 0)
      problem = "oracle dimension exceeds class count";
    if (!problem.empty()) {
      report.status = "internal-error";
      report.detail = problem;
    }
  } catch (const CertificationError& e) {
    report.status = "certification-failed";
    report.detail = e.what();
  } catch (const InternalInvariantError& e) {
    report.status = "internal-error";
    report.detail = e.what();
  } catch (const std::exception& e) {
    report.status = "error";
    report.detail = e.what();
  }
  return report;
}

namespace {

std::string quoted(const std::string& s) {
  std::ostringstream out;
  out << std::quoted(s);
  return out.str();
}

}  // namespace

std::string format_report_line(const RunReport& r, bool with_timings) {
  std::ostringstream out;
  out << "instance=" << quoted(r.instance) << " status=" << r.status;
  if (!r.ok() && r.status != "internal-error") {
    out << " detail=" << quoted(r.detail);
    return out.str();
  }
  out << " n=" << r.n << " height=" << r.height << " colors=" << r.colors << " signatures=" << r.signatures
      << " fingerprints=" << r.fingerprints << " classes=" << r.classes
      << " oracle_dim=" << (r.oracle_dimension ? std::to_string(*r.oracle_dimension) : "-")
      << " realizer=" << (r.realizer_valid ? "valid" : "invalid")
      << " within_bound=" << (r.within_bound ? "yes" : "no");
  for (const auto& [lemma, verdict] : r.certifications) out << " cert." << lemma << '=' << verdict;
  if (with_timings)
    for (const auto& [stage, seconds] : r.timings)
      out << " time." << stage << '=' << std::fixed << std::setprecision(6) << seconds;
  out << " paper_bound=" << r.paper_bound;
  if (!r.ok()) out << " detail=" << quoted(r.detail);
  return out.str();
}

void write_report_table(std::ostream& out, const std::vector<RunReport>& rows) {
  std::size_t width = 8;
  for (const auto& r : rows) width = std::max(width, r.instance.size());
  out << std::left << std::setw(static_cast<int>(width)) << "instance" << std::right << std::setw(5) << "n"
      << std::setw(4) << "h" << std::setw(4) << "c" << std::setw(7) << "sigmas" << std::setw(8) << "classes"
      << std::setw(5) << "dim" << "  status\n";
  std::size_t ok = 0;
  for (const auto& r : rows) {
    ok += r.ok();
    out << std::left << std::setw(static_cast<int>(width)) << r.instance << std::right << std::setw(5) << r.n
        << std::setw(4) << r.height << std::setw(4) << r.colors << std::setw(7) << r.signatures << std::setw(8)
        << r.classes << std::setw(5) << (r.oracle_dimension ? std::to_string(*r.oracle_dimension) : "-") << "  "
        << r.status << '\n';
  }
  out << "summary: " << rows.size() << " instances, " << ok << " passed, " << rows.size() - ok << " failed\n";
}

std::vector<ManifestEntry> read_manifest(std::istream& in, const std::string& base_dir) {
  std::vector<ManifestEntry> entries;
  for (const auto& line : text::significant_lines(in)) {
    std::string source = line.content;
    if (line.tokens.front() != "gen" && !base_dir.empty() && std::filesystem::path(source).is_relative())
      source = (std::filesystem::path(base_dir) / source).string();
    entries.push_back({source, line.number});
  }
  return entries;
}

RunReport run_manifest_entry(const ManifestEntry& entry, const RunOptions& options) {
  std::optional<Poset> poset;
  try {
    std::istringstream tokens(entry.source);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (!words.empty() && words.front() == "gen") {
      auto generated = generate(NamedFamilyId::parse({words.begin() + 1, words.end()}));
      if (!std::holds_alternative<Poset>(generated)) throw ArgumentError("manifest entry generates a graph");
      poset = std::get<Poset>(std::move(generated));
    } else {
      std::ifstream file(entry.source);
      if (!file) throw ParseError("cannot open '" + entry.source + "'", 0);
      poset = read_poset(file);
    }
  } catch (const std::exception& e) {
    RunReport row;
    row.instance = entry.source;
    row.status = "parse-error";
    row.detail = e.what();
    return row;
  }
  return run_instance(entry.source, *poset, std::nullopt, options);
}

}  // namespace posetdim

// posetdim command-line front end. Exit codes: 0 success, 1 verification or
// certification failure, 2 usage, parse or capacity errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "posetdim/dim_oracle.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/generators.hpp"
#include "posetdim/realizer.hpp"
#include "posetdim/report.hpp"

using namespace posetdim;

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

// "-" is standard input.
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw ParseError("cannot open '" + path + "'", 0);
  }
  std::istream& stream() { return file_ ? *file_ : std::cin; }

 private:
  std::unique_ptr<std::ifstream> file_;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw ArgumentError("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Poset load_poset(const std::string& path) {
  Input in(path);
  return read_poset(in.stream());
}

Graph load_graph(const std::string& path) {
  Input in(path);
  return read_graph(in.stream());
}

std::string join_ids(const std::vector<int>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
  return out;
}

std::string pair_list(const std::vector<ElementPair>& pairs) {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out += (i ? "," : "") + ("(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")");
  return out;
}

struct GenArgs {
  std::vector<std::string> family;
  std::string output;
};

int run_gen(const GenArgs& a) {
  auto generated = generate(NamedFamilyId::parse(a.family));
  Output out(a.output);
  if (auto* p = std::get_if<Poset>(&generated))
    write_poset(out.stream(), *p);
  else
    write_graph(out.stream(), std::get<Graph>(generated));
  return 0;
}

struct DimArgs {
  std::string poset;
  int max_n = kDimensionMaxElements;
};

int run_dim(const DimArgs& a) {
  Poset p = load_poset(a.poset);
  if (p.size() > a.max_n)
    throw CapacityError("dim: poset has " + std::to_string(p.size()) + " elements, above --max-n", a.max_n);
  auto cert = exact_dimension(p);
  std::cout << cert.value << '\n';
  write_realizer(std::cout, cert.realizer);
  return 0;
}

int run_chi(const std::string& path) {
  Graph g = load_graph(path);
  auto result = exact_chromatic_number(g);
  std::cout << result.chromatic_number << '\n';
  write_coloring(std::cout, result.coloring);
  return 0;
}

struct ColorArgs {
  std::string graph;
  int p = 0;
  bool exact = false;
};

int run_color(const ColorArgs& a) {
  Graph g = load_graph(a.graph);
  Coloring col;
  if (a.p > 0 && a.exact) {
    col = exact_min_p_centered(g, a.p);
  } else {
    bool exact = a.exact || g.vertex_count() <= kExactForestMaxVertices;
    col = coloring_from_forest(g, build_elimination_forest(g, exact ? ForestMode::exact_small : ForestMode::heuristic));
  }
  write_coloring(std::cout, col);
  return 0;
}

struct VerifyColoringArgs {
  std::string graph, coloring;
  int p = 2;
  bool literal = false;
};

int run_verify_coloring(const VerifyColoringArgs& a) {
  Graph g = load_graph(a.graph);
  Input in(a.coloring);
  Coloring col = read_coloring(in.stream());
  col.check_covers(g.vertex_count());
  auto check = a.literal ? is_p_centered_literal(g, col, a.p) : is_p_centered(g, col, a.p);
  if (check.centered) {
    std::cout << "centered p=" << a.p << '\n';
    return 0;
  }
  std::cout << "not-centered p=" << a.p << " witness=" << join_ids(check.witness) << '\n';
  return kFailure;
}

struct RealizeArgs {
  std::string poset;
  std::string coloring;
  bool auto_color = false;
  std::string emit_realizer, emit_partition;
  bool certify = false;
  bool timings = false;
  int max_n = 0;
};

int run_realize(const RealizeArgs& a) {
  Poset p = load_poset(a.poset);
  std::optional<Coloring> col;
  if (!a.coloring.empty()) {
    Input in(a.coloring);
    col = read_coloring(in.stream());
    col->check_covers(p.size());
  }
  RunOptions options;
  options.oracle_max_n = a.max_n;
  auto report = run_instance(a.poset, p, col, options);
  std::cout << format_report_line(report, a.timings) << '\n';
  if (!report.ok()) return report.status == "error" ? kUsage : kFailure;
  if (a.certify) {
    for (const auto& [lemma, verdict] : report.certifications) std::cout << "certify " << lemma << ' ' << verdict << '\n';
    std::cout << "certify realizer " << (report.realizer_valid ? "passed" : "failed") << '\n';
  }
  if (!a.emit_realizer.empty() || !a.emit_partition.empty()) {
    auto result = run_pipeline(p, col ? *col : auto_coloring(p));
    if (!a.emit_partition.empty()) {
      Output out(a.emit_partition);
      write_partition(out.stream(), result);
    }
    if (!a.emit_realizer.empty()) {
      Output out(a.emit_realizer);
      write_realizer(out.stream(), build_realizer_from_partition(p, result.partition));
    }
  }
  return 0;
}

int run_verify_realizer(const std::string& poset, const std::string& realizer) {
  Poset p = load_poset(poset);
  Input in(realizer);
  auto extensions = read_realizer(in.stream());
  auto check = validate_realizer(p, extensions);
  if (check.valid) {
    std::cout << "valid extensions=" << extensions.size() << '\n';
    return 0;
  }
  std::cout << "invalid";
  if (check.counterexample)
    std::cout << " pair=(" << check.counterexample->first << ',' << check.counterexample->second << ')';
  std::cout << " reason=\"" << check.failure << "\"\n";
  return kFailure;
}

int run_bound(long h, long c) {
  std::cout << paper_bound(h, c).to_string() << '\n';
  return 0;
}

struct ReportArgs {
  std::string manifest;
  int max_n = 10;
  bool timings = false;
};

int run_report(const ReportArgs& a) {
  Input in(a.manifest);
  std::string base;
  if (a.manifest != "-") base = std::filesystem::path(a.manifest).parent_path().string();
  auto entries = read_manifest(in.stream(), base);
  RunOptions options;
  options.oracle_max_n = a.max_n;
  std::vector<RunReport> rows;
  for (const auto& entry : entries) {
    rows.push_back(run_manifest_entry(entry, options));
    std::cout << format_report_line(rows.back(), a.timings) << '\n';
  }
  write_report_table(std::cout, rows);
  for (const auto& r : rows)
    if (!r.ok()) return kFailure;
  return 0;
}

int run_find_sd(const std::string& poset, int d) {
  Poset p = load_poset(poset);
  auto witness = contains_standard_example(p, d);
  if (!witness) {
    std::cout << "none\n";
    return 0;
  }
  std::cout << "a=" << join_ids(witness->a) << " b=" << join_ids(witness->b) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poset dimension toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a named poset or graph");
  gen_cmd->add_option("family", gen.family, "<family> <parameter>, e.g. kelly 3, incidence K4, graph C5")
      ->required()
      ->expected(2);
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "Exact dimension with a witness realizer");
  dim_cmd->add_option("poset", dim.poset)->required();
  dim_cmd->add_option("--max-n", dim.max_n)->check(CLI::Range(0, kDimensionMaxElements));

  std::string chi_graph;
  auto* chi_cmd = app.add_subcommand("chi", "Exact chromatic number");
  chi_cmd->add_option("graph", chi_graph)->required();

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Centered coloring from an elimination forest");
  color_cmd->add_option("graph", color.graph)->required();
  color_cmd->add_option("--p", color.p, "With --exact: minimum p-centered coloring")->check(CLI::PositiveNumber);
  color_cmd->add_flag("--exact", color.exact);

  VerifyColoringArgs verify_col;
  auto* verify_col_cmd = app.add_subcommand("verify-coloring", "Check that a coloring is p-centered");
  verify_col_cmd->add_option("graph", verify_col.graph)->required();
  verify_col_cmd->add_option("coloring", verify_col.coloring)->required();
  verify_col_cmd->add_option("--p", verify_col.p)->required()->check(CLI::PositiveNumber);
  verify_col_cmd->add_flag("--literal", verify_col.literal, "Enumerate connected subgraphs directly");

  RealizeArgs realize;
  auto* realize_cmd = app.add_subcommand("realize", "Partition Inc(P) into reversible sets");
  realize_cmd->add_option("poset", realize.poset)->required();
  auto* coloring_opt = realize_cmd->add_option("--coloring", realize.coloring, "Coloring of the cover graph");
  realize_cmd->add_flag("--auto-color", realize.auto_color, "Color by an elimination forest (default)")
      ->excludes(coloring_opt);
  realize_cmd->add_option("--emit-realizer", realize.emit_realizer);
  realize_cmd->add_option("--emit-partition", realize.emit_partition);
  realize_cmd->add_flag("--certify", realize.certify, "Print one verdict per certification");
  realize_cmd->add_flag("--timings", realize.timings);
  realize_cmd->add_option("--max-n", realize.max_n, "Cross-check with the exact oracle up to this size")
      ->check(CLI::Range(0, kDimensionMaxElements));

  std::string vr_poset, vr_realizer;
  auto* verify_real_cmd = app.add_subcommand("verify-realizer", "Check that extensions realize a poset");
  verify_real_cmd->add_option("poset", vr_poset)->required();
  verify_real_cmd->add_option("realizer", vr_realizer)->required();

  long bound_h = 0, bound_c = 0;
  auto* bound_cmd = app.add_subcommand("bound", "Upper bound on the class count for height h, c colors");
  bound_cmd->add_option("--height", bound_h)->required()->check(CLI::PositiveNumber);
  bound_cmd->add_option("--colors", bound_c)->required()->check(CLI::PositiveNumber);

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "Run a manifest of instances");
  report_cmd->add_option("manifest", report.manifest)->required();
  report_cmd->add_option("--max-n", report.max_n)->check(CLI::Range(0, kDimensionMaxElements));
  report_cmd->add_flag("--timings", report.timings);

  std::string sd_poset;
  int sd_d = 0;
  auto* sd_cmd = app.add_subcommand("find-sd", "Find an induced standard example S_d");
  sd_cmd->add_option("poset", sd_poset)->required();
  sd_cmd->add_option("--d", sd_d)->required()->check(CLI::Range(1, kStandardExampleMaxD));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*dim_cmd) return run_dim(dim);
    if (*chi_cmd) return run_chi(chi_graph);
    if (*color_cmd) return run_color(color);
    if (*verify_col_cmd) return run_verify_coloring(verify_col);
    if (*realize_cmd) return run_realize(realize);
    if (*verify_real_cmd) return run_verify_realizer(vr_poset, vr_realizer);
    if (*bound_cmd) return run_bound(bound_h, bound_c);
    if (*report_cmd) return run_report(report);
    if (*sd_cmd) return run_find_sd(sd_poset, sd_d);
  } catch (const CertificationError& e) {
    std::cout << "certification-failed kind=" << to_string(e.kind()) << " witness=" << e.witness() << '\n';
    return kFailure;
  } catch (const InternalInvariantError& e) {
    std::cout << "internal-error cycle=" << pair_list(e.cycle()) << '\n';
    std::cerr << "posetdim: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "posetdim: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

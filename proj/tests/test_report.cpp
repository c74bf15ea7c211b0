#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "posetdim/generators.hpp"
#include "posetdim/report.hpp"

using namespace posetdim;

namespace {

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "posetdim_report_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("manifest of standard examples") {
  std::istringstream in("# small ones\ngen standard_example 2\ngen standard_example 3\n\ngen standard_example 4\n");
  auto entries = read_manifest(in);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].line == 2);
  for (int i = 0; i < 3; ++i) {
    auto row = run_manifest_entry(entries[i]);
    CHECK(row.ok());
    CHECK(row.n == 2 * (i + 2));
    CHECK(row.height == 2);
    REQUIRE(row.oracle_dimension);
    CHECK(*row.oracle_dimension == i + 2);
    CHECK(row.realizer_valid);
    CHECK(row.within_bound);
    CHECK(row.classes >= i + 2);
    for (const auto& [lemma, verdict] : row.certifications) CHECK(verdict.rfind("passed", 0) == 0);
  }
}

TEST_CASE("empty manifest") {
  std::istringstream in("# nothing here\n\n");
  CHECK(read_manifest(in).empty());
  std::ostringstream table;
  write_report_table(table, {});
  CHECK(table.str().find("summary: 0 instances, 0 passed, 0 failed") != std::string::npos);
}

TEST_CASE("malformed and missing files become parse-error rows") {
  auto dir = scratch_dir();
  std::ofstream(dir / "broken.poset") << "poset 2\nrel 0 1\nrel 1 0\n";
  std::ofstream(dir / "fine.poset") << "poset 3\nrel 0 1\n";
  std::istringstream in("broken.poset\nfine.poset\nmissing.poset\n");
  auto entries = read_manifest(in, dir.string());
  REQUIRE(entries.size() == 3);
  CHECK(run_manifest_entry(entries[0]).status == "parse-error");
  CHECK(run_manifest_entry(entries[1]).ok());
  CHECK(run_manifest_entry(entries[2]).status == "parse-error");
  std::istringstream bad_gen("gen kelly x\ngen graph C5\n");
  for (const auto& e : read_manifest(bad_gen)) CHECK(run_manifest_entry(e).status == "parse-error");
}

TEST_CASE("invalid colorings are reported, not hidden") {
  auto row = run_instance("P4", chain(4), Coloring::constant(4));
  CHECK(row.status == "certification-failed");
  CHECK(row.detail.find("not_centered") != std::string::npos);
  auto line = format_report_line(row);
  CHECK(line.find("status=certification-failed") != std::string::npos);
}

TEST_CASE("report lines are deterministic without timings") {
  Poset k = kelly(3);
  auto a = format_report_line(run_instance("kelly 3", k, std::nullopt));
  auto b = format_report_line(run_instance("kelly 3", k, std::nullopt));
  CHECK(a == b);
  CHECK(a.find("time.") == std::string::npos);
  CHECK(a.rfind("instance=\"kelly 3\" status=ok n=10 height=4", 0) == 0);
  auto timed = format_report_line(run_instance("kelly 3", k, std::nullopt), true);
  CHECK(timed.find("time.partition=") != std::string::npos);
}

TEST_CASE("oracle cap disables the cross-check") {
  RunOptions options;
  options.oracle_max_n = 0;
  auto row = run_instance("S3", standard_example(3), std::nullopt, options);
  CHECK(row.ok());
  CHECK_FALSE(row.oracle_dimension);
}

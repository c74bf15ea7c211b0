#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "posetdim/dim_oracle.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/generators.hpp"
#include "posetdim/realizer.hpp"
#include "posetdim/report.hpp"
#include "support/oracles.hpp"

using namespace posetdim;

namespace {

using Seq = std::vector<StarredColor>;

// Tops of all covering chains from x, keyed by their color sequence.
void walk(const Poset& p, const StarColoring& star, int x, Seq& seq, std::map<Seq, std::set<int>>& out) {
  seq.push_back(star[x]);
  out[seq].insert(x);
  for (int z : p.upper_covers(x)) walk(p, star, z, seq, out);
  seq.pop_back();
}

void check_table_against_chains(const Poset& p, const Coloring& col) {
  auto star = star_coloring(p, col);
  auto table = compute_signature_table(p, star);
  std::set<Seq> every;
  for (int x = 0; x < p.size(); ++x) {
    std::map<Seq, std::set<int>> ref;
    Seq seq;
    walk(p, star, x, seq, ref);
    REQUIRE(table.fingerprint[x].size() == ref.size());
    for (SignatureId sigma : table.fingerprint[x]) {
      const auto& s = table.signatures[sigma].seq;
      REQUIRE(ref.count(s) == 1);
      ElementSet expect(p.size());
      for (int y : ref[s]) expect.set(y);
      REQUIRE(table.upset(x, sigma) == expect);
      for (int y : ref[s]) REQUIRE(table.downset(y, sigma).test(x));
    }
    for (const auto& [s, tops] : ref) every.insert(s);
  }
  std::vector<Seq> listed;
  for (const auto& sig : table.signatures) listed.push_back(sig.seq);
  REQUIRE(listed == std::vector<Seq>(every.begin(), every.end()));
  REQUIRE(mpz_class(table.signature_count()) <= signature_count_bound(p.height(), col.color_count));
}

// Builds a table from explicit upsets; signatures get distinct dummy sequences.
SignatureTable hand_table(int n, int sigmas, const std::vector<std::tuple<int, int, std::vector<int>>>& rows) {
  SignatureTable t;
  for (int s = 0; s < sigmas; ++s) t.signatures.push_back({{StarredColor{s, 1}}});
  t.upsets.resize(n);
  t.downsets.resize(n);
  t.fingerprint.resize(n);
  for (const auto& [x, sigma, ys] : rows) {
    ElementSet up(n);
    for (int y : ys) {
      up.set(y);
      t.downsets[y].try_emplace(sigma, n).first->second.set(x);
    }
    t.upsets[x][sigma] = up;
    t.fingerprint[x].push_back(sigma);
  }
  for (auto& f : t.fingerprint) std::sort(f.begin(), f.end());
  return t;
}

void check_partition(const Poset& p, const IncPartition& part) {
  std::vector<ElementPair> all;
  for (const auto& c : part.classes) {
    REQUIRE(is_reversible(p, c.pairs));
    all.insert(all.end(), c.pairs.begin(), c.pairs.end());
  }
  std::sort(all.begin(), all.end());
  REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
  REQUIRE(all == incomparable_pairs(p));
  auto realizer = build_realizer_from_partition(p, part);
  REQUIRE(validate_realizer(p, realizer).valid);
}

// Poset whose cover graph is a path 0 - 1 - ... - (n-1), edge directions chosen by mask.
Poset fence(int n, std::uint32_t up_mask) {
  std::vector<ElementPair> rel;
  for (int i = 0; i + 1 < n; ++i) {
    if (up_mask >> i & 1)
      rel.emplace_back(i, i + 1);
    else
      rel.emplace_back(i + 1, i);
  }
  return Poset(n, rel);
}

}  // namespace

TEST_CASE("star_coloring") {
  for (auto sc : star_coloring(antichain(3), Coloring::constant(3))) CHECK(sc == StarredColor{0, 1});
  auto chain_star = star_coloring(chain(3), Coloring::constant(3));
  CHECK(chain_star == StarColoring{{0, 1}, {0, 2}, {0, 3}});
  auto s2 = star_coloring(standard_example(2), Coloring::constant(4));
  CHECK(s2 == StarColoring{{0, 1}, {0, 1}, {0, 2}, {0, 2}});
  CHECK(starred_as_coloring(chain_star).colors == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(star_coloring(chain(3), Coloring::constant(2)), ArgumentError);
}

TEST_CASE("signature table of a two-element chain") {
  Poset c = chain(2);
  auto table = compute_signature_table(c, star_coloring(c, Coloring::injective(2)));
  Signature xy{{{0, 1}, {1, 2}}};
  Signature x{{{0, 1}}};
  auto find = [&](const Signature& s) {
    auto it = std::find(table.signatures.begin(), table.signatures.end(), s);
    REQUIRE(it != table.signatures.end());
    return static_cast<SignatureId>(it - table.signatures.begin());
  };
  SignatureId sx = find(x), sxy = find(xy);
  CHECK(table.fingerprint[0] == std::vector<SignatureId>{sx, sxy});
  CHECK(table.upset(0, sxy).count() == 1);
  CHECK(table.upset(0, sxy).test(1));
  CHECK(table.upset(0, sx).test(0));
  CHECK(to_string(xy) == "(0,1)(1,2)");
  CHECK(table.sources(sxy) == std::vector<int>{0});
}

TEST_CASE("signature tables match explicit chain enumeration") {
  check_table_against_chains(kelly(3), auto_coloring(kelly(3)));
  check_table_against_chains(standard_example(3), Coloring::constant(6));
  check_table_against_chains(boolean_lattice(3), Coloring::injective(8));
  for (std::uint64_t salt = 0; salt < 40; ++salt) {
    Poset p = oracle::seeded_random_poset(10, salt);
    check_table_against_chains(p, auto_coloring(p));
    check_table_against_chains(p, Coloring::constant(p.size()));
  }
}

TEST_CASE("sigma_classes") {
  Poset anti = antichain(3);
  auto t = compute_signature_table(anti, star_coloring(anti, Coloring::constant(3)));
  REQUIRE(t.signature_count() == 1);
  CHECK(sigma_classes(t, 0) == std::vector<std::vector<int>>{{0}, {1}, {2}});

  Poset s2 = standard_example(2);
  auto ts = compute_signature_table(s2, star_coloring(s2, Coloring::constant(4)));
  Signature chain_sig{{{0, 1}, {0, 2}}};
  auto it = std::find(ts.signatures.begin(), ts.signatures.end(), chain_sig);
  REQUIRE(it != ts.signatures.end());
  SignatureId sigma = static_cast<SignatureId>(it - ts.signatures.begin());
  CHECK(ts.upset(0, sigma).test(3));
  CHECK(ts.upset(1, sigma).test(2));
  CHECK(sigma_classes(ts, sigma) == std::vector<std::vector<int>>{{0}, {1}});

  std::vector<ElementPair> rel{{0, 2}, {1, 2}};
  Poset vee(3, rel);
  auto tv = compute_signature_table(vee, star_coloring(vee, Coloring::constant(3)));
  auto iv = std::find(tv.signatures.begin(), tv.signatures.end(), chain_sig);
  REQUIRE(iv != tv.signatures.end());
  CHECK(sigma_classes(tv, static_cast<SignatureId>(iv - tv.signatures.begin())) ==
        std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("upset equality certification fires on unequal intersecting upsets") {
  auto t = hand_table(4, 2, {{0, 0, {2}}, {1, 0, {2, 3}}, {2, 1, {2}}, {3, 1, {3}}});
  try {
    sigma_classes(t, 0);
    FAIL("expected a certification error");
  } catch (const CertificationError& e) {
    CHECK(e.kind() == CertificationKind::upset_equality);
  }
}

TEST_CASE("laminarity certification fires on crossing classes") {
  auto t = hand_table(7, 3,
                      {{0, 0, {3}}, {1, 0, {3}}, {2, 0, {4}}, {0, 1, {5}}, {1, 1, {6}}, {2, 1, {6}}, {3, 2, {3}},
                       {4, 2, {4}}, {5, 2, {5}}, {6, 2, {6}}});
  try {
    build_laminar_index(t);
    FAIL("expected a certification error");
  } catch (const CertificationError& e) {
    CHECK(e.kind() == CertificationKind::laminarity);
  }
}

TEST_CASE("downset certification fires when D(y) straddles x") {
  auto t = hand_table(4, 2, {{0, 0, {3}}, {1, 0, {3}}, {2, 0, {3}}, {3, 1, {3}}});
  auto index = build_laminar_index(t);
  int block = index.block_of[1];
  CHECK(index.blocks[block].order == std::vector<int>{0, 1, 2});
  try {
    inc_vector(index, t, block, 1, 3);
    FAIL("expected a certification error");
  } catch (const CertificationError& e) {
    CHECK(e.kind() == CertificationKind::downset_sides);
  }
  CHECK_THROWS_AS(inc_vector(index, t, block, 3, 3), ArgumentError);
}

TEST_CASE("laminar index") {
  Poset anti = antichain(4);
  auto t = compute_signature_table(anti, star_coloring(anti, Coloring::constant(4)));
  auto index = build_laminar_index(t);
  REQUIRE(index.blocks.size() == 1);
  const auto& b = index.blocks[0];
  CHECK(b.ground == std::vector<int>{0, 1, 2, 3});
  CHECK(b.family.size() == 5);
  CHECK(b.parent == std::vector<int>{-1, 0, 0, 0, 0});
  CHECK(b.order == std::vector<int>{0, 1, 2, 3});

  Poset s2 = standard_example(2);
  auto ts = compute_signature_table(s2, star_coloring(s2, Coloring::constant(4)));
  auto is = build_laminar_index(ts);
  REQUIRE(is.blocks.size() == 2);
  const auto& lows = is.blocks[is.block_of[0]];
  CHECK(lows.ground == std::vector<int>{0, 1});
  std::vector<Signature> fp;
  for (SignatureId s : lows.fingerprint) fp.push_back(ts.signatures[s]);
  CHECK(fp == std::vector<Signature>{{{{0, 1}}}, {{{0, 1}, {0, 2}}}});
  CHECK(is.block_of[1] == is.block_of[0]);
}

TEST_CASE("inc_vector is zero when no downset meets the block") {
  Poset anti = antichain(3);
  auto t = compute_signature_table(anti, star_coloring(anti, Coloring::constant(3)));
  auto index = build_laminar_index(t);
  // D(y) is {y}: left of x for y < x, right of x for y > x.
  CHECK(inc_vector(index, t, 0, 1, 0) == IncVector{false});
  CHECK(inc_vector(index, t, 0, 1, 2) == IncVector{true});

  Poset s2 = standard_example(2);
  auto ts = compute_signature_table(s2, star_coloring(s2, Coloring::constant(4)));
  auto is = build_laminar_index(ts);
  // (a1, a2): a2's downsets hold only a2 itself and lie right of a1.
  auto v = inc_vector(is, ts, is.block_of[0], 0, 1);
  CHECK(v == IncVector{true, false});
  // (a1, b1): D((0,1)(0,2))(b1) = {a2}, right of a1.
  CHECK(inc_vector(is, ts, is.block_of[0], 0, 2) == IncVector{false, true});
}

TEST_CASE("partition_inc examples") {
  CHECK(partition_inc(chain(4), auto_coloring(chain(4))).classes.empty());
  auto anti = partition_inc(antichain(2), Coloring::constant(2));
  CHECK(anti.classes.size() >= 2);
  check_partition(antichain(2), anti);

  Poset s3 = standard_example(3);
  auto part = partition_inc(s3, auto_coloring(s3));
  CHECK(part.pair_count() == 18);
  check_partition(s3, part);

  auto chain_realizer = build_realizer_from_partition(chain(3), partition_inc(chain(3), auto_coloring(chain(3))));
  CHECK(chain_realizer.size() == 1);

  Poset k3 = kelly(3);
  auto kr = build_realizer_from_partition(k3, partition_inc(k3, auto_coloring(k3)));
  CHECK(validate_realizer(k3, kr).valid);
  CHECK(kr.size() >= 3);
}

TEST_CASE("pipeline certifies random posets with forest colorings") {
  for (std::uint64_t salt = 1000; salt < 1060; ++salt) {
    Poset p = oracle::seeded_random_poset(12, salt);
    Coloring col = auto_coloring(p);
    auto result = run_pipeline(p, col);
    check_partition(p, result.partition);
    CHECK(paper_bound(std::max(1, p.height()), std::max(1, col.color_count)).admits(result.partition.classes.size()));
    if (p.size() <= 10)
      CHECK(exact_dimension(p).value <= static_cast<int>(build_realizer_from_partition(p, result.partition).size()));
  }
}

TEST_CASE("refined colorings also certify") {
  std::mt19937_64 rng(oracle::base_seed() + 11);
  for (std::uint64_t salt = 2000; salt < 2030; ++salt) {
    Poset p = oracle::seeded_random_poset(10, salt);
    std::vector<int> split(p.size());
    for (auto& s : split) s = std::uniform_int_distribution<int>(0, 2)(rng);
    Coloring col = product_coloring(auto_coloring(p), Coloring::from_colors(split));
    check_partition(p, partition_inc(p, col));
  }
}

TEST_CASE("non-centered colorings never yield a wrong partition") {
  int rejected_upfront = 0;
  for (int n = 4; n <= 9; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); mask += 3) {
      Poset p = fence(n, mask);
      Coloring col = Coloring::constant(n);
      REQUIRE_FALSE(is_p_centered_literal(cover_graph(p), col, 2 * p.height()).centered);
      CHECK_THROWS_AS(run_pipeline(p, col), CertificationError);
      ++rejected_upfront;
      // Lemma checks alone: either they object or the partition is sound.
      try {
        auto result = run_pipeline(p, col, PipelineOptions{false});
        check_partition(p, result.partition);
      } catch (const CertificationError&) {
      } catch (const InternalInvariantError&) {
      }
    }
  }
  CHECK(rejected_upfront > 50);
}

TEST_CASE("paper_bound") {
  CHECK(paper_bound(1, 1).to_string() == "4");
  CHECK(paper_bound(1, 3).to_string() == "64");
  CHECK(paper_bound(2, 2).to_string() == "18446744073709551616");
  CHECK(paper_bound(2, 2).exponent == 64);
  CHECK(paper_bound(3, 5).exponent == 2 * 81 * 125);
  CHECK(paper_bound(6, 6).to_string() == "2^" + paper_bound(6, 6).exponent.get_str());
  CHECK(paper_bound(1, 1).admits(4));
  CHECK_FALSE(paper_bound(1, 1).admits(5));
  CHECK(paper_bound(2, 2).admits(~std::size_t{0}));
  CHECK_THROWS_AS(paper_bound(0, 1), ArgumentError);
  CHECK(signature_count_bound(2, 2) == 32);
  CHECK(signature_count_bound(1, 5) == 5);
}

TEST_CASE("partition text format") {
  Poset s2 = standard_example(2);
  auto result = run_pipeline(s2, auto_coloring(s2));
  std::ostringstream out;
  write_partition(out, result);
  std::istringstream in(out.str());
  std::size_t classes = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("class sigma-set=", 0) == 0) ++classes;
    else CHECK(line.rfind("# sigma ", 0) == 0);
  }
  CHECK(classes == result.partition.classes.size());
}

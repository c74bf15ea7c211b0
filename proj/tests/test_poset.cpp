#include <doctest.h>

#include <sstream>

#include "posetdim/errors.hpp"
#include "posetdim/generators.hpp"
#include "posetdim/poset.hpp"
#include "support/oracles.hpp"

using namespace posetdim;

namespace {

// S_2 ids: a1 = 0, a2 = 1, b1 = 2, b2 = 3.
constexpr int a1 = 0, a2 = 1, b1 = 2, b2 = 3;

Poset from(int n, std::vector<ElementPair> rel) { return Poset(n, rel); }

}  // namespace

TEST_CASE("construction takes the transitive reduction") {
  Poset p = from(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(p.covers() == std::vector<ElementPair>{{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK_THROWS_AS(from(2, {{0, 1}, {1, 0}}), ArgumentError);
  CHECK_THROWS_AS(from(2, {{1, 1}}), ArgumentError);
  CHECK_THROWS_AS(from(2, {{0, 2}}), ArgumentError);
}

TEST_CASE("leq") {
  Poset c = chain(2);
  CHECK(leq(c, 0, 1));
  CHECK_FALSE(leq(c, 1, 0));
  for (int x = 0; x < 2; ++x) CHECK(leq(c, x, x));
  Poset s2 = standard_example(2);
  CHECK_FALSE(leq(s2, a1, b1));
  CHECK(leq(s2, a1, b2));
}

TEST_CASE("heights") {
  for (int x = 0; x < 5; ++x) CHECK(element_height(antichain(5), x) == 1);
  CHECK(element_height(chain(3), 2) == 3);
  CHECK(height(antichain(5)) == 1);
  CHECK(height(standard_example(1)) == 1);
  for (int d = 2; d <= 5; ++d) CHECK(height(standard_example(d)) == 2);
  Poset k3 = kelly(3);
  const int b3 = 3 + 2;
  CHECK(element_height(k3, b3) == 4);
  CHECK(oracle::chain_height(k3, b3) == 4);
  CHECK(height(kelly(4)) == 5);
  Poset k4 = kelly(4);
  int tallest = 0;
  for (int x = 0; x < k4.size(); ++x) tallest = std::max(tallest, oracle::chain_height(k4, x));
  CHECK(tallest == 5);
}

TEST_CASE("cover_graph") {
  Graph g = cover_graph(chain(3));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  Graph s2 = cover_graph(standard_example(2));
  CHECK(s2.edges() == std::vector<Edge>{{a1, b2}, {a2, b1}});
  CHECK(connected_components(s2).size() == 2);
  Graph inc = cover_graph(incidence_poset(complete_graph(3)));
  CHECK(inc.vertex_count() == 6);
  CHECK(inc.edge_count() == 6);
  // Subdivided triangle: a 6-cycle in which the original vertices alternate.
  CHECK(girth(inc) == 6);
  CHECK(max_degree(inc) == 2);
}

TEST_CASE("cover graph of I_{K_n} has n + C(n,2) vertices and 2 C(n,2) edges") {
  for (int n = 1; n <= 7; ++n) {
    Graph g = cover_graph(incidence_poset(complete_graph(n)));
    const int pairs = n * (n - 1) / 2;
    CHECK(g.vertex_count() == n + pairs);
    CHECK(g.edge_count() == 2 * pairs);
  }
}

TEST_CASE("incomparable_pairs") {
  CHECK(incomparable_pairs(chain(4)).empty());
  CHECK(incomparable_pairs(antichain(2)) == std::vector<ElementPair>{{0, 1}, {1, 0}});
  std::vector<ElementPair> s2{{a1, a2}, {a1, b1}, {a2, a1}, {a2, b2}, {b1, a1}, {b1, b2}, {b2, a2}, {b2, b1}};
  CHECK(incomparable_pairs(standard_example(2)) == s2);
}

TEST_CASE("exactly one of equal, below, above, incomparable") {
  for (std::uint64_t salt = 0; salt < 60; ++salt) {
    Poset p = oracle::seeded_random_poset(9, salt);
    auto inc = incomparable_pairs(p);
    std::set<ElementPair> in(inc.begin(), inc.end());
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) {
        int hits = (x == y) + p.less(x, y) + p.less(y, x) + static_cast<int>(in.count({x, y}));
        REQUIRE(hits == 1);
      }
  }
}

TEST_CASE("covers are irreducible and generate the order") {
  for (std::uint64_t salt = 100; salt < 160; ++salt) {
    Poset p = oracle::seeded_random_poset(10, salt);
    const int n = p.size();
    for (auto [a, b] : p.covers()) {
      // Removing the cover must break a <= b.
      std::vector<ElementPair> rest;
      for (auto c : p.covers())
        if (c != ElementPair{a, b}) rest.push_back(c);
      REQUIRE_FALSE(Poset(n, rest).leq(a, b));
    }
    Poset again(n, p.covers());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) REQUIRE(again.leq(x, y) == p.leq(x, y));
  }
}

TEST_CASE("find_alternating_cycle") {
  Poset anti = antichain(2);
  std::vector<ElementPair> both{{0, 1}, {1, 0}};
  auto cycle = find_alternating_cycle(anti, both);
  REQUIRE(cycle);
  CHECK(cycle->size() == 2);
  std::vector<ElementPair> one{{0, 1}};
  CHECK_FALSE(find_alternating_cycle(anti, one));

  Poset s2 = standard_example(2);
  std::vector<ElementPair> crit{{a1, b1}, {a2, b2}};
  auto c2 = find_alternating_cycle(s2, crit);
  REQUIRE(c2);
  REQUIRE(c2->size() == 2);
  const auto& w = *c2;
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(s2.leq(w[i].first, w[(i + 1) % w.size()].second));

  std::vector<ElementPair> comparable{{a1, b2}};
  CHECK_THROWS_AS(find_alternating_cycle(s2, comparable), ArgumentError);
}

TEST_CASE("is_reversible examples") {
  Poset s2 = standard_example(2);
  CHECK(is_reversible(s2, {}));
  std::vector<ElementPair> bad{{a1, b1}, {a2, b2}};
  std::vector<ElementPair> good{{a1, b1}, {b2, a2}};
  CHECK_FALSE(is_reversible(s2, bad));
  CHECK(is_reversible(s2, good));
  CHECK_FALSE(oracle::reversible(s2, bad));
  CHECK(oracle::reversible(s2, good));
  CHECK(oracle::linear_extensions(s2).size() == 6);
}

TEST_CASE("is_reversible agrees with brute force on small posets") {
  std::mt19937_64 rng(oracle::base_seed() + 7);
  int checked = 0;
  for (std::uint64_t salt = 200; salt < 320; ++salt) {
    Poset p = oracle::seeded_random_poset(6, salt);
    auto inc = incomparable_pairs(p);
    if (inc.empty()) continue;
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<ElementPair> pick;
      int k = std::uniform_int_distribution<int>(1, 4)(rng);
      std::sample(inc.begin(), inc.end(), std::back_inserter(pick), k, rng);
      bool fast = is_reversible(p, pick);
      REQUIRE(fast == oracle::reversible(p, pick));
      REQUIRE(fast == !find_alternating_cycle(p, pick).has_value());
      if (!fast) {
        auto w = *find_alternating_cycle(p, pick);
        for (std::size_t i = 0; i < w.size(); ++i) REQUIRE(p.leq(w[i].first, w[(i + 1) % w.size()].second));
      }
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("extend_reversed") {
  CHECK(extend_reversed(chain(3), {}).order == std::vector<int>{0, 1, 2});
  std::vector<ElementPair> flip{{0, 1}};
  CHECK(extend_reversed(antichain(2), flip).order == std::vector<int>{1, 0});

  Poset s2 = standard_example(2);
  std::vector<ElementPair> good{{a1, b1}, {b2, a2}};
  auto ext = extend_reversed(s2, good);
  CHECK_NOTHROW(check_linear_extension(s2, ext));
  auto pos = ext.positions();
  CHECK(pos[b1] < pos[a1]);
  CHECK(pos[a2] < pos[b2]);

  std::vector<ElementPair> bad{{a1, b1}, {a2, b2}};
  try {
    extend_reversed(s2, bad);
    FAIL("expected a contract violation");
  } catch (const ContractViolation& e) {
    CHECK(e.cycle().size() == 2);
  }
}

TEST_CASE("extend_reversed output is a reversing extension") {
  for (std::uint64_t salt = 400; salt < 480; ++salt) {
    Poset p = oracle::seeded_random_poset(8, salt);
    auto inc = incomparable_pairs(p);
    std::vector<ElementPair> chosen;
    for (auto pr : inc) {
      chosen.push_back(pr);
      if (!is_reversible(p, chosen)) chosen.pop_back();
    }
    auto ext = extend_reversed(p, chosen);
    REQUIRE_NOTHROW(check_linear_extension(p, ext));
    auto pos = ext.positions();
    for (auto [x, y] : chosen) REQUIRE(pos[y] < pos[x]);
  }
}

TEST_CASE("check_linear_extension rejects bad orders") {
  CHECK_THROWS_AS(check_linear_extension(chain(2), LinearExtension{{1, 0}}), ArgumentError);
  CHECK_THROWS_AS(check_linear_extension(chain(2), LinearExtension{{0}}), ArgumentError);
  CHECK_THROWS_AS(check_linear_extension(chain(2), LinearExtension{{0, 0}}), ArgumentError);
}

TEST_CASE("validate_realizer") {
  std::vector<LinearExtension> one{LinearExtension{{0, 1, 2}}};
  CHECK(validate_realizer(chain(3), one).valid);

  Poset s2 = standard_example(2);
  std::vector<ElementPair> r1{{a1, b1}, {b2, a2}};
  std::vector<ElementPair> r2{{a2, b2}, {b1, a1}};
  std::vector<LinearExtension> two{extend_reversed(s2, r1), extend_reversed(s2, r2)};
  CHECK(validate_realizer(s2, two).valid);

  std::vector<LinearExtension> single{LinearExtension{{0, 1}}};
  auto check = validate_realizer(antichain(2), single);
  CHECK_FALSE(check.valid);
  REQUIRE(check.counterexample);
  CHECK(*check.counterexample == ElementPair{0, 1});
}

TEST_CASE("poset text format") {
  std::istringstream in("poset 3\nlabel 0 bottom\nrel 0 1\nrel 1 2\nrel 0 2 # redundant\n");
  Poset p = read_poset(in);
  CHECK(p.covers().size() == 2);
  CHECK(p.name(0) == "bottom");
  CHECK(p.name(1) == "1");
  std::ostringstream out;
  write_poset(out, p);
  std::istringstream back(out.str());
  Poset q = read_poset(back);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(q.leq(x, y) == p.leq(x, y));

  auto fails = [](const std::string& text) {
    std::istringstream bad(text);
    CHECK_THROWS_AS(read_poset(bad), ParseError);
  };
  fails("poset 2\nrel 0 1\nrel 1 0\n");
  fails("poset 2\nrel 0 5\n");
  fails("rel 0 1\n");
  fails("poset 2\nedge 0 1\n");
}

TEST_CASE("random posets round trip through text") {
  for (std::uint64_t salt = 500; salt < 530; ++salt) {
    Poset p = oracle::seeded_random_poset(12, salt);
    std::ostringstream out;
    write_poset(out, p);
    std::istringstream in(out.str());
    Poset q = read_poset(in);
    REQUIRE(q.size() == p.size());
    REQUIRE(q.covers() == p.covers());
  }
}

TEST_CASE("realizer text format") {
  std::istringstream in("2\next 0 1\next 1 0\n");
  auto exts = read_realizer(in);
  REQUIRE(exts.size() == 2);
  CHECK(exts[1].order == std::vector<int>{1, 0});
  std::istringstream wrong("3\next 0 1\n");
  CHECK_THROWS_AS(read_realizer(wrong), ParseError);
  std::ostringstream out;
  write_realizer(out, exts);
  CHECK(out.str() == "ext 0 1\next 1 0\n");
}

TEST_CASE("induced subposet") {
  Poset s3 = standard_example(3);
  std::vector<int> keep{0, 1, 3, 4};
  Poset s2 = s3.induced(keep);
  Poset ref = standard_example(2);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(s2.leq(x, y) == ref.leq(x, y));
}

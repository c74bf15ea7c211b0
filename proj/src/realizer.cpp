#include "posetdim/realizer.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace posetdim {

const char* to_string(CertificationKind kind) {
  switch (kind) {
    case CertificationKind::not_centered: return "not_centered";
    case CertificationKind::upset_equality: return "upset_equality";
    case CertificationKind::laminarity: return "laminarity";
    case CertificationKind::interval: return "interval";
    case CertificationKind::downset_sides: return "downset_sides";
  }
  return "unknown";
}

namespace {

std::string set_text(const ElementSet& s) {
  std::string out = "{";
  for (auto e = s.find_first(); e != ElementSet::npos; e = s.find_next(e)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(e);
  }
  return out + "}";
}

std::string list_text(const std::vector<int>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + std::to_string(items[i]);
  return out;
}

}  // namespace

StarColoring star_coloring(const Poset& p, const Coloring& col) {
  col.check_covers(p.size());
  StarColoring star(p.size());
  for (int x = 0; x < p.size(); ++x) star[x] = {col.colors[x], p.element_height(x)};
  return star;
}

Coloring starred_as_coloring(const StarColoring& star) {
  std::vector<StarredColor> distinct(star.begin(), star.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Coloring col{std::vector<int>(star.size()), static_cast<int>(distinct.size())};
  for (std::size_t x = 0; x < star.size(); ++x)
    col.colors[x] =
        static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), star[x]) - distinct.begin());
  return col;
}

std::string to_string(const Signature& sigma) {
  std::string out;
  for (auto sc : sigma.seq) out += "(" + std::to_string(sc.base_color) + "," + std::to_string(sc.level) + ")";
  return out;
}

ElementSet SignatureTable::upset(int x, SignatureId sigma) const {
  const auto& row = upsets.at(x);
  auto it = row.find(sigma);
  return it == row.end() ? ElementSet(element_count()) : it->second;
}

ElementSet SignatureTable::downset(int y, SignatureId sigma) const {
  const auto& row = downsets.at(y);
  auto it = row.find(sigma);
  return it == row.end() ? ElementSet(element_count()) : it->second;
}

std::vector<int> SignatureTable::sources(SignatureId sigma) const {
  std::vector<int> out;
  for (int x = 0; x < element_count(); ++x)
    if (upsets[x].count(sigma)) out.push_back(x);
  return out;
}

SignatureTable compute_signature_table(const Poset& p, const StarColoring& star) {
  const int n = p.size();
  if (static_cast<int>(star.size()) != n) throw ArgumentError("starred coloring does not cover the poset");

  // Signatures are interned during the sweep as (head, tail id) and renumbered
  // by sequence order at the end.
  std::map<std::pair<StarredColor, int>, int> intern;
  std::vector<Signature> provisional;
  auto id_of = [&](StarredColor head, int tail) {
    auto [it, fresh] = intern.try_emplace({head, tail}, static_cast<int>(provisional.size()));
    if (fresh) {
      Signature sigma{{head}};
      if (tail >= 0) sigma.seq.insert(sigma.seq.end(), provisional[tail].seq.begin(), provisional[tail].seq.end());
      provisional.push_back(std::move(sigma));
    }
    return it->second;
  };

  std::vector<std::map<int, ElementSet>> up(n);
  const auto& topo = p.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int x = *it;
    ElementSet self(n);
    self.set(x);
    up[x].emplace(id_of(star[x], -1), std::move(self));
    for (int z : p.upper_covers(x)) {
      for (const auto& [tail, reach] : up[z]) {
        auto [slot, fresh] = up[x].try_emplace(id_of(star[x], tail), n);
        slot->second |= reach;
      }
    }
  }

  std::vector<int> by_seq(provisional.size());
  std::iota(by_seq.begin(), by_seq.end(), 0);
  std::sort(by_seq.begin(), by_seq.end(), [&](int a, int b) { return provisional[a] < provisional[b]; });
  std::vector<int> renumber(provisional.size());
  SignatureTable table;
  for (std::size_t i = 0; i < by_seq.size(); ++i) {
    renumber[by_seq[i]] = static_cast<int>(i);
    table.signatures.push_back(provisional[by_seq[i]]);
  }
  table.upsets.resize(n);
  table.downsets.resize(n);
  table.fingerprint.resize(n);
  for (int x = 0; x < n; ++x) {
    for (auto& [provisional_id, reach] : up[x]) {
      SignatureId sigma = renumber[provisional_id];
      for (auto y = reach.find_first(); y != ElementSet::npos; y = reach.find_next(y)) {
        auto [slot, fresh] = table.downsets[y].try_emplace(sigma, n);
        slot->second.set(x);
      }
      table.upsets[x].emplace(sigma, std::move(reach));
      table.fingerprint[x].push_back(sigma);
    }
    std::sort(table.fingerprint[x].begin(), table.fingerprint[x].end());
  }
  return table;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::vector<int>> certified_sigma_classes(const SignatureTable& table, SignatureId sigma,
                                                      CertificationLog* log) {
  const int n = table.element_count();
  if (sigma < 0 || sigma >= table.signature_count())
    throw ArgumentError("unknown signature id " + std::to_string(sigma));
  DisjointSets sets(n);
  for (int y = 0; y < n; ++y) {
    auto it = table.downsets[y].find(sigma);
    if (it == table.downsets[y].end()) continue;
    if (log) ++log->upset_checks;
    const ElementSet& sources = it->second;
    auto first = sources.find_first();
    const ElementSet& reference = table.upsets[first].at(sigma);
    for (auto x = sources.find_next(first); x != ElementSet::npos; x = sources.find_next(x)) {
      if (table.upsets[x].at(sigma) != reference) {
        std::ostringstream witness;
        witness << "sigma=" << sigma << " " << to_string(table.signatures[sigma]) << " x=" << first << " x'=" << x
                << " share " << y << " but U(x)=" << set_text(reference)
                << " U(x')=" << set_text(table.upsets[x].at(sigma));
        throw CertificationError(CertificationKind::upset_equality, witness.str());
      }
      sets.unite(static_cast<int>(first), static_cast<int>(x));
    }
  }
  std::map<int, std::vector<int>> grouped;
  for (int x = 0; x < n; ++x)
    if (table.upsets[x].count(sigma)) grouped[sets.find(x)].push_back(x);
  std::vector<std::vector<int>> classes;
  for (auto& [root, members] : grouped) classes.push_back(std::move(members));
  return classes;
}

}  // namespace

std::vector<std::vector<int>> sigma_classes(const SignatureTable& table, SignatureId sigma) {
  return certified_sigma_classes(table, sigma, nullptr);
}

namespace {

LaminarIndex build_index(const SignatureTable& table, CertificationLog* log) {
  const int n = table.element_count();
  // Class id of each source element, per signature.
  std::vector<std::map<int, int>> class_id(table.signature_count());
  std::vector<std::vector<ElementSet>> class_sets(table.signature_count());
  for (SignatureId sigma = 0; sigma < table.signature_count(); ++sigma) {
    auto classes = certified_sigma_classes(table, sigma, log);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      ElementSet members(n);
      for (int x : classes[c]) {
        members.set(x);
        class_id[sigma][x] = static_cast<int>(c);
      }
      class_sets[sigma].push_back(std::move(members));
    }
  }

  std::map<std::vector<SignatureId>, std::vector<int>> grounds;
  for (int x = 0; x < n; ++x) grounds[table.fingerprint[x]].push_back(x);

  LaminarIndex index;
  index.block_of.assign(n, -1);
  for (auto& [fingerprint, ground] : grounds) {
    FingerprintBlock block;
    block.fingerprint = fingerprint;
    block.ground = ground;
    ElementSet ground_set(n);
    for (int x : ground) ground_set.set(x);

    std::set<ElementSet> family;
    for (SignatureId sigma : fingerprint) {
      std::vector<int> ids;
      for (int x : ground) ids.push_back(class_id[sigma].at(x));
      block.class_of[sigma] = ids;
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      for (int c : ids) family.insert(class_sets[sigma][c] & ground_set);
    }
    for (int x : ground) {
      ElementSet single(n);
      single.set(x);
      family.insert(std::move(single));
    }
    family.erase(ground_set);
    block.family.push_back(ground_set);
    block.family.insert(block.family.end(), family.begin(), family.end());

    const int f = static_cast<int>(block.family.size());
    for (int i = 0; i < f; ++i) {
      for (int j = i + 1; j < f; ++j) {
        if (log) ++log->laminarity_checks;
        const auto& a = block.family[i];
        const auto& b = block.family[j];
        if (a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a))
          throw CertificationError(CertificationKind::laminarity, "fingerprint {" + list_text(fingerprint) +
                                                                      "}: " + set_text(a) + " and " + set_text(b) +
                                                                      " cross");
      }
    }

    block.parent.assign(f, -1);
    std::vector<std::vector<int>> children(f);
    for (int i = 1; i < f; ++i) {
      int best = 0;
      for (int j = 1; j < f; ++j)
        if (j != i && block.family[i].is_proper_subset_of(block.family[j]) &&
            block.family[j].count() < block.family[best].count())
          best = j;
      block.parent[i] = best;
      children[best].push_back(i);
    }
    for (int i = 0; i < f; ++i) {
      auto& kids = children[i];
      std::sort(kids.begin(), kids.end(),
                [&](int a, int b) { return block.family[a].find_first() < block.family[b].find_first(); });
      if (kids.empty()) continue;
      ElementSet covered(n);
      for (int k : kids) covered |= block.family[k];
      if (covered != block.family[i])
        throw CertificationError(CertificationKind::laminarity,
                                 "tree children of " + set_text(block.family[i]) + " do not cover it");
    }

    // Depth-first preorder; the singleton leaves give the left-to-right order.
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int node = stack.back();
      stack.pop_back();
      if (children[node].empty()) block.order.push_back(static_cast<int>(block.family[node].find_first()));
      for (auto it = children[node].rbegin(); it != children[node].rend(); ++it) stack.push_back(*it);
    }
    for (std::size_t i = 0; i < block.order.size(); ++i) block.position[block.order[i]] = static_cast<int>(i);

    for (const auto& [sigma, ids] : block.class_of) {
      std::map<int, std::pair<int, int>> span;  // class -> (min pos, max pos)
      std::map<int, int> size;
      for (std::size_t i = 0; i < ground.size(); ++i) {
        int pos = block.position.at(ground[i]);
        auto [it, fresh] = span.try_emplace(ids[i], pos, pos);
        it->second.first = std::min(it->second.first, pos);
        it->second.second = std::max(it->second.second, pos);
        ++size[ids[i]];
      }
      for (const auto& [c, range] : span) {
        if (log) ++log->interval_checks;
        if (range.second - range.first + 1 != size[c])
          throw CertificationError(CertificationKind::interval,
                                   "fingerprint {" + list_text(fingerprint) + "}: class of sigma " +
                                       std::to_string(sigma) + " " +
                                       set_text(class_sets[sigma][c] & ground_set) + " is not contiguous");
      }
    }

    const int block_id = static_cast<int>(index.blocks.size());
    for (int x : ground) index.block_of[x] = block_id;
    index.blocks.push_back(std::move(block));
  }
  return index;
}

IncVector compute_vector(const LaminarIndex& index, const SignatureTable& table, int block_id, int x, int y,
                         CertificationLog* log) {
  const auto& block = index.blocks.at(block_id);
  auto here = block.position.find(x);
  if (here == block.position.end())
    throw ArgumentError("element " + std::to_string(x) + " is not in the ground set of block " +
                        std::to_string(block_id));
  const int pos = here->second;
  IncVector v;
  v.reserve(block.fingerprint.size());
  for (SignatureId sigma : block.fingerprint) {
    bool left = false, right = false;
    auto it = table.downsets.at(y).find(sigma);
    if (it != table.downsets.at(y).end()) {
      const ElementSet& down = it->second;
      for (auto w = down.find_first(); w != ElementSet::npos; w = down.find_next(w)) {
        if (index.block_of[w] != block_id) continue;
        int other = block.position.at(static_cast<int>(w));
        left = left || other < pos;
        right = right || other > pos;
      }
    }
    if (log) ++log->downset_checks;
    if (left && right)
      throw CertificationError(CertificationKind::downset_sides,
                               "pair (" + std::to_string(x) + "," + std::to_string(y) + ") sigma " +
                                   std::to_string(sigma) + ": D(y) has ground points on both sides of x");
    v.push_back(right);
  }
  return v;
}

}  // namespace

LaminarIndex build_laminar_index(const SignatureTable& table) { return build_index(table, nullptr); }

IncVector inc_vector(const LaminarIndex& index, const SignatureTable& table, int block, int x, int y) {
  return compute_vector(index, table, block, x, y, nullptr);
}

std::size_t IncPartition::pair_count() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.pairs.size();
  return total;
}

bool PaperBound::admits(std::size_t count) const {
  if (exponent >= 64) return true;
  mpz_class bound = 1;
  bound <<= exponent.get_ui();
  return mpz_class(static_cast<unsigned long>(count)) <= bound;
}

std::string PaperBound::to_string(unsigned long max_exponent) const {
  if (exponent > max_exponent) return "2^" + exponent.get_str();
  mpz_class value = 1;
  value <<= exponent.get_ui();
  return value.get_str();
}

PaperBound paper_bound(long h, long c) {
  if (h < 1 || c < 1) throw ArgumentError("paper_bound: h and c must be at least 1");
  mpz_class hh = h, cc = c, a, b;
  mpz_pow_ui(a.get_mpz_t(), hh.get_mpz_t(), static_cast<unsigned long>(h + 1));
  mpz_pow_ui(b.get_mpz_t(), cc.get_mpz_t(), static_cast<unsigned long>(h));
  return {2 * a * b};
}

mpz_class signature_count_bound(long h, long c) {
  if (h < 1 || c < 1) throw ArgumentError("signature_count_bound: h and c must be at least 1");
  mpz_class base = mpz_class(h) * c, power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(h));
  return h * power;
}

PipelineResult run_pipeline(const Poset& p, const Coloring& col, PipelineOptions options) {
  PipelineResult result;
  result.height = p.height();
  result.color_count = col.color_count;
  result.star = star_coloring(p, col);
  if (options.verify_coloring && col.color_count <= kSubsetVerifierMaxColors && p.size() > 0) {
    auto check = is_p_centered(cover_graph(p), col, 2 * p.height());
    result.log.coloring_checked_upfront = true;
    if (!check.centered)
      throw CertificationError(CertificationKind::not_centered,
                               "connected subgraph {" + list_text(check.witness) +
                                   "} has no unique color and fewer than 2h = " + std::to_string(2 * p.height()) +
                                   " colors");
  }
  result.table = compute_signature_table(p, result.star);
  result.index = build_index(result.table, &result.log);

  std::map<std::pair<int, IncVector>, std::vector<ElementPair>> classes;
  for (auto pr : incomparable_pairs(p)) {
    int block = result.index.block_of[pr.first];
    auto v = compute_vector(result.index, result.table, block, pr.first, pr.second, &result.log);
    classes[{block, std::move(v)}].push_back(pr);
  }
  for (auto& [key, pairs] : classes) {
    ++result.log.reversibility_checks;
    if (!is_reversible(p, pairs)) {
      auto cycle = find_alternating_cycle(p, pairs);
      throw InternalInvariantError("class is not reversible although every lemma check passed",
                                   cycle.value_or(std::vector<ElementPair>{}));
    }
    result.partition.classes.push_back({key.first, key.second, std::move(pairs)});
  }
  return result;
}

IncPartition partition_inc(const Poset& p, const Coloring& col, PipelineOptions options) {
  return run_pipeline(p, col, options).partition;
}

std::vector<LinearExtension> build_realizer_from_partition(const Poset& p, const IncPartition& part) {
  std::vector<LinearExtension> exts;
  for (const auto& c : part.classes)
    if (!c.pairs.empty()) exts.push_back(extend_reversed(p, c.pairs));
  if (exts.empty()) exts.push_back(extend_reversed(p, {}));
  return exts;
}

void write_partition(std::ostream& out, const PipelineResult& result) {
  for (SignatureId s = 0; s < result.table.signature_count(); ++s)
    out << "# sigma " << s << ' ' << to_string(result.table.signatures[s]) << '\n';
  for (const auto& c : result.partition.classes) {
    out << "class sigma-set=" << list_text(result.index.blocks[c.block].fingerprint) << " v=";
    for (bool bit : c.v) out << (bit ? '1' : '0');
    out << " pairs=";
    for (std::size_t i = 0; i < c.pairs.size(); ++i)
      out << (i ? "," : "") << '(' << c.pairs[i].first << ',' << c.pairs[i].second << ')';
    out << '\n';
  }
}

}  // namespace posetdim

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ryserlab/bipartite_graph.hpp"
#include "ryserlab/bits.hpp"
#include "ryserlab/conn_oracle.hpp"
#include "ryserlab/cp_decomposition.hpp"
#include "ryserlab/matching.hpp"
#include "ryserlab/psi.hpp"
#include "ryserlab/simple_graph.hpp"
#include "support/build.hpp"
#include "support/cp_brute.hpp"

using namespace ryserlab;
using testutil::bip;

namespace {

BipartiteMultigraph cycle_graph() { return bip(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}); }

// Path a0-b0-a1-b1-a2-b2 with edge ids 0..4 and maximum matching {0, 2, 4}.
BipartiteMultigraph six_path() {
  return bip(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}});
}

BipartiteMultigraph random_bip(std::mt19937& rng, int na, int nb) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) {
      const unsigned roll = rng() % 8;
      const int mult = roll < 3 ? 0 : (roll < 7 ? 1 : 2);
      for (int t = 0; t < mult; ++t) edges.push_back({a, b});
    }
  return bip(na, nb, edges);
}

// Random induced subgraph of the line graph that keeps every matching edge.
SimpleGraph random_label_part(std::mt19937& rng, const SimpleGraph& l, const Matching& m) {
  Bits128 keep;
  for (int id : l.labels()) {
    const bool in_m = std::count(m.edge_ids.begin(), m.edge_ids.end(), id) > 0;
    if (in_m || rng() % 4 != 0) keep.set(l.position_of_label(id));
  }
  return l.induced(keep);
}

std::vector<int> sorted_ids(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Alternating four-cycles m1, e, m2, f in cycle order: m1 and m2 in M, e and
// f vertex labels of j outside M, consecutive edges sharing one endpoint.
struct AltC4 {
  int m1, e, m2, f;
};

std::vector<AltC4> alternating_c4s(const BipartiteMultigraph& g, const SimpleGraph& j,
                                   const Matching& m) {
  std::vector<AltC4> out;
  const std::vector<int> labels = j.labels();
  const std::set<int> mm(m.edge_ids.begin(), m.edge_ids.end());
  for (std::size_t p = 0; p < m.edge_ids.size(); ++p)
    for (std::size_t q = p + 1; q < m.edge_ids.size(); ++q) {
      const int m1 = m.edge_ids[p], m2 = m.edge_ids[q];
      const auto [x, y] = g.edge(m1);
      const auto [x2, y2] = g.edge(m2);
      for (int e : labels) {
        if (mm.count(e) || g.edge(e) != std::pair<int, int>(x, y2)) continue;
        for (int f : labels) {
          if (mm.count(f) || g.edge(f) != std::pair<int, int>(x2, y)) continue;
          out.push_back({m1, e, m2, f});
        }
      }
    }
  return out;
}

// Matching edges J-adjacent to the label e.
std::vector<int> m_neighbors(const SimpleGraph& j, const std::vector<int>& m_ids, int e) {
  std::vector<int> out;
  for (int mid : m_ids)
    if (brute::jadj(j, e, mid)) out.push_back(mid);
  return out;
}

struct LawStats {
  int degree = 0, paths = 0, cycles = 0, equiv = 0, path_law = 0, switches = 0;
};

// Every non-matching label has zero or two matching neighbors, and a label
// parallel to a matching edge is never adjacent to it.
void check_degree_law(const BipartiteMultigraph& g, const SimpleGraph& jr, const Matching& m,
                      LawStats& stats) {
  const std::set<int> mm(m.edge_ids.begin(), m.edge_ids.end());
  for (int e : jr.labels()) {
    if (mm.count(e)) continue;
    const auto nbrs = m_neighbors(jr, m.edge_ids, e);
    CHECK((nbrs.size() == 0 || nbrs.size() == 2));
    for (int mid : m.edge_ids)
      if (g.edge(e) == g.edge(mid)) CHECK(!brute::jadj(jr, e, mid));
    ++stats.degree;
  }
}

// Consecutive edges of alternating paths from exposed vertices are never
// adjacent; around an alternating cycle either every consecutive pair is
// adjacent or none is.
void check_alternating_law(const BipartiteMultigraph& g, const SimpleGraph& jr,
                           const Matching& m, LawStats& stats) {
  for (const auto& path : brute::alternating_paths_from_exposed(g, jr, m)) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      CHECK(!brute::jadj(jr, path[i], path[i + 1]));
    ++stats.paths;
  }
  for (const auto& cyc : brute::alternating_cycles(g, jr, m)) {
    int adjacent = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      adjacent += brute::jadj(jr, cyc[i], cyc[(i + 1) % cyc.size()]) ? 1 : 0;
    CHECK((adjacent == 0 || adjacent == int(cyc.size())));
    ++stats.cycles;
  }
}

// At each vertex of an alternating four-cycle, every outside label there is
// adjacent to the matching cycle edge exactly when it is adjacent to the
// plain cycle edge.
void check_neighbor_equivalence(const BipartiteMultigraph& g, const SimpleGraph& jr,
                                const Matching& m, LawStats& stats) {
  for (const AltC4& c : alternating_c4s(g, jr, m)) {
    const auto [x, y] = g.edge(c.m1);
    const auto [x2, y2] = g.edge(c.m2);
    for (int h : jr.labels()) {
      const auto [ha, hb] = g.edge(h);
      if (ha != x && ha != x2) {
        if (hb == y) {
          CHECK(brute::jadj(jr, h, c.m1) == brute::jadj(jr, h, c.f));
          ++stats.equiv;
        }
        if (hb == y2) {
          CHECK(brute::jadj(jr, h, c.m2) == brute::jadj(jr, h, c.e));
          ++stats.equiv;
        }
      }
      if (hb != y && hb != y2) {
        if (ha == x) {
          CHECK(brute::jadj(jr, h, c.m1) == brute::jadj(jr, h, c.e));
          ++stats.equiv;
        }
        if (ha == x2) {
          CHECK(brute::jadj(jr, h, c.m2) == brute::jadj(jr, h, c.f));
          ++stats.equiv;
        }
      }
    }
  }
}

// For every adjacent seed pair, each matching edge reached beyond the seed's
// two matching neighbors carries a witness label meeting it on the opposite
// side whose other matching neighbor lies outside the reach set.
void check_path_law(const BipartiteMultigraph& g, const SimpleGraph& jr, const Matching& m,
                    LawStats& stats) {
  const std::set<int> mm(m.edge_ids.begin(), m.edge_ids.end());
  for (int mid : m.edge_ids)
    for (int e : jr.labels()) {
      if (mm.count(e) || !brute::jadj(jr, mid, e)) continue;
      const auto [ma, mb] = g.edge(mid);
      const auto [ea, eb] = g.edge(e);
      const bool share_a = ma == ea, share_b = mb == eb;
      if (share_a == share_b) continue;  // parallel seeds already fail the degree law
      const int side = share_a ? 0 : 1;
      const auto nbrs = m_neighbors(jr, m.edge_ids, e);
      CHECK(nbrs.size() == 2);
      if (nbrs.size() != 2) continue;
      const int m2 = nbrs[0] == mid ? nbrs[1] : nbrs[0];
      const AlternatingReach p = reach(g, jr, m, mid, e);
      CHECK(p.contains(mid));
      CHECK(p.contains(m2));
      for (int mstar : p.reached) {
        if (mstar == mid || mstar == m2) continue;
        const auto [sa, sb] = g.edge(mstar);
        bool found = false;
        for (int witness : jr.labels()) {
          if (!brute::jadj(jr, witness, mstar)) continue;
          const auto [wa, wb] = g.edge(witness);
          const bool meet_a = wa == sa, meet_b = wb == sb;
          if (side == 0 ? !(meet_b && !meet_a) : !(meet_a && !meet_b)) continue;
          const auto wn = m_neighbors(jr, m.edge_ids, witness);
          if (wn.size() != 2) continue;
          const int other = wn[0] == mstar ? wn[1] : wn[0];
          if (!p.contains(other)) {
            found = true;
            break;
          }
        }
        CHECK(found);
        ++stats.path_law;
      }
    }
}

// Switching the matching pair of an alternating four-cycle for its plain
// pair never changes whether a decomposition exists.
void check_switch_law(const BipartiteMultigraph& g, const SimpleGraph& jr, const Matching& m,
                      LawStats& stats) {
  const bool base = find_cp(g, jr, m).has_value();
  for (const AltC4& c : alternating_c4s(g, jr, m)) {
    const Matching mx = c4_switch(g, m, c.m1, c.e, c.m2, c.f);
    CHECK(find_cp(g, jr, mx).has_value() == base);
    const Matching back = c4_switch(g, mx, c.e, c.m1, c.f, c.m2);
    CHECK(sorted_ids(back.edge_ids) == sorted_ids(m.edge_ids));
    ++stats.switches;
  }
}

}  // namespace

TEST_CASE("reach walks alternating paths and collects matching edges") {
  SUBCASE("a pendant stops at its seed") {
    const BipartiteMultigraph g = bip(2, 1, {{0, 0}, {1, 0}});
    const AlternatingReach r = reach(g, line_graph(g), Matching{{0}}, 0, 1);
    CHECK(r.reached == std::vector<int>{0});
    CHECK(r.contains(0));
    CHECK(!r.contains(1));
  }
  SUBCASE("both seeds of the four-cycle reach the opposite matching edge") {
    const BipartiteMultigraph g = cycle_graph();
    const Matching m{{0, 3}};
    CHECK(reach(g, line_graph(g), m, 0, 2).reached == std::vector<int>{0, 3});
    CHECK(reach(g, line_graph(g), m, 0, 1).reached == std::vector<int>{0, 3});
  }
  SUBCASE("the six-vertex path reaches along but not against the seed direction") {
    const BipartiteMultigraph g = six_path();
    const Matching m{{0, 2, 4}};
    CHECK(reach(g, line_graph(g), m, 0, 1).reached == std::vector<int>{0, 2, 4});
    CHECK(reach(g, line_graph(g), m, 2, 1).reached == std::vector<int>{0, 2});
  }
  SUBCASE("labels dropped from J cut the walk short") {
    const BipartiteMultigraph g = six_path();
    const SimpleGraph l = line_graph(g);
    Bits128 keep;
    for (int id : {0, 1, 2, 4}) keep.set(l.position_of_label(id));
    CHECK(reach(g, l.induced(keep), Matching{{0, 2, 4}}, 0, 1).reached ==
          std::vector<int>{0, 2});
  }
  SUBCASE("malformed seeds are rejected") {
    const BipartiteMultigraph g = six_path();
    const SimpleGraph l = line_graph(g);
    const Matching m{{0, 2, 4}};
    CHECK_THROWS_AS(reach(g, l, m, 0, 2), std::invalid_argument);  // seed edge in M
    CHECK_THROWS_AS(reach(g, l, m, 1, 3), std::invalid_argument);  // seed matching edge not in M
    CHECK_THROWS_AS(reach(g, l, m, 0, 3), std::invalid_argument);  // seeds do not meet
    const BipartiteMultigraph par = bip(1, 1, {{0, 0}, {0, 0}});
    CHECK_THROWS_AS(reach(par, line_graph(par), Matching{{0}}, 0, 1),
                    std::invalid_argument);  // parallel seeds
    Bits128 keep;
    for (int id : {0, 1, 3, 4}) keep.set(l.position_of_label(id));
    CHECK_THROWS_AS(reach(g, l.induced(keep), m, 0, 1),
                    std::invalid_argument);  // matching edge missing from J
  }
}

TEST_CASE("reach agrees with the reference walker") {
  std::mt19937 rng(515151u);
  int pairs = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const BipartiteMultigraph g = random_bip(rng, 2 + int(rng() % 2), 2 + int(rng() % 2));
    if (g.edge_count() == 0 || g.edge_count() > 10) continue;
    const Matching m = max_matching(g);
    if (m.size() == 0) continue;
    const SimpleGraph l = line_graph(g);
    const SimpleGraph j = trial % 2 == 0 ? l : random_label_part(rng, l, m);
    const std::set<int> mm(m.edge_ids.begin(), m.edge_ids.end());
    for (int mid : m.edge_ids)
      for (int e : j.labels()) {
        if (mm.count(e)) continue;
        const auto [ma, mb] = g.edge(mid);
        const auto [ea, eb] = g.edge(e);
        if ((ma == ea) == (mb == eb)) continue;
        const std::set<int> expect = brute::reach_set(g, j, m, mid, e);
        CHECK(reach(g, j, m, mid, e).reached == std::vector<int>(expect.begin(), expect.end()));
        ++pairs;
      }
  }
  CHECK(pairs >= 200);
}

TEST_CASE("four-cycle switch swaps the matching pair") {
  const BipartiteMultigraph g = cycle_graph();
  SUBCASE("forward and back") {
    const Matching mx = c4_switch(g, Matching{{0, 3}}, 0, 2, 3, 1);
    CHECK(mx.edge_ids == std::vector<int>{1, 2});
    CHECK(c4_switch(g, mx, 1, 0, 2, 3).edge_ids == std::vector<int>{0, 3});
  }
  SUBCASE("malformed switches are rejected") {
    CHECK_THROWS_AS(c4_switch(g, Matching{{0, 3}}, 1, 2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(c4_switch(g, Matching{{0, 3}}, 0, 3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(c4_switch(g, Matching{{0, 3}}, 0, 99, 3, 1), std::invalid_argument);
    const BipartiteMultigraph p = six_path();
    CHECK_THROWS_AS(c4_switch(p, Matching{{0, 2, 4}}, 0, 1, 2, 3), std::invalid_argument);
  }
}

TEST_CASE("switching rewrites reach by exactly the cycle edges") {
  std::mt19937 rng(606060u);
  int cycles = 0;
  for (int trial = 0; trial < 140; ++trial) {
    const BipartiteMultigraph g = random_bip(rng, 2 + int(rng() % 3), 2 + int(rng() % 3));
    if (g.edge_count() == 0 || g.edge_count() > 10) continue;
    const Matching m = max_matching(g);
    if (m.size() < 2) continue;
    const SimpleGraph l = line_graph(g);
    const SimpleGraph j = trial % 2 == 0 ? l : random_label_part(rng, l, m);
    for (const AltC4& c : alternating_c4s(g, j, m)) {
      const Matching mx = c4_switch(g, m, c.m1, c.e, c.m2, c.f);
      const AlternatingReach before = reach(g, j, m, c.m1, c.e);
      std::set<int> expect(before.reached.begin(), before.reached.end());
      expect.erase(c.m1);
      expect.erase(c.m2);
      expect.insert(c.e);
      expect.insert(c.f);
      CHECK(reach(g, j, mx, c.e, c.m1).reached ==
            std::vector<int>(expect.begin(), expect.end()));
      ++cycles;
    }
  }
  CHECK(cycles >= 40);
}

TEST_CASE("reduced extremal instances satisfy the structural laws") {
  std::vector<std::pair<std::string, BipartiteMultigraph>> fixtures = {
      {"four-cycle", cycle_graph()},
      {"four-cycle with a parallel edge", bip(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 0}})},
      {"path", bip(2, 2, {{0, 0}, {1, 0}, {1, 1}})},
      {"path with a parallel middle edge", bip(2, 2, {{0, 0}, {1, 0}, {1, 1}, {1, 0}})},
      {"path with a parallel end edge", bip(2, 2, {{0, 0}, {1, 0}, {1, 1}, {0, 0}})},
      {"two four-cycles",
       bip(4, 4, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}})},
      {"four-cycle and path", bip(4, 4, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {3, 2}, {3, 3}})},
      {"two paths", bip(4, 4, {{0, 0}, {1, 0}, {1, 1}, {2, 2}, {3, 2}, {3, 3}})},
      {"path with an exposed-vertex edge", bip(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 0}})},
      {"four-cycle and path with a connector",
       bip(4, 4, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {3, 2}, {3, 3}, {1, 2}})},
      {"two paths with a connector",
       bip(4, 4, {{0, 0}, {1, 0}, {1, 1}, {2, 2}, {3, 2}, {3, 3}, {0, 2}})},
  };

  std::mt19937 rng(313131u);
  int randoms = 0;
  for (int trial = 0; trial < 400 && randoms < 15; ++trial) {
    const BipartiteMultigraph g = random_bip(rng, 3 + int(rng() % 2), 3 + int(rng() % 2));
    if (g.edge_count() == 0 || g.edge_count() > 9) continue;
    const ExtremalityReport r = check_characterization(g);
    if (r.extremal != Tristate::kTrue) continue;
    fixtures.push_back({"random extremal " + std::to_string(randoms), g});
    ++randoms;
  }
  CHECK(randoms >= 8);

  LawStats stats;
  for (const auto& [name, g] : fixtures) {
    INFO("fixture: " << name);
    const ExtremalityReport report = check_characterization(g);
    REQUIRE(report.extremal == Tristate::kTrue);
    const Matching m = max_matching(g);
    const SimpleGraph l = line_graph(g);
    const SimpleGraph jr = m_reduce(l, m, ConnOracle{int(l.vertex_count()) + 1});
    CHECK(jr.labels() == l.labels());
    CHECK(find_cp(g, jr, m).has_value());

    check_degree_law(g, jr, m, stats);
    check_alternating_law(g, jr, m, stats);
    check_neighbor_equivalence(g, jr, m, stats);
    check_path_law(g, jr, m, stats);
    check_switch_law(g, jr, m, stats);
  }

  // every law must actually have been exercised
  CHECK(stats.degree > 0);
  CHECK(stats.paths > 0);
  CHECK(stats.cycles > 0);
  CHECK(stats.equiv > 0);
  CHECK(stats.path_law > 0);
  CHECK(stats.switches > 0);
}

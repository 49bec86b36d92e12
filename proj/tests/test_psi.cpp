#include "doctest.h"

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ryserlab/bipartite_graph.hpp"
#include "ryserlab/conn_oracle.hpp"
#include "ryserlab/errors.hpp"
#include "ryserlab/homology.hpp"
#include "ryserlab/matching.hpp"
#include "ryserlab/psi.hpp"
#include "ryserlab/simple_graph.hpp"
#include "support/build.hpp"
#include "support/psi_brute.hpp"

using namespace ryserlab;
using testutil::bip;
using testutil::cycle;
using testutil::simple;

namespace {

// Library graph -> reference encoding.
brute::Adj16 to_adj16(const SimpleGraph& g) {
  brute::Adj16 adj{};
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint16_t(1u << v);
    adj[v] |= std::uint16_t(1u << u);
  }
  return adj;
}

ConnValue from_brute(int v) { return v >= brute::kPsiInf ? ConnValue::infinity() : ConnValue(v); }

// Graph with edge set given by the bit mask over all pairs of n vertices,
// pairs ordered lexicographically.
SimpleGraph graph_from_mask(int n, unsigned mask) {
  SimpleGraph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) g.add_edge(u, v);
  return g;
}

// Window wide enough to make every result on an n-vertex graph exact.
ConnOracle exact_oracle(int n) { return ConnOracle{n + 1}; }

ConnValue exact_conn(const SimpleGraph& g) {
  const ConnHResult r = exact_oracle(g.vertex_count())(g);
  REQUIRE(r.complete);
  return r.value;
}

}  // namespace

TEST_CASE("edge deletion keeps the vertex set and drops one edge") {
  const SimpleGraph p3 = simple(3, {{0, 1}, {1, 2}});
  const SimpleGraph d = delete_edge(p3, 0, 1);
  CHECK(d.vertex_count() == 3);
  CHECK(d.edges() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(d.degree(0) == 0);
  CHECK(d.labels() == p3.labels());

  const SimpleGraph k3 = simple(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(delete_edge(k3, 0, 1).edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

  CHECK_THROWS_AS(delete_edge(p3, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(delete_edge(p3, 0, 5), std::invalid_argument);
}

TEST_CASE("edge explosion removes both closed neighborhoods") {
  const SimpleGraph k3 = simple(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(explode_edge(k3, 0, 1).vertex_count() == 0);
  CHECK(explode_edge(k3, 1, 2).vertex_count() == 0);

  // path on four vertices: the middle edge sees everyone
  const SimpleGraph p4 = simple(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(explode_edge(p4, 1, 2).vertex_count() == 0);

  // path on six vertices: only the two path ends escape the middle edge
  const SimpleGraph p6 = simple(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  const SimpleGraph survivors = explode_edge(p6, 2, 3);
  CHECK(survivors.vertex_count() == 2);
  CHECK(survivors.edge_count() == 0);
  CHECK(survivors.labels() == std::vector<int>{0, 5});

  CHECK_THROWS_AS(explode_edge(p4, 0, 2), std::invalid_argument);
}

TEST_CASE("psi definition cases and small closed forms") {
  CHECK(psi(SimpleGraph(0)) == ConnValue(-2));
  CHECK(psi(SimpleGraph(3)).is_infinite());
  // an isolated vertex beside edges still forces +infinity
  CHECK(psi(simple(3, {{0, 1}})).is_infinite());
  CHECK(psi(simple(5, {{0, 1}, {1, 2}, {0, 2}})).is_infinite());
  // single edge: deletion leaves an edgeless pair, explosion the void graph
  CHECK(psi(simple(2, {{0, 1}})) == ConnValue(-1));
  // four-cycle, also as the line graph of the bipartite 4-cycle
  CHECK(psi(cycle(4)) == ConnValue(-1));
  const SimpleGraph l = line_graph(bip(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CHECK(psi(l) == ConnValue(-1));
  CHECK(conn_h_independence(l, 4).value == ConnValue(-1));
}

TEST_CASE("psi agrees with the literal recursion and bounds conn from below") {
  // every graph on up to 4 vertices
  for (unsigned mask = 0; mask < 64u; ++mask) {
    const SimpleGraph g = graph_from_mask(4, mask);
    CHECK(psi(g) == from_brute(brute::psi(to_adj16(g), 0xf)));
  }
  // all 5-vertex graphs except the two densest (the reference recursion has
  // no memo and factorial growth), plus the lower-bound property
  for (unsigned mask = 0; mask < 1024u; ++mask) {
    if (__builtin_popcount(mask) > 8) continue;
    const SimpleGraph g = graph_from_mask(5, mask);
    const ConnValue p = psi(g);
    CHECK(p == from_brute(brute::psi(to_adj16(g), 0x1f)));
    CHECK(p <= exact_conn(g));
  }
  // seeded 6-vertex samples
  std::mt19937 rng(4242u);
  for (int trial = 0; trial < 40; ++trial) {
    const SimpleGraph g = graph_from_mask(6, rng() % (1u << 15));
    if (g.edge_count() > 9) continue;
    const ConnValue p = psi(g);
    CHECK(p == from_brute(brute::psi(to_adj16(g), 0x3f)));
    CHECK(p <= exact_conn(g));
  }
}

TEST_CASE("deletion-explosion inequality for exact connectedness") {
  // conn(G) >= min(conn(G - e), conn(G explode e) + 1) on every small graph
  for (int n = 2; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      const SimpleGraph g = graph_from_mask(n, mask);
      const ConnValue c = exact_conn(g);
      for (auto [u, v] : g.edges()) {
        const ConnValue cd = exact_conn(delete_edge(g, u, v));
        const ConnValue cx = exact_conn(explode_edge(g, u, v));
        CHECK(min(cd, cx.succ()) <= c);
      }
    }
  }
}

TEST_CASE("psi reports stats, honors its budget and edge-capacity guard") {
  PsiStats stats;
  const ConnValue v1 = psi(cycle(5), 1'000'000, &stats);
  CHECK(stats.nodes > 0);
  PsiStats again;
  CHECK(psi(cycle(5), 1'000'000, &again) == v1);
  CHECK(again.nodes == stats.nodes);
  CHECK(again.memo_hits == stats.memo_hits);

  CHECK_THROWS_AS(psi(cycle(4), 0), budget_error);
  CHECK_THROWS_AS(psi(cycle(6), 2), budget_error);

  // shortcut cases never consume budget
  PsiStats none;
  CHECK(psi(simple(3, {{0, 1}}), 0, &none).is_infinite());
  CHECK(none.nodes == 0);

  SimpleGraph k24(24);
  for (int u = 0; u < 24; ++u)
    for (int v = u + 1; v < 24; ++v) k24.add_edge(u, v);
  CHECK_THROWS_AS(psi(k24), guard_error);
}

TEST_CASE("decouplable and explodable edges") {
  const ConnOracle exact4 = exact_oracle(4);

  SUBCASE("single edge: deletion lifts connectedness, explosion voids it") {
    const SimpleGraph k2 = simple(2, {{0, 1}});
    CHECK(is_decouplable(k2, 0, 1, exact_oracle(2)) == Tristate::kFalse);
    CHECK(is_explodable(k2, 0, 1, exact_oracle(2)) == Tristate::kTrue);
  }

  SUBCASE("an isolated vertex makes every edge decouplable") {
    const SimpleGraph g = simple(3, {{0, 1}});
    CHECK(is_decouplable(g, 0, 1, exact_oracle(3)) == Tristate::kTrue);
  }

  SUBCASE("complete graph edges decouple, four-cycle edges do not") {
    SimpleGraph k4(4);
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK(is_decouplable(k4, 0, 1, exact4) == Tristate::kTrue);
    CHECK(is_decouplable(cycle(4), 0, 1, exact4) == Tristate::kFalse);
    CHECK(is_explodable(cycle(4), 0, 1, exact4) == Tristate::kTrue);
  }

  SUBCASE("every edge is decouplable or explodable when windows are exact") {
    for (int n = 2; n <= 5; ++n) {
      const int pairs = n * (n - 1) / 2;
      for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
        const SimpleGraph g = graph_from_mask(n, mask);
        for (auto [u, v] : g.edges()) {
          const bool dec = is_decouplable(g, u, v, exact_oracle(n)) == Tristate::kTrue;
          const bool exp = is_explodable(g, u, v, exact_oracle(n)) == Tristate::kTrue;
          CHECK((dec || exp));
        }
      }
    }
  }

  SUBCASE("a narrow window reports inconclusive") {
    // two disjoint edges have conn 0, invisible to a cap-0 window
    const SimpleGraph g = simple(4, {{0, 1}, {2, 3}});
    CHECK(is_decouplable(g, 0, 1, ConnOracle{0}) == Tristate::kInconclusive);
    CHECK(is_decouplable(g, 0, 1, exact4) == Tristate::kFalse);
  }

  CHECK_THROWS_AS(is_decouplable(cycle(4), 0, 2, exact4), std::invalid_argument);
  CHECK_THROWS_AS(is_explodable(cycle(4), 0, 2, exact4), std::invalid_argument);
}

TEST_CASE("matching-guided reduction deletes decouplable edges to a fixpoint") {
  SUBCASE("a reduced graph is a fixpoint") {
    const SimpleGraph k2 = simple(2, {{0, 1}});
    const Matching m{{0, 1}};
    CHECK(m_reduce(k2, m) == k2);
  }

  SUBCASE("the complete graph on four vertices reduces to a star") {
    SimpleGraph k4(4);
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    const Matching m{{0, 1, 2, 3}};
    const SimpleGraph r = m_reduce(k4, m);
    // hand trace: (0,1), (0,2) and (1,2) go, in that order
    CHECK(r.vertex_count() == 4);
    CHECK(r.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {2, 3}});
    CHECK(m_reduce(k4, m) == r);  // deterministic
    // no decouplable edge remains, and connectedness did not increase
    for (auto [u, v] : r.edges())
      CHECK(is_decouplable(r, u, v, exact_oracle(4)) != Tristate::kTrue);
    CHECK(exact_conn(r) <= exact_conn(k4));
  }

  SUBCASE("line graphs of small bipartite graphs obey the matching bound") {
    std::mt19937 rng(1771u);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::pair<int, int>> es;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (rng() % 3) es.push_back({a, b});
      const BipartiteMultigraph g = bip(3, 3, es);
      if (g.edge_count() == 0) continue;
      CHECK(psi(line_graph(g)).at_least_ratio_bound(max_matching(g).size(), 2));
    }
  }

  SUBCASE("line graph of the bipartite four-cycle is already reduced") {
    // conn = |M|/2 - 2 holds with equality here, so reduction applies and
    // finds nothing to delete
    const BipartiteMultigraph g = bip(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    const SimpleGraph j = line_graph(g);
    CHECK(m_reduce(j, max_matching(g)) == j);
  }

  SUBCASE("a parallel edge on the bipartite four-cycle gets reduced away") {
    const BipartiteMultigraph g = bip(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 0}});
    const SimpleGraph j = line_graph(g);
    const Matching m = max_matching(g);
    const SimpleGraph r = m_reduce(j, m, exact_oracle(j.vertex_count()));
    CHECK(r.vertex_count() == j.vertex_count());
    CHECK(r.edge_count() < j.edge_count());
    for (auto [u, v] : r.edges()) CHECK(j.has_edge(u, v));
    // fixpoint, deterministic, and connectedness did not increase
    CHECK(m_reduce(r, m, exact_oracle(j.vertex_count())) == r);
    CHECK(exact_conn(r) <= exact_conn(j));
  }

  SUBCASE("error paths") {
    const SimpleGraph k2 = simple(2, {{0, 1}});
    // matching id 7 is not a vertex label of J
    CHECK_THROWS_AS(m_reduce(k2, Matching{{7}}), std::invalid_argument);
    // empty matching demands conn = -2, which a single edge refutes
    CHECK_THROWS_AS(m_reduce(k2, Matching{{}}), std::invalid_argument);
    // cap-0 window cannot classify the edges of two disjoint edges
    const SimpleGraph two = simple(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(m_reduce(two, Matching{{0, 1, 2, 3}}, ConnOracle{0}), inconclusive_error);
  }
}

TEST_CASE("target decision agrees with the full psi value") {
  SUBCASE("degenerate graphs") {
    CHECK(psi_at_least(SimpleGraph(0), ConnValue(-2)));
    CHECK_FALSE(psi_at_least(SimpleGraph(0), ConnValue(-1)));
    CHECK_FALSE(psi_at_least(SimpleGraph(0), ConnValue::infinity()));
    CHECK(psi_at_least(SimpleGraph(3), ConnValue::infinity()));  // edgeless
    CHECK(psi_at_least(simple(2, {{0, 1}}), ConnValue(-1)));
    CHECK_FALSE(psi_at_least(simple(2, {{0, 1}}), ConnValue(0)));  // psi(K2) = -1
  }

  SUBCASE("every 4-vertex graph, every target") {
    const std::vector<ConnValue> targets = {ConnValue(-2), ConnValue(-1), ConnValue(0),
                                            ConnValue(1),  ConnValue(2),  ConnValue(3),
                                            ConnValue::infinity()};
    for (unsigned mask = 0; mask < (1u << 6); ++mask) {
      const SimpleGraph h = graph_from_mask(4, mask);
      const ConnValue value = psi(h);
      for (const ConnValue t : targets) {
        CAPTURE(mask);
        CHECK(psi_at_least(h, t) == (value >= t));
      }
    }
  }

  SUBCASE("random mid-size graphs") {
    std::mt19937 rng(93232u);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 5 + static_cast<int>(rng() % 4);
      SimpleGraph h(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() % 3 == 0) h.add_edge(u, v);
      const ConnValue value = psi(h);
      for (int t = -2; t <= 3; ++t) CHECK(psi_at_least(h, ConnValue(t)) == (value >= ConnValue(t)));
      CHECK(psi_at_least(h, ConnValue::infinity()) == value.is_infinite());
    }
  }

  SUBCASE("dense line graph, far beyond the reach of the full value") {
    BipartiteMultigraph full = bip(3, 3, {});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 2; ++k) full.add_edge(i, j);
    PsiStats stats;
    CHECK(psi_at_least(line_graph(full), ConnValue(0), 100'000, &stats));
    CHECK(stats.nodes > 0);
    CHECK(stats.nodes < 10'000);
  }

  SUBCASE("budget and guard") {
    CHECK_THROWS_AS(psi_at_least(cycle(5), ConnValue(0), 0), budget_error);
    SimpleGraph big(24);
    for (int u = 0; u < 24; ++u)
      for (int v = u + 1; v < 24; ++v) big.add_edge(u, v);
    CHECK_THROWS_AS(psi_at_least(big, ConnValue(0)), guard_error);
  }
}

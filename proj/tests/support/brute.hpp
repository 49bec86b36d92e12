#ifndef RYSERLAB_TESTS_BRUTE_HPP
#define RYSERLAB_TESTS_BRUTE_HPP

// Independent brute-force oracles.  These are deliberately written from the
// definitions only (subset enumeration, literal recursion) and share no code
// with the library algorithms they cross-check.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ryserlab/bipartite_graph.hpp"
#include "ryserlab/three_graph.hpp"

namespace brute {

// Largest set of pairwise vertex-disjoint edges, by include/exclude recursion.
inline int matching_number(const ryserlab::BipartiteMultigraph& g) {
  std::vector<bool> a_used(g.a_size(), false), b_used(g.b_size(), false);
  std::function<int(int)> rec = [&](int id) -> int {
    if (id >= g.edge_count()) return 0;
    int best = rec(id + 1);
    auto [a, b] = g.edge(id);
    if (!a_used[a] && !b_used[b]) {
      a_used[a] = b_used[b] = true;
      best = std::max(best, 1 + rec(id + 1));
      a_used[a] = b_used[b] = false;
    }
    return best;
  };
  return rec(0);
}

// Smallest vertex set meeting every edge, by subset enumeration over A ∪ B.
inline int vertex_cover_number(const ryserlab::BipartiteMultigraph& g) {
  const int s = g.a_size() + g.b_size();
  if (s > 24) throw std::runtime_error("brute vertex_cover_number: too many vertices");
  int best = s;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << s); ++mask) {
    bool covers = true;
    for (int id = 0; covers && id < g.edge_count(); ++id) {
      auto [a, b] = g.edge(id);
      covers = (mask >> a & 1) || (mask >> (g.a_size() + b) & 1);
    }
    if (covers) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

inline int matching_number(const ryserlab::ThreePartiteHypergraph& h) {
  const int m = h.edge_count();
  if (m > 24) throw std::runtime_error("brute matching_number (3-graph): too many edges");
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << m); ++mask) {
    bool ok = true;
    for (int e = 0; ok && e < m; ++e)
      for (int f = e + 1; ok && f < m; ++f) {
        if (!(mask >> e & 1) || !(mask >> f & 1)) continue;
        for (int c = 0; c < 3; ++c) ok = ok && h.edge(e).v[c] != h.edge(f).v[c];
      }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

inline int vertex_cover_number(const ryserlab::ThreePartiteHypergraph& h) {
  const int s = h.vertex_count();
  if (s > 24) throw std::runtime_error("brute vertex_cover_number (3-graph): too many vertices");
  const int off1 = h.class_size(0), off2 = off1 + h.class_size(1);
  int best = s;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << s); ++mask) {
    bool covers = true;
    for (int id = 0; covers && id < h.edge_count(); ++id) {
      const auto& e = h.edge(id);
      covers = (mask >> e.v[0] & 1) || (mask >> (off1 + e.v[1]) & 1) ||
               (mask >> (off2 + e.v[2]) & 1);
    }
    if (covers) best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace brute

#endif  // RYSERLAB_TESTS_BRUTE_HPP

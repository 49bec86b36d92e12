#include "ryserlab/matching.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ryserlab/errors.hpp"

namespace ryserlab {

bool is_matching(const BipartiteMultigraph& g, const std::vector<int>& edge_ids) {
  std::vector<bool> a_used(g.a_size(), false), b_used(g.b_size(), false);
  std::vector<bool> seen(g.edge_count(), false);
  for (int id : edge_ids) {
    if (id < 0 || id >= g.edge_count() || seen[id]) return false;
    seen[id] = true;
    auto [a, b] = g.edge(id);
    if (a_used[a] || b_used[b]) return false;
    a_used[a] = b_used[b] = true;
  }
  return true;
}

Matching max_matching(const BipartiteMultigraph& g) {
  // match_at[b] / owner[a]: matched edge id at that vertex, or -1.
  std::vector<int> match_at(g.b_size(), -1), owner(g.a_size(), -1);
  std::vector<std::vector<int>> inc(g.a_size());
  for (int id = 0; id < g.edge_count(); ++id) inc[g.edge(id).first].push_back(id);

  std::vector<bool> visited;
  std::function<bool(int)> augment = [&](int a) {
    for (int id : inc[a]) {  // ascending edge id: lowest-id tie break
      int b = g.edge(id).second;
      if (visited[b]) continue;
      visited[b] = true;
      if (match_at[b] < 0 || augment(g.edge(match_at[b]).first)) {
        match_at[b] = id;
        owner[a] = id;
        return true;
      }
    }
    return false;
  };

  for (int a = 0; a < g.a_size(); ++a) {
    visited.assign(g.b_size(), false);
    augment(a);
  }
  Matching m;
  for (int b = 0; b < g.b_size(); ++b)
    if (match_at[b] >= 0) m.edge_ids.push_back(match_at[b]);
  std::sort(m.edge_ids.begin(), m.edge_ids.end());
  return m;
}

std::vector<int> unsaturated_b(const BipartiteMultigraph& g, const Matching& m) {
  std::vector<bool> used(g.b_size(), false);
  for (int id : m.edge_ids) used[g.edge(id).second] = true;
  std::vector<int> out;
  for (int b = 0; b < g.b_size(); ++b)
    if (!used[b]) out.push_back(b);
  return out;
}

std::vector<int> unsaturated_a(const BipartiteMultigraph& g, const Matching& m) {
  std::vector<bool> used(g.a_size(), false);
  for (int id : m.edge_ids) used[g.edge(id).first] = true;
  std::vector<int> out;
  for (int a = 0; a < g.a_size(); ++a)
    if (!used[a]) out.push_back(a);
  return out;
}

VertexCover min_vertex_cover(const BipartiteMultigraph& g) {
  Matching m = max_matching(g);
  std::vector<int> match_a(g.a_size(), -1), match_b(g.b_size(), -1);
  for (int id : m.edge_ids) {
    match_a[g.edge(id).first] = id;
    match_b[g.edge(id).second] = id;
  }
  // Alternating reachability from unsaturated A-vertices: A->B along any
  // edge, B->A along matching edges.
  std::vector<bool> za(g.a_size(), false), zb(g.b_size(), false);
  std::vector<int> stack;
  for (int a = 0; a < g.a_size(); ++a)
    if (match_a[a] < 0) {
      za[a] = true;
      stack.push_back(a);
    }
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int id = 0; id < g.edge_count(); ++id) {
      if (g.edge(id).first != a) continue;
      int b = g.edge(id).second;
      if (zb[b]) continue;
      zb[b] = true;
      if (match_b[b] >= 0) {
        int a2 = g.edge(match_b[b]).first;
        if (!za[a2]) {
          za[a2] = true;
          stack.push_back(a2);
        }
      }
    }
  }
  VertexCover cover;
  for (int a = 0; a < g.a_size(); ++a)
    if (!za[a]) cover.a_side.push_back(a);
  for (int b = 0; b < g.b_size(); ++b)
    if (zb[b]) cover.b_side.push_back(b);

  // Sanity: the construction must cover every edge and match |M|.
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [a, b] = g.edge(id);
    if (za[a] && !zb[b])
      throw std::logic_error("min_vertex_cover: uncovered edge (internal error)");
  }
  if (cover.size() != m.size())
    throw std::logic_error("min_vertex_cover: size differs from matching number");
  return cover;
}

int vertex_cover_number(const BipartiteMultigraph& g) { return min_vertex_cover(g).size(); }

std::vector<Matching> all_maximum_matchings(const BipartiteMultigraph& g, std::size_t cap) {
  const int nu = max_matching(g).size();
  // Distinct endpoint pairs, each realized by its lowest edge id.
  std::vector<std::pair<std::pair<int, int>, int>> pairs;  // ((a,b), edge id)
  for (int id = 0; id < g.edge_count(); ++id) {
    auto e = g.edge(id);
    bool known = false;
    for (auto& p : pairs) known = known || p.first == e;
    if (!known) pairs.push_back({e, id});
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<Matching> out;
  std::vector<bool> a_used(g.a_size(), false), b_used(g.b_size(), false);
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int idx) {
    if (static_cast<int>(chosen.size()) == nu) {
      if (out.size() >= cap) throw guard_error("all_maximum_matchings: more than cap matchings");
      Matching m;
      m.edge_ids = chosen;
      std::sort(m.edge_ids.begin(), m.edge_ids.end());
      out.push_back(std::move(m));
      return;
    }
    if (idx >= static_cast<int>(pairs.size())) return;
    if (static_cast<int>(chosen.size()) + static_cast<int>(pairs.size()) - idx < nu) return;
    auto [ab, id] = pairs[idx];
    if (!a_used[ab.first] && !b_used[ab.second]) {
      a_used[ab.first] = b_used[ab.second] = true;
      chosen.push_back(id);
      rec(idx + 1);
      chosen.pop_back();
      a_used[ab.first] = b_used[ab.second] = false;
    }
    rec(idx + 1);
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const Matching& x, const Matching& y) { return x.edge_ids < y.edge_ids; });
  return out;
}

namespace {

void check_3graph_guard(const ThreePartiteHypergraph& h, const SolveLimits& limits,
                        const char* who) {
  if (h.vertex_count() > limits.max_vertices)
    throw guard_error(std::string(who) + ": hypergraph exceeds vertex budget of " +
                      std::to_string(limits.max_vertices));
}

}  // namespace

int matching_number(const ThreePartiteHypergraph& h, const SolveLimits& limits) {
  check_3graph_guard(h, limits, "matching_number");
  const int m = h.edge_count();
  int best = 0;
  // used[cls] bitmask over class vertices (class sizes are <= 24 under the
  // guard, so plain ints suffice).
  std::function<void(int, unsigned, unsigned, unsigned, int)> rec =
      [&](int idx, unsigned u0, unsigned u1, unsigned u2, int cnt) {
        best = std::max(best, cnt);
        if (idx >= m || cnt + (m - idx) <= best) return;
        const auto& e = h.edge(idx);
        unsigned b0 = 1u << e.v[0], b1 = 1u << e.v[1], b2 = 1u << e.v[2];
        if (!(u0 & b0) && !(u1 & b1) && !(u2 & b2))
          rec(idx + 1, u0 | b0, u1 | b1, u2 | b2, cnt + 1);
        rec(idx + 1, u0, u1, u2, cnt);
      };
  rec(0, 0, 0, 0, 0);
  return best;
}

int vertex_cover_number(const ThreePartiteHypergraph& h, const SolveLimits& limits) {
  check_3graph_guard(h, limits, "vertex_cover_number");
  const int m = h.edge_count();
  int best = h.class_size(0);  // one full class always covers
  for (int c = 1; c < 3; ++c) best = std::min(best, h.class_size(c));
  std::function<void(std::vector<bool>&, int)> rec = [&](std::vector<bool>& cov, int k) {
    if (k >= best) return;
    int open = -1;
    for (int id = 0; id < m; ++id)
      if (!cov[id]) {
        open = id;
        break;
      }
    if (open < 0) {
      best = k;
      return;
    }
    const auto& e = h.edge(open);
    for (int c = 0; c < 3; ++c) {
      std::vector<bool> next = cov;
      for (int id = 0; id < m; ++id)
        if (!next[id] && h.edge(id).v[c] == e.v[c]) next[id] = true;
      rec(next, k + 1);
    }
  };
  std::vector<bool> cov(m, false);
  if (m == 0) return 0;
  rec(cov, 0);
  return best;
}

}  // namespace ryserlab

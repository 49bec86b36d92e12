#include "ryserlab/psi.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ryserlab/bits.hpp"
#include "ryserlab/errors.hpp"

namespace ryserlab {

namespace {

void require_edge(const SimpleGraph& h, int u, int v, const char* who) {
  if (u < 0 || v < 0 || u >= h.vertex_count() || v >= h.vertex_count() || !h.has_edge(u, v))
    throw std::invalid_argument(std::string(who) + ": uv is not an edge");
}

// Recursion over subsets of the root's edge set.  Every state entered has no
// isolated vertex, so the edge subset determines the graph; children that
// would acquire an isolated vertex are answered +infinity on the spot (see
// the note in psi below) and never materialized.
class PsiEngine {
 public:
  PsiEngine(int n, const std::vector<std::pair<int, int>>& edges, std::int64_t budget)
      : n_(n), edges_(edges), budget_(budget) {}

  ConnValue eval(const Bits256& s) {
    if (const auto it = memo_.find(s); it != memo_.end()) {
      ++hits_;
      return it->second;
    }
    if (++nodes_ > budget_) throw budget_error("psi: node budget exceeded");

    std::vector<Bits128> nbr(n_);
    Bits128 verts;
    std::vector<int> present;
    for (int e = s.find_first(); e >= 0; e = s.find_next(e + 1)) {
      const auto [u, v] = edges_[e];
      nbr[u].set(v);
      nbr[v].set(u);
      verts.set(u);
      verts.set(v);
      present.push_back(e);
    }
    // Dense edges first: their explosions shrink the graph fastest.  The
    // result is order-independent (max over all edges); this is only speed.
    std::vector<int> deg(n_);
    for (int v = verts.find_first(); v >= 0; v = verts.find_next(v + 1)) deg[v] = nbr[v].count();
    std::sort(present.begin(), present.end(), [&](int a, int b) {
      const int da = deg[edges_[a].first] + deg[edges_[a].second];
      const int db = deg[edges_[b].first] + deg[edges_[b].second];
      return da != db ? da > db : a < b;
    });

    ConnValue best(-2);
    for (const int e : present) {
      const auto [x, y] = edges_[e];
      Bits128 removed = nbr[x] | nbr[y];
      removed.set(x);
      removed.set(y);
      Bits256 rest;
      Bits128 covered;
      for (const int f : present) {
        const auto [a, b] = edges_[f];
        if (removed.test(a) || removed.test(b)) continue;
        rest.set(f);
        covered.set(a);
        covered.set(b);
      }
      const Bits128 live = and_not(verts, removed);
      ConnValue expl;
      if (live.none()) expl = ConnValue(-2);
      else if (!(live == covered)) expl = ConnValue::infinity();  // isolated survivor
      else expl = eval(rest);
      const ConnValue cand = expl.succ();
      // min(del, cand) <= cand, so once cand cannot beat the best the
      // deletion branch is pointless.
      if (!(best < cand)) continue;
      ConnValue del;
      if (deg[x] == 1 || deg[y] == 1) del = ConnValue::infinity();  // endpoint isolates
      else {
        Bits256 s2 = s;
        s2.reset(e);
        del = eval(s2);
      }
      best = max(best, min(del, cand));
      if (best.is_infinite()) break;
    }
    memo_.emplace(s, best);
    return best;
  }

  std::int64_t nodes() const { return nodes_; }
  std::int64_t hits() const { return hits_; }

 private:
  int n_;
  const std::vector<std::pair<int, int>>& edges_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::int64_t hits_ = 0;
  std::unordered_map<Bits256, ConnValue, Bits256::Hash> memo_;
};

// Decision form of the same recursion: psi(S) >= t holds iff some edge
// passes both min-branches at its level.  States keep the no-isolated-vertex
// invariant of PsiEngine, so the edge subset again determines the graph;
// targets at or below -1 are answered without recursion (a graph with a
// vertex always has psi >= -1: deletion keeps the vertex set, so induction
// on the edge count bottoms out in a nonempty edgeless graph).
class PsiAtLeastEngine {
 public:
  PsiAtLeastEngine(int n, const std::vector<std::pair<int, int>>& edges, std::int64_t budget)
      : n_(n), edges_(edges), budget_(budget) {}

  bool decide(const Bits256& s, ConnValue t) {
    if (t <= ConnValue(-1)) return true;  // state is nonempty by invariant
    const Key key{s, t.is_infinite() ? -1 : t.finite()};
    if (const auto it = memo_.find(key); it != memo_.end()) {
      ++hits_;
      return it->second;
    }
    if (++nodes_ > budget_) throw budget_error("psi_at_least: node budget exceeded");

    std::vector<Bits128> nbr(n_);
    Bits128 verts;
    std::vector<int> present;
    for (int e = s.find_first(); e >= 0; e = s.find_next(e + 1)) {
      const auto [u, v] = edges_[e];
      nbr[u].set(v);
      nbr[v].set(u);
      verts.set(u);
      verts.set(v);
      present.push_back(e);
    }
    const ConnValue pred = t.is_infinite() ? t : ConnValue(t.finite() - 1);

    // Classify each edge's explosion first; edges whose explosion is an
    // instant +infinity (isolated survivor) are the cheapest wins, edges
    // whose explosion dies (empty survivor set, psi = -2 < pred) are
    // hopeless for this target.
    struct Option {
      int e;
      int rank;  // 0: explosion instantly passes, 1: needs recursion
      Bits256 rest;
    };
    std::vector<Option> options;
    for (const int e : present) {
      const auto [x, y] = edges_[e];
      Bits128 removed = nbr[x] | nbr[y];
      removed.set(x);
      removed.set(y);
      Bits256 rest;
      Bits128 covered;
      for (const int f : present) {
        const auto [a, b] = edges_[f];
        if (removed.test(a) || removed.test(b)) continue;
        rest.set(f);
        covered.set(a);
        covered.set(b);
      }
      const Bits128 live = and_not(verts, removed);
      if (live.none()) continue;  // explosion value -2 cannot reach pred
      options.push_back({e, live == covered ? 1 : 0, rest});
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const Option& a, const Option& b) { return a.rank < b.rank; });

    bool out = false;
    std::vector<int> deg(n_);
    for (int v = verts.find_first(); v >= 0; v = verts.find_next(v + 1)) deg[v] = nbr[v].count();
    for (const Option& opt : options) {
      if (opt.rank == 1 && !decide(opt.rest, pred)) continue;
      const auto [x, y] = edges_[opt.e];
      if (deg[x] == 1 || deg[y] == 1) {  // deletion isolates: +infinity
        out = true;
        break;
      }
      Bits256 s2 = s;
      s2.reset(opt.e);
      if (decide(s2, t)) {
        out = true;
        break;
      }
    }
    memo_.emplace(key, out);
    return out;
  }

  std::int64_t nodes() const { return nodes_; }
  std::int64_t hits() const { return hits_; }

 private:
  struct Key {
    Bits256 s;
    int t;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return Bits256::Hash{}(k.s) * 1000003u + static_cast<std::size_t>(k.t + 3);
    }
  };
  int n_;
  const std::vector<std::pair<int, int>>& edges_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::int64_t hits_ = 0;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

}  // namespace

SimpleGraph delete_edge(const SimpleGraph& h, int u, int v) {
  require_edge(h, u, v, "delete_edge");
  return h.without_edge(u, v);
}

SimpleGraph explode_edge(const SimpleGraph& h, int u, int v) {
  require_edge(h, u, v, "explode_edge");
  Bits128 removed = h.adj(u) | h.adj(v);
  removed.set(u);
  removed.set(v);
  return h.induced(and_not(Bits128::low_bits(h.vertex_count()), removed));
}

ConnValue psi(const SimpleGraph& h, std::int64_t budget, PsiStats* stats) {
  PsiStats local;
  ConnValue out;
  if (h.vertex_count() == 0) {
    out = ConnValue(-2);
  } else if (h.edge_count() == 0 || h.has_isolated_vertex()) {
    // An isolated vertex survives every deletion (same vertex set) and every
    // explosion (it neighbors nothing, so no closed neighborhood contains
    // it), so by induction on the edge count every branch bottoms out in a
    // nonempty edgeless graph and both recursion cases give +infinity.
    out = ConnValue::infinity();
  } else {
    const auto edges = h.edges();
    if (static_cast<int>(edges.size()) > Bits256::capacity())
      throw guard_error("psi: graph has more edges than the memo key holds");
    PsiEngine engine(h.vertex_count(), edges, budget);
    out = engine.eval(Bits256::low_bits(static_cast<int>(edges.size())));
    local.nodes = engine.nodes();
    local.memo_hits = engine.hits();
  }
  if (stats) *stats = local;
  return out;
}

bool psi_at_least(const SimpleGraph& h, ConnValue t, std::int64_t budget, PsiStats* stats) {
  PsiStats local;
  bool out;
  if (t <= ConnValue(-2)) {
    out = true;  // psi is never below -2
  } else if (h.vertex_count() == 0) {
    out = false;  // void graph: psi = -2 exactly
  } else if (h.edge_count() == 0 || h.has_isolated_vertex()) {
    out = true;  // +infinity, as in psi above
  } else if (t <= ConnValue(-1)) {
    out = true;  // nonempty graphs always reach -1
  } else {
    const auto edges = h.edges();
    if (static_cast<int>(edges.size()) > Bits256::capacity())
      throw guard_error("psi_at_least: graph has more edges than the memo key holds");
    PsiAtLeastEngine engine(h.vertex_count(), edges, budget);
    out = engine.decide(Bits256::low_bits(static_cast<int>(edges.size())), t);
    local.nodes = engine.nodes();
    local.memo_hits = engine.hits();
  }
  if (stats) *stats = local;
  return out;
}

Tristate is_decouplable(const SimpleGraph& j, int u, int v, const ConnOracle& oracle) {
  require_edge(j, u, v, "is_decouplable");
  return conn_le(oracle(delete_edge(j, u, v)), oracle(j), 0);
}

Tristate is_explodable(const SimpleGraph& j, int u, int v, const ConnOracle& oracle) {
  require_edge(j, u, v, "is_explodable");
  return conn_le(oracle(explode_edge(j, u, v)), oracle(j), -1);
}

SimpleGraph m_reduce(const SimpleGraph& j, const Matching& m, const ConnOracle& oracle) {
  for (const int id : m.edge_ids)
    if (j.position_of_label(id) < 0)
      throw std::invalid_argument("m_reduce: matching edge id missing from vertex labels");
  const ConnValue bound(m.size() / 2 - 2);
  if (conn_lower(oracle(j)) > bound)
    throw std::invalid_argument("m_reduce: connectedness exceeds |M|/2 - 2");

  SimpleGraph cur = j;
  for (bool again = true; again;) {
    again = false;
    for (auto [u, v] : cur.edges()) {
      const Tristate d = is_decouplable(cur, u, v, oracle);
      if (d == Tristate::kInconclusive)
        throw inconclusive_error("m_reduce: window cannot classify an edge");
      if (d == Tristate::kTrue) {
        cur = delete_edge(cur, u, v);
        again = true;
        break;
      }
    }
  }
  return cur;
}

SimpleGraph m_reduce(const SimpleGraph& j, const Matching& m) {
  return m_reduce(j, m, ConnOracle{m.size() / 2});
}

}  // namespace ryserlab

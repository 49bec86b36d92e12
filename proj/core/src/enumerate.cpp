#include "ryserlab/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ryserlab/errors.hpp"

namespace ryserlab {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

// Bipartite canonicalization ------------------------------------------------
//
// A graph is its multiplicity matrix; isomorphism permutes rows and columns
// independently (plus a transpose when the sides have equal size).  The
// minimal row-major entry sequence is found by enumerating permutations of
// the smaller side only: with the other side free, the best completion is a
// plain sort (of rows, or of columns read as top-down tuples), because any
// out-of-order pair can be swapped to strictly decrease the sequence.

using Matrix = std::vector<std::vector<int>>;  // rows x cols, compared row-major

Matrix multiplicity_matrix(const BipartiteMultigraph& g) {
  Matrix m(g.a_size(), std::vector<int>(g.b_size(), 0));
  for (auto [u, v] : g.edge_list()) ++m[u][v];
  return m;
}

Matrix transpose(const Matrix& m, int rows, int cols) {
  Matrix t(cols, std::vector<int>(rows));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

// Minimum over all row and column permutations of m (rows x cols).
Matrix min_over_perms(const Matrix& m, int rows, int cols) {
  Matrix best;
  if (cols <= rows) {
    // Enumerate column permutations, sort rows.
    std::vector<int> perm(cols);
    std::iota(perm.begin(), perm.end(), 0);
    Matrix cand(rows, std::vector<int>(cols));
    do {
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) cand[i][j] = m[i][perm[j]];
      std::sort(cand.begin(), cand.end());
      if (best.empty() || cand < best) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    // Enumerate row permutations, sort columns as top-down tuples.
    std::vector<int> perm(rows);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> col(cols, std::vector<int>(rows));
    Matrix cand(rows, std::vector<int>(cols));
    do {
      for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) col[j][i] = m[perm[i]][j];
      std::sort(col.begin(), col.end());
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) cand[i][j] = col[j][i];
      if (best.empty() || cand < best) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return best;
}

Matrix bipartite_min_matrix(const Matrix& m, int rows, int cols, int perm_guard) {
  if (std::min(rows, cols) > perm_guard)
    throw guard_error("bipartite canonical form: smaller side exceeds the permutation guard");
  Matrix best = min_over_perms(m, rows, cols);
  if (rows == cols && rows > 0) {
    Matrix other = min_over_perms(transpose(m, rows, cols), cols, rows);
    if (other < best) best = other;
  }
  return best;
}

BipartiteMultigraph graph_of_matrix(const Matrix& m, int rows, int cols) {
  BipartiteMultigraph out(numbered("a", rows), numbered("b", cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      for (int k = 0; k < m[i][j]; ++k) out.add_edge(i, j);
  return out;
}

// True iff no transformation of the row-sorted candidate strictly beats it;
// early exit keeps the rejection path cheap during enumeration.
bool is_min_matrix(const Matrix& m, int rows, int cols) {
  std::vector<int> perm(cols);
  std::iota(perm.begin(), perm.end(), 0);
  Matrix cand(rows, std::vector<int>(cols));
  do {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) cand[i][j] = m[i][perm[j]];
    std::sort(cand.begin(), cand.end());
    if (cand < m) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (rows == cols && rows > 0) {
    Matrix t = transpose(m, rows, cols);
    do {
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) cand[i][j] = t[i][perm[j]];
      std::sort(cand.begin(), cand.end());
      if (cand < m) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

std::string matrix_key(const Matrix& m, int rows, int cols) {
  std::string key = std::to_string(rows) + "x" + std::to_string(cols) + ":";
  for (int i = 0; i < rows; ++i) {
    if (i > 0) key += ";";
    for (int j = 0; j < cols; ++j) {
      if (j > 0) key += ",";
      key += std::to_string(m[i][j]);
    }
  }
  return key;
}

// Simple-graph canonicalization ---------------------------------------------
//
// The key lists, for each vertex in placement order, its adjacency bits to
// the already-placed vertices; the canonical placement minimizes that
// sequence.  Backtracking with prefix pruning: a partial placement whose
// bits already exceed the best key's prefix cannot win.  Placing one of two
// twin vertices (identical adjacency outside the pair) is enough, because
// swapping twins is an automorphism.

struct SimpleCanon {
  const SimpleGraph* g = nullptr;
  int n = 0;
  int total_bits = 0;
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> perm, best_perm;
  std::vector<char> used;

  bool twins(int u, int w) const {
    Bits128 au = g->adj(u), aw = g->adj(w);
    au.reset(u);
    au.reset(w);
    aw.reset(u);
    aw.reset(w);
    return au == aw;
  }

  std::uint64_t block_of(int v, int placed) const {
    std::uint64_t block = 0;
    for (int q = 0; q < placed; ++q) block = (block << 1) | (g->has_edge(perm[q], v) ? 1 : 0);
    return block;
  }

  void dfs(int placed, std::uint64_t cur, int bits) {
    if (placed == n) {
      if (cur < best) {
        best = cur;
        best_perm = perm;
      }
      return;
    }
    std::vector<std::pair<std::uint64_t, int>> cands;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool dup = false;
      for (auto& [b, w] : cands) {
        if (twins(v, w)) {
          dup = true;
          break;
        }
      }
      if (!dup) cands.emplace_back(block_of(v, placed), v);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [block, v] : cands) {
      std::uint64_t nxt = (cur << placed) | block;
      std::uint64_t prefix = best >> (total_bits - (bits + placed));
      if (nxt > prefix) break;  // sorted ascending: later candidates only grow
      perm[placed] = v;
      used[v] = 1;
      dfs(placed + 1, nxt, bits + placed);
      used[v] = 0;
    }
  }

  void run(const SimpleGraph& graph) {
    g = &graph;
    n = graph.vertex_count();
    total_bits = n * (n - 1) / 2;
    perm.assign(n, 0);
    used.assign(n, 0);
    std::iota(perm.begin(), perm.end(), 0);
    best = 0;  // key of the identity placement, as the initial bound
    for (int p = 1; p < n; ++p)
      for (int q = 0; q < p; ++q)
        best = (best << 1) | (graph.has_edge(q, p) ? 1 : 0);
    best_perm = perm;
    dfs(0, 0, 0);
  }
};

void require_simple_guard(const SimpleGraph& g, int guard) {
  if (g.vertex_count() > guard || g.vertex_count() > 11)
    throw guard_error("simple canonical form: vertex count exceeds the guard");
}

SimpleGraph extend_by_vertex(const SimpleGraph& p, unsigned mask) {
  int k = p.vertex_count();
  SimpleGraph c(k + 1);
  for (auto [u, v] : p.edges()) c.add_edge(u, v);
  for (int i = 0; i < k; ++i)
    if (mask >> i & 1u) c.add_edge(i, k);
  return c;
}

// 3-graph canonicalization --------------------------------------------------

using TripleList = std::vector<std::array<int, 3>>;

TripleList sorted_triples(const ThreePartiteHypergraph& h) {
  TripleList t;
  t.reserve(h.edge_count());
  for (const auto& e : h.edge_list()) t.push_back({e.v[0], e.v[1], e.v[2]});
  std::sort(t.begin(), t.end());
  return t;
}

void require_three_budget(const ThreePartiteHypergraph& h, std::int64_t perm_budget) {
  std::int64_t perms = 1;
  for (int cls = 0; cls < 3; ++cls)
    for (int i = 2; i <= h.class_size(cls); ++i) {
      perms *= i;
      if (perms > perm_budget)
        throw guard_error("3-graph canonical form: permutation count exceeds the budget");
    }
}

// Applies the three class permutations to the edge list and sorts it.
void relabel_triples(const TripleList& in, const std::vector<int>& p1, const std::vector<int>& p2,
                     const std::vector<int>& p3, TripleList& out) {
  out.clear();
  for (const auto& t : in) out.push_back({p1[t[0]], p2[t[1]], p3[t[2]]});
  std::sort(out.begin(), out.end());
}

template <typename Visit>
void for_each_class_perm(int n1, int n2, int n3, Visit visit) {
  std::vector<int> p1(n1), p2(n2), p3(n3);
  std::iota(p1.begin(), p1.end(), 0);
  std::iota(p2.begin(), p2.end(), 0);
  std::iota(p3.begin(), p3.end(), 0);
  do {
    do {
      do {
        if (!visit(p1, p2, p3)) return;
      } while (std::next_permutation(p3.begin(), p3.end()));
    } while (std::next_permutation(p2.begin(), p2.end()));
  } while (std::next_permutation(p1.begin(), p1.end()));
}

TripleList three_min_triples(const ThreePartiteHypergraph& h) {
  TripleList base = sorted_triples(h);
  TripleList best = base, cand;
  for_each_class_perm(h.class_size(0), h.class_size(1), h.class_size(2),
                      [&](const std::vector<int>& p1, const std::vector<int>& p2,
                          const std::vector<int>& p3) {
                        relabel_triples(base, p1, p2, p3, cand);
                        if (cand < best) best = cand;
                        return true;
                      });
  return best;
}

bool is_min_triples(const TripleList& base, int n1, int n2, int n3) {
  TripleList cand;
  bool minimal = true;
  for_each_class_perm(n1, n2, n3,
                      [&](const std::vector<int>& p1, const std::vector<int>& p2,
                          const std::vector<int>& p3) {
                        relabel_triples(base, p1, p2, p3, cand);
                        if (cand < base) {
                          minimal = false;
                          return false;
                        }
                        return true;
                      });
  return minimal;
}

std::string triple_key(const TripleList& t, int n1, int n2, int n3) {
  std::string key =
      std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3) + ":";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) key += ";";
    key += std::to_string(t[i][0]) + "." + std::to_string(t[i][1]) + "." +
           std::to_string(t[i][2]);
  }
  return key;
}

ThreePartiteHypergraph graph_of_triples(const TripleList& t, int n1, int n2, int n3) {
  ThreePartiteHypergraph out(numbered("x", n1), numbered("y", n2), numbered("z", n3));
  for (const auto& e : t) out.add_edge(e[0], e[1], e[2]);
  return out;
}

}  // namespace

// Bipartite -----------------------------------------------------------------

std::string bipartite_canonical_key(const BipartiteMultigraph& g, int perm_guard) {
  // The transpose branch only fires for equal sides, so the minimized matrix
  // always keeps the input dimensions.
  Matrix best = bipartite_min_matrix(multiplicity_matrix(g), g.a_size(), g.b_size(), perm_guard);
  return matrix_key(best, g.a_size(), g.b_size());
}

BipartiteMultigraph bipartite_canonical_form(const BipartiteMultigraph& g, int perm_guard) {
  Matrix best = bipartite_min_matrix(multiplicity_matrix(g), g.a_size(), g.b_size(), perm_guard);
  return graph_of_matrix(best, g.a_size(), g.b_size());
}

std::vector<BipartiteMultigraph> enumerate_bipartite(int a, int b, int max_mult, int guard) {
  if (a < 0 || b < 0 || max_mult < 0) throw std::invalid_argument("enumerate_bipartite: negative size");
  if (static_cast<std::int64_t>(a) * b * std::max(1, max_mult) > guard)
    throw guard_error("enumerate_bipartite: universe exceeds the guard");
  // All possible rows, in ascending lexicographic order.
  std::vector<std::vector<int>> rows;
  std::vector<int> row(b, 0);
  for (;;) {
    rows.push_back(row);
    int j = b - 1;
    while (j >= 0 && row[j] == max_mult) row[j--] = 0;
    if (j < 0) break;
    ++row[j];
  }
  std::vector<BipartiteMultigraph> out;
  // Nondecreasing row-id sequences of length a; each is a row-sorted matrix.
  std::vector<int> pick(a, 0);
  Matrix cand(a);
  for (;;) {
    for (int i = 0; i < a; ++i) cand[i] = rows[pick[i]];
    if (is_min_matrix(cand, a, b)) out.push_back(graph_of_matrix(cand, a, b));
    int i = a - 1;
    while (i >= 0 && pick[i] == static_cast<int>(rows.size()) - 1) --i;
    if (i < 0) break;
    int next = pick[i] + 1;
    for (int k = i; k < a; ++k) pick[k] = next;
  }
  return out;
}

// Simple --------------------------------------------------------------------

std::uint64_t simple_canonical_bits(const SimpleGraph& g, int guard) {
  require_simple_guard(g, guard);
  if (g.vertex_count() <= 1) return 0;
  SimpleCanon canon;
  canon.run(g);
  return canon.best;
}

SimpleGraph simple_canonical_form(const SimpleGraph& g, int guard) {
  require_simple_guard(g, guard);
  int n = g.vertex_count();
  if (n <= 1) return SimpleGraph(n);
  SimpleCanon canon;
  canon.run(g);
  SimpleGraph out(n);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (g.has_edge(canon.best_perm[p], canon.best_perm[q])) out.add_edge(p, q);
  return out;
}

void for_each_simple(int n, const std::function<void(const SimpleGraph&)>& emit, int guard) {
  if (n < 0) throw std::invalid_argument("for_each_simple: negative vertex count");
  if (n > guard) throw guard_error("for_each_simple: vertex count exceeds the guard");
  if (n == 0) {
    emit(SimpleGraph(0));
    return;
  }
  // Materialize the levels below n; each level sorted by canonical bits.
  std::vector<SimpleGraph> level{SimpleGraph(0)};
  for (int k = 1; k < n; ++k) {
    std::vector<std::pair<std::uint64_t, SimpleGraph>> next;
    std::unordered_set<std::uint64_t> seen;
    for (const SimpleGraph& parent : level) {
      for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        SimpleGraph child = extend_by_vertex(parent, mask);
        std::uint64_t key = simple_canonical_bits(child, guard);
        if (seen.insert(key).second) next.emplace_back(key, simple_canonical_form(child, guard));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    level.clear();
    for (auto& [key, graph] : next) level.push_back(std::move(graph));
  }
  // Stream the top level without storing it.
  std::unordered_set<std::uint64_t> seen;
  for (const SimpleGraph& parent : level) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      SimpleGraph child = extend_by_vertex(parent, mask);
      std::uint64_t key = simple_canonical_bits(child, guard);
      if (seen.insert(key).second) emit(simple_canonical_form(child, guard));
    }
  }
}

std::vector<SimpleGraph> enumerate_simple(int n, int guard) {
  std::vector<std::pair<std::uint64_t, SimpleGraph>> keyed;
  for_each_simple(
      n,
      [&](const SimpleGraph& g) { keyed.emplace_back(simple_canonical_bits(g, guard), g); },
      guard);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<SimpleGraph> out;
  out.reserve(keyed.size());
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

// 3-graphs ------------------------------------------------------------------

std::string three_canonical_key(const ThreePartiteHypergraph& h, std::int64_t perm_budget) {
  require_three_budget(h, perm_budget);
  return triple_key(three_min_triples(h), h.class_size(0), h.class_size(1), h.class_size(2));
}

ThreePartiteHypergraph three_canonical_form(const ThreePartiteHypergraph& h,
                                            std::int64_t perm_budget) {
  require_three_budget(h, perm_budget);
  return graph_of_triples(three_min_triples(h), h.class_size(0), h.class_size(1),
                          h.class_size(2));
}

std::vector<ThreePartiteHypergraph> enumerate_three(int n1, int n2, int n3, int max_edges,
                                                    int max_mult, std::int64_t candidate_guard) {
  if (n1 < 0 || n2 < 0 || n3 < 0 || max_edges < 0 || max_mult < 0)
    throw std::invalid_argument("enumerate_three: negative size");
  int cells = n1 * n2 * n3;
  std::vector<ThreePartiteHypergraph> out;
  std::int64_t candidates = 0;
  TripleList edges;
  auto cell_triple = [&](int c) {
    return std::array<int, 3>{c / (n2 * n3), (c / n3) % n2, c % n3};
  };
  // Depth-first over nondecreasing cell sequences; every prefix is a
  // candidate, so all edge counts up to max_edges are covered.
  auto consider = [&]() {
    if (++candidates > candidate_guard)
      throw guard_error("enumerate_three: candidate count exceeds the guard");
    if (is_min_triples(edges, n1, n2, n3)) out.push_back(graph_of_triples(edges, n1, n2, n3));
  };
  auto rec = [&](auto&& self, int min_cell, int used_of_min) -> void {
    consider();
    if (static_cast<int>(edges.size()) == max_edges) return;
    for (int c = min_cell; c < cells; ++c) {
      int used = (c == min_cell) ? used_of_min : 0;
      if (used >= max_mult) continue;
      edges.push_back(cell_triple(c));
      self(self, c, used + 1);
      edges.pop_back();
    }
  };
  if (cells == 0) {
    // No cells: only the edgeless instance exists.
    consider();
  } else {
    rec(rec, 0, 0);
  }
  return out;
}

}  // namespace ryserlab

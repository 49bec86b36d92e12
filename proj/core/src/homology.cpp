#include "ryserlab/homology.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "ryserlab/errors.hpp"

namespace ryserlab {

void SparseIntMatrix::add_entry(int r, int c, std::int64_t v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols)
    throw std::out_of_range("SparseIntMatrix: entry outside the matrix");
  if (v != 0) col[c].push_back({r, v});
}

std::size_t SparseIntMatrix::entry_count() const {
  std::size_t n = 0;
  for (const auto& entries : col) n += entries.size();
  return n;
}

std::vector<std::int64_t> SnfSummary::nonunit() const {
  std::vector<std::int64_t> out;
  for (std::int64_t v : invariants)
    if (v > 1) out.push_back(v);
  return out;
}

namespace {

// Checked arithmetic.  INT64_MIN is also rejected so negation stays safe.
std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r) || r == std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("smith_normal_form: entry overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r) || r == std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("smith_normal_form: entry overflow");
  return r;
}

// diag(a, b) is equivalent to diag(gcd(a, b), lcm(a, b)), so pairwise fixup
// turns any diagonal multiset into the canonical divisibility chain.
std::vector<std::int64_t> divisibility_chain(std::vector<std::int64_t> d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      const std::int64_t g = std::gcd(d[i], d[j]);
      const std::int64_t l = checked_mul(d[i] / g, d[j]);
      d[i] = g;
      d[j] = l;
    }
  std::sort(d.begin(), d.end());
  return d;
}

SnfSummary finish(std::vector<std::int64_t> diag) {
  SnfSummary s;
  s.invariants = divisibility_chain(std::move(diag));
  s.rank = static_cast<int>(s.invariants.size());
  return s;
}

SnfSummary dense_snf(const SparseIntMatrix& a) {
  const int rows = a.rows, cols = a.cols;
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
  for (int j = 0; j < cols; ++j)
    for (const auto& [r, v] : a.col[j]) m[r][j] += v;

  std::vector<std::int64_t> diag;
  for (int top = 0; top < rows && top < cols; ++top) {
    // Pivot: smallest absolute value in the active block, ties toward the
    // smaller (row, column) pair.  Any unit entry is already optimal.
    int pr = -1, pc = -1;
    std::int64_t best = 0;
    for (int i = top; i < rows && best != 1; ++i)
      for (int j = top; j < cols; ++j) {
        const std::int64_t av = m[i][j] < 0 ? -m[i][j] : m[i][j];
        if (av == 0) continue;
        if (pr < 0 || av < best) {
          pr = i;
          pc = j;
          best = av;
          if (av == 1) break;
        }
      }
    if (pr < 0) break;
    std::swap(m[top], m[pr]);
    if (pc != top)
      for (int i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pc]);

    for (;;) {
      // Row operations clear the pivot column; a nonzero remainder swaps
      // into the pivot slot and the Euclid loop continues with it.
      for (int i = top + 1; i < rows; ++i)
        while (m[i][top] != 0) {
          const std::int64_t q = m[i][top] / m[top][top];
          if (q != 0)
            for (int j = top; j < cols; ++j)
              m[i][j] = checked_sub(m[i][j], checked_mul(q, m[top][j]));
          if (m[i][top] != 0) std::swap(m[i], m[top]);
        }
      // With the pivot column clear, column operations touch only the pivot
      // row — unless a remainder forces a column swap, which dirties the
      // column and restarts the phase above.
      bool swapped = false;
      for (int j = top + 1; j < cols; ++j) {
        if (m[top][j] == 0) continue;
        const std::int64_t q = m[top][j] / m[top][top];
        m[top][j] -= q * m[top][top];
        if (m[top][j] != 0) {
          for (int i = 0; i < rows; ++i) std::swap(m[i][top], m[i][j]);
          swapped = true;
          break;
        }
      }
      if (!swapped) break;
    }
    diag.push_back(m[top][top] < 0 ? -m[top][top] : m[top][top]);
  }
  return finish(std::move(diag));
}

// Row-list elimination state for the sparse path.  Finished pivot rows are
// cleared and marked dead; their columns hold no other entries by then, so
// no column bookkeeping is needed.
struct SparseElim {
  std::vector<std::vector<std::pair<int, std::int64_t>>> row;  // (col, value), sorted
  std::vector<char> live;

  explicit SparseElim(const SparseIntMatrix& a) : row(a.rows), live(a.rows, 1) {
    for (int j = 0; j < a.cols; ++j)
      for (const auto& [r, v] : a.col[j]) row[r].push_back({j, v});
    for (auto& entries : row) {
      std::sort(entries.begin(), entries.end());
      std::vector<std::pair<int, std::int64_t>> merged;
      for (const auto& e : entries) {
        if (!merged.empty() && merged.back().first == e.first)
          merged.back().second += e.second;
        else
          merged.push_back(e);
      }
      entries.clear();
      for (const auto& e : merged)
        if (e.second != 0) entries.push_back(e);
    }
  }

  static bool col_less(const std::pair<int, std::int64_t>& e, int c) { return e.first < c; }

  std::int64_t get(int i, int c) const {
    const auto& entries = row[i];
    auto it = std::lower_bound(entries.begin(), entries.end(), c, col_less);
    return (it != entries.end() && it->first == c) ? it->second : 0;
  }

  void set(int i, int c, std::int64_t v) {
    auto& entries = row[i];
    auto it = std::lower_bound(entries.begin(), entries.end(), c, col_less);
    if (it != entries.end() && it->first == c) {
      if (v == 0)
        entries.erase(it);
      else
        it->second = v;
    } else if (v != 0) {
      entries.insert(it, {c, v});
    }
  }

  // row i -= q * row p, as a sorted merge.
  void axpy(int i, int p, std::int64_t q) {
    const auto& rp = row[p];
    const auto& ri = row[i];
    std::vector<std::pair<int, std::int64_t>> out;
    out.reserve(ri.size() + rp.size());
    std::size_t x = 0, y = 0;
    while (x < ri.size() || y < rp.size()) {
      if (y == rp.size() || (x < ri.size() && ri[x].first < rp[y].first)) {
        out.push_back(ri[x++]);
      } else if (x == ri.size() || rp[y].first < ri[x].first) {
        out.push_back({rp[y].first, checked_mul(-q, rp[y].second)});
        ++y;
      } else {
        const std::int64_t w = checked_sub(ri[x].second, checked_mul(q, rp[y].second));
        if (w != 0) out.push_back({ri[x].first, w});
        ++x;
        ++y;
      }
    }
    row[i] = std::move(out);
  }

  // Clears column pc outside the pivot row; Euclid swaps may move the pivot
  // to another row, which is returned.
  int clear_column(int pr, int pc) {
    for (;;) {
      bool moved = false;
      for (int i = 0; i < static_cast<int>(row.size()); ++i) {
        if (!live[i] || i == pr) continue;
        const std::int64_t v = get(i, pc);
        if (v == 0) continue;
        const std::int64_t q = v / get(pr, pc);
        if (q != 0) axpy(i, pr, q);
        if (get(i, pc) != 0) {
          pr = i;
          moved = true;
          break;
        }
      }
      if (!moved) return pr;
    }
  }

  // Full elimination of one pivot; returns the absolute pivot value.
  std::int64_t eliminate(int pr, int pc) {
    for (;;) {
      pr = clear_column(pr, pc);
      const std::int64_t p = get(pr, pc);
      // With the column clear, clearing the row only touches the pivot row;
      // a nonzero remainder moves the pivot to that column and the column
      // phase runs again.
      bool moved = false;
      const auto snapshot = row[pr];
      for (const auto& [j, v] : snapshot) {
        if (j == pc) continue;
        const std::int64_t rem = v - (v / p) * p;
        set(pr, j, rem);
        if (rem != 0) {
          pc = j;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    const std::int64_t p = get(pr, pc);
    live[pr] = 0;
    row[pr].clear();
    return p < 0 ? -p : p;
  }
};

SnfSummary sparse_snf(const SparseIntMatrix& a) {
  SparseElim m(a);
  std::vector<std::int64_t> diag;
  for (;;) {
    int pr = -1, pc = -1;
    std::int64_t best = 0;
    for (int i = 0; i < static_cast<int>(m.row.size()) && best != 1; ++i) {
      if (!m.live[i]) continue;
      for (const auto& [c, v] : m.row[i]) {
        const std::int64_t av = v < 0 ? -v : v;
        if (pr < 0 || av < best) {
          pr = i;
          pc = c;
          best = av;
          if (av == 1) break;
        }
      }
    }
    if (pr < 0) break;
    diag.push_back(m.eliminate(pr, pc));
  }
  return finish(std::move(diag));
}

// Boundary map from d-faces to alternating-sign sums of (d-1)-faces; for
// d = 0 every vertex maps to the implicit empty face (a single row).
SparseIntMatrix boundary_matrix(const SimplicialComplex& c, int d) {
  const auto& top_faces = c.faces(d);
  const int rows = d == 0 ? 1 : c.face_count(d - 1);
  SparseIntMatrix m(rows, static_cast<int>(top_faces.size()));
  for (int j = 0; j < static_cast<int>(top_faces.size()); ++j) {
    const auto& f = top_faces[j];
    if (d == 0) {
      m.add_entry(0, j, 1);
      continue;
    }
    int sign = 1;
    SimplicialComplex::Face sub(f.begin() + 1, f.end());
    for (std::size_t k = 0; k < f.size(); ++k) {
      const int r = c.face_index(sub);
      if (r < 0) throw std::logic_error("boundary_matrix: missing subface");
      m.add_entry(r, j, sign);
      sign = -sign;
      if (k + 1 < f.size()) sub[k] = f[k];  // switch from dropping f[k] to f[k+1]
    }
  }
  return m;
}

// Verifies lower ∘ upper = 0 for a consecutive boundary pair.
void check_boundary_pair(const SparseIntMatrix& lower, const SparseIntMatrix& upper) {
  if (lower.cols != upper.rows)
    throw std::logic_error("boundary matrices have mismatched dimensions");
  std::map<int, std::int64_t> acc;
  for (int j = 0; j < upper.cols; ++j) {
    acc.clear();
    for (const auto& [mid, v] : upper.col[j])
      for (const auto& [r, w] : lower.col[mid]) acc[r] += v * w;
    for (const auto& [r, s] : acc)
      if (s != 0) throw std::logic_error("boundary composition is nonzero");
  }
}

int skeleton_components(const SimplicialComplex& c) {
  std::vector<int> parent(c.vertex_slots());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : c.faces(1)) {
    const int a = find(e[0]), b = find(e[1]);
    if (a != b) parent[a] = b;
  }
  std::set<int> roots;
  for (const auto& f : c.faces(0)) roots.insert(find(f[0]));
  return static_cast<int>(roots.size());
}

// Rank of the boundary map out of dimension k, with its torsion invariants.
// The vertex and edge maps have unit invariants (the edge map is a signed
// graph incidence matrix), so their ranks come from counting components.
std::int64_t boundary_rank(const SimplicialComplex& c, int k, const SparseIntMatrix& bd,
                           std::vector<std::int64_t>* torsion) {
  if (torsion) torsion->clear();
  if (k == 0) return c.face_count(0) > 0 ? 1 : 0;
  if (k == 1) return c.face_count(0) - skeleton_components(c);
  SnfSummary s = smith_normal_form(bd);
  if (torsion) *torsion = s.nonunit();
  return s.rank;
}

}  // namespace

SnfSummary smith_normal_form(const SparseIntMatrix& a) {
  if (a.rows < 0 || a.cols < 0 || static_cast<int>(a.col.size()) != a.cols)
    throw std::invalid_argument("smith_normal_form: malformed matrix");
  if (static_cast<std::size_t>(a.rows) * static_cast<std::size_t>(a.cols) < 10000)
    return dense_snf(a);
  return sparse_snf(a);
}

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& c, int max_dim,
                                            std::size_t face_guard) {
  if (max_dim < -1) throw std::invalid_argument("reduced_homology: max_dim must be >= -1");
  std::vector<HomologyGroup> out(static_cast<std::size_t>(max_dim + 2));
  if (c.is_void()) return out;
  if (c.total_faces() > face_guard)
    throw guard_error("reduced_homology: face guard exceeded");
  if (!c.complete() && c.dim() < max_dim + 1)
    throw std::invalid_argument("reduced_homology: complex truncated below max_dim + 1");

  const int top = max_dim + 1;
  std::vector<SparseIntMatrix> bd(top + 1);
  for (int d = 0; d <= top; ++d) bd[d] = boundary_matrix(c, d);
  for (int d = 0; d < top; ++d) check_boundary_pair(bd[d], bd[d + 1]);

  std::vector<std::int64_t> rank(top + 1, 0);
  std::vector<std::vector<std::int64_t>> torsion(top + 1);
  for (int d = 0; d <= top; ++d) rank[d] = boundary_rank(c, d, bd[d], &torsion[d]);

  for (int d = -1; d <= max_dim; ++d) {
    HomologyGroup& g = out[d + 1];
    const std::int64_t faces_d = d == -1 ? 1 : c.face_count(d);
    const std::int64_t below = d == -1 ? 0 : rank[d];
    g.rank = faces_d - below - rank[d + 1];
    g.torsion = torsion[d + 1];
    if (g.rank < 0) throw std::logic_error("reduced_homology: negative Betti number");
  }
  return out;
}

ConnHResult conn_h(const SimplicialComplex& c, int cap, std::size_t face_guard) {
  if (cap < -1) throw std::invalid_argument("conn_h: cap must be >= -1");
  ConnHResult res;
  res.cap = cap;
  if (c.is_void()) {
    res.value = ConnValue(-2);
    return res;
  }
  if (c.total_faces() > face_guard) throw guard_error("conn_h: face guard exceeded");

  SparseIntMatrix below;
  std::int64_t rank_below = 0;
  bool have_below = false;
  for (int d = -1; d <= cap; ++d) {
    if (!c.complete() && c.dim() < d + 1)
      throw std::invalid_argument("conn_h: complex truncated inside the scan window");
    SparseIntMatrix up = boundary_matrix(c, d + 1);
    if (have_below) check_boundary_pair(below, up);
    std::vector<std::int64_t> torsion;
    const std::int64_t rank_up = boundary_rank(c, d + 1, up, &torsion);
    const std::int64_t faces_d = d == -1 ? 1 : c.face_count(d);
    const std::int64_t beta = faces_d - rank_below - rank_up;
    if (beta < 0) throw std::logic_error("conn_h: negative Betti number");
    if (beta != 0 || !torsion.empty()) {
      res.value = ConnValue(d - 1);
      return res;
    }
    below = std::move(up);
    rank_below = rank_up;
    have_below = true;
  }
  res.value = ConnValue::infinity();
  // A fully scanned complete complex is exactly acyclic; otherwise the
  // infinity only means "no obstruction up to the cap".
  res.complete = c.complete() && cap >= c.dim();
  return res;
}

ConnHResult conn_h_independence(const SimpleGraph& g, int cap, std::size_t face_guard) {
  if (cap < -1) throw std::invalid_argument("conn_h_independence: cap must be >= -1");
  ConnHResult res;
  res.cap = cap;
  if (g.has_isolated_vertex()) {
    // The independence complex is a cone over the isolated vertex, hence
    // contractible: exactly no obstruction in any dimension.
    res.value = ConnValue::infinity();
    return res;
  }
  return conn_h(independence_complex(g, cap + 1, face_guard), cap, face_guard);
}

}  // namespace ryserlab

#ifndef RYSERLAB_HOMOLOGY_HPP
#define RYSERLAB_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "ryserlab/conn_value.hpp"
#include "ryserlab/simplicial_complex.hpp"

namespace ryserlab {

// Column-major sparse integer matrix.  At most one entry per cell; entry
// order within a column is not significant.
struct SparseIntMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> col;

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), col(c) {}
  void add_entry(int r, int c, std::int64_t v);
  std::size_t entry_count() const;
};

// Diagonal summary of the Smith normal form: the rank and the invariant
// factors (canonical divisibility chain, absolute values, unit entries
// included).  Transforms are not kept.
struct SnfSummary {
  int rank = 0;
  std::vector<std::int64_t> invariants;
  std::vector<std::int64_t> nonunit() const;
};

// Integer Smith normal form by alternating row/column elimination.  Pivot
// selection: smallest absolute value, ties toward the smallest (row, column)
// pair, for reproducible runs.  Dense elimination under 10^4 entries, sparse
// elimination above.  Throws std::overflow_error instead of wrapping.
SnfSummary smith_normal_form(const SparseIntMatrix& a);

// One reduced homology group H~_d = Z^rank ⊕ (torsion cyclic factors).
struct HomologyGroup {
  std::int64_t rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1, ascending
  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

// Reduced integral homology in dimensions -1..max_dim (index 0 of the result
// is H~_{-1}).  The empty face is the generator in dimension -1, so the empty
// complex {∅} has H~_{-1} = Z and the void complex has no homology at all.
// Faces up to dimension max_dim+1 must be materialized unless the complex is
// complete.  The boundary-of-boundary identity is verified on every call.
// Throws guard_error when the complex holds more than face_guard faces.
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& c, int max_dim,
                                            std::size_t face_guard = std::size_t(1) << 20);

// Homological connectedness scan: value = min{ i : H~_i(c) != 0 } - 1,
// scanning i in [-1, cap].
//  * complete == true: `value` is exact.  This covers obstructions found in
//    the window and fully scanned acyclic complexes (value = +inf).
//  * complete == false: no obstruction up to the cap but the complex goes on;
//    `value` is +inf as a ">= cap" marker only.
struct ConnHResult {
  ConnValue value;
  bool complete = true;
  int cap = 0;
};
ConnHResult conn_h(const SimplicialComplex& c, int cap,
                   std::size_t face_guard = std::size_t(1) << 20);

// Convenience: connectedness window of the independence complex of a graph.
// Shortcut: a graph with an isolated vertex has a cone independence complex,
// reported as exactly +inf.  face_guard bounds the materialized complex.
ConnHResult conn_h_independence(const SimpleGraph& g, int cap,
                                std::size_t face_guard = std::size_t(1) << 20);

}  // namespace ryserlab

#endif  // RYSERLAB_HOMOLOGY_HPP

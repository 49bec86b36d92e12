#ifndef RYSERLAB_ENUMERATE_HPP
#define RYSERLAB_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ryserlab/bipartite_graph.hpp"
#include "ryserlab/simple_graph.hpp"
#include "ryserlab/three_graph.hpp"

namespace ryserlab {

// Exhaustive enumeration of small instances, one representative per
// isomorphism class, together with the canonical forms that define them.
// All enumerators are deterministic: same arguments, same sequence.

// Bipartite multigraphs -----------------------------------------------------
//
// A graph with |A| = a and |B| = b is its a-by-b multiplicity matrix.  The
// canonical matrix is the lexicographically smallest row-major entry
// sequence over row permutations, column permutations, and, when a == b,
// the transpose.  The key serializes sizes and the canonical entries, so
// two graphs share a key exactly when they are isomorphic (classes swap
// only between equal-sized sides).  Guard: the minimization enumerates the
// smaller side's permutations, and that side must have at most perm_guard
// vertices (guard_error).
std::string bipartite_canonical_key(const BipartiteMultigraph& g, int perm_guard = 8);

// The graph rebuilt from the canonical matrix: names a0.., b0.., edges in
// row-major order with parallel copies adjacent.  Idempotent.
BipartiteMultigraph bipartite_canonical_form(const BipartiteMultigraph& g, int perm_guard = 8);

// All canonical graphs with exactly the given class sizes and per-pair
// multiplicity at most max_mult, in the order the candidate scan finds
// them.  Guard: a * b * max(1, max_mult) <= guard (guard_error).
std::vector<BipartiteMultigraph> enumerate_bipartite(int a, int b, int max_mult, int guard = 32);

// Simple graphs -------------------------------------------------------------
//
// The canonical labeling minimizes the bit sequence that lists, for each
// vertex in placement order, its adjacency to the previously placed
// vertices.  Packed into a 64-bit word (vertex count at most 11,
// guard_error beyond), most significant bit first, so numeric order on keys
// is lexicographic order on bit sequences.  Vertex labels are ignored:
// canonicalization is purely structural.
std::uint64_t simple_canonical_bits(const SimpleGraph& g, int guard = 11);

// The graph relabeled by the minimizing placement.  Idempotent up to
// labels (which become 0..n-1).
SimpleGraph simple_canonical_form(const SimpleGraph& g, int guard = 11);

// All canonical graphs on exactly n vertices, ascending by canonical bits.
std::vector<SimpleGraph> enumerate_simple(int n, int guard = 9);

// Streaming variant: builds the levels below n in memory but emits the
// n-vertex graphs one at a time, for universes too large to hold at once.
// Emission order is deterministic (parents in enumeration order, extension
// masks ascending) but not sorted by key.
void for_each_simple(int n, const std::function<void(const SimpleGraph&)>& emit, int guard = 9);

// 3-partite 3-graphs --------------------------------------------------------
//
// Canonical form: the lexicographically smallest sorted edge list over
// class-preserving vertex permutations (classes never swap).  Guard: the
// product of the class factorials must stay within perm_budget
// (guard_error).
std::string three_canonical_key(const ThreePartiteHypergraph& h,
                                std::int64_t perm_budget = 500'000);

// Rebuilt from the canonical edge list with names x0.., y0.., z0..;
// idempotent up to names.
ThreePartiteHypergraph three_canonical_form(const ThreePartiteHypergraph& h,
                                            std::int64_t perm_budget = 500'000);

// All canonical 3-graphs with exactly the given class sizes, per-triple
// multiplicity at most max_mult, and at most max_edges hyperedges counted
// with multiplicity.  candidate_guard bounds the number of candidate edge
// lists scanned (guard_error).
std::vector<ThreePartiteHypergraph> enumerate_three(int n1, int n2, int n3, int max_edges,
                                                    int max_mult = 2,
                                                    std::int64_t candidate_guard = 5'000'000);

}  // namespace ryserlab

#endif  // RYSERLAB_ENUMERATE_HPP

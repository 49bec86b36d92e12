#ifndef RYSERLAB_PSI_HPP
#define RYSERLAB_PSI_HPP

// Edge deletion and explosion, the psi recursion that bounds the
// connectedness of the independence complex from below, and the
// decouplable/explodable classification with M-reduction on top of the
// windowed oracle.

#include <cstdint>

#include "ryserlab/conn_oracle.hpp"
#include "ryserlab/conn_value.hpp"
#include "ryserlab/matching.hpp"
#include "ryserlab/simple_graph.hpp"

namespace ryserlab {

// Same vertex set with the edge uv removed.  Throws std::invalid_argument
// if uv is not an edge.
SimpleGraph delete_edge(const SimpleGraph& h, int u, int v);

// Induced subgraph on the vertices outside N[u] ∪ N[v] (the edge uv
// "exploded"): both endpoints and all their neighbors disappear.  Throws
// std::invalid_argument if uv is not an edge.
SimpleGraph explode_edge(const SimpleGraph& h, int u, int v);

struct PsiStats {
  std::int64_t nodes = 0;  // recursion nodes expanded (memo misses)
  std::int64_t memo_hits = 0;
};

// psi(H): -2 on the void graph, +infinity when the vertex set is nonempty
// but no edge exists, and otherwise
//
//   max over edges e of min{ psi(H - e), psi(H ⋇ e) + 1 }.
//
// Exact, memoized on the surviving-edge set.  Throws budget_error once more
// than `budget` nodes have been expanded, and guard_error when the graph has
// more edges than the memo key can hold.
ConnValue psi(const SimpleGraph& h, std::int64_t budget = 50'000'000,
              PsiStats* stats = nullptr);

// Decides psi(h) >= t without computing the full value: a backtracking
// search for one witnessing edge per level instead of a maximum over all of
// them, with the recursion cut off at t <= -1 (any nonempty graph passes).
// Far cheaper than psi on dense graphs when t is small; exact, never
// inconclusive.  Same budget and guard behavior as psi.
bool psi_at_least(const SimpleGraph& h, ConnValue t, std::int64_t budget = 50'000'000,
                  PsiStats* stats = nullptr);

// Edge uv of J is decouplable when conn(J - uv) <= conn(J), and explodable
// when conn(J ⋇ uv) <= conn(J) - 1, judged from window results; when the
// windows cannot separate the two sides the answer is inconclusive.
Tristate is_decouplable(const SimpleGraph& j, int u, int v, const ConnOracle& oracle);
Tristate is_explodable(const SimpleGraph& j, int u, int v, const ConnOracle& oracle);

// Repeatedly deletes the lexicographically smallest decouplable edge until
// none remains.  The matching M is given by base-edge ids that must all
// appear among J's vertex labels, and the window must refute
// conn(J) > |M|/2 - 2 up front; deletion never increases the
// connectedness, so the precondition survives the run.  Throws
// inconclusive_error if some edge cannot be classified within the window.
SimpleGraph m_reduce(const SimpleGraph& j, const Matching& m, const ConnOracle& oracle);

// Same with the default window cap |M|/2.
SimpleGraph m_reduce(const SimpleGraph& j, const Matching& m);

}  // namespace ryserlab

#endif  // RYSERLAB_PSI_HPP

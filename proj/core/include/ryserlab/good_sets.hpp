#ifndef RYSERLAB_GOOD_SETS_HPP
#define RYSERLAB_GOOD_SETS_HPP

#include <optional>
#include <vector>

#include "ryserlab/bipartite_graph.hpp"
#include "ryserlab/conn_oracle.hpp"
#include "ryserlab/matching.hpp"

namespace ryserlab {

// Distinguished vertex sets of one class of a bipartite multigraph.  A set is
// "decent" when its neighborhood is small, the matching number is exactly
// what the set and its complement force, and every edge leaving the set is
// usable by a maximum matching; it is "good" when, additionally, cutting each
// neighbor off from the rest of the class strictly raises the connectedness
// of the independence complex of the line graph.  Good sets are the handle by
// which an extremal graph is either shrunk or shown to be a union of
// four-cycles.

// A subset of one vertex class.  side 0 is class A, side 1 is class B;
// vertices are indices into that class, strictly ascending.
struct VertexSubset {
  int side = 1;
  std::vector<int> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  bool operator==(const VertexSubset&) const = default;
};

// Vertices of the opposite class adjacent to x, ascending.  Parallel edges
// count once: the neighborhood is a vertex set.  Throws std::invalid_argument
// when x is not a strictly ascending subset of its declared class.
std::vector<int> neighborhood(const BipartiteMultigraph& g, const VertexSubset& x);

// Nonempty with exactly as many neighbors as members.
bool is_equineighbored(const BipartiteMultigraph& g, const VertexSubset& x);

// The three decency conditions for a set X in class B (side 0 swaps the
// roles): (1) |N(X)| <= |X|; (2) nu(G) = |N(X)| + |B \ X|; (3) every edge xy
// with x in X lies in some maximum matching, decided by the drop criterion
// nu(G - x - y) = nu(G) - 1.  The empty set is decent exactly when
// nu(G) = |B|, conditions (1) and (3) being vacuous.
bool is_decent(const BipartiteMultigraph& g, const VertexSubset& x);

// Vertices of the seed class lying on some m-alternating path that starts at
// a seed with a non-matching edge (the seeds themselves included).  Walks
// leave the seed class through non-matching edges and return through matching
// edges, so for unsaturated seeds this is plain alternating reachability.
// Empty seeds yield the empty set.  Throws std::invalid_argument when m is
// not a matching or the seeds are malformed.
VertexSubset alternating_closure(const BipartiteMultigraph& g, const Matching& m,
                                 const VertexSubset& seeds);

// The alternating closure of the m-unsaturated vertices of the given class,
// for a maximum matching m.  The result is always decent and has exactly
// |X| - #seeds neighbors; with no unsaturated vertex it is empty.  Throws
// std::invalid_argument when m is not a maximum matching of g.
VertexSubset decent_from_matching(const BipartiteMultigraph& g, const Matching& m, int side = 1);

// All equineighbored subsets of one class, or only the inclusion-minimal
// ones, ordered by size and then lexicographically.  Enumeration is over all
// subsets, so the class size is guarded (guard_error beyond class_guard).
// When g has a perfect matching the full class is checked to be itself
// equineighbored (std::logic_error otherwise  -  it always is).
std::vector<VertexSubset> equineighbored_sets(const BipartiteMultigraph& g, int side,
                                              bool minimal_only, int class_guard = 16);

// One neighbor's contribution to a goodness check: the window result for the
// line graph after the edges from y to the rest of the class are removed, and
// whether its connectedness sits strictly above the base value.
struct GoodSetNeighborCheck {
  int y = 0;              // neighbor, an index of the opposite class
  int removed_edges = 0;  // edges from y to vertices outside the set
  ConnHResult stripped;
  Tristate increased = Tristate::kInconclusive;
};

// Full report of a goodness check.  `good` is kTrue when the set is decent,
// nonempty, and every neighbor check certifies a strict increase; one
// certified non-increase makes it kFalse; otherwise an undecided window makes
// it kInconclusive.  A neighbor with nothing to remove can never increase the
// connectedness and decides kFalse outright, so a kTrue verdict implies every
// neighbor lost at least one edge.  The empty set is never good: its
// neighbor condition would hold vacuously, and the convention here is to
// reject rather than accept vacuously.  For a non-decent set no oracle call
// is made and `checks` stays empty.
struct GoodSetCheck {
  bool decent = false;
  ConnHResult base;  // window result for the line graph of g itself
  std::vector<GoodSetNeighborCheck> checks;
  Tristate good = Tristate::kFalse;
};

GoodSetCheck check_good(const BipartiteMultigraph& g, const VertexSubset& x,
                        const ConnOracle& oracle);

// Just the verdict of check_good.
Tristate is_good(const BipartiteMultigraph& g, const VertexSubset& x, const ConnOracle& oracle);

// Searches both classes for a good set of a graph with even matching number
// nu = 2k whose line-graph independence complex has connectedness exactly
// k - 2 (std::invalid_argument when nu is odd or the oracle refutes the
// threshold, inconclusive_error when its window cannot certify it).
// Candidates are tried in the order that finds witnesses early: the
// alternating closures of the unsaturated vertices, then the minimal
// equineighbored sets, then all subsets ascending by size (class_guard as in
// equineighbored_sets); class B is tried before class A throughout.  Returns
// the first good set found.  When no candidate is good the theory pins the
// graph down, and both consequences are asserted before nullopt is returned
// (std::logic_error on failure): g has a perfect matching, and every minimal
// equineighbored set has two vertices whose neighborhood is two vertices
// joined to both - a four-cycle, possibly with parallel edges.  A candidate
// that stays inconclusive inside the window makes a "none" answer
// uncertifiable: inconclusive_error.
std::optional<VertexSubset> find_good_set(const BipartiteMultigraph& g, const ConnOracle& oracle,
                                          int class_guard = 16);

}  // namespace ryserlab

#endif  // RYSERLAB_GOOD_SETS_HPP

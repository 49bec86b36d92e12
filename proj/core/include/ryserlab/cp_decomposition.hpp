#ifndef RYSERLAB_CP_DECOMPOSITION_HPP
#define RYSERLAB_CP_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ryserlab/bipartite_graph.hpp"
#include "ryserlab/conn_oracle.hpp"
#include "ryserlab/matching.hpp"
#include "ryserlab/simple_graph.hpp"

namespace ryserlab {

// Certificates that explain an extremal matching structure: a base graph G is
// covered by vertex-disjoint four-cycles and four-vertex paths, each built
// around two matching edges.  Throughout, J is a subgraph of line_graph(G)
// whose vertex labels are edge ids of G; "J-adjacent" means joined by an edge
// of J.

// One block of a decomposition.  `edges` lists base-graph edge ids in cycle
// order (four edges, matching edges opposite) or path order (three edges,
// matching edges at the ends).  The spanned vertices are derived from the
// edges; see block_vertices.
struct CPBlock {
  enum class Kind { kC4, kP4 };

  Kind kind = Kind::kC4;
  std::vector<int> edges;
  std::vector<int> m_edges;  // the two matching edge ids among `edges`

  bool operator==(const CPBlock&) const = default;
};

struct CPDecomposition {
  std::vector<CPBlock> blocks;

  bool operator==(const CPDecomposition&) const = default;

  // JSON shape: {"blocks":[{"kind":"C4"|"P4","vertices":[names],
  // "edges":[ids],"mEdges":[ids]}]}.  The vertex names are redundant (they
  // are derived from the edges) and are emitted for readability; the parser
  // rejects a file whose names contradict its edges.
  static CPDecomposition from_json_string(const std::string& text, const BipartiteMultigraph& g);
  std::string to_json_string(const BipartiteMultigraph& g) const;
};

// Vertices spanned by a block, in cycle order (kC4) or path order (kP4).
// Each vertex is (side, index) with side 0 for class A and 1 for class B.
// Throws std::invalid_argument when the edges do not chain into the stated
// shape on four distinct vertices.
std::vector<std::pair<int, int>> block_vertices(const BipartiteMultigraph& g, const CPBlock& blk);

// Outcome of verify_cp.  `ok` is true exactly when `violations` is empty;
// each violation names the offending block or edge and the property it
// breaks: (1) four-cycle blocks, (2) path blocks, (3) coverage of V(J).
struct CPVerdict {
  bool ok = false;
  std::vector<std::string> violations;
};

// Checks a claimed decomposition of J with respect to M: every block is a
// well-formed four-cycle or path with its two matching edges placed as
// stated and all intersecting block edges J-adjacent (1)(2); blocks are
// pairwise vertex-disjoint and their matching edges partition M; and every
// vertex label of J is equal or parallel to a cycle-block edge or at home in
// a path block (3).  An edge is at home in a path when it touches one of the
// two interior vertices and is J-adjacent to some edge of the path.  Returns
// a verdict rather than throwing; only a malformed instance (M not a
// matching of G, or M not inside the labels of J) throws.
CPVerdict verify_cp(const BipartiteMultigraph& g, const SimpleGraph& j, const Matching& m,
                    const CPDecomposition& d);

// Exhaustive backtracking search for a decomposition of J with respect to M,
// or nullopt when none exists.  Matching edges are paired in ascending id
// order; for each pair the four-cycle completions are tried before the path
// completions; a branch is cut as soon as some label of J can no longer be
// covered by any block a future pair could build.  Because every block spans
// exactly the four endpoints of its two matching edges, the search space is
// complete and nullopt is a proof of nonexistence.  Throws
// std::invalid_argument when |M| is odd or M is not a matching inside the
// labels of J.
std::optional<CPDecomposition> find_cp(const BipartiteMultigraph& g, const SimpleGraph& j,
                                       const Matching& m);

// Matching edges reachable by alternating walks: the ids of every edge of M
// lying on some M-alternating path of G that starts with the matching edge
// `m_id`, continues with `e_id`, and uses only edges that are labels of J.
// Edges along the path need not be J-adjacent.
struct AlternatingReach {
  std::vector<int> reached;  // ascending; always contains the seed m_id

  bool contains(int id) const;
};

// Enumerates the alternating paths by depth-first search with backtracking.
// Preconditions (std::invalid_argument otherwise): m_id is in M, e_id is a
// label of J outside M, the two edges share exactly one endpoint, and every
// edge of M is a label of J.
AlternatingReach reach(const BipartiteMultigraph& g, const SimpleGraph& j, const Matching& m,
                       int m_id, int e_id);

// Exchanges the matching along an alternating four-cycle m, e, m2, f (in
// cycle order, m and m2 in M): returns M with m and m2 replaced by e and f.
// The result is again a matching of the same size, and applying the switch
// to the result restores M.  Throws std::invalid_argument when the four
// edges do not form such a cycle.
Matching c4_switch(const BipartiteMultigraph& g, const Matching& m, int m_id, int e_id, int m2_id,
                   int f_id);

// Verdict of check_characterization.  The two certificates are expected to
// agree: the homology window certifies the connectedness threshold and the
// block search certifies the structural side.
struct ExtremalityReport {
  int nu = 0;              // matching number of the graph
  bool applicable = false;  // the threshold nu/2 - 2 needs an even nu

  // Window result for the independence complex of the line graph, cap
  // nu/2 - 1.  Valid only when applicable.
  ConnHResult conn;

  // Is the connectedness of that complex exactly nu/2 - 2?  A homology
  // obstruction inside the window decides kTrue/kFalse outright, because
  // connectedness is bounded below by the homology threshold and above by
  // nu/2 - 2 whenever the threshold is attained.  An empty window decides
  // kFalse except when nu == 4: there the threshold sits at dimension zero,
  // where a fundamental-group obstruction can hide from homology, so the
  // verdict is kInconclusive.
  Tristate extremal = Tristate::kInconclusive;

  bool cp_found = false;  // did find_cp succeed for a maximum matching?
  std::optional<CPDecomposition> decomposition;

  // True when the two verdicts agree (vacuously true if extremal is
  // kInconclusive).  Disagreement would contradict the theory this
  // workbench cross-checks and should be reported.
  bool agree = false;
};

// Computes the matching number, the connectedness window, and the block
// search for one graph, and compares the two verdicts.  Graphs with an odd
// matching number are reported as not applicable and nothing else is
// computed.  Size guards of line_graph and the homology engine propagate.
ExtremalityReport check_characterization(const BipartiteMultigraph& g,
                                         std::size_t face_guard = std::size_t(1) << 20);

}  // namespace ryserlab

#endif  // RYSERLAB_CP_DECOMPOSITION_HPP

#ifndef RYSERLAB_MATCHING_HPP
#define RYSERLAB_MATCHING_HPP

#include <cstddef>
#include <vector>

#include "ryserlab/bipartite_graph.hpp"
#include "ryserlab/three_graph.hpp"

namespace ryserlab {

// A matching is a set of edge ids of its host graph, pairwise sharing no
// vertex.  Stored ascending by id.
struct Matching {
  std::vector<int> edge_ids;
  int size() const { return static_cast<int>(edge_ids.size()); }
  bool operator==(const Matching&) const = default;
};

bool is_matching(const BipartiteMultigraph& g, const std::vector<int>& edge_ids);

// Maximum matching by augmenting paths.  Deterministic: A-vertices are
// processed in order and edges are tried ascending by id, so ties always
// resolve toward the lowest edge id.
Matching max_matching(const BipartiteMultigraph& g);

// B-vertices missed by m.
std::vector<int> unsaturated_b(const BipartiteMultigraph& g, const Matching& m);
std::vector<int> unsaturated_a(const BipartiteMultigraph& g, const Matching& m);

// Minimum vertex cover (a-side indices, b-side indices) built from a maximum
// matching by alternating reachability.
struct VertexCover {
  std::vector<int> a_side, b_side;
  int size() const { return static_cast<int>(a_side.size() + b_side.size()); }
};
VertexCover min_vertex_cover(const BipartiteMultigraph& g);

// Cover number; checked internally against the matching number, which must
// agree for bipartite graphs.
int vertex_cover_number(const BipartiteMultigraph& g);

// All maximum matchings up to parallel-edge choice: each distinct set of
// endpoint pairs is reported once, realized with the lowest usable edge ids.
// Throws guard_error if more than `cap` matchings exist.
std::vector<Matching> all_maximum_matchings(const BipartiteMultigraph& g, std::size_t cap = 100000);

// Exact solvers for 3-partite 3-graphs (branch and bound).  Both reject
// hypergraphs with more than `max_vertices` vertices.
struct SolveLimits {
  int max_vertices = 24;
};
int matching_number(const ThreePartiteHypergraph& h, const SolveLimits& limits = {});
int vertex_cover_number(const ThreePartiteHypergraph& h, const SolveLimits& limits = {});

}  // namespace ryserlab

#endif  // RYSERLAB_MATCHING_HPP

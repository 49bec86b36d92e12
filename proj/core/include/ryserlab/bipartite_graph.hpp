#ifndef RYSERLAB_BIPARTITE_GRAPH_HPP
#define RYSERLAB_BIPARTITE_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "ryserlab/simple_graph.hpp"

namespace ryserlab {

// Bipartite multigraph with two named vertex classes A and B.  Parallel
// edges are first-class: every edge has a dense id (its position in the edge
// list) and several edges may share the same endpoint pair.  Vertex names
// are opaque strings at the API surface and dense indices internally;
// iteration order is always input order.
class BipartiteMultigraph {
 public:
  BipartiteMultigraph() = default;
  BipartiteMultigraph(std::vector<std::string> class_a, std::vector<std::string> class_b);

  int a_size() const { return static_cast<int>(a_names_.size()); }
  int b_size() const { return static_cast<int>(b_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& a_name(int a) const { return a_names_[a]; }
  const std::string& b_name(int b) const { return b_names_[b]; }
  const std::vector<std::string>& a_names() const { return a_names_; }
  const std::vector<std::string>& b_names() const { return b_names_; }
  int a_index(const std::string& name) const;  // -1 if absent
  int b_index(const std::string& name) const;

  // Appends an edge and returns its id.
  int add_edge(int a, int b);

  // Endpoints (a index, b index) of an edge id.
  std::pair<int, int> edge(int id) const { return edges_[id]; }
  const std::vector<std::pair<int, int>>& edge_list() const { return edges_; }

  int multiplicity(int a, int b) const;
  // Ids of all edges with the given endpoints, ascending.
  std::vector<int> edges_between(int a, int b) const;
  std::vector<int> edges_at_a(int a) const;
  std::vector<int> edges_at_b(int b) const;
  int degree_a(int a) const;
  int degree_b(int b) const;

  // New graph with the given edge ids removed (vertices kept).  Remaining
  // edges are renumbered densely in the original order.
  BipartiteMultigraph without_edges(const std::vector<int>& ids) const;

  // New graph with one vertex of each class removed together with all
  // incident edges (the matching-number drop probe).
  BipartiteMultigraph without_vertex_pair(int a, int b) const;

  // Serialization: {"classA":[...],"classB":[...],"edges":[["a","b"],...]},
  // repeated edge entries encode multiplicity.  Emission is compact JSON
  // with exactly this field order, so round trips are byte-stable.
  static BipartiteMultigraph from_json_string(const std::string& text);
  std::string to_json_string() const;

  bool operator==(const BipartiteMultigraph&) const = default;

 private:
  std::vector<std::string> a_names_, b_names_;
  std::vector<std::pair<int, int>> edges_;
};

// Line graph: one vertex per edge id of g, adjacent iff the edges share an
// endpoint in g.  Parallel edges of g share both endpoints, so they are
// adjacent; no vertex is adjacent to itself.  Vertex labels are edge ids.
SimpleGraph line_graph(const BipartiteMultigraph& g);

}  // namespace ryserlab

#endif  // RYSERLAB_BIPARTITE_GRAPH_HPP

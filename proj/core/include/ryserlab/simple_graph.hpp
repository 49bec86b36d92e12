#ifndef RYSERLAB_SIMPLE_GRAPH_HPP
#define RYSERLAB_SIMPLE_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "ryserlab/bits.hpp"

namespace ryserlab {

// Undirected simple graph on dense vertex positions 0..n-1 with bitset
// adjacency (no loops, no parallel edges).  Every vertex carries an integer
// label that survives vertex-removing operations: line graphs label their
// vertices with the edge ids of the base multigraph, so a subgraph of a line
// graph still knows which base edges its vertices are.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = Bits128::capacity();

  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, std::vector<int> labels);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;

  int label(int v) const { return labels_[v]; }
  const std::vector<int>& labels() const { return labels_; }
  // Position of the vertex with the given label, or -1.
  int position_of_label(int lab) const;

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  const Bits128& adj(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  bool has_isolated_vertex() const;

  // Edges as (u, v) position pairs with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Induced subgraph on the vertices in `keep` (positions); labels carried
  // over, positions renumbered densely in increasing order.
  SimpleGraph induced(const Bits128& keep) const;

  // Same vertex set, one edge removed.
  SimpleGraph without_edge(int u, int v) const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::vector<Bits128> adj_;
  std::vector<int> labels_;
};

}  // namespace ryserlab

#endif  // RYSERLAB_SIMPLE_GRAPH_HPP

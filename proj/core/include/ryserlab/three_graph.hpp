#ifndef RYSERLAB_THREE_GRAPH_HPP
#define RYSERLAB_THREE_GRAPH_HPP

#include <array>
#include <string>
#include <vector>

#include "ryserlab/bipartite_graph.hpp"
#include "ryserlab/simple_graph.hpp"

namespace ryserlab {

// 3-partite 3-uniform multi-hypergraph: three named vertex classes and a
// list of hyperedges, each taking one vertex from every class.  Edge ids are
// positions in the edge list; repeated triples encode multiplicity.
class ThreePartiteHypergraph {
 public:
  struct Triple {
    int v[3];  // index into class 0, 1, 2
    bool operator==(const Triple&) const = default;
  };

  ThreePartiteHypergraph() = default;
  ThreePartiteHypergraph(std::vector<std::string> v1, std::vector<std::string> v2,
                         std::vector<std::string> v3);

  int class_size(int cls) const { return static_cast<int>(names_[cls].size()); }
  const std::vector<std::string>& class_names(int cls) const { return names_[cls]; }
  const std::string& name(int cls, int v) const { return names_[cls][v]; }
  int index(int cls, const std::string& name) const;  // -1 if absent
  int vertex_count() const;

  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Triple& edge(int id) const { return edges_[id]; }
  const std::vector<Triple>& edge_list() const { return edges_; }
  int add_edge(int x, int y, int z);  // returns the new edge id
  int multiplicity(int x, int y, int z) const;

  // {"V1":[...],"V2":[...],"V3":[...],"edges":[["x","y","z"],...]} with
  // byte-stable compact emission.
  static ThreePartiteHypergraph from_json_string(const std::string& text);
  std::string to_json_string() const;

  bool operator==(const ThreePartiteHypergraph&) const = default;

 private:
  std::array<std::vector<std::string>, 3> names_;
  std::vector<Triple> edges_;
};

// Link of a subset S of class `cls`: a bipartite multigraph on the two other
// classes (the lower-numbered class becomes side A).  A hyperedge contributes
// the pair it induces on those classes iff its `cls`-vertex lies in S.  Each
// link edge remembers the hyperedge it came from, and in particular the
// omitted-class vertex of that hyperedge (the natural edge coloring).
struct LinkGraph {
  BipartiteMultigraph graph;
  std::vector<int> source_edge;   // link edge id -> hyperedge id
  std::vector<int> color_vertex;  // link edge id -> vertex index in class `cls`
  int cls = 0;                    // the omitted class
};

LinkGraph link_graph(const ThreePartiteHypergraph& h, int cls, const std::vector<int>& subset);
// Link of the full class.
LinkGraph link_graph(const ThreePartiteHypergraph& h, int cls);

// Line graph of the hypergraph: vertices are hyperedge ids, adjacent iff the
// hyperedges share a vertex.  Parallel hyperedges are adjacent.
SimpleGraph line_graph(const ThreePartiteHypergraph& h);

}  // namespace ryserlab

#endif  // RYSERLAB_THREE_GRAPH_HPP

#ifndef RYSERLAB_SIMPLICIAL_COMPLEX_HPP
#define RYSERLAB_SIMPLICIAL_COMPLEX_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ryserlab/simple_graph.hpp"

namespace ryserlab {

// Abstract simplicial complex, stored as all faces grouped by dimension and
// sorted lexicographically.  The complex distinguishes the void complex (no
// faces at all) from the empty complex {∅}; the empty face is implicit in
// every non-void complex.  A complex may be truncated: faces above some
// dimension are not materialized, which is enough to compute homology below
// the truncation and is recorded in `complete()`.
class SimplicialComplex {
 public:
  using Face = std::vector<int>;  // vertex positions, strictly increasing

  // The void complex: no faces, realizing the empty space.
  static SimplicialComplex void_complex();
  // The empty complex {∅}: no vertices but the empty face present.
  static SimplicialComplex empty_complex();

  // Builds a complex from a downward-closed face list (the empty face is
  // implied).  Throws if closure is violated.  `n` is the number of vertex
  // slots; names default to decimal positions.
  static SimplicialComplex from_faces(int n, const std::vector<Face>& faces);

  bool is_void() const { return void_; }
  // True when every face of the underlying mathematical complex is
  // materialized (no truncation cut anything off).
  bool complete() const { return complete_; }

  int vertex_slots() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  void set_vertex_names(std::vector<std::string> names);

  // Largest materialized dimension; -1 for {∅}, -2 for void.
  int dim() const;
  // Faces of one dimension (d >= 0), sorted lexicographically.
  const std::vector<Face>& faces(int d) const;
  int face_count(int d) const;
  std::size_t total_faces() const;

  // Lexicographic index of a face in faces(d), or -1.
  int face_index(const Face& f) const;

  // Maximal materialized faces (no materialized proper superset), sorted.
  std::vector<Face> maximal_faces() const;
  // One maximal face per line, vertex names space-separated.
  void dump_maximal_faces(std::ostream& out) const;

 private:
  friend SimplicialComplex independence_complex(const SimpleGraph&, int, std::size_t);
  friend SimplicialComplex join(const SimplicialComplex&, const SimplicialComplex&);

  bool void_ = false;
  bool complete_ = true;
  std::vector<std::string> names_;
  std::vector<std::vector<Face>> by_dim_;  // by_dim_[d] = faces of dimension d
};

// Independence complex of a simple graph: faces are the independent vertex
// sets.  If max_dim >= -1 is given, faces are materialized only up to that
// dimension (the result knows whether anything was cut).  Throws guard_error
// when more than face_guard faces would be materialized.
SimplicialComplex independence_complex(const SimpleGraph& g, int max_dim = -2,
                                       std::size_t face_guard = std::size_t(1) << 20);

// Simplicial join: faces are disjoint unions of a face of c and a face of d,
// with d's vertices shifted past c's.  The void complex acts as the identity.
SimplicialComplex join(const SimplicialComplex& c, const SimplicialComplex& d);

}  // namespace ryserlab

#endif  // RYSERLAB_SIMPLICIAL_COMPLEX_HPP

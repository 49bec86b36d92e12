#include "ryserlab/simplicial_complex.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>
#include <stdexcept>

#include "ryserlab/errors.hpp"

namespace ryserlab {

SimplicialComplex SimplicialComplex::void_complex() {
  SimplicialComplex c;
  c.void_ = true;
  return c;
}

SimplicialComplex SimplicialComplex::empty_complex() { return SimplicialComplex{}; }

SimplicialComplex SimplicialComplex::from_faces(int n, const std::vector<Face>& faces) {
  SimplicialComplex c;
  c.names_.resize(n);
  for (int i = 0; i < n; ++i) c.names_[i] = std::to_string(i);
  std::set<Face> present;
  for (const auto& f : faces) {
    if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end())
      throw std::invalid_argument("SimplicialComplex: face not strictly increasing");
    for (int v : f)
      if (v < 0 || v >= n) throw std::invalid_argument("SimplicialComplex: vertex out of range");
    if (!f.empty()) present.insert(f);
  }
  for (const auto& f : present) {
    if (f.size() == 1) continue;
    for (std::size_t j = 0; j < f.size(); ++j) {
      Face sub = f;
      sub.erase(sub.begin() + j);
      if (!present.count(sub))
        throw std::invalid_argument("SimplicialComplex: face list not downward closed");
    }
  }
  for (const auto& f : present) {
    int d = static_cast<int>(f.size()) - 1;
    if (d >= static_cast<int>(c.by_dim_.size())) c.by_dim_.resize(d + 1);
    c.by_dim_[d].push_back(f);
  }
  return c;
}

int SimplicialComplex::dim() const {
  if (void_) return -2;
  return static_cast<int>(by_dim_.size()) - 1;
}

const std::vector<SimplicialComplex::Face>& SimplicialComplex::faces(int d) const {
  static const std::vector<Face> none;
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[d];
}

int SimplicialComplex::face_count(int d) const { return static_cast<int>(faces(d).size()); }

std::size_t SimplicialComplex::total_faces() const {
  std::size_t t = void_ ? 0 : 1;  // the empty face
  for (const auto& fs : by_dim_) t += fs.size();
  return t;
}

int SimplicialComplex::face_index(const Face& f) const {
  int d = static_cast<int>(f.size()) - 1;
  const auto& fs = faces(d);
  auto it = std::lower_bound(fs.begin(), fs.end(), f);
  if (it == fs.end() || *it != f) return -1;
  return static_cast<int>(it - fs.begin());
}

void SimplicialComplex::set_vertex_names(std::vector<std::string> names) {
  if (names.size() != names_.size())
    throw std::invalid_argument("SimplicialComplex: name count mismatch");
  names_ = std::move(names);
}

std::vector<SimplicialComplex::Face> SimplicialComplex::maximal_faces() const {
  std::vector<Face> out;
  if (void_) return out;
  for (int d = 0; d < static_cast<int>(by_dim_.size()); ++d) {
    const auto& above = faces(d + 1);
    for (const auto& f : by_dim_[d]) {
      bool covered = false;
      // f is non-maximal iff some (d+1)-face contains it.
      for (const auto& g : above) {
        if (covered) break;
        covered = std::includes(g.begin(), g.end(), f.begin(), f.end());
      }
      if (!covered) out.push_back(f);
    }
  }
  if (out.empty()) out.push_back({});  // {∅}: the empty face is maximal
  std::sort(out.begin(), out.end());
  return out;
}

void SimplicialComplex::dump_maximal_faces(std::ostream& out) const {
  for (const auto& f : maximal_faces()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out << ' ';
      out << names_[f[i]];
    }
    out << '\n';
  }
}

SimplicialComplex independence_complex(const SimpleGraph& g, int max_dim,
                                       std::size_t face_guard) {
  const int n = g.vertex_count();
  SimplicialComplex c;
  c.names_.resize(n);
  for (int v = 0; v < n; ++v) c.names_[v] = std::to_string(g.label(v));

  const bool capped = max_dim >= -1;
  const int max_size = capped ? max_dim + 1 : n;  // largest stored face size
  std::size_t count = 0;

  std::vector<int> cur;
  // DFS over independent sets in increasing vertex order.  `allowed` holds
  // the candidates: vertices after the last chosen one, non-adjacent to all
  // chosen ones.
  auto emit = [&](const std::vector<int>& f) {
    if (++count > face_guard)
      throw guard_error("independence_complex: face guard exceeded");
    int d = static_cast<int>(f.size()) - 1;
    if (d >= static_cast<int>(c.by_dim_.size())) c.by_dim_.resize(d + 1);
    c.by_dim_[d].push_back(f);
  };
  std::function<void(Bits128)> rec = [&](Bits128 allowed) {
    for (int v = allowed.find_first(); v >= 0; v = allowed.find_next(v + 1)) {
      cur.push_back(v);
      if (static_cast<int>(cur.size()) <= max_size) {
        emit(cur);
        Bits128 next = and_not(allowed, g.adj(v));
        next = and_not(next, Bits128::low_bits(v + 1));
        rec(next);
      } else {
        c.complete_ = false;  // a face beyond the cap exists; don't store it
      }
      cur.pop_back();
      if (static_cast<int>(cur.size()) + 1 > max_size && !c.complete_) return;
    }
  };
  if (max_size >= 1)
    rec(Bits128::low_bits(n));
  else
    c.complete_ = (n == 0);
  return c;
}

SimplicialComplex join(const SimplicialComplex& c, const SimplicialComplex& d) {
  // The void complex is treated as the join identity.
  if (c.is_void()) return d;
  if (d.is_void()) return c;
  if (!c.complete() || !d.complete())
    throw std::invalid_argument("join: requires fully materialized complexes");
  const int nc = c.vertex_slots(), nd = d.vertex_slots();
  SimplicialComplex out;
  out.names_.reserve(nc + nd);
  for (const auto& s : c.vertex_names()) out.names_.push_back("0:" + s);
  for (const auto& s : d.vertex_names()) out.names_.push_back("1:" + s);

  auto side_faces = [](const SimplicialComplex& x) {
    std::vector<SimplicialComplex::Face> fs;
    fs.push_back({});  // the empty face participates in unions
    for (int dim = 0; dim <= x.dim(); ++dim)
      for (const auto& f : x.faces(dim)) fs.push_back(f);
    return fs;
  };
  for (const auto& fc : side_faces(c))
    for (const auto& fd : side_faces(d)) {
      if (fc.empty() && fd.empty()) continue;
      SimplicialComplex::Face f = fc;
      for (int v : fd) f.push_back(v + nc);
      int dim = static_cast<int>(f.size()) - 1;
      if (dim >= static_cast<int>(out.by_dim_.size())) out.by_dim_.resize(dim + 1);
      out.by_dim_[dim].push_back(std::move(f));
    }
  for (auto& fs : out.by_dim_) std::sort(fs.begin(), fs.end());
  return out;
}

}  // namespace ryserlab

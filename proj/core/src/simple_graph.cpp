#include "ryserlab/simple_graph.hpp"

#include <numeric>
#include <stdexcept>

namespace ryserlab {

SimpleGraph::SimpleGraph(int n) : adj_(n), labels_(n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("SimpleGraph: bad vertex count");
  std::iota(labels_.begin(), labels_.end(), 0);
}

SimpleGraph::SimpleGraph(int n, std::vector<int> labels) : adj_(n), labels_(std::move(labels)) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("SimpleGraph: bad vertex count");
  if (static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("SimpleGraph: label count mismatch");
}

int SimpleGraph::edge_count() const {
  int total = 0;
  for (const auto& row : adj_) total += row.count();
  return total / 2;
}

int SimpleGraph::position_of_label(int lab) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (labels_[v] == lab) return v;
  return -1;
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("SimpleGraph: loop edge");
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("SimpleGraph: edge endpoint out of range");
  adj_[u].set(v);
  adj_[v].set(u);
}

bool SimpleGraph::has_isolated_vertex() const {
  for (const auto& row : adj_)
    if (row.none()) return true;
  return false;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v = adj_[u].find_next(u + 1); v >= 0; v = adj_[u].find_next(v + 1))
      out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::induced(const Bits128& keep) const {
  std::vector<int> pos;  // old positions kept, increasing
  for (int v = keep.find_first(); v >= 0; v = keep.find_next(v + 1))
    if (v < vertex_count()) pos.push_back(v);
  std::vector<int> labels;
  labels.reserve(pos.size());
  for (int v : pos) labels.push_back(labels_[v]);
  SimpleGraph g(static_cast<int>(pos.size()), std::move(labels));
  for (int i = 0; i < static_cast<int>(pos.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(pos.size()); ++j)
      if (has_edge(pos[i], pos[j])) g.add_edge(i, j);
  return g;
}

SimpleGraph SimpleGraph::without_edge(int u, int v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("SimpleGraph: edge not present");
  SimpleGraph g = *this;
  g.adj_[u].reset(v);
  g.adj_[v].reset(u);
  return g;
}

}  // namespace ryserlab

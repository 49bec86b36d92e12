#include "ryserlab/three_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"
#include "ryserlab/errors.hpp"

namespace ryserlab {

ThreePartiteHypergraph::ThreePartiteHypergraph(std::vector<std::string> v1,
                                               std::vector<std::string> v2,
                                               std::vector<std::string> v3)
    : names_{std::move(v1), std::move(v2), std::move(v3)} {
  std::unordered_set<std::string> seen;
  for (const auto& cls : names_)
    for (const auto& n : cls)
      if (!seen.insert(n).second)
        throw std::invalid_argument("ThreePartiteHypergraph: vertex name '" + n +
                                    "' repeated or shared between classes");
}

int ThreePartiteHypergraph::index(int cls, const std::string& name) const {
  const auto& v = names_[cls];
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] == name) return i;
  return -1;
}

int ThreePartiteHypergraph::vertex_count() const {
  return class_size(0) + class_size(1) + class_size(2);
}

int ThreePartiteHypergraph::add_edge(int x, int y, int z) {
  const int v[3] = {x, y, z};
  for (int c = 0; c < 3; ++c)
    if (v[c] < 0 || v[c] >= class_size(c))
      throw std::invalid_argument("ThreePartiteHypergraph: edge endpoint out of range");
  edges_.push_back(Triple{{x, y, z}});
  return edge_count() - 1;
}

int ThreePartiteHypergraph::multiplicity(int x, int y, int z) const {
  int c = 0;
  for (const auto& e : edges_) c += (e.v[0] == x && e.v[1] == y && e.v[2] == z);
  return c;
}

ThreePartiteHypergraph ThreePartiteHypergraph::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("3-graph: bad JSON: ") + e.what());
  }
  for (const char* key : {"V1", "V2", "V3", "edges"})
    if (!j.is_object() || !j.contains(key))
      throw std::invalid_argument("3-graph: expected V1/V2/V3/edges");
  ThreePartiteHypergraph h(j.at("V1").get<std::vector<std::string>>(),
                           j.at("V2").get<std::vector<std::string>>(),
                           j.at("V3").get<std::vector<std::string>>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("3-graph: edge must be a name triple");
    int idx[3];
    for (int c = 0; c < 3; ++c) {
      idx[c] = h.index(c, e[c].get<std::string>());
      if (idx[c] < 0)
        throw std::invalid_argument("3-graph: edge endpoint not in class V" +
                                    std::to_string(c + 1) + ": " + e[c].get<std::string>());
    }
    h.add_edge(idx[0], idx[1], idx[2]);
  }
  return h;
}

std::string ThreePartiteHypergraph::to_json_string() const {
  nlohmann::ordered_json j;
  j["V1"] = names_[0];
  j["V2"] = names_[1];
  j["V3"] = names_[2];
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : edges_)
    edges.push_back({names_[0][e.v[0]], names_[1][e.v[1]], names_[2][e.v[2]]});
  return j.dump();
}

LinkGraph link_graph(const ThreePartiteHypergraph& h, int cls, const std::vector<int>& subset) {
  if (cls < 0 || cls > 2) throw std::invalid_argument("link_graph: class must be 0, 1 or 2");
  std::vector<bool> in_s(h.class_size(cls), false);
  for (int v : subset) {
    if (v < 0 || v >= h.class_size(cls))
      throw std::invalid_argument("link_graph: subset vertex out of range");
    in_s[v] = true;
  }
  const int ca = cls == 0 ? 1 : 0;  // lower remaining class -> side A
  const int cb = cls == 2 ? 1 : 2;  // higher remaining class -> side B
  LinkGraph link;
  link.cls = cls;
  link.graph = BipartiteMultigraph(h.class_names(ca), h.class_names(cb));
  for (int id = 0; id < h.edge_count(); ++id) {
    const auto& e = h.edge(id);
    if (!in_s[e.v[cls]]) continue;
    link.graph.add_edge(e.v[ca], e.v[cb]);
    link.source_edge.push_back(id);
    link.color_vertex.push_back(e.v[cls]);
  }
  return link;
}

LinkGraph link_graph(const ThreePartiteHypergraph& h, int cls) {
  std::vector<int> all(h.class_size(cls));
  for (int i = 0; i < h.class_size(cls); ++i) all[i] = i;
  return link_graph(h, cls, all);
}

SimpleGraph line_graph(const ThreePartiteHypergraph& h) {
  const int m = h.edge_count();
  if (m > SimpleGraph::kMaxVertices)
    throw guard_error("line_graph: more than " + std::to_string(SimpleGraph::kMaxVertices) +
                      " hyperedges");
  SimpleGraph l(m);
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      const auto& te = h.edge(e);
      const auto& tf = h.edge(f);
      if (te.v[0] == tf.v[0] || te.v[1] == tf.v[1] || te.v[2] == tf.v[2]) l.add_edge(e, f);
    }
  return l;
}

}  // namespace ryserlab

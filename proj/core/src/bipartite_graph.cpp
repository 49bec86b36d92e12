#include "ryserlab/bipartite_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"
#include "ryserlab/errors.hpp"

namespace ryserlab {

namespace {

void check_names(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::unordered_set<std::string> seen;
  for (const auto& n : a)
    if (!seen.insert(n).second)
      throw std::invalid_argument("BipartiteMultigraph: duplicate vertex name '" + n + "'");
  for (const auto& n : b)
    if (!seen.insert(n).second)
      throw std::invalid_argument("BipartiteMultigraph: vertex name '" + n +
                                  "' repeated or present in both classes");
}

}  // namespace

BipartiteMultigraph::BipartiteMultigraph(std::vector<std::string> class_a,
                                         std::vector<std::string> class_b)
    : a_names_(std::move(class_a)), b_names_(std::move(class_b)) {
  check_names(a_names_, b_names_);
}

int BipartiteMultigraph::a_index(const std::string& name) const {
  for (int i = 0; i < a_size(); ++i)
    if (a_names_[i] == name) return i;
  return -1;
}

int BipartiteMultigraph::b_index(const std::string& name) const {
  for (int i = 0; i < b_size(); ++i)
    if (b_names_[i] == name) return i;
  return -1;
}

int BipartiteMultigraph::add_edge(int a, int b) {
  if (a < 0 || a >= a_size() || b < 0 || b >= b_size())
    throw std::invalid_argument("BipartiteMultigraph: edge endpoint out of range");
  edges_.emplace_back(a, b);
  return edge_count() - 1;
}

int BipartiteMultigraph::multiplicity(int a, int b) const {
  int c = 0;
  for (const auto& e : edges_) c += (e.first == a && e.second == b);
  return c;
}

std::vector<int> BipartiteMultigraph::edges_between(int a, int b) const {
  std::vector<int> out;
  for (int id = 0; id < edge_count(); ++id)
    if (edges_[id].first == a && edges_[id].second == b) out.push_back(id);
  return out;
}

std::vector<int> BipartiteMultigraph::edges_at_a(int a) const {
  std::vector<int> out;
  for (int id = 0; id < edge_count(); ++id)
    if (edges_[id].first == a) out.push_back(id);
  return out;
}

std::vector<int> BipartiteMultigraph::edges_at_b(int b) const {
  std::vector<int> out;
  for (int id = 0; id < edge_count(); ++id)
    if (edges_[id].second == b) out.push_back(id);
  return out;
}

int BipartiteMultigraph::degree_a(int a) const { return static_cast<int>(edges_at_a(a).size()); }
int BipartiteMultigraph::degree_b(int b) const { return static_cast<int>(edges_at_b(b).size()); }

BipartiteMultigraph BipartiteMultigraph::without_edges(const std::vector<int>& ids) const {
  std::vector<bool> drop(edge_count(), false);
  for (int id : ids) {
    if (id < 0 || id >= edge_count())
      throw std::invalid_argument("BipartiteMultigraph: edge id out of range");
    drop[id] = true;
  }
  BipartiteMultigraph g(a_names_, b_names_);
  for (int id = 0; id < edge_count(); ++id)
    if (!drop[id]) g.add_edge(edges_[id].first, edges_[id].second);
  return g;
}

BipartiteMultigraph BipartiteMultigraph::without_vertex_pair(int a, int b) const {
  if (a < 0 || a >= a_size() || b < 0 || b >= b_size())
    throw std::invalid_argument("BipartiteMultigraph: vertex out of range");
  std::vector<std::string> na, nb;
  for (int i = 0; i < a_size(); ++i)
    if (i != a) na.push_back(a_names_[i]);
  for (int i = 0; i < b_size(); ++i)
    if (i != b) nb.push_back(b_names_[i]);
  BipartiteMultigraph g(std::move(na), std::move(nb));
  for (const auto& e : edges_) {
    if (e.first == a || e.second == b) continue;
    g.add_edge(e.first - (e.first > a ? 1 : 0), e.second - (e.second > b ? 1 : 0));
  }
  return g;
}

BipartiteMultigraph BipartiteMultigraph::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bipartite graph: bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("classA") || !j.contains("classB") || !j.contains("edges"))
    throw std::invalid_argument("bipartite graph: expected classA/classB/edges");
  BipartiteMultigraph g(j.at("classA").get<std::vector<std::string>>(),
                        j.at("classB").get<std::vector<std::string>>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("bipartite graph: edge must be a name pair");
    int a = g.a_index(e[0].get<std::string>());
    int b = g.b_index(e[1].get<std::string>());
    if (a < 0 || b < 0)
      throw std::invalid_argument("bipartite graph: edge endpoint not in its class: [" +
                                  e[0].get<std::string>() + "," + e[1].get<std::string>() + "]");
    g.add_edge(a, b);
  }
  return g;
}

std::string BipartiteMultigraph::to_json_string() const {
  nlohmann::ordered_json j;
  j["classA"] = a_names_;
  j["classB"] = b_names_;
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : edges_)
    edges.push_back({a_names_[e.first], b_names_[e.second]});
  return j.dump();
}

SimpleGraph line_graph(const BipartiteMultigraph& g) {
  const int m = g.edge_count();
  if (m > SimpleGraph::kMaxVertices)
    throw guard_error("line_graph: more than " + std::to_string(SimpleGraph::kMaxVertices) +
                      " base edges");
  SimpleGraph l(m);
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      auto [ea, eb] = g.edge(e);
      auto [fa, fb] = g.edge(f);
      if (ea == fa || eb == fb) l.add_edge(e, f);
    }
  return l;
}

}  // namespace ryserlab

#include "ryserlab/cp_decomposition.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ryserlab/homology.hpp"

namespace ryserlab {

namespace {

// Shared endpoint of two base edges as (side, index); nullopt when the edges
// are disjoint or parallel (a parallel pair shares both ends and so chains
// into nothing).
std::optional<std::pair<int, int>> chain_vertex(const BipartiteMultigraph& g, int x, int y) {
  auto [xa, xb] = g.edge(x);
  auto [ya, yb] = g.edge(y);
  const bool at_a = xa == ya;
  const bool at_b = xb == yb;
  if (at_a == at_b) return std::nullopt;
  if (at_a) return std::make_pair(0, xa);
  return std::make_pair(1, xb);
}

bool touches(const BipartiteMultigraph& g, int id, std::pair<int, int> v) {
  auto [a, b] = g.edge(id);
  return v.first == 0 ? a == v.second : b == v.second;
}

std::string vertex_name(const BipartiteMultigraph& g, std::pair<int, int> v) {
  return v.first == 0 ? g.a_name(v.second) : g.b_name(v.second);
}

// True when the label x of J is covered by the block under property (3):
// equal or parallel to an edge of a four-cycle block, or at home in a path
// block.  The block must already have passed its shape checks.
bool block_covers(const BipartiteMultigraph& g, const SimpleGraph& j, const CPBlock& blk, int x) {
  if (blk.kind == CPBlock::Kind::kC4) {
    for (int be : blk.edges)
      if (g.edge(be) == g.edge(x)) return true;
    return false;
  }
  const auto v1 = chain_vertex(g, blk.edges[0], blk.edges[1]);
  const auto v2 = chain_vertex(g, blk.edges[1], blk.edges[2]);
  if (!touches(g, x, *v1) && !touches(g, x, *v2)) return false;
  const int px = j.position_of_label(x);
  for (int be : blk.edges)
    if (j.has_edge(px, j.position_of_label(be))) return true;
  return false;
}

void require_matching_in_labels(const BipartiteMultigraph& g, const SimpleGraph& j,
                                const Matching& m, const std::string& who) {
  if (!is_matching(g, m.edge_ids)) throw std::invalid_argument(who + ": edge set is not a matching");
  for (int id : m.edge_ids)
    if (j.position_of_label(id) < 0)
      throw std::invalid_argument(who + ": matching edge id missing from vertex labels");
}

// Backtracking assembly of blocks over pairs of matching edges.  Every block
// spans exactly the four endpoints of its two matching edges, so blocks of
// distinct pairs are automatically vertex-disjoint and the pairing recursion
// covers every possible decomposition.
class BlockSearch {
 public:
  BlockSearch(const BipartiteMultigraph& g, const SimpleGraph& j, const Matching& m)
      : g_(g), j_(j), m_ids_(m.edge_ids) {
    std::sort(m_ids_.begin(), m_ids_.end());
    paired_.assign(m_ids_.size(), 0);
    in_m_.assign(g.edge_count(), 0);
    for (int id : m_ids_) in_m_[id] = 1;
    labels_ = j.labels();
    std::sort(labels_.begin(), labels_.end());
  }

  bool run() { return extend(); }

  std::vector<CPBlock> blocks;

 private:
  bool adjacent(int x, int y) const {
    return j_.has_edge(j_.position_of_label(x), j_.position_of_label(y));
  }

  // Candidate blocks built around the matching edges m1 and m2, four-cycles
  // first, then paths by ascending middle edge.
  std::vector<CPBlock> candidates(int m1, int m2) const {
    auto [a1, b1] = g_.edge(m1);
    auto [a2, b2] = g_.edge(m2);
    auto usable = [&](int a, int b) {
      std::vector<int> out;
      for (int id : g_.edges_between(a, b))
        if (!in_m_[id] && j_.position_of_label(id) >= 0) out.push_back(id);
      return out;
    };
    const std::vector<int> cross_21 = usable(a2, b1);  // joins m2's A end to m1's B end
    const std::vector<int> cross_12 = usable(a1, b2);

    std::vector<CPBlock> out;
    for (int e : cross_21) {
      if (!adjacent(m1, e) || !adjacent(e, m2)) continue;
      for (int f : cross_12)
        if (adjacent(m2, f) && adjacent(f, m1))
          out.push_back({CPBlock::Kind::kC4, {m1, e, m2, f}, {m1, m2}});
    }
    std::vector<int> middles;
    for (int e : cross_21)
      if (adjacent(m1, e) && adjacent(e, m2)) middles.push_back(e);
    for (int e : cross_12)
      if (adjacent(m1, e) && adjacent(e, m2)) middles.push_back(e);
    std::sort(middles.begin(), middles.end());
    for (int e : middles) out.push_back({CPBlock::Kind::kP4, {m1, e, m2}, {m1, m2}});
    return out;
  }

  bool covered(int x) const {
    for (const CPBlock& blk : blocks)
      if (block_covers(g_, j_, blk, x)) return true;
    return false;
  }

  // A label is out of reach of every future block once neither of its
  // endpoints lies on an unpaired matching edge; if such a label is still
  // uncovered the branch is dead.
  bool dead_end() const {
    for (int x : labels_) {
      auto [a, b] = g_.edge(x);
      bool future = false;
      for (std::size_t k = 0; k < m_ids_.size() && !future; ++k) {
        if (paired_[k]) continue;
        auto [ma, mb] = g_.edge(m_ids_[k]);
        future = ma == a || mb == b;
      }
      if (!future && !covered(x)) return true;
    }
    return false;
  }

  bool extend() {
    std::size_t i = 0;
    while (i < m_ids_.size() && paired_[i]) ++i;
    if (i == m_ids_.size()) {
      for (int x : labels_)
        if (!covered(x)) return false;
      return true;
    }
    for (std::size_t k = i + 1; k < m_ids_.size(); ++k) {
      if (paired_[k]) continue;
      paired_[i] = paired_[k] = 1;
      for (CPBlock& blk : candidates(m_ids_[i], m_ids_[k])) {
        blocks.push_back(std::move(blk));
        if (!dead_end() && extend()) return true;
        blocks.pop_back();
      }
      paired_[i] = paired_[k] = 0;
    }
    return false;
  }

  const BipartiteMultigraph& g_;
  const SimpleGraph& j_;
  std::vector<int> m_ids_;
  std::vector<char> paired_;
  std::vector<char> in_m_;
  std::vector<int> labels_;
};

}  // namespace

std::vector<std::pair<int, int>> block_vertices(const BipartiteMultigraph& g, const CPBlock& blk) {
  const bool cycle = blk.kind == CPBlock::Kind::kC4;
  const std::size_t want = cycle ? 4 : 3;
  if (blk.edges.size() != want)
    throw std::invalid_argument("block_vertices: wrong number of edges for the block kind");
  for (int id : blk.edges)
    if (id < 0 || id >= g.edge_count())
      throw std::invalid_argument("block_vertices: edge id out of range");

  std::vector<std::pair<int, int>> v(4);
  const auto chain = [&](int x, int y) {
    const auto s = chain_vertex(g, x, y);
    if (!s)
      throw std::invalid_argument(cycle ? "block_vertices: edges do not chain into a four-cycle"
                                        : "block_vertices: edges do not chain into a path");
    return *s;
  };
  v[1] = chain(blk.edges[0], blk.edges[1]);
  v[2] = chain(blk.edges[1], blk.edges[2]);
  if (cycle) {
    v[3] = chain(blk.edges[2], blk.edges[3]);
    v[0] = chain(blk.edges[3], blk.edges[0]);
  } else {
    const auto other_end = [&](int id, std::pair<int, int> hinge) {
      auto [a, b] = g.edge(id);
      return hinge.first == 0 ? std::make_pair(1, b) : std::make_pair(0, a);
    };
    v[0] = other_end(blk.edges[0], v[1]);
    v[3] = other_end(blk.edges[2], v[2]);
  }
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q)
      if (v[p] == v[q])
        throw std::invalid_argument("block_vertices: block does not span four distinct vertices");
  return v;
}

CPVerdict verify_cp(const BipartiteMultigraph& g, const SimpleGraph& j, const Matching& m,
                    const CPDecomposition& d) {
  require_matching_in_labels(g, j, m, "verify_cp");

  CPVerdict verdict;
  const auto fail = [&](std::string text) { verdict.violations.push_back(std::move(text)); };
  std::vector<char> in_m(g.edge_count(), 0);
  for (int id : m.edge_ids) in_m[id] = 1;

  // Per-block shape checks; a block that passes keeps its derived vertices
  // for the disjointness and coverage stages.
  std::vector<std::optional<std::vector<std::pair<int, int>>>> verts(d.blocks.size());
  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
    const CPBlock& blk = d.blocks[bi];
    const bool cycle = blk.kind == CPBlock::Kind::kC4;
    const std::string tag = "block " + std::to_string(bi) + ": ";
    const std::string prop = cycle ? " (property 1)" : " (property 2)";

    if (blk.edges.size() != (cycle ? 4u : 3u)) {
      fail(tag + "expected " + (cycle ? "4" : "3") + " edges" + prop);
      continue;
    }
    bool usable = true;
    for (int id : blk.edges)
      if (id < 0 || id >= g.edge_count()) {
        fail(tag + "edge id " + std::to_string(id) + " out of range");
        usable = false;
      }
    if (!usable) continue;
    std::vector<int> sorted = blk.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(tag + "repeated edge id" + prop);
      continue;
    }
    for (int id : blk.edges)
      if (j.position_of_label(id) < 0) {
        fail(tag + "edge " + std::to_string(id) + " is not a vertex label of J" + prop);
        usable = false;
      }
    if (!usable) continue;
    try {
      verts[bi] = block_vertices(g, blk);
    } catch (const std::invalid_argument&) {
      fail(tag + (cycle ? "edges do not form a four-cycle" : "edges do not form a path") + prop);
      continue;
    }

    // Matching edge placement: exactly the declared two, opposite in a
    // cycle, at the ends of a path, and no other block edge in M.
    bool placement = true;
    if (blk.m_edges.size() != 2 || blk.m_edges[0] == blk.m_edges[1]) {
      fail(tag + "expected two distinct matching edge ids" + prop);
      placement = false;
    } else {
      for (int id : blk.m_edges)
        if (id < 0 || id >= g.edge_count() || !in_m[id]) {
          fail(tag + "declared matching edge " + std::to_string(id) + " is not in M" + prop);
          placement = false;
        }
    }
    if (placement) {
      std::vector<int> on;  // positions of declared matching edges inside the block
      for (std::size_t p = 0; p < blk.edges.size(); ++p)
        if (blk.edges[p] == blk.m_edges[0] || blk.edges[p] == blk.m_edges[1])
          on.push_back(static_cast<int>(p));
      const bool placed = cycle ? (on == std::vector<int>{0, 2} || on == std::vector<int>{1, 3})
                                : on == std::vector<int>{0, 2};
      if (!placed) {
        fail(tag + (cycle ? "matching edges are not opposite in the cycle"
                          : "matching edges are not the ends of the path") +
             prop);
      }
      for (std::size_t p = 0; p < blk.edges.size(); ++p) {
        const int id = blk.edges[p];
        if (in_m[id] && id != blk.m_edges[0] && id != blk.m_edges[1])
          fail(tag + "edge " + std::to_string(id) + " is in M but not declared" + prop);
      }
    }

    // Intersecting block edges must be J-adjacent: consecutive pairs around
    // the cycle or along the path.
    const int pairs = cycle ? 4 : 2;
    for (int p = 0; p < pairs; ++p) {
      const int x = blk.edges[p];
      const int y = blk.edges[(p + 1) % blk.edges.size()];
      if (!j.has_edge(j.position_of_label(x), j.position_of_label(y)))
        fail(tag + "edges " + std::to_string(x) + " and " + std::to_string(y) +
             " intersect but are not J-adjacent" + prop);
    }
  }

  for (std::size_t bi = 0; bi < d.blocks.size(); ++bi)
    for (std::size_t bj = bi + 1; bj < d.blocks.size(); ++bj) {
      if (!verts[bi] || !verts[bj]) continue;
      std::optional<std::pair<int, int>> shared;
      for (const auto& p : *verts[bi])
        for (const auto& q : *verts[bj])
          if (p == q && !shared) shared = p;
      if (shared)
        fail("blocks " + std::to_string(bi) + " and " + std::to_string(bj) + " share vertex " +
             vertex_name(g, *shared));
    }

  if (d.blocks.size() * 2 != m.edge_ids.size())
    fail("expected " + std::to_string(m.size() / 2) + " blocks for a matching of size " +
         std::to_string(m.size()));
  std::vector<int> uses(g.edge_count(), 0);
  for (const CPBlock& blk : d.blocks)
    for (int id : blk.m_edges)
      if (id >= 0 && id < g.edge_count()) ++uses[id];
  for (int id : m.edge_ids) {
    if (uses[id] == 0) fail("matching edge " + std::to_string(id) + " is in no block");
    if (uses[id] > 1) fail("matching edge " + std::to_string(id) + " is in more than one block");
  }

  // Property (3): every label of J must be covered by a structurally sound
  // block.
  std::vector<int> labels = j.labels();
  std::sort(labels.begin(), labels.end());
  for (int x : labels) {
    bool ok = false;
    for (std::size_t bi = 0; bi < d.blocks.size() && !ok; ++bi)
      if (verts[bi]) ok = block_covers(g, j, d.blocks[bi], x);
    if (!ok) fail("edge " + std::to_string(x) + " is not covered by any block (property 3)");
  }

  verdict.ok = verdict.violations.empty();
  return verdict;
}

std::optional<CPDecomposition> find_cp(const BipartiteMultigraph& g, const SimpleGraph& j,
                                       const Matching& m) {
  if (m.size() % 2 != 0) throw std::invalid_argument("find_cp: matching size must be even");
  require_matching_in_labels(g, j, m, "find_cp");
  BlockSearch search(g, j, m);
  if (!search.run()) return std::nullopt;
  return CPDecomposition{std::move(search.blocks)};
}

bool AlternatingReach::contains(int id) const {
  return std::binary_search(reached.begin(), reached.end(), id);
}

namespace {

// Depth-first enumeration of the alternating paths behind reach().  Vertices
// of the current path are marked per side; matching edges are recorded the
// moment a path steps onto them.
class AlternatingWalker {
 public:
  AlternatingWalker(const BipartiteMultigraph& g, const SimpleGraph& j,
                    const std::vector<char>& in_m)
      : g_(g), match_a_(g.a_size(), -1), match_b_(g.b_size(), -1), on_path_a_(g.a_size(), 0),
        on_path_b_(g.b_size(), 0), plain_at_a_(g.a_size()), plain_at_b_(g.b_size()) {
    for (int id = 0; id < g.edge_count(); ++id) {
      if (j.position_of_label(id) < 0) continue;
      auto [a, b] = g.edge(id);
      if (in_m[id]) {
        match_a_[a] = id;
        match_b_[b] = id;
      } else {
        plain_at_a_[a].push_back(id);
        plain_at_b_[b].push_back(id);
      }
    }
  }

  void mark(std::pair<int, int> v) { (v.first == 0 ? on_path_a_ : on_path_b_)[v.second] = 1; }

  // The path has just crossed a non-matching edge into v; at most one
  // matching edge can continue it.
  void cross_matching(std::pair<int, int> v) {
    const int id = v.first == 0 ? match_a_[v.second] : match_b_[v.second];
    if (id < 0) return;
    const auto far = far_end(id, v);
    if (on_path(far)) return;
    reached.insert(id);
    mark(far);
    cross_plain(far);
    unmark(far);
  }

  std::set<int> reached;

 private:
  void unmark(std::pair<int, int> v) { (v.first == 0 ? on_path_a_ : on_path_b_)[v.second] = 0; }
  bool on_path(std::pair<int, int> v) const {
    return (v.first == 0 ? on_path_a_ : on_path_b_)[v.second] != 0;
  }
  std::pair<int, int> far_end(int id, std::pair<int, int> v) const {
    auto [a, b] = g_.edge(id);
    return v.first == 0 ? std::make_pair(1, b) : std::make_pair(0, a);
  }

  // The path has just crossed a matching edge into v; branch over the
  // non-matching continuations.
  void cross_plain(std::pair<int, int> v) {
    for (int id : v.first == 0 ? plain_at_a_[v.second] : plain_at_b_[v.second]) {
      const auto far = far_end(id, v);
      if (on_path(far)) continue;
      mark(far);
      cross_matching(far);
      unmark(far);
    }
  }

  const BipartiteMultigraph& g_;
  std::vector<int> match_a_, match_b_;
  std::vector<char> on_path_a_, on_path_b_;
  std::vector<std::vector<int>> plain_at_a_, plain_at_b_;
};

}  // namespace

AlternatingReach reach(const BipartiteMultigraph& g, const SimpleGraph& j, const Matching& m,
                       int m_id, int e_id) {
  require_matching_in_labels(g, j, m, "reach");
  std::vector<char> in_m(g.edge_count(), 0);
  for (int id : m.edge_ids) in_m[id] = 1;
  if (m_id < 0 || m_id >= g.edge_count() || !in_m[m_id])
    throw std::invalid_argument("reach: seed edge is not in the matching");
  if (e_id < 0 || e_id >= g.edge_count() || in_m[e_id] || j.position_of_label(e_id) < 0)
    throw std::invalid_argument("reach: continuation edge must be a label of J outside M");
  auto [ma, mb] = g.edge(m_id);
  auto [ea, eb] = g.edge(e_id);
  if ((ma == ea) == (mb == eb))
    throw std::invalid_argument("reach: edges must share exactly one endpoint");

  AlternatingWalker walker(g, j, in_m);
  const std::pair<int, int> hinge = ma == ea ? std::make_pair(0, ma) : std::make_pair(1, mb);
  const std::pair<int, int> tail = ma == ea ? std::make_pair(1, mb) : std::make_pair(0, ma);
  const std::pair<int, int> head = ma == ea ? std::make_pair(1, eb) : std::make_pair(0, ea);
  walker.reached.insert(m_id);
  walker.mark(tail);
  walker.mark(hinge);
  walker.mark(head);
  walker.cross_matching(head);

  AlternatingReach out;
  out.reached.assign(walker.reached.begin(), walker.reached.end());
  return out;
}

Matching c4_switch(const BipartiteMultigraph& g, const Matching& m, int m_id, int e_id, int m2_id,
                   int f_id) {
  if (!is_matching(g, m.edge_ids)) throw std::invalid_argument("c4_switch: edge set is not a matching");
  std::vector<char> in_m(g.edge_count(), 0);
  for (int id : m.edge_ids) in_m[id] = 1;
  const std::array<int, 4> cyc = {m_id, e_id, m2_id, f_id};
  for (int id : cyc)
    if (id < 0 || id >= g.edge_count()) throw std::invalid_argument("c4_switch: edge id out of range");
  if (!in_m[m_id] || !in_m[m2_id] || in_m[e_id] || in_m[f_id])
    throw std::invalid_argument("c4_switch: cycle must alternate matching and non-matching edges");

  const CPBlock shape{CPBlock::Kind::kC4, {m_id, e_id, m2_id, f_id}, {m_id, m2_id}};
  try {
    block_vertices(g, shape);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("c4_switch: edges do not form an alternating four-cycle");
  }

  Matching out;
  for (int id : m.edge_ids)
    if (id != m_id && id != m2_id) out.edge_ids.push_back(id);
  out.edge_ids.push_back(e_id);
  out.edge_ids.push_back(f_id);
  std::sort(out.edge_ids.begin(), out.edge_ids.end());
  if (!is_matching(g, out.edge_ids))
    throw std::logic_error("c4_switch: switched edge set is not a matching");
  return out;
}

ExtremalityReport check_characterization(const BipartiteMultigraph& g, std::size_t face_guard) {
  ExtremalityReport report;
  const Matching m = max_matching(g);
  report.nu = m.size();
  report.applicable = report.nu % 2 == 0;
  if (!report.applicable) return report;

  const SimpleGraph l = line_graph(g);
  const ConnValue target(report.nu / 2 - 2);
  report.conn = conn_h_independence(l, report.nu / 2 - 1, face_guard);
  if (report.conn.complete)
    report.extremal = report.conn.value == target ? Tristate::kTrue : Tristate::kFalse;
  else
    report.extremal = report.nu == 4 ? Tristate::kInconclusive : Tristate::kFalse;

  auto d = find_cp(g, l, m);
  report.cp_found = d.has_value();
  if (d) report.decomposition = std::move(*d);
  report.agree = report.extremal == Tristate::kInconclusive ||
                 (report.extremal == Tristate::kTrue) == report.cp_found;
  return report;
}

CPDecomposition CPDecomposition::from_json_string(const std::string& text,
                                                  const BipartiteMultigraph& g) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("cp decomposition: bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("blocks") || !j.at("blocks").is_array())
    throw std::invalid_argument("cp decomposition: expected a blocks array");

  CPDecomposition d;
  for (const auto& jb : j.at("blocks")) {
    if (!jb.is_object() || !jb.contains("kind") || !jb.contains("vertices") ||
        !jb.contains("edges") || !jb.contains("mEdges"))
      throw std::invalid_argument("cp decomposition: block needs kind/vertices/edges/mEdges");
    CPBlock blk;
    const std::string kind = jb.at("kind").get<std::string>();
    if (kind == "C4")
      blk.kind = CPBlock::Kind::kC4;
    else if (kind == "P4")
      blk.kind = CPBlock::Kind::kP4;
    else
      throw std::invalid_argument("cp decomposition: kind must be C4 or P4");
    try {
      blk.edges = jb.at("edges").get<std::vector<int>>();
      blk.m_edges = jb.at("mEdges").get<std::vector<int>>();
    } catch (const nlohmann::json::type_error&) {
      throw std::invalid_argument("cp decomposition: edges and mEdges must be id arrays");
    }
    for (int id : blk.edges)
      if (id < 0 || id >= g.edge_count())
        throw std::invalid_argument("cp decomposition: edge id out of range");

    // The vertex names are redundant; when the edges chain into a block the
    // names must match what they imply.  A block too malformed to chain is
    // left to verify_cp.
    const auto names = jb.at("vertices").get<std::vector<std::string>>();
    std::vector<std::string> expect;
    bool derivable = true;
    try {
      for (const auto& v : block_vertices(g, blk)) expect.push_back(vertex_name(g, v));
    } catch (const std::invalid_argument&) {
      derivable = false;
    }
    if (derivable && names != expect)
      throw std::invalid_argument("cp decomposition: vertices field does not match the block edges");
    d.blocks.push_back(std::move(blk));
  }
  return d;
}

std::string CPDecomposition::to_json_string(const BipartiteMultigraph& g) const {
  nlohmann::ordered_json j;
  auto& blocks = j["blocks"] = nlohmann::ordered_json::array();
  for (const CPBlock& blk : this->blocks) {
    nlohmann::ordered_json jb;
    jb["kind"] = blk.kind == CPBlock::Kind::kC4 ? "C4" : "P4";
    auto& names = jb["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : block_vertices(g, blk)) names.push_back(vertex_name(g, v));
    jb["edges"] = blk.edges;
    jb["mEdges"] = blk.m_edges;
    blocks.push_back(std::move(jb));
  }
  return j.dump();
}

}  // namespace ryserlab

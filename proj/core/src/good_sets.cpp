#include "ryserlab/good_sets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ryserlab/errors.hpp"
#include "ryserlab/simple_graph.hpp"

namespace ryserlab {

namespace {

int class_size(const BipartiteMultigraph& g, int side) {
  return side == 1 ? g.b_size() : g.a_size();
}

// Endpoint of an edge on the given side (0 = its A index, 1 = its B index).
int end_on(const BipartiteMultigraph& g, int id, int side) {
  const auto [a, b] = g.edge(id);
  return side == 1 ? b : a;
}

void validate_subset(const BipartiteMultigraph& g, const VertexSubset& x, const char* who) {
  if (x.side != 0 && x.side != 1)
    throw std::invalid_argument(std::string(who) + ": side must be 0 (class A) or 1 (class B)");
  const int n = class_size(g, x.side);
  int prev = -1;
  for (int v : x.vertices) {
    if (v < 0 || v >= n)
      throw std::invalid_argument(std::string(who) + ": vertex index out of range");
    if (v <= prev)
      throw std::invalid_argument(std::string(who) + ": vertices must be strictly ascending");
    prev = v;
  }
}

std::vector<int> class_edges(const BipartiteMultigraph& g, int side, int v) {
  return side == 1 ? g.edges_at_b(v) : g.edges_at_a(v);
}

VertexSubset subset_of_mask(int side, int n, std::uint32_t mask) {
  VertexSubset x{side, {}};
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) x.vertices.push_back(v);
  return x;
}

}  // namespace

std::vector<int> neighborhood(const BipartiteMultigraph& g, const VertexSubset& x) {
  validate_subset(g, x, "neighborhood");
  std::vector<char> in_x(class_size(g, x.side), 0);
  for (int v : x.vertices) in_x[v] = 1;
  std::vector<char> seen(class_size(g, 1 - x.side), 0);
  std::vector<int> out;
  for (int id = 0; id < g.edge_count(); ++id) {
    const int mine = end_on(g, id, x.side);
    const int other = end_on(g, id, 1 - x.side);
    if (in_x[mine] && !seen[other]) {
      seen[other] = 1;
      out.push_back(other);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_equineighbored(const BipartiteMultigraph& g, const VertexSubset& x) {
  const auto nbr = neighborhood(g, x);
  return x.size() > 0 && static_cast<int>(nbr.size()) == x.size();
}

bool is_decent(const BipartiteMultigraph& g, const VertexSubset& x) {
  const auto nbr = neighborhood(g, x);  // also validates x
  const int nu = max_matching(g).size();
  const int rest = class_size(g, x.side) - x.size();
  if (static_cast<int>(nbr.size()) > x.size()) return false;
  if (nu != static_cast<int>(nbr.size()) + rest) return false;
  // Every edge between the set and its neighborhood must survive into some
  // maximum matching: deleting its endpoints has to cost exactly one.
  std::vector<char> probed(class_size(g, 1 - x.side), 0);
  for (int v : x.vertices) {
    std::fill(probed.begin(), probed.end(), 0);
    for (int id : class_edges(g, x.side, v)) {
      const int y = end_on(g, id, 1 - x.side);
      if (probed[y]) continue;
      probed[y] = 1;
      const auto sub = x.side == 1 ? g.without_vertex_pair(y, v) : g.without_vertex_pair(v, y);
      if (max_matching(sub).size() != nu - 1) return false;
    }
  }
  return true;
}

VertexSubset alternating_closure(const BipartiteMultigraph& g, const Matching& m,
                                 const VertexSubset& seeds) {
  validate_subset(g, seeds, "alternating_closure");
  if (!is_matching(g, m.edge_ids))
    throw std::invalid_argument("alternating_closure: not a matching");
  const int side = seeds.side;
  std::vector<char> edge_in_m(g.edge_count(), 0);
  std::vector<int> match_at_other(class_size(g, 1 - side), -1);
  for (int id : m.edge_ids) {
    edge_in_m[id] = 1;
    match_at_other[end_on(g, id, 1 - side)] = id;
  }
  // Walks leave the seed class on non-matching edges and come back on
  // matching edges, so the discovery tree consists of alternating paths.
  std::vector<char> in_x(class_size(g, side), 0);
  std::vector<char> other_seen(class_size(g, 1 - side), 0);
  std::vector<int> frontier;
  for (int v : seeds.vertices) {
    in_x[v] = 1;
    frontier.push_back(v);
  }
  while (!frontier.empty()) {
    const int v = frontier.back();
    frontier.pop_back();
    for (int id : class_edges(g, side, v)) {
      if (edge_in_m[id]) continue;
      const int u = end_on(g, id, 1 - side);
      if (other_seen[u]) continue;
      other_seen[u] = 1;
      const int back = match_at_other[u];
      if (back < 0) continue;
      const int w = end_on(g, back, side);
      if (!in_x[w]) {
        in_x[w] = 1;
        frontier.push_back(w);
      }
    }
  }
  VertexSubset out{side, {}};
  for (int v = 0; v < static_cast<int>(in_x.size()); ++v)
    if (in_x[v]) out.vertices.push_back(v);
  return out;
}

VertexSubset decent_from_matching(const BipartiteMultigraph& g, const Matching& m, int side) {
  if (side != 0 && side != 1)
    throw std::invalid_argument("decent_from_matching: side must be 0 (class A) or 1 (class B)");
  if (!is_matching(g, m.edge_ids))
    throw std::invalid_argument("decent_from_matching: not a matching");
  if (m.size() != max_matching(g).size())
    throw std::invalid_argument("decent_from_matching: the matching is not maximum");
  const auto exposed = side == 1 ? unsaturated_b(g, m) : unsaturated_a(g, m);
  return alternating_closure(g, m, VertexSubset{side, exposed});
}

std::vector<VertexSubset> equineighbored_sets(const BipartiteMultigraph& g, int side,
                                              bool minimal_only, int class_guard) {
  if (side != 0 && side != 1)
    throw std::invalid_argument("equineighbored_sets: side must be 0 (class A) or 1 (class B)");
  const int n = class_size(g, side);
  if (n > class_guard)
    throw guard_error("equineighbored_sets: class size " + std::to_string(n) +
                      " exceeds the enumeration guard " + std::to_string(class_guard));
  const int other_n = class_size(g, 1 - side);
  std::vector<std::vector<int>> nbrs(n);
  for (int id = 0; id < g.edge_count(); ++id) nbrs[end_on(g, id, side)].push_back(end_on(g, id, 1 - side));
  std::vector<int> stamp(other_n, -1);
  int tag = 0;
  auto nbr_count = [&](std::uint32_t mask) {
    ++tag;
    int cnt = 0;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      for (int u : nbrs[v])
        if (stamp[u] != tag) {
          stamp[u] = tag;
          ++cnt;
        }
    }
    return cnt;
  };
  if (n > 0) {
    const int nu = max_matching(g).size();
    if (nu == g.a_size() && nu == g.b_size() &&
        nbr_count((std::uint32_t(1) << n) - 1) != n)
      throw std::logic_error(
          "equineighbored_sets: a perfect matching must make the whole class equineighbored");
  }
  std::vector<VertexSubset> out;
  std::vector<std::uint32_t> minimal_masks;
  for (int s = 1; s <= n; ++s) {
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
      if (std::popcount(mask) != s) continue;
      if (nbr_count(mask) != s) continue;
      if (minimal_only) {
        bool reducible = false;
        for (std::uint32_t t : minimal_masks)
          if ((t & mask) == t) {
            reducible = true;
            break;
          }
        if (reducible) continue;
        minimal_masks.push_back(mask);
      }
      out.push_back(subset_of_mask(side, n, mask));
    }
  }
  // Mask order within a size is colexicographic; the promised order is not.
  std::sort(out.begin(), out.end(), [](const VertexSubset& p, const VertexSubset& q) {
    if (p.vertices.size() != q.vertices.size()) return p.vertices.size() < q.vertices.size();
    return p.vertices < q.vertices;
  });
  return out;
}

namespace {

// "conn(stripped) > conn(base)" decided on window intervals.
Tristate strictly_increases(const ConnHResult& stripped, const ConnHResult& base) {
  switch (conn_le(stripped, base)) {
    case Tristate::kTrue:
      return Tristate::kFalse;
    case Tristate::kFalse:
      return Tristate::kTrue;
    default:
      return Tristate::kInconclusive;
  }
}

// Shared core of check_good and find_good_set; `base` carries the window
// result for line_graph(g) when the caller has it already.
GoodSetCheck check_good_impl(const BipartiteMultigraph& g, const VertexSubset& x,
                             const ConnOracle& oracle, const ConnHResult* base) {
  GoodSetCheck report;
  report.decent = is_decent(g, x);  // also validates x
  if (!report.decent || x.vertices.empty()) return report;
  report.base = base != nullptr ? *base : oracle(line_graph(g));
  std::vector<char> in_x(class_size(g, x.side), 0);
  for (int v : x.vertices) in_x[v] = 1;
  bool refuted = false;
  bool open = false;
  for (int y : neighborhood(g, x)) {
    GoodSetNeighborCheck check;
    check.y = y;
    std::vector<int> removed;
    for (int id : class_edges(g, 1 - x.side, y))
      if (!in_x[end_on(g, id, x.side)]) removed.push_back(id);
    check.removed_edges = static_cast<int>(removed.size());
    if (removed.empty()) {
      // Nothing to strip: the connectedness cannot move, let alone rise.
      check.stripped = report.base;
      check.increased = Tristate::kFalse;
    } else {
      check.stripped = oracle(line_graph(g.without_edges(removed)));
      check.increased = strictly_increases(check.stripped, report.base);
    }
    refuted = refuted || check.increased == Tristate::kFalse;
    open = open || check.increased == Tristate::kInconclusive;
    report.checks.push_back(std::move(check));
  }
  report.good = refuted  ? Tristate::kFalse
                : open   ? Tristate::kInconclusive
                         : Tristate::kTrue;
  return report;
}

}  // namespace

GoodSetCheck check_good(const BipartiteMultigraph& g, const VertexSubset& x,
                        const ConnOracle& oracle) {
  return check_good_impl(g, x, oracle, nullptr);
}

Tristate is_good(const BipartiteMultigraph& g, const VertexSubset& x, const ConnOracle& oracle) {
  return check_good(g, x, oracle).good;
}

std::optional<VertexSubset> find_good_set(const BipartiteMultigraph& g, const ConnOracle& oracle,
                                          int class_guard) {
  const Matching m = max_matching(g);
  const int nu = m.size();
  if (nu % 2 != 0) throw std::invalid_argument("find_good_set: matching number must be even");
  const ConnValue target(nu / 2 - 2);
  const ConnHResult base = oracle(line_graph(g));
  if (base.complete) {
    if (base.value != target)
      throw std::invalid_argument("find_good_set: line-graph connectedness is not nu/2 - 2");
  } else if (target < ConnValue(base.cap)) {
    // The silent window already places the connectedness above the target.
    throw std::invalid_argument("find_good_set: line-graph connectedness exceeds nu/2 - 2");
  } else {
    throw inconclusive_error("find_good_set: the window cannot certify connectedness nu/2 - 2");
  }

  bool open = false;
  std::set<std::pair<int, std::vector<int>>> tried;
  auto probe = [&](const VertexSubset& x) {
    if (x.vertices.empty()) return false;
    if (!tried.insert({x.side, x.vertices}).second) return false;
    switch (check_good_impl(g, x, oracle, &base).good) {
      case Tristate::kTrue:
        return true;
      case Tristate::kInconclusive:
        open = true;
        return false;
      default:
        return false;
    }
  };

  // The closures of the unsaturated vertices first, then the minimal
  // equineighbored sets, then everything by size; class B before class A.
  for (int side : {1, 0}) {
    const VertexSubset x = decent_from_matching(g, m, side);
    if (probe(x)) return x;
  }
  for (int side : {1, 0})
    for (const VertexSubset& x : equineighbored_sets(g, side, true, class_guard))
      if (probe(x)) return x;
  for (int s = 1; s <= std::max(g.a_size(), g.b_size()); ++s)
    for (int side : {1, 0}) {
      const int n = class_size(g, side);
      if (s > n) continue;
      if (n > class_guard)
        throw guard_error("find_good_set: class size " + std::to_string(n) +
                          " exceeds the enumeration guard " + std::to_string(class_guard));
      for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        if (std::popcount(mask) != s) continue;
        const VertexSubset x = subset_of_mask(side, n, mask);
        if (probe(x)) return x;
      }
    }

  if (open)
    throw inconclusive_error(
        "find_good_set: a candidate stayed inside the window; cannot certify that no good set "
        "exists");

  // No good set pins the graph down; refusing to return "none" silently when
  // either consequence fails turns this search into a cross-check.
  if (nu != g.a_size() || nu != g.b_size())
    throw std::logic_error("find_good_set: no good set, yet no perfect matching");
  for (int side : {1, 0})
    for (const VertexSubset& x : equineighbored_sets(g, side, true, class_guard)) {
      const auto nbr = neighborhood(g, x);
      bool four_cycle = x.size() == 2 && nbr.size() == 2;
      if (four_cycle)
        for (int v : x.vertices)
          for (int u : nbr)
            four_cycle = four_cycle &&
                         (x.side == 1 ? g.multiplicity(u, v) : g.multiplicity(v, u)) > 0;
      if (!four_cycle)
        throw std::logic_error(
            "find_good_set: no good set, yet a minimal equineighbored set is not a four-cycle");
    }
  return std::nullopt;
}

}  // namespace ryserlab

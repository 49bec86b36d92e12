#include "ryserlab/ryser.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ryserlab/errors.hpp"
#include "ryserlab/psi.hpp"

namespace ryserlab {

namespace {

void require_class(int cls, const char* who) {
  if (cls < 0 || cls >= 3)
    throw std::invalid_argument(std::string(who) + ": class index must be 0, 1, or 2");
}

void require_class_guard(int n, int class_guard, const char* who) {
  if (n > class_guard)
    throw guard_error(std::string(who) + ": class size " + std::to_string(n) +
                      " exceeds the subset guard " + std::to_string(class_guard));
}

// nu and tau of h, with the cover bound rechecked on the way.
std::pair<int, int> nu_tau_checked(const ThreePartiteHypergraph& h, const SolveLimits& limits,
                                   const char* who) {
  const int nu = matching_number(h, limits);
  const int tau = vertex_cover_number(h, limits);
  if (tau > 2 * nu)
    throw std::logic_error(std::string(who) + ": cover number " + std::to_string(tau) +
                           " exceeds twice the matching number " + std::to_string(nu));
  return {nu, tau};
}

// All subsets of {0, ..., n-1}, by size then lexicographic content.
std::vector<std::vector<int>> subsets_by_size(int n) {
  std::vector<std::vector<int>> out;
  out.reserve(std::size_t(1) << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) subset.push_back(v);
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const std::vector<int>& p, const std::vector<int>& q) {
    if (p.size() != q.size()) return p.size() < q.size();
    return p < q;
  });
  return out;
}

std::vector<std::string> numbered(const char* prefix, int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

bool is_ryser_extremal(const ThreePartiteHypergraph& h, const SolveLimits& limits) {
  const auto [nu, tau] = nu_tau_checked(h, limits, "is_ryser_extremal");
  return tau == 2 * nu;
}

RyserLinkReport verify_connoflink(const ThreePartiteHypergraph& h, std::size_t face_guard,
                                  const SolveLimits& limits) {
  const auto [nu, tau] = nu_tau_checked(h, limits, "verify_connoflink");
  if (tau != 2 * nu)
    throw std::invalid_argument(
        "verify_connoflink: the hypergraph does not attain the cover bound");
  RyserLinkReport report;
  report.nu = nu;
  report.tau = tau;
  const ConnValue target(nu - 2);
  bool any_false = false;
  bool any_undecided = false;
  for (int cls = 0; cls < 3; ++cls) {
    RyserClassCheck& check = report.per_class[cls];
    check.cls = cls;
    const LinkGraph link = link_graph(h, cls);
    check.link_nu = static_cast<int>(max_matching(link.graph).size());
    check.link_nu_equals_tau = check.link_nu == tau;
    check.conn = conn_h_independence(line_graph(link.graph), std::max(nu - 1, -1), face_guard);
    if (check.conn.complete) {
      check.conn_equals_target =
          check.conn.value == target ? Tristate::kTrue : Tristate::kFalse;
    } else {
      // Silence up to the cap puts every homology obstruction above nu - 2.
      // An obstruction exactly at nu - 1 would be homology-visible too
      // unless it sits in dimension one, so only nu == 2 stays open.
      check.conn_equals_target = nu == 2 ? Tristate::kInconclusive : Tristate::kFalse;
    }
    if (!check.link_nu_equals_tau || check.conn_equals_target == Tristate::kFalse)
      any_false = true;
    if (check.conn_equals_target == Tristate::kInconclusive) any_undecided = true;
  }
  report.verdict = any_false       ? Tristate::kFalse
                   : any_undecided ? Tristate::kInconclusive
                                   : Tristate::kTrue;
  return report;
}

LinkBoundsReport verify_linkconn_bounds(const ThreePartiteHypergraph& h, int cls,
                                        std::size_t face_guard, const SolveLimits& limits,
                                        int class_guard) {
  require_class(cls, "verify_linkconn_bounds");
  const int n = h.class_size(cls);
  require_class_guard(n, class_guard, "verify_linkconn_bounds");
  const auto [nu, tau] = nu_tau_checked(h, limits, "verify_linkconn_bounds");
  LinkBoundsReport report;
  report.cls = cls;
  report.nu = nu;
  report.tau = tau;
  report.cover_all = true;
  report.lower_all = true;
  report.size_ok = true;
  const int cap = std::max(nu - 1, -1);
  for (std::vector<int>& subset : subsets_by_size(n)) {
    LinkSubsetCheck check;
    const int missing = n - static_cast<int>(subset.size());
    check.subset = std::move(subset);
    const LinkGraph link = link_graph(h, cls, check.subset);
    check.link_nu = static_cast<int>(max_matching(link.graph).size());
    check.link_tau = vertex_cover_number(link.graph);
    check.cover_ok = missing + check.link_tau >= tau;
    const SimpleGraph line = line_graph(link.graph);
    check.conn = conn_h_independence(line, cap, face_guard);
    check.window_lower_ok = conn_lower(check.conn).at_least_ratio_bound(tau - missing, 2);
    const bool cone = line.vertex_count() > 0 && line.has_isolated_vertex();
    check.lower_ok = cone || check.cover_ok;
    const int rhs = nu - missing - 2;
    if (line.vertex_count() == 0) {
      // The complex is a bare empty face: conn is exactly -2.
      check.meets_upper = -2 <= rhs ? Tristate::kTrue : Tristate::kFalse;
    } else if (cone) {
      check.meets_upper = Tristate::kFalse;  // conn is exactly +inf
    } else if ((check.link_nu + 1) / 2 - 2 > rhs) {
      check.meets_upper = Tristate::kFalse;  // matching bound clears the threshold
    } else if (check.conn.complete && check.conn.value <= ConnValue(rhs)) {
      check.meets_upper = Tristate::kTrue;
    } else {
      check.meets_upper = Tristate::kInconclusive;
    }
    if (!check.cover_ok) report.cover_all = false;
    if (!check.lower_ok) report.lower_all = false;
    if (check.meets_upper == Tristate::kTrue) {
      report.upper_exists = true;
      if (static_cast<int>(check.subset.size()) < n - (2 * nu - tau)) report.size_ok = false;
    }
    report.subsets.push_back(std::move(check));
  }
  return report;
}

int rainbow_matching_number(const BipartiteMultigraph& g, const std::vector<int>& colors,
                            int edge_guard) {
  if (static_cast<int>(colors.size()) != g.edge_count())
    throw std::invalid_argument("rainbow_matching_number: need exactly one color per edge");
  if (g.edge_count() > edge_guard)
    throw guard_error("rainbow_matching_number: " + std::to_string(g.edge_count()) +
                      " edges exceed the guard " + std::to_string(edge_guard));
  const int m = g.edge_count();
  std::vector<char> used_a(g.a_size(), 0), used_b(g.b_size(), 0);
  std::vector<int> used_colors;
  int best = 0;
  const std::function<void(int, int)> extend = [&](int id, int size) {
    best = std::max(best, size);
    if (id == m || size + (m - id) <= best) return;
    const auto [a, b] = g.edge(id);
    if (!used_a[a] && !used_b[b] &&
        std::find(used_colors.begin(), used_colors.end(), colors[id]) == used_colors.end()) {
      used_a[a] = used_b[b] = 1;
      used_colors.push_back(colors[id]);
      extend(id + 1, size + 1);
      used_a[a] = used_b[b] = 0;
      used_colors.pop_back();
    }
    extend(id + 1, size);
  };
  extend(0, 0);
  return best;
}

int rainbow_matching_number(const LinkGraph& link, int edge_guard) {
  return rainbow_matching_number(link.graph, link.color_vertex, edge_guard);
}

int rainbow_matching_number(const ThreePartiteHypergraph& h, int cls, const SolveLimits& limits,
                            int edge_guard) {
  require_class(cls, "rainbow_matching_number");
  const int rainbow = rainbow_matching_number(link_graph(h, cls), edge_guard);
  if (rainbow != matching_number(h, limits))
    throw std::logic_error(
        "rainbow_matching_number: the colored link disagrees with the hypergraph matching "
        "number");
  return rainbow;
}

DeficiencyReport verify_deficiency_bound(const ThreePartiteHypergraph& h, int cls, int d,
                                         std::size_t face_guard, const SolveLimits& limits,
                                         int class_guard, std::int64_t psi_budget) {
  require_class(cls, "verify_deficiency_bound");
  if (d < 0)
    throw std::invalid_argument("verify_deficiency_bound: deficiency must be nonnegative");
  const int n = h.class_size(cls);
  require_class_guard(n, class_guard, "verify_deficiency_bound");
  DeficiencyReport report;
  report.cls = cls;
  report.d = d;
  report.nu = matching_number(h, limits);
  bool any_false = false;
  bool any_undecided = false;
  for (std::vector<int>& subset : subsets_by_size(n)) {
    DeficiencySubsetCheck check;
    check.rhs = static_cast<int>(subset.size()) - d - 2;
    check.subset = std::move(subset);
    if (check.rhs <= -2) {
      check.holds = Tristate::kTrue;
      check.certificate = "vacuous";
    } else {
      const LinkGraph link = link_graph(h, cls, check.subset);
      const SimpleGraph line = line_graph(link.graph);
      if (line.vertex_count() == 0) {
        // conn is exactly -2 and the vacuous rung has already excluded
        // rhs <= -2, so the subset is refuted.
        check.holds = Tristate::kFalse;
        check.certificate = "empty";
      } else if (line.has_isolated_vertex()) {
        check.holds = Tristate::kTrue;
        check.certificate = "cone";
      } else if (static_cast<int>(max_matching(link.graph).size()) >= 2 * (check.rhs + 2)) {
        check.holds = Tristate::kTrue;
        check.certificate = "matching";
      } else {
        bool decided = false;
        try {
          if (psi(line, psi_budget) >= ConnValue(check.rhs)) {
            check.holds = Tristate::kTrue;
            check.certificate = "psi";
            decided = true;
          }
        } catch (const budget_error&) {
        } catch (const guard_error&) {
        }
        if (!decided) {
          const ConnHResult window = conn_h_independence(line, check.rhs, face_guard);
          if (window.complete && window.value < ConnValue(check.rhs)) {
            check.holds = Tristate::kFalse;
            check.certificate = "homology";
          } else {
            check.holds = Tristate::kInconclusive;
            check.certificate = "none";
          }
        }
      }
    }
    if (check.holds == Tristate::kFalse) any_false = true;
    if (check.holds == Tristate::kInconclusive) any_undecided = true;
    report.subsets.push_back(std::move(check));
  }
  report.hypothesis = any_false       ? Tristate::kFalse
                      : any_undecided ? Tristate::kInconclusive
                                      : Tristate::kTrue;
  report.conclusion_holds = report.nu >= n - d;
  if (report.hypothesis == Tristate::kTrue && !report.conclusion_holds)
    throw std::logic_error(
        "verify_deficiency_bound: every subset certified yet the matching number falls short");
  return report;
}

ThreePartiteHypergraph truncated_fano() {
  ThreePartiteHypergraph h({"x1", "x2"}, {"y1", "y2"}, {"z1", "z2"});
  h.add_edge(0, 0, 0);
  h.add_edge(0, 1, 1);
  h.add_edge(1, 0, 1);
  h.add_edge(1, 1, 0);
  return h;
}

ThreePartiteHypergraph spread_matching(int m) {
  if (m < 0) throw std::invalid_argument("spread_matching: m must be nonnegative");
  const int n = 3 * m;
  ThreePartiteHypergraph h(numbered("x", n), numbered("y", n), numbered("z", n));
  for (int j = 0; j < n; ++j) h.add_edge(j, j, j);
  for (int i = 0; i < m; ++i) h.add_edge(3 * i, 3 * i + 1, 3 * i + 2);
  return h;
}

ThreePartiteHypergraph disjoint_union(const ThreePartiteHypergraph& a,
                                      const ThreePartiteHypergraph& b) {
  std::array<std::vector<std::string>, 3> names;
  for (int cls = 0; cls < 3; ++cls) {
    names[cls] = a.class_names(cls);
    std::set<std::string> taken(names[cls].begin(), names[cls].end());
    for (const std::string& original : b.class_names(cls)) {
      std::string candidate = original;
      while (taken.count(candidate) != 0) candidate = "~" + candidate;
      taken.insert(candidate);
      names[cls].push_back(candidate);
    }
  }
  ThreePartiteHypergraph out(names[0], names[1], names[2]);
  for (const ThreePartiteHypergraph::Triple& t : a.edge_list())
    out.add_edge(t.v[0], t.v[1], t.v[2]);
  for (const ThreePartiteHypergraph::Triple& t : b.edge_list())
    out.add_edge(t.v[0] + a.class_size(0), t.v[1] + a.class_size(1),
                 t.v[2] + a.class_size(2));
  return out;
}

}  // namespace ryserlab

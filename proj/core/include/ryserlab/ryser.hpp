#ifndef RYSERLAB_RYSER_HPP
#define RYSERLAB_RYSER_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ryserlab/conn_oracle.hpp"
#include "ryserlab/homology.hpp"
#include "ryserlab/matching.hpp"
#include "ryserlab/three_graph.hpp"

namespace ryserlab {

// Analysis of 3-partite 3-graphs sitting at the cover bound.  For such a
// hypergraph the cover number tau never exceeds twice the matching number
// nu; the routines here decide whether a given instance attains equality and
// check the structural consequences equality forces on the links: their line
// graphs' independence complexes are exactly (nu-2)-connected and their
// matching numbers equal tau.

// True iff tau(h) == 2 * nu(h), both computed by the exact solvers.  The
// bound tau <= 2 * nu is rechecked on the way; a violation would disprove
// the inequality itself and throws std::logic_error.
bool is_ryser_extremal(const ThreePartiteHypergraph& h, const SolveLimits& limits = {});

// Findings for one class of an extremal hypergraph: the connectedness window
// of the full-class link's line-graph independence complex, compared against
// the forced value nu - 2, and the link's matching number, compared against
// tau.
struct RyserClassCheck {
  int cls = 0;
  int link_nu = 0;                 // matching number of the full-class link
  bool link_nu_equals_tau = false; // link_nu == tau(h)?
  ConnHResult conn;                // window for L(link), cap nu(h) - 1
  // conn == nu - 2?  A complete window decides by comparison.  A silent
  // window (no homology at or below the cap) certifies "no" outright except
  // when nu == 2: the candidate obstruction then lives in dimension one,
  // where it can be invisible to homology, so the check stays inconclusive.
  Tristate conn_equals_target = Tristate::kInconclusive;
};

struct RyserLinkReport {
  int nu = 0;
  int tau = 0;
  std::array<RyserClassCheck, 3> per_class;
  // kFalse if any class certifies a mismatch, kInconclusive if none does but
  // some check is undecided, else kTrue.
  Tristate verdict = Tristate::kInconclusive;
};

// Requires is_ryser_extremal(h); throws std::invalid_argument otherwise.
RyserLinkReport verify_connoflink(const ThreePartiteHypergraph& h,
                                  std::size_t face_guard = std::size_t(1) << 20,
                                  const SolveLimits& limits = {});

// Findings for one subset S of the chosen class, writing n for the class
// size and missing for n - |S|.
struct LinkSubsetCheck {
  std::vector<int> subset;  // S, ascending vertex indices
  int link_nu = 0;          // matching number of link(h, S)
  int link_tau = 0;         // cover number of link(h, S) (equal, by duality)
  // missing + link_tau >= tau(h): the complement of S plus a minimum cover
  // of the link is a cover of h, so this holds for every S.
  bool cover_ok = false;
  // conn(L(link)) >= (tau(h) - missing)/2 - 2, certified without homology:
  // an isolated line-graph vertex makes the complex a cone (conn +inf), and
  // otherwise the matching bound conn >= link_nu/2 - 2 reduces the claim to
  // cover_ok.
  bool lower_ok = false;
  // The homology window independently clears the same bound.
  bool window_lower_ok = false;
  ConnHResult conn;  // window for L(link), cap max(nu(h) - 1, -1)
  // conn <= nu(h) - missing - 2?  kTrue when a complete window pins the
  // value at or below the threshold, kFalse when a certified lower bound
  // (cone, or the matching bound) exceeds it, kInconclusive otherwise.
  Tristate meets_upper = Tristate::kInconclusive;
};

struct LinkBoundsReport {
  int cls = 0;
  int nu = 0;
  int tau = 0;
  std::vector<LinkSubsetCheck> subsets;  // all S, by size then lexicographic
  bool cover_all = false;     // cover_ok for every S
  bool lower_all = false;     // lower_ok for every S
  bool upper_exists = false;  // some S with meets_upper == kTrue
  // Every S certified to meet the upper threshold satisfies
  // |S| >= n - (2 nu - tau).
  bool size_ok = false;
};

// Sweeps all subsets of class `cls` (guard: class_size <= class_guard, else
// guard_error) and records, per subset, the two-sided connectedness bounds
// the cover/matching structure forces on the link.  Works on any hypergraph,
// not only extremal ones.
LinkBoundsReport verify_linkconn_bounds(const ThreePartiteHypergraph& h, int cls,
                                        std::size_t face_guard = std::size_t(1) << 20,
                                        const SolveLimits& limits = {},
                                        int class_guard = 12);

// Largest matching using pairwise distinct edge colors, by exhaustive
// include/exclude search.  colors[i] is the color of edge i; the vector must
// have one entry per edge (std::invalid_argument otherwise).  Guard:
// edge_count <= edge_guard, else guard_error.
int rainbow_matching_number(const BipartiteMultigraph& g, const std::vector<int>& colors,
                            int edge_guard = 24);

// Same, with the link's natural coloring by omitted-class vertex.
int rainbow_matching_number(const LinkGraph& link, int edge_guard = 24);

// Colors the full-class link by omitted-class vertex and solves.  Matchings
// of h correspond one-to-one to rainbow matchings of that colored link, so
// the result must equal matching_number(h); a mismatch throws
// std::logic_error, making every call a cross-check of the bijection.
int rainbow_matching_number(const ThreePartiteHypergraph& h, int cls,
                            const SolveLimits& limits = {}, int edge_guard = 24);

// One subset's contribution to the deficiency hypothesis
// conn(L(link(h, S))) >= |S| - d - 2, with the certificate that decided it:
//   "vacuous"   right-hand side <= -2, nothing to check
//   "empty"     link has no edges, conn is exactly -2 (refutation here,
//               since the vacuous rung already handled rhs <= -2)
//   "cone"      the line graph has an isolated vertex (in particular when
//               it is edgeless but nonempty), so the complex is a cone and
//               conn is +inf
//   "matching"  link_nu/2 - 2 meets the bound
//   "psi"       the deletion/explosion lower bound meets it
//   "homology"  a complete window pins conn below the bound (refutation)
//   "none"      nothing decided the subset
struct DeficiencySubsetCheck {
  std::vector<int> subset;
  int rhs = 0;  // |S| - d - 2
  Tristate holds = Tristate::kInconclusive;
  std::string certificate = "none";
};

struct DeficiencyReport {
  int cls = 0;
  int d = 0;
  int nu = 0;  // exact matching number of h
  // kTrue: every subset certified; the conclusion nu >= class_size - d is
  // then asserted against the exact solver (std::logic_error on failure), so
  // a kTrue report never carries a false claim.  kFalse: some subset
  // refuted.  kInconclusive: neither.
  Tristate hypothesis = Tristate::kInconclusive;
  bool conclusion_holds = false;  // nu >= class_size - d (always filled in)
  std::vector<DeficiencySubsetCheck> subsets;
};

// Checks the hypothesis "conn(L(link(h, S))) >= |S| - d - 2 for every subset
// S of class `cls`" by stacking cheap certificates before homology, and
// reports whether the matching-number conclusion it implies holds.  Guard:
// class_size <= class_guard, else guard_error; d < 0 or cls out of range is
// std::invalid_argument.
DeficiencyReport verify_deficiency_bound(const ThreePartiteHypergraph& h, int cls, int d,
                                         std::size_t face_guard = std::size_t(1) << 20,
                                         const SolveLimits& limits = {},
                                         int class_guard = 12,
                                         std::int64_t psi_budget = 50'000'000);

// Fixtures ------------------------------------------------------------------

// Four triples over three two-vertex classes, one for each even-weight
// pattern: tau = 2, nu = 1, every full-class link is the bipartite
// four-cycle.  The smallest instance at the cover bound.
ThreePartiteHypergraph truncated_fano();

// A hypergraph matching of size 3m plus m extra triples, the i-th extra
// triple meeting the (3i)-th, (3i+1)-th, (3i+2)-th matching triples in class
// 0, 1, 2 respectively.  tau = nu = 3m.  Its line graph is a disjoint union
// of m four-vertex stars, whose independence complex is homotopic to the
// (m-1)-sphere: connectedness exactly m - 2 = nu/3 - 2, witnessing that the
// one-third lower bound on line-graph connectedness is sharp.
ThreePartiteHypergraph spread_matching(int m);

// Side-by-side union on disjoint vertex sets.  Names from `b` that collide
// with names in `a` are prefixed with '~' until unique.
ThreePartiteHypergraph disjoint_union(const ThreePartiteHypergraph& a,
                                      const ThreePartiteHypergraph& b);

}  // namespace ryserlab

#endif  // RYSERLAB_RYSER_HPP

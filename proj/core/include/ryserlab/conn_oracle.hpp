#ifndef RYSERLAB_CONN_ORACLE_HPP
#define RYSERLAB_CONN_ORACLE_HPP

// Windowed connectedness oracle and three-valued comparisons on its results.
// A window result is either exact or the guarantee "at least the cap", so
// every result is an interval; comparisons are decided on intervals and
// report an explicit inconclusive status when the intervals genuinely
// overlap, never a guess.

#include <cstddef>

#include "ryserlab/conn_value.hpp"
#include "ryserlab/homology.hpp"
#include "ryserlab/simple_graph.hpp"

namespace ryserlab {

enum class Tristate { kFalse, kTrue, kInconclusive };

// Interval carried by a window result: an incomplete scan through
// dimensions -1..cap with no obstruction pins the value into [cap, +inf].
inline ConnValue conn_lower(const ConnHResult& r) {
  return r.complete ? r.value : ConnValue(r.cap);
}
inline ConnValue conn_upper(const ConnHResult& r) {
  return r.complete ? r.value : ConnValue::infinity();
}

// Decides "conn(a) <= conn(b) + shift" from two window results.
inline Tristate conn_le(const ConnHResult& a, const ConnHResult& b, int shift = 0) {
  const ConnValue zero(0);
  if (conn_upper(a) <= ConnValue::add(conn_lower(b), zero, shift)) return Tristate::kTrue;
  if (ConnValue::add(conn_upper(b), zero, shift) < conn_lower(a)) return Tristate::kFalse;
  return Tristate::kInconclusive;
}

// Evaluates conn_H of the independence complex within a fixed window.
struct ConnOracle {
  int cap;
  std::size_t face_guard = std::size_t(1) << 20;
  ConnHResult operator()(const SimpleGraph& g) const {
    return conn_h_independence(g, cap, face_guard);
  }
};

}  // namespace ryserlab

#endif  // RYSERLAB_CONN_ORACLE_HPP

#ifndef RYSERLAB_CONN_VALUE_HPP
#define RYSERLAB_CONN_VALUE_HPP

#include <limits>
#include <stdexcept>
#include <string>

namespace ryserlab {

// Element of {-2, -1, 0, 1, ...} ∪ {+infinity}, the value lattice shared by
// homological connectedness and the deletion/explosion recursion.  -2 is the
// bottom (void complex / graph with no vertices); +infinity stands for
// "no obstruction at any dimension" (edgeless graphs, cones, acyclic
// complexes).
class ConnValue {
 public:
  constexpr ConnValue() : v_(-2) {}
  constexpr explicit ConnValue(int v) : v_(v) {}

  static constexpr ConnValue infinity() { return ConnValue(kInf); }

  constexpr bool is_infinite() const { return v_ >= kInf; }
  int finite() const {
    if (is_infinite()) throw std::logic_error("ConnValue: infinite has no finite value");
    return v_;
  }

  // Successor (+1); infinity is absorbing.
  constexpr ConnValue succ() const { return is_infinite() ? *this : ConnValue(v_ + 1); }

  friend constexpr bool operator==(ConnValue a, ConnValue b) {
    return (a.is_infinite() && b.is_infinite()) || a.v_ == b.v_;
  }
  friend constexpr bool operator!=(ConnValue a, ConnValue b) { return !(a == b); }
  friend constexpr bool operator<(ConnValue a, ConnValue b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator<=(ConnValue a, ConnValue b) { return a < b || a == b; }
  friend constexpr bool operator>(ConnValue a, ConnValue b) { return b < a; }
  friend constexpr bool operator>=(ConnValue a, ConnValue b) { return b <= a; }

  friend constexpr ConnValue min(ConnValue a, ConnValue b) { return a < b ? a : b; }
  friend constexpr ConnValue max(ConnValue a, ConnValue b) { return a < b ? b : a; }

  // a + b + shift with infinity absorbing; used by the join lower bound.
  static ConnValue add(ConnValue a, ConnValue b, int shift) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ConnValue(a.v_ + b.v_ + shift);
  }

  // True iff value >= m/r - 2, compared exactly over the rationals.
  bool at_least_ratio_bound(int m, int r) const {
    if (is_infinite()) return true;
    return (v_ + 2) * r >= m;
  }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max() / 2;
  int v_;
};

}  // namespace ryserlab

#endif  // RYSERLAB_CONN_VALUE_HPP

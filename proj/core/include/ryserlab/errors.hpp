#ifndef RYSERLAB_ERRORS_HPP
#define RYSERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ryserlab {

// Thrown when an exact computation would exceed a configured size guard
// (vertex budgets, face-count caps, subset enumeration limits).  Guards exist
// so that a mistyped instance fails loudly instead of running forever.
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a search exceeds its node budget.  Callers that can live with
// partial knowledge catch this and report an inconclusive status; a budget
// overrun never silently degrades into a wrong value.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a windowed computation can certify neither outcome and the
// caller required a definite answer (e.g. a reduction step that must decide
// every edge).  Widening the window is the usual remedy.
struct inconclusive_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ryserlab

#endif  // RYSERLAB_ERRORS_HPP

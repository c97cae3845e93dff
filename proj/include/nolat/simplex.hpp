#pragma once

#include "nolat/linalg.hpp"

#include <optional>

namespace nolat {

/// Exact dense simplex for  max c^T x  s.t.  A x <= b, x >= 0, with b >= 0
/// (the origin is feasible). Bland's rule, so it terminates.
struct LpResult {
    enum class Status { Optimal, Unbounded } status = Status::Optimal;
    Rational value;
    RatVector x;
};

LpResult simplex_maximize(const RatMatrix& a, const RatVector& b, const RatVector& c);

}  // namespace nolat

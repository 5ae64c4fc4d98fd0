#pragma once

#include <vector>

#include "repcontain/numeric.hpp"

namespace repcontain {

struct LPResult {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::infeasible;
    Rational objective;              // valid when optimal
    std::vector<Rational> solution;  // basic solution, valid when optimal
};

/// Maximizes c.x subject to A x = b, x >= 0. Dense two-phase simplex over
/// exact rationals with Bland's rule, so no cycling and no tolerances.
/// Redundant equality rows are tolerated.
LPResult lp_maximize(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                     std::vector<Rational> c);

}  // namespace repcontain

#pragma once

#include <optional>
#include <vector>

#include "repcontain/repn.hpp"

namespace repcontain {

/// Direction vector for support maximization. With the SL constraint set,
/// the coordinates sum to exactly 0 (checked on construction).
struct Direction {
    std::vector<Rational> y;
    bool sl_constraint = false;
};

Direction make_direction(std::vector<Rational> y, bool require_sl);

/// Support maximum of s_lambda in direction y. By symmetry of the support
/// this is the dot product of lambda with y sorted decreasing.
Rational trop_eval_schur(const Partition& lambda, const Direction& y);

/// Max over the support; nullopt encodes the bottom element, taken only on
/// the zero input.
std::optional<Rational> trop_eval(const SchurElement& f, const Direction& y);

/// Same on SL representations; requires a sum-zero direction, otherwise the
/// homomorphism does not descend to the quotient.
std::optional<Rational> trop_eval(const Representation& rho, const Direction& y);

/// Enumeration oracle: max of <alpha, y> over the tableau expansion support.
std::optional<Rational> trop_eval_by_support(const SchurElement& f, const Direction& y);

}  // namespace repcontain

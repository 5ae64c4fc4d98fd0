#pragma once

#include <optional>
#include <vector>

#include "repcontain/repn.hpp"

namespace repcontain {

/// Strictly positive point of the torus. With the SL constraint set, the
/// coordinate product is exactly 1 (checked on construction).
struct TorusPoint {
    std::vector<Rational> coords;
    bool sl_constraint = false;
};

/// Validates positivity, and exact unit product when require_sl is set.
TorusPoint make_torus_point(std::vector<Rational> coords, bool require_sl);

/// Builds an SL point from the first n-1 coordinates; the last coordinate is
/// the exact inverse of their product.
TorusPoint sl_point_from_prefix(const std::vector<Rational>& prefix);

/// s_lambda evaluated exactly at a positive point. Small shapes substitute
/// into the tableau expansion; larger ones use a Jacobi-Trudi determinant of
/// complete homogeneous evaluations (total at repeated coordinates, unlike
/// the bialternant quotient).
Rational eval_schur(const Partition& lambda, const std::vector<Rational>& x);

/// Character of rho at an SL torus point, exact. Well-defined on canonical
/// forms because e_n evaluates to 1 there.
Rational eval_char(const Representation& rho, const TorusPoint& x);

/// Double-precision fast path used by the grid scan.
double eval_schur_d(const Partition& lambda, const std::vector<double>& x);
double eval_char_d(const Representation& rho, const std::vector<double>& x);

struct ViolationSearchParams {
    double log_box = 8.0;    // scan e^y for y in [-log_box, log_box]^(n-1)
    int grid_depth = 33;     // points per axis
    int descent_iters = 50;  // coordinate-descent refinement rounds
    unsigned threads = 1;
};

struct ViolationSearchResult {
    /// Exact rational point with eval_char(rho) >= eval_char(sigma); absence
    /// proves nothing.
    std::optional<TorusPoint> witness;
    /// Non-violating grid points where the gap came closest to zero; later
    /// used to stress the non-strict converse checks.
    std::vector<TorusPoint> near_minima;
};

/// Scans the positive SL torus slice for points where chi_rho >= chi_sigma.
/// Float candidates are snapped to rationals and re-verified exactly; the
/// reported witness is the first hit in row-major grid order regardless of
/// thread count.
ViolationSearchResult search_violation_detailed(const Representation& rho,
                                                const Representation& sigma,
                                                const ViolationSearchParams& params = {});

std::optional<TorusPoint> search_violation(const Representation& rho,
                                           const Representation& sigma,
                                           const ViolationSearchParams& params = {});

}  // namespace repcontain

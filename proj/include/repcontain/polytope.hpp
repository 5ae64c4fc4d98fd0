#pragma once

#include <optional>
#include <vector>

#include "repcontain/lp.hpp"
#include "repcontain/repn.hpp"

namespace repcontain {

/// Convex hull data for the weights of a representation: dominant projected
/// highest weights (generators) and the union of their permutation orbits
/// (vertices; a superset of the hull's true vertex set, which is harmless
/// for membership LPs). All points live in the sum-zero hyperplane.
struct WeightPolytope {
    int n = 0;
    std::vector<std::vector<Rational>> generators;
    std::vector<std::vector<Rational>> vertices;
};

/// Projects each support partition to the sum-zero hyperplane (zero-pad to n
/// entries, subtract the mean) and expands the symmetric-group orbits.
/// Throws on the zero representation.
WeightPolytope weight_polytope(const Representation& rho);

struct MembershipResult {
    bool inside_relint = false;
    bool inside_closed = false;
    /// Optimal lower bound on the convex weights; negative when p only lies
    /// in the affine hull, absent when even that fails.
    std::optional<Rational> epsilon;
};

/// Exact LP: maximize eps subject to p being a convex combination with all
/// vertex weights >= eps. Closed membership is eps* >= 0, relative-interior
/// membership is eps* > 0. The returned optimum is re-substituted exactly.
MembershipResult lp_relint_membership(const std::vector<Rational>& p, const WeightPolytope& P);

/// Affine dimension of a point set (rank of differences), -1 when empty.
int affine_dimension(const std::vector<std::vector<Rational>>& points);

/// WP(rho) inside the relative interior of WP(sigma): sigma's polytope must
/// be full-dimensional in the sum-zero hyperplane and every generator of rho
/// must pass the strict membership LP. Symmetry makes generators sufficient.
bool wp_strict_containment(const Representation& rho, const Representation& sigma);

/// Non-strict hull containment, used by the converse checks.
bool wp_containment(const Representation& rho, const Representation& sigma);

/// Partial-sums test against a single permutation orbit; independent oracle
/// for the membership LP.
MembershipResult orbit_membership_by_majorization(const std::vector<Rational>& p,
                                                  const std::vector<Rational>& generator);

}  // namespace repcontain

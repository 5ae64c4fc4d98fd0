#pragma once

#include "repcontain/schur.hpp"

namespace repcontain {

/// Isomorphism class of a finite-dimensional SL(n,C) representation, stored
/// as a Schur element in canonical form: every partition in the support has
/// fewer than n rows (full columns of n boxes are the determinant, which is
/// trivial here). Canonical form is maintained eagerly, so containment is a
/// plain coefficientwise check.
class Representation {
public:
    explicit Representation(int n);  // the zero representation

    static Representation trivial(int n);
    static Representation standard(int n);
    static Representation irreducible(int n, const Partition& lambda);
    /// Direct sum of the trivial and the standard representation; the
    /// power-universal element every containment search is measured against.
    static Representation trivial_plus_standard(int n);

    int group_rank() const { return element_.vars(); }
    const SchurElement& element() const { return element_; }
    bool is_zero() const { return element_.is_zero(); }

    bool operator==(const Representation&) const = default;

    std::string to_string() const { return element_.to_string(); }

private:
    friend Representation canonicalize(const SchurElement& f);
    explicit Representation(SchurElement canonical) : element_(std::move(canonical)) {}

    SchurElement element_;
};

/// Applies the SL reduction to every support partition, merging collisions.
Representation canonicalize(const SchurElement& f);

Representation tensor(const Representation& a, const Representation& b);
Representation direct_sum(const Representation& a, const Representation& b);
Representation tensor_power(const Representation& a, int k);

/// True iff rho is (isomorphic to) a subrepresentation of sigma.
bool contains(const Representation& rho, const Representation& sigma);

BigInt dimension(const Representation& rho);

/// Weyl dimension product for the GL(n) irrep with highest weight lambda.
BigInt weyl_dimension(const Partition& lambda, int n);

/// Tableau-count route to the same number; kept separate as a cross-oracle.
BigInt ssyt_count(const Partition& lambda, int n);

/// Contains both the trivial and the standard representation.
bool is_generic(const Representation& rho);

struct PowerUniversalityWitness {
    int k_upper;  // least k with rho <= (1 + standard)^k
    int k_lower;  // least k with trivial <= rho * (1 + standard)^k
};

/// Searches for the minimal exponents witnessing power universality of the
/// trivial-plus-standard element against rho. The search is capped by bounds
/// derived from the box-count inequality and the dual Pieri rule; exceeding
/// a cap signals an implementation bug, not a property of rho.
PowerUniversalityWitness power_universality_witness(const Representation& rho);

}  // namespace repcontain

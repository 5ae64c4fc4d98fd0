#pragma once

#include <map>
#include <vector>

#include "repcontain/numeric.hpp"
#include "repcontain/partition.hpp"

namespace repcontain {

/// Element of the semiring of Schur-positive symmetric integer polynomials
/// in a fixed number of variables: a finitely supported map from partitions
/// of length <= n to positive multiplicities. Zero coefficients are never
/// stored.
class SchurElement {
public:
    explicit SchurElement(int n);
    SchurElement(int n, const Partition& lambda, BigInt mult = 1);

    static SchurElement unit(int n) { return SchurElement(n, Partition{}); }
    /// e_j = s_(1,...,1) with j rows; requires 0 <= j <= n.
    static SchurElement elementary(int n, int j);

    int vars() const { return n_; }
    const std::map<Partition, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(const Partition& lambda) const;
    int max_box_count() const;

    /// Adds mult copies of s_lambda. Throws if length(lambda) > n.
    SchurElement& add_term(const Partition& lambda, const BigInt& mult);

    bool operator==(const SchurElement&) const = default;

    std::string to_string() const;

private:
    int n_;
    std::map<Partition, BigInt> terms_;
};

SchurElement add(const SchurElement& f, const SchurElement& g);
SchurElement multiply(const SchurElement& f, const SchurElement& g);
SchurElement power(const SchurElement& f, int k);
SchurElement scale(const BigInt& c, const SchurElement& f);

/// Coefficientwise order: every coefficient of f is <= the matching one in g.
bool leq(const SchurElement& f, const SchurElement& g);

inline SchurElement operator+(const SchurElement& f, const SchurElement& g) { return add(f, g); }
inline SchurElement operator*(const SchurElement& f, const SchurElement& g) {
    return multiply(f, g);
}
inline SchurElement operator*(const BigInt& c, const SchurElement& f) { return scale(c, f); }

/// Littlewood-Richardson coefficient c^lambda_{mu nu}: the number of
/// column-strict, row-weak skew tableaux of shape lambda/mu and content nu
/// whose reverse reading word is a ballot sequence. Zero when the sizes do
/// not add up or mu is not contained in lambda.
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_mu * e_j expanded by adding j boxes to mu, no two in the same row,
/// truncated to length <= n. Multiplicity-free.
SchurElement pieri_e(const Partition& mu, int j, int n);

/// Symmetric polynomial written in the monomial basis: exponent vector of
/// length n -> coefficient.
struct MonomialExpansion {
    int n = 0;
    std::map<std::vector<int>, BigInt> terms;

    bool operator==(const MonomialExpansion&) const = default;
};

/// Expands every s_lambda as its sum over semistandard Young tableaux with
/// entries in 1..n. This is the independent oracle route: it never touches
/// the Littlewood-Richardson machinery.
MonomialExpansion monomial_expansion(const SchurElement& f);
MonomialExpansion monomial_expansion(const Partition& lambda, int n);

MonomialExpansion monomial_product(const MonomialExpansion& a, const MonomialExpansion& b);

/// Inverse of monomial_expansion on Schur-positive input: repeatedly peel
/// off the lex-greatest exponent vector (always a partition, by symmetry).
/// Throws internal_inconsistency_error if the input is not Schur positive.
SchurElement decompose_monomials(const MonomialExpansion& m);

}  // namespace repcontain

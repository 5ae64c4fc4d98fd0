#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "repcontain/repn.hpp"

namespace repcontain {

/// SU(2) representation described by how often each irrep dimension occurs.
struct MultiplicityMap {
    std::map<int, BigInt> mult;  // d >= 1 -> multiplicity > 0

    bool is_zero() const { return mult.empty(); }
    int max_dimension() const { return mult.empty() ? 0 : mult.rbegin()->first; }
    BigInt total_dimension() const;
};

/// Requires group rank 2; the reduced partition (m) becomes dimension m+1.
MultiplicityMap from_representation(const Representation& rho);

/// Dense single-variable integer polynomial, coefficients low-to-high.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt coefficient(int k) const;

    Rational eval(const Rational& t) const;
    IntPolynomial derivative() const;

    bool operator==(const IntPolynomial&) const = default;

private:
    std::vector<BigInt> coeffs_;
};

/// g(t) = t^D (chi_sigma(t) - chi_rho(t)) with t = e^alpha and D one less
/// than the largest supported dimension: the character difference cleared of
/// negative powers. g(1) equals dim(sigma) - dim(rho).
IntPolynomial char_diff_polynomial(const MultiplicityMap& rho, const MultiplicityMap& sigma);

struct PositivityCertificate {
    enum class Status { certified, not_positive, zero_polynomial };
    Status status = Status::zero_polynomial;
    /// Exact rational t >= 1 with g(t) <= 0, when one exists. A tangential
    /// irrational root has no rational witness; then only the interval below
    /// is reported.
    std::optional<Rational> witness;
    /// Rational interval certified (by Sturm count) to contain a real root.
    std::optional<std::pair<Rational, Rational>> root_interval;
};

/// Decides g > 0 on [1, infinity) exactly: g(1) > 0 plus a Sturm-sequence
/// root count of the square-free part on [1, B] for a Cauchy root bound B.
PositivityCertificate certify_strict_positive_on_ray(const IntPolynomial& g);

/// Strict comparison of the maximal supported irrep dimensions.
bool su2_tropical_check(const MultiplicityMap& rho, const MultiplicityMap& sigma);

}  // namespace repcontain

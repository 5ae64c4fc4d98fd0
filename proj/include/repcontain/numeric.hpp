#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace repcontain {

// Coefficients and character values are exact: multiplicities blow up like
// dim^k under tensor powers, and every reported witness must survive exact
// re-verification.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a result contradicts something the theory guarantees.
/// Reaching this is an implementation bug, never a property of the input.
class internal_inconsistency_error : public std::logic_error {
public:
    explicit internal_inconsistency_error(const std::string& what)
        : std::logic_error(what) {}
};

/// Canonical "p/q" form, q >= 1, gcd(p,q) = 1. Used for all serialized
/// rationals so outputs stay exact and diff-able.
std::string rational_to_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

std::string bigint_to_string(const BigInt& v);

/// log of a positive rational, stable for values far outside double range.
double log_rational(const Rational& r);

/// Best rational approximation with denominator <= max_den (continued
/// fractions). Input must be finite and positive.
Rational rational_approx(double v, std::int64_t max_den);

double to_double(const Rational& r);

}  // namespace repcontain

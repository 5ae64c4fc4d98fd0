#include "repcontain/numeric.hpp"

#include <limits>

namespace repcontain {

std::string rational_to_string(const Rational& r) {
    return bigint_to_string(numerator(r)) + "/" + bigint_to_string(denominator(r));
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(s));
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

std::string bigint_to_string(const BigInt& v) { return v.str(); }

double log_rational(const Rational& r) {
    if (r <= 0) throw std::invalid_argument("log_rational requires a positive argument");
    auto log_big = [](const BigInt& v) {
        double d = v.template convert_to<double>();
        if (std::isfinite(d) && d > 0) return std::log(d);
        // Scale down by a power of two so the mantissa fits in a double.
        unsigned bits = msb(v);  // v >= 2^bits
        unsigned shift = bits > 900 ? bits - 900 : 0;
        BigInt scaled = v >> shift;
        return std::log(scaled.template convert_to<double>()) +
               static_cast<double>(shift) * std::log(2.0);
    };
    return log_big(numerator(r)) - log_big(denominator(r));
}

Rational rational_approx(double v, std::int64_t max_den) {
    if (!std::isfinite(v) || v <= 0) {
        throw std::invalid_argument("rational_approx requires a finite positive value");
    }
    // Stern-Brocot style continued fraction expansion.
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(x);
        if (fl > static_cast<double>(std::numeric_limits<std::int64_t>::max() / 2)) break;
        auto a = static_cast<std::int64_t>(fl);
        if (q0 + (q1 > 0 ? a * q1 : 0) > max_den && iter > 0) break;
        std::int64_t p2 = a * p1 + p0;
        std::int64_t q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = x - fl;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    if (q1 == 0 || p1 <= 0) return Rational(1);
    return Rational(BigInt(p1), BigInt(q1));
}

double to_double(const Rational& r) { return r.template convert_to<double>(); }

}  // namespace repcontain

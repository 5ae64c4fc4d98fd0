#include "repcontain/tropical.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace repcontain {

Direction make_direction(std::vector<Rational> y, bool require_sl) {
    if (y.empty()) throw std::invalid_argument("direction needs at least one coordinate");
    if (require_sl) {
        Rational sum(0);
        for (const Rational& c : y) sum += c;
        if (sum != 0) {
            throw std::invalid_argument("SL direction must have coordinate sum exactly 0");
        }
    }
    return Direction{std::move(y), require_sl};
}

Rational trop_eval_schur(const Partition& lambda, const Direction& y) {
    if (lambda.length() > static_cast<int>(y.y.size())) {
        throw std::invalid_argument("partition has more rows than coordinates");
    }
    std::vector<Rational> sorted = y.y;
    std::sort(sorted.begin(), sorted.end(), std::greater<Rational>());
    Rational value(0);
    for (int i = 0; i < lambda.length(); ++i) {
        value += Rational(lambda.part(i)) * sorted[static_cast<size_t>(i)];
    }
    return value;
}

std::optional<Rational> trop_eval(const SchurElement& f, const Direction& y) {
    if (f.vars() != static_cast<int>(y.y.size())) {
        throw std::invalid_argument("mismatched variable counts");
    }
    std::optional<Rational> best;
    for (const auto& [lambda, mult] : f.terms()) {
        Rational v = trop_eval_schur(lambda, y);
        if (!best || v > *best) best = v;
    }
    return best;
}

std::optional<Rational> trop_eval(const Representation& rho, const Direction& y) {
    if (!y.sl_constraint) {
        throw std::invalid_argument(
            "tropical evaluation of a representation requires a sum-zero direction");
    }
    return trop_eval(rho.element(), y);
}

std::optional<Rational> trop_eval_by_support(const SchurElement& f, const Direction& y) {
    if (f.vars() != static_cast<int>(y.y.size())) {
        throw std::invalid_argument("mismatched variable counts");
    }
    std::optional<Rational> best;
    for (const auto& [alpha, mult] : monomial_expansion(f).terms) {
        Rational v(0);
        for (size_t i = 0; i < alpha.size(); ++i) v += Rational(alpha[i]) * y.y[i];
        if (!best || v > *best) best = v;
    }
    return best;
}

}  // namespace repcontain

#include "repcontain/su2.hpp"

#include <algorithm>
#include <stdexcept>

namespace repcontain {

BigInt MultiplicityMap::total_dimension() const {
    BigInt total = 0;
    for (const auto& [d, m] : mult) total += BigInt(d) * m;
    return total;
}

MultiplicityMap from_representation(const Representation& rho) {
    if (rho.group_rank() != 2) {
        throw std::invalid_argument("multiplicity maps are defined for group rank 2");
    }
    MultiplicityMap out;
    for (const auto& [lambda, m] : rho.element().terms()) {
        out.mult[lambda.part(0) + 1] += m;
    }
    return out;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

Rational IntPolynomial::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<BigInt> d;
    for (size_t k = 1; k < coeffs_.size(); ++k) d.push_back(BigInt(k) * coeffs_[k]);
    return IntPolynomial(std::move(d));
}

IntPolynomial char_diff_polynomial(const MultiplicityMap& rho, const MultiplicityMap& sigma) {
    int shift = std::max(rho.max_dimension(), sigma.max_dimension()) - 1;
    if (shift < 0) return IntPolynomial::zero();
    std::vector<BigInt> coeffs(static_cast<size_t>(2 * shift + 1), BigInt(0));
    auto accumulate = [&](const MultiplicityMap& m, int sign) {
        for (const auto& [d, mult] : m.mult) {
            // sinh(alpha d)/sinh(alpha) = sum of t^(d-1-2j), shifted by t^D.
            for (int j = 0; j < d; ++j) {
                coeffs[static_cast<size_t>(shift + d - 1 - 2 * j)] += sign * mult;
            }
        }
    };
    accumulate(sigma, +1);
    accumulate(rho, -1);
    return IntPolynomial(std::move(coeffs));
}

namespace {

// Sturm machinery over exact rationals. Chains are normalized to primitive
// integer coefficient vectors after every remainder step to keep the numbers
// small; positive scaling never changes a sign sequence.
using RatPoly = std::vector<Rational>;  // low-to-high, trimmed

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
    RatPoly out;
    for (const BigInt& c : p.coefficients()) out.emplace_back(c);
    return out;
}

Rational eval_rat(const RatPoly& p, const Rational& t) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

RatPoly derivative_rat(const RatPoly& p) {
    RatPoly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * p[k]);
    return d;
}

void normalize_primitive(RatPoly& p) {
    trim(p);
    if (p.empty()) return;
    BigInt den_lcm = 1;
    for (const Rational& c : p) den_lcm = lcm(den_lcm, denominator(c));
    BigInt num_gcd = 0;
    for (const Rational& c : p) num_gcd = gcd(num_gcd, numerator(c) * (den_lcm / denominator(c)));
    if (num_gcd == 0) return;
    Rational scale(den_lcm, num_gcd);
    for (Rational& c : p) c *= scale;
}

// Remainder of num modulo den (den nonzero).
RatPoly remainder_rat(RatPoly num, const RatPoly& den) {
    trim(num);
    while (num.size() >= den.size() && !num.empty()) {
        Rational factor = num.back() / den.back();
        size_t offset = num.size() - den.size();
        for (size_t i = 0; i < den.size(); ++i) num[offset + i] -= factor * den[i];
        trim(num);
    }
    return num;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = remainder_rat(a, b);
        normalize_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    normalize_primitive(a);
    return a;
}

// Exact quotient when den divides num.
RatPoly quotient_rat(RatPoly num, const RatPoly& den) {
    trim(num);
    RatPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational factor = num.back() / den.back();
        size_t offset = num.size() - den.size();
        q[offset] = factor;
        for (size_t i = 0; i < den.size(); ++i) num[offset + i] -= factor * den[i];
        trim(num);
    }
    return q;
}

std::vector<RatPoly> sturm_chain(const RatPoly& squarefree) {
    std::vector<RatPoly> chain;
    chain.push_back(squarefree);
    RatPoly d = derivative_rat(squarefree);
    normalize_primitive(d);
    if (!d.empty()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().empty()) {
        RatPoly r = remainder_rat(chain[chain.size() - 2], chain.back());
        normalize_primitive(r);
        if (r.empty()) break;
        for (Rational& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int sign_variations(const std::vector<RatPoly>& chain, const Rational& t) {
    int count = 0, prev = 0;
    for (const RatPoly& p : chain) {
        int s = sign_of(eval_rat(p, t));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Distinct real roots of the square-free polynomial in (a, b], assuming
// chain.front()(a) != 0.
int roots_in(const std::vector<RatPoly>& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational cauchy_root_bound(const RatPoly& p) {
    Rational lead = p.back();
    Rational worst(0);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Rational q = abs(p[i] / lead);
        if (q > worst) worst = q;
    }
    return worst + 2;  // strictly beyond every real root
}

}  // namespace

PositivityCertificate certify_strict_positive_on_ray(const IntPolynomial& g) {
    PositivityCertificate cert;
    if (g.is_zero()) {
        cert.status = PositivityCertificate::Status::zero_polynomial;
        return cert;
    }
    Rational at_one = g.eval(Rational(1));
    if (at_one <= 0) {
        cert.status = PositivityCertificate::Status::not_positive;
        cert.witness = Rational(1);
        return cert;
    }
    RatPoly p = to_rat(g);
    RatPoly d = derivative_rat(p);
    RatPoly squarefree = p;
    if (!d.empty()) {
        RatPoly common = poly_gcd(p, d);
        if (common.size() > 1) squarefree = quotient_rat(p, common);
        normalize_primitive(squarefree);
    }
    if (squarefree.size() <= 1) {
        cert.status = PositivityCertificate::Status::certified;
        return cert;
    }
    std::vector<RatPoly> chain = sturm_chain(squarefree);
    Rational lo(1);
    Rational hi = cauchy_root_bound(squarefree);
    int roots = roots_in(chain, lo, hi);
    if (roots == 0) {
        cert.status = PositivityCertificate::Status::certified;
        return cert;
    }
    // Isolate the leftmost root, looking for a rational point with g <= 0
    // along the way. An even-multiplicity root may admit none; then the
    // isolating interval is the certificate.
    cert.status = PositivityCertificate::Status::not_positive;
    for (int iter = 0; iter < 128; ++iter) {
        Rational mid = (lo + hi) / 2;
        if (g.eval(mid) <= 0) {
            cert.witness = mid;
            return cert;
        }
        if (roots_in(chain, lo, mid) >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    if (g.eval(hi) <= 0) {
        cert.witness = hi;
        return cert;
    }
    cert.root_interval = std::make_pair(lo, hi);
    return cert;
}

bool su2_tropical_check(const MultiplicityMap& rho, const MultiplicityMap& sigma) {
    if (rho.is_zero() || sigma.is_zero()) {
        throw std::invalid_argument("tropical comparison requires nonzero multiplicity maps");
    }
    return rho.max_dimension() < sigma.max_dimension();
}

}  // namespace repcontain

#include "repcontain/repn.hpp"

#include <stdexcept>

namespace repcontain {

namespace {

void require_group(int n) {
    if (n < 2) throw std::invalid_argument("group rank must be at least 2");
}

void require_same_group(const Representation& a, const Representation& b) {
    if (a.group_rank() != b.group_rank()) {
        throw std::invalid_argument("mismatched group ranks");
    }
}

}  // namespace

Representation::Representation(int n) : element_(n) { require_group(n); }

Representation Representation::trivial(int n) {
    require_group(n);
    return canonicalize(SchurElement::unit(n));
}

Representation Representation::standard(int n) {
    require_group(n);
    return canonicalize(SchurElement(n, Partition{1}));
}

Representation Representation::irreducible(int n, const Partition& lambda) {
    require_group(n);
    return canonicalize(SchurElement(n, lambda));
}

Representation Representation::trivial_plus_standard(int n) {
    require_group(n);
    SchurElement u = SchurElement::unit(n);
    u.add_term(Partition{1}, 1);
    return canonicalize(u);
}

Representation canonicalize(const SchurElement& f) {
    require_group(f.vars());
    SchurElement reduced(f.vars());
    for (const auto& [lambda, mult] : f.terms()) {
        reduced.add_term(reduce_mod_determinant(lambda, f.vars()), mult);
    }
    return Representation(std::move(reduced));
}

Representation tensor(const Representation& a, const Representation& b) {
    require_same_group(a, b);
    return canonicalize(multiply(a.element(), b.element()));
}

Representation direct_sum(const Representation& a, const Representation& b) {
    require_same_group(a, b);
    return canonicalize(add(a.element(), b.element()));
}

Representation tensor_power(const Representation& a, int k) {
    if (k < 0) throw std::invalid_argument("exponent must be nonnegative");
    Representation out = Representation::trivial(a.group_rank());
    for (int i = 0; i < k; ++i) out = tensor(out, a);
    return out;
}

bool contains(const Representation& rho, const Representation& sigma) {
    require_same_group(rho, sigma);
    return leq(rho.element(), sigma.element());
}

BigInt weyl_dimension(const Partition& lambda, int n) {
    if (lambda.length() > n) return 0;
    Rational dim(1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            dim *= Rational(lambda.part(i) - lambda.part(j) + j - i, j - i);
        }
    }
    if (denominator(dim) != 1) {
        throw internal_inconsistency_error("Weyl dimension product is not integral");
    }
    return numerator(dim);
}

BigInt ssyt_count(const Partition& lambda, int n) {
    BigInt total = 0;
    for (const auto& [alpha, c] : monomial_expansion(lambda, n).terms) total += c;
    return total;
}

BigInt dimension(const Representation& rho) {
    BigInt total = 0;
    for (const auto& [lambda, mult] : rho.element().terms()) {
        total += mult * weyl_dimension(lambda, rho.group_rank());
    }
    return total;
}

bool is_generic(const Representation& rho) {
    return rho.element().coefficient(Partition{}) >= 1 &&
           rho.element().coefficient(Partition{1}) >= 1;
}

namespace {

// Upper bound on the exponent needed for rho <= u^k: each s_lambda needs at
// most |lambda| copies of e_1, multiplicity m costs an extra n*ceil(log2 m)
// (doubling via 2 <= u^n), and each further support term another n.
int upper_search_bound(const Representation& rho) {
    int n = rho.group_rank();
    int bound = 0;
    bool first = true;
    for (const auto& [lambda, mult] : rho.element().terms()) {
        int bits = 0;
        BigInt m = mult;
        while (m > 1) {
            ++bits;
            m = (m + 1) / 2;
        }
        bound = std::max(bound, lambda.size() + n * bits);
        if (!first) bound += n;
        first = false;
    }
    return bound;
}

// Dual Pieri bound for trivial <= s_lambda * e_1^k, maximized over support.
int lower_search_bound(const Representation& rho) {
    int n = rho.group_rank();
    int bound = 0;
    for (const auto& [lambda, mult] : rho.element().terms()) {
        bound = std::max(bound, n * lambda.part(0) - lambda.size());
    }
    return bound;
}

}  // namespace

PowerUniversalityWitness power_universality_witness(const Representation& rho) {
    if (rho.is_zero()) {
        throw std::invalid_argument("power universality witness requires a nonzero input");
    }
    int n = rho.group_rank();
    Representation u = Representation::trivial_plus_standard(n);
    Representation trivial = Representation::trivial(n);

    int upper_cap = upper_search_bound(rho);
    int k_upper = -1;
    Representation u_power = trivial;
    for (int k = 0; k <= upper_cap; ++k) {
        if (contains(rho, u_power)) {
            k_upper = k;
            break;
        }
        u_power = tensor(u_power, u);
    }
    if (k_upper < 0) {
        throw internal_inconsistency_error(
            "power universality: upper search exceeded its analytic bound");
    }

    int lower_cap = lower_search_bound(rho);
    int k_lower = -1;
    Representation boosted = rho;
    for (int k = 0; k <= lower_cap; ++k) {
        if (contains(trivial, boosted)) {
            k_lower = k;
            break;
        }
        boosted = tensor(boosted, u);
    }
    if (k_lower < 0) {
        throw internal_inconsistency_error(
            "power universality: lower search exceeded its analytic bound");
    }
    return PowerUniversalityWitness{k_upper, k_lower};
}

}  // namespace repcontain

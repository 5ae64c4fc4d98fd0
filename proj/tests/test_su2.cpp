#include <doctest.h>

#include <random>

#include "repcontain/characters.hpp"
#include "repcontain/polytope.hpp"
#include "repcontain/su2.hpp"

using namespace repcontain;

namespace {

MultiplicityMap mm(std::initializer_list<std::pair<int, int>> entries) {
    MultiplicityMap m;
    for (const auto& [d, c] : entries) m.mult[d] = c;
    return m;
}

IntPolynomial poly(std::initializer_list<long> coeffs) {
    std::vector<BigInt> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

Representation random_rep2(std::mt19937_64& rng, int max_boxes, int max_terms) {
    SchurElement f(2);
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        int m = static_cast<int>(rng() % (max_boxes + 1));
        f.add_term(m == 0 ? Partition{} : Partition{m}, BigInt(1 + rng() % 3));
    }
    return canonicalize(f);
}

}  // namespace

TEST_CASE("multiplicity maps from rank-2 representations") {
    SchurElement f = SchurElement::unit(2);
    f.add_term(Partition{1}, 1);
    f.add_term(Partition{2}, 1);
    MultiplicityMap m = from_representation(canonicalize(f));
    CHECK(m.mult == mm({{1, 1}, {2, 1}, {3, 1}}).mult);

    MultiplicityMap two = from_representation(
        canonicalize(scale(2, SchurElement(2, Partition{1}))));
    CHECK(two.mult == mm({{2, 2}}).mult);

    CHECK(from_representation(Representation::trivial(2)).mult == mm({{1, 1}}).mult);
    CHECK_THROWS_AS(from_representation(Representation::trivial(3)), std::invalid_argument);
}

TEST_CASE("character difference polynomial examples") {
    IntPolynomial g = char_diff_polynomial(mm({{2, 2}}), mm({{1, 1}, {2, 1}, {3, 1}}));
    CHECK(g == poly({1, -1, 2, -1, 1}));
    CHECK(g.eval(Rational(1)) == 2);

    CHECK(char_diff_polynomial(mm({{2, 2}}), mm({{2, 2}})).is_zero());
    CHECK(char_diff_polynomial(mm({}), mm({})).is_zero());
}

TEST_CASE("difference polynomial matches exact character evaluation") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        Representation rho = random_rep2(rng, 5, 3);
        Representation sigma = random_rep2(rng, 5, 3);
        MultiplicityMap mr = from_representation(rho);
        MultiplicityMap ms = from_representation(sigma);
        IntPolynomial g = char_diff_polynomial(mr, ms);
        int shift = std::max(mr.max_dimension(), ms.max_dimension()) - 1;
        Rational t(static_cast<long>(rng() % 9 + 1), static_cast<long>(rng() % 9 + 1));
        TorusPoint x = make_torus_point({t, Rational(1) / t}, true);
        Rational expected = eval_char(sigma, x) - eval_char(rho, x);
        for (int e = 0; e < shift; ++e) expected *= t;
        CHECK(g.eval(t) == expected);
    }
}

TEST_CASE("characters are palindromic in t vs 1/t") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Representation rho = random_rep2(rng, 6, 3);
        Rational t(static_cast<long>(rng() % 7 + 2), static_cast<long>(rng() % 5 + 1));
        TorusPoint x = make_torus_point({t, Rational(1) / t}, true);
        TorusPoint xinv = make_torus_point({Rational(1) / t, t}, true);
        CHECK(eval_char(rho, x) == eval_char(rho, xinv));
    }
}

TEST_CASE("positivity certification examples") {
    PositivityCertificate cert = certify_strict_positive_on_ray(poly({1, -1, 2, -1, 1}));
    CHECK(cert.status == PositivityCertificate::Status::certified);

    PositivityCertificate zero_dim = certify_strict_positive_on_ray(poly({0, 1, -1}));
    // g(1) = 0: equal dimensions, witnessed at t = 1.
    CHECK(zero_dim.status == PositivityCertificate::Status::not_positive);
    CHECK(zero_dim.witness == Rational(1));

    PositivityCertificate neg = certify_strict_positive_on_ray(poly({-1}));
    CHECK(neg.status == PositivityCertificate::Status::not_positive);
    CHECK(neg.witness == Rational(1));

    CHECK(certify_strict_positive_on_ray(IntPolynomial::zero()).status ==
          PositivityCertificate::Status::zero_polynomial);
}

TEST_CASE("certification finds interior sign crossings") {
    // (t-2)(t-3) = t^2 - 5t + 6: positive at 1, dips below between the roots.
    PositivityCertificate cert = certify_strict_positive_on_ray(poly({6, -5, 1}));
    CHECK(cert.status == PositivityCertificate::Status::not_positive);
    REQUIRE(cert.witness.has_value());
    CHECK(*cert.witness >= 1);
    CHECK(poly({6, -5, 1}).eval(*cert.witness) <= 0);
}

TEST_CASE("tangential roots are reported with an isolating interval") {
    // (t^2 - 3t + 1)^2 touches zero at the golden-ratio-squared point.
    IntPolynomial g = poly({1, -6, 11, -6, 1});
    PositivityCertificate cert = certify_strict_positive_on_ray(g);
    CHECK(cert.status == PositivityCertificate::Status::not_positive);
    if (cert.witness) {
        CHECK(g.eval(*cert.witness) <= 0);
    } else {
        REQUIRE(cert.root_interval.has_value());
        CHECK(cert.root_interval->first >= 1);
        CHECK(cert.root_interval->first < cert.root_interval->second);
    }
}

TEST_CASE("certificates agree with dense sampling on random polynomials") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        int degree = static_cast<int>(rng() % 13);
        std::vector<BigInt> coeffs;
        for (int k = 0; k <= degree; ++k) coeffs.emplace_back(static_cast<long>(rng() % 19) - 9);
        IntPolynomial g(std::move(coeffs));
        PositivityCertificate cert = certify_strict_positive_on_ray(g);
        if (cert.status == PositivityCertificate::Status::certified) {
            for (int k = 0; k <= 60; ++k) {
                CHECK(g.eval(Rational(1) + Rational(k, 4)) > 0);
            }
        } else if (cert.status == PositivityCertificate::Status::not_positive && cert.witness) {
            CHECK(g.eval(*cert.witness) <= 0);
            CHECK(*cert.witness >= 1);
        }
    }
}

TEST_CASE("tropical check compares max dimensions") {
    CHECK(su2_tropical_check(mm({{2, 2}}), mm({{1, 1}, {2, 1}, {3, 1}})));
    CHECK_FALSE(su2_tropical_check(mm({{3, 1}}), mm({{2, 2}})));
    CHECK_FALSE(su2_tropical_check(mm({{3, 1}}), mm({{3, 5}})));
    CHECK_THROWS_AS(su2_tropical_check(mm({}), mm({{1, 1}})), std::invalid_argument);
}

TEST_CASE("tropical check agrees with the polytope machinery at rank 2") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        Representation rho = random_rep2(rng, 5, 3);
        Representation sigma = random_rep2(rng, 5, 3);
        bool via_mult = su2_tropical_check(from_representation(rho), from_representation(sigma));
        CHECK(via_mult == wp_strict_containment(rho, sigma));
    }
}

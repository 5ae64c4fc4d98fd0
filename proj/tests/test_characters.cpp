#include <doctest.h>

#include <random>

#include "repcontain/characters.hpp"

using namespace repcontain;

namespace {

std::vector<Rational> rat(std::initializer_list<Rational> xs) { return {xs}; }

Representation random_rep(std::mt19937_64& rng, int n, int max_boxes, int max_terms) {
    auto shapes = partitions_up_to(max_boxes, n - 1);
    SchurElement f(n);
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        f.add_term(shapes[rng() % shapes.size()], BigInt(1 + rng() % 3));
    }
    return canonicalize(f);
}

TorusPoint random_sl_point(std::mt19937_64& rng, int n) {
    std::vector<Rational> prefix;
    for (int i = 0; i + 1 < n; ++i) {
        prefix.emplace_back(static_cast<long>(rng() % 12 + 1), static_cast<long>(rng() % 12 + 1));
    }
    return sl_point_from_prefix(prefix);
}

}  // namespace

TEST_CASE("schur evaluation examples") {
    CHECK(eval_schur(Partition{1}, rat({2, Rational(1, 2)})) == Rational(5, 2));
    CHECK(eval_schur(Partition{2}, rat({1, 1})) == 3);
    CHECK(eval_schur(Partition{2}, rat({2, Rational(1, 2)})) == Rational(21, 4));
    CHECK(eval_schur(Partition{}, rat({7, 9})) == 1);
}

TEST_CASE("torus point validation") {
    CHECK_THROWS_AS(make_torus_point({Rational(2), Rational(0)}, false), std::invalid_argument);
    CHECK_THROWS_AS(make_torus_point({Rational(2), Rational(-1)}, false), std::invalid_argument);
    CHECK_THROWS_AS(make_torus_point({Rational(2), Rational(2)}, true), std::invalid_argument);
    TorusPoint ok = make_torus_point({Rational(2), Rational(1, 2)}, true);
    CHECK(ok.sl_constraint);
}

TEST_CASE("character evaluation examples") {
    Representation triv = Representation::trivial(3);
    TorusPoint x = sl_point_from_prefix({Rational(3), Rational(1, 2)});
    CHECK(eval_char(triv, x) == 1);

    // The three-dimensional rank-2 irrep at (2, 1/2): (8 - 1/8)/(2 - 1/2).
    Representation iota3 = Representation::irreducible(2, Partition{2});
    TorusPoint p = make_torus_point({Rational(2), Rational(1, 2)}, true);
    CHECK(eval_char(iota3, p) == Rational(21, 4));

    TorusPoint not_sl = make_torus_point({Rational(2), Rational(1, 2), Rational(3)}, false);
    CHECK_THROWS_AS(eval_char(Representation::trivial(3), not_sl), std::invalid_argument);
}

TEST_CASE("characters are multiplicative and additive") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        Representation a = random_rep(rng, n, 3, 2);
        Representation b = random_rep(rng, n, 3, 2);
        TorusPoint x = random_sl_point(rng, n);
        CHECK(eval_char(tensor(a, b), x) == eval_char(a, x) * eval_char(b, x));
        CHECK(eval_char(direct_sum(a, b), x) == eval_char(a, x) + eval_char(b, x));
    }
}

TEST_CASE("schur evaluation is positive and permutation invariant") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 4; ++n) {
        for (const Partition& lambda : partitions_up_to(5, n)) {
            std::vector<Rational> x;
            for (int i = 0; i < n; ++i) {
                x.emplace_back(static_cast<long>(rng() % 9 + 1), static_cast<long>(rng() % 9 + 1));
            }
            Rational value = eval_schur(lambda, x);
            CHECK(value > 0);
            std::vector<Rational> perm = x;
            std::sort(perm.begin(), perm.end());
            do {
                CHECK(eval_schur(lambda, perm) == value);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST_CASE("the tableau route and the determinant route agree") {
    std::mt19937_64 rng(23);
    for (int n = 2; n <= 4; ++n) {
        for (const Partition& lambda : partitions_up_to(6, n)) {
            std::vector<Rational> x;
            for (int i = 0; i < n; ++i) {
                x.emplace_back(static_cast<long>(rng() % 7 + 1), static_cast<long>(rng() % 7 + 1));
            }
            Rational tableau_route(0);
            for (const auto& [alpha, c] : monomial_expansion(lambda, n).terms) {
                Rational term(c);
                for (size_t i = 0; i < alpha.size(); ++i) {
                    for (int e = 0; e < alpha[i]; ++e) term *= x[i];
                }
                tableau_route += term;
            }
            CHECK(eval_schur(lambda, x) == tableau_route);
            // Force the large-shape determinant path with a repeated coordinate.
            std::vector<Rational> repeated(static_cast<size_t>(n), x[0]);
            Partition big = lambda + Partition{9};
            CHECK(eval_schur(big, repeated) > 0);
        }
    }
}

TEST_CASE("character at the identity is the dimension") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        Representation rho = random_rep(rng, n, 4, 3);
        TorusPoint ones = make_torus_point(std::vector<Rational>(static_cast<size_t>(n), 1), true);
        CHECK(eval_char(rho, ones) == Rational(dimension(rho)));
    }
}

TEST_CASE("violation search finds the reversed rank-2 pair") {
    Representation rho = Representation::irreducible(2, Partition{2});
    Representation sigma =
        canonicalize(scale(2, SchurElement(2, Partition{1})));
    auto witness = search_violation(rho, sigma);
    REQUIRE(witness.has_value());
    CHECK(eval_char(rho, *witness) >= eval_char(sigma, *witness));
}

TEST_CASE("violation search proves nothing on a strictly dominated pair") {
    Representation rho = Representation::trivial(2);
    Representation sigma = Representation::trivial_plus_standard(2);
    CHECK_FALSE(search_violation(rho, sigma).has_value());
}

TEST_CASE("equal pair violates at the identity") {
    Representation rho = Representation::irreducible(3, Partition{2, 1});
    auto witness = search_violation(rho, rho);
    REQUIRE(witness.has_value());
    for (const Rational& c : witness->coords) CHECK(c == 1);
}

TEST_CASE("violation search at rank 3") {
    // sigma's polytope does not reach the corner weights of rho.
    Representation rho = Representation::irreducible(3, Partition{3});
    Representation sigma = canonicalize(scale(4, SchurElement(3, Partition{1})));
    auto witness = search_violation(rho, sigma);
    REQUIRE(witness.has_value());
    CHECK(eval_char(rho, *witness) >= eval_char(sigma, *witness));
}

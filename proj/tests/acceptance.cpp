// Acceptance suite: one test case per release criterion, each printing a
// single PASS/FAIL line. Run via ctest or directly as tests/acceptance_tests.
#include <doctest.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "repcontain/io.hpp"
#include "repcontain/selftest.hpp"

using namespace repcontain;

namespace {

void report(int criterion, const char* label, bool ok, const std::string& detail = "") {
    std::printf("criterion %2d [%s] %s%s%s\n", criterion, ok ? "PASS" : "FAIL", label,
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string run_cli(const std::string& args, int& exit_code) {
    std::string cmd = std::string(REPCONTAIN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    exit_code = WEXITSTATUS(status);
    return out;
}

}  // namespace

TEST_CASE("criterion 1: LR products match the monomial oracle") {
    auto start = std::chrono::steady_clock::now();
    SelftestCheck check = check_lr_vs_monomial_oracle(5, 4);
    double elapsed = seconds_since(start);
    bool ok = check.passed && elapsed < 120.0;
    report(1, "LR/product oracle equivalence (n<=4, |mu|,|nu|<=5, <2min)", ok,
           check.detail + ", " + std::to_string(elapsed) + "s");
    CHECK(ok);
}

TEST_CASE("criterion 2: e_j e_j = e_(j-1) e_(j+1) + s_(2..2)") {
    bool ok = true;
    for (int n = 2; n <= 5 && ok; ++n) {
        for (int j = 1; j <= n - 1; ++j) {
            SchurElement lhs = multiply(SchurElement::elementary(n, j),
                                        SchurElement::elementary(n, j));
            SchurElement rhs = multiply(SchurElement::elementary(n, j - 1),
                                        SchurElement::elementary(n, j + 1));
            rhs.add_term(Partition(std::vector<int>(static_cast<size_t>(j), 2)), 1);
            if (!(lhs == rhs)) {
                ok = false;
                break;
            }
        }
    }
    report(2, "elementary product identity (1<=j<=n-1, n<=5)", ok);
    CHECK(ok);
}

TEST_CASE("criterion 3: s_lambda <= e_1^boxes") {
    bool ok = true;
    long tested = 0;
    for (int n = 2; n <= 4 && ok; ++n) {
        for (const Partition& lambda : partitions_up_to(6, n)) {
            ++tested;
            if (!leq(SchurElement(n, lambda),
                     power(SchurElement::elementary(n, 1), lambda.size()))) {
                ok = false;
                break;
            }
        }
    }
    report(3, "single-box bound (|lambda|<=6, n<=4)", ok, std::to_string(tested) + " shapes");
    CHECK(ok);
}

TEST_CASE("criterion 4: tropical identities") {
    SelftestCheck closed_form = check_tropical_closed_form(6, 4);
    bool ok = closed_form.passed;
    std::mt19937_64 rng(4242);

    // Max rule over the product support, exhaustive |mu|,|nu| <= 4, n <= 4.
    for (int n = 2; n <= 4 && ok; ++n) {
        std::vector<Direction> dirs;
        for (int t = 0; t < 10; ++t) {
            std::vector<Rational> y;
            for (int i = 0; i < n; ++i) {
                y.emplace_back(static_cast<long>(rng() % 13) - 6,
                               static_cast<long>(rng() % 3) + 1);
            }
            dirs.push_back(make_direction(std::move(y), false));
        }
        auto shapes = partitions_up_to(4, n);
        for (const Partition& mu : shapes) {
            for (const Partition& nu : shapes) {
                SchurElement product = multiply(SchurElement(n, mu), SchurElement(n, nu));
                if (product.is_zero()) continue;
                for (const Direction& y : dirs) {
                    std::optional<Rational> support_max;
                    for (const auto& [lambda, c] : product.terms()) {
                        Rational v = trop_eval_schur(lambda, y);
                        if (!support_max || v > *support_max) support_max = v;
                    }
                    if (trop_eval_schur(mu, y) + trop_eval_schur(nu, y) != *support_max) {
                        ok = false;
                    }
                }
            }
        }
    }

    // Column decomposition and submodularity for decreasing directions.
    for (int n = 2; n <= 4 && ok; ++n) {
        for (int t = 0; t < 10 && ok; ++t) {
            std::vector<Rational> y;
            for (int i = 0; i < n; ++i) {
                y.emplace_back(static_cast<long>(rng() % 13) - 6,
                               static_cast<long>(rng() % 3) + 1);
            }
            std::sort(y.begin(), y.end(), std::greater<Rational>());
            Direction dir = make_direction(y, false);
            for (const Partition& lambda : partitions_up_to(6, n)) {
                Partition conj = lambda.conjugate();
                Rational columns(0);
                for (int j = 0; j < lambda.part(0); ++j) {
                    columns += *trop_eval(SchurElement::elementary(n, conj.part(j)), dir);
                }
                if (trop_eval_schur(lambda, dir) != columns) ok = false;
            }
            for (int j = 1; j <= n - 1; ++j) {
                Rational ej = *trop_eval(SchurElement::elementary(n, j), dir);
                Rational lo = *trop_eval(SchurElement::elementary(n, j - 1), dir);
                Rational hi = *trop_eval(SchurElement::elementary(n, j + 1), dir);
                if (hi + lo > 2 * ej) ok = false;
            }
        }
    }
    report(4, "support-max oracle, product max rule, columns, submodularity", ok,
           closed_form.detail);
    CHECK(ok);
}

TEST_CASE("criterion 5: rescaled log-characters approach the tropical value") {
    constexpr int kPower = 64;
    std::mt19937_64 rng(6464);
    bool ok = true;
    double worst = 0.0;
    int directions = 0;
    while (directions < 50) {
        int n = 2 + static_cast<int>(rng() % 2);
        auto shapes = partitions_up_to(3, n - 1);
        SchurElement f(n);
        f.add_term(shapes[rng() % shapes.size()], 1);
        f.add_term(shapes[rng() % shapes.size()], 1);
        Representation rho = canonicalize(f);

        std::vector<Rational> prefix;
        for (int i = 0; i + 1 < n; ++i) {
            prefix.emplace_back(static_cast<long>(rng() % 7 + 2),
                                static_cast<long>(rng() % 2 + 1));
        }
        TorusPoint x = sl_point_from_prefix(prefix);
        ++directions;

        std::vector<Rational> x_pow = x.coords;
        for (Rational& c : x_pow) {
            Rational acc(1);
            for (int e = 0; e < kPower; ++e) acc *= c;
            c = acc;
        }
        double scaled = log_rational(eval_char(rho, make_torus_point(x_pow, true))) / kPower;

        // The direction log x is irrational; its support maximum is computed
        // in doubles, exactly like the limit statement reads.
        std::vector<double> logs;
        for (const Rational& c : x.coords) logs.push_back(log_rational(c));
        std::sort(logs.begin(), logs.end(), std::greater<double>());
        double tropical = -1e300;
        for (const auto& [lambda, mult] : rho.element().terms()) {
            double v = 0;
            for (int i = 0; i < lambda.length(); ++i) {
                v += lambda.part(i) * logs[static_cast<size_t>(i)];
            }
            tropical = std::max(tropical, v);
        }
        double rel = std::fabs(scaled - tropical) / (1.0 + std::fabs(tropical));
        worst = std::max(worst, rel);
        if (rel >= 0.05) ok = false;
    }
    report(5, "tropical limit at r=64 within 5% (50 SL directions, n<=3)", ok,
           "worst relative error " + std::to_string(worst));
    CHECK(ok);
}

TEST_CASE("criterion 6: membership LP matches the majorization oracle") {
    SelftestCheck check = check_lp_vs_majorization(500, 4);
    report(6, "LP vs majorization (500 instances per n<=4)", check.passed, check.detail);
    CHECK(check.passed);
}

TEST_CASE("criterion 7: SU(2) end-to-end on the canonical pair") {
    auto start = std::chrono::steady_clock::now();
    Representation rho = canonicalize(scale(2, SchurElement(2, Partition{1})));
    SchurElement s = SchurElement::unit(2);
    s.add_term(Partition{1}, 1);
    s.add_term(Partition{2}, 1);
    Representation sigma = canonicalize(s);

    Verdict v = run_pipeline(rho, sigma);
    bool ok = v.conditions.condition_real.status == RealConditionStatus::certified_strict;
    std::vector<BigInt> expected{1, -1, 2, -1, 1};
    ok = ok && v.conditions.condition_real.gap_polynomial.has_value() &&
         v.conditions.condition_real.gap_polynomial->coefficients() == expected &&
         v.conditions.condition_real.gap_polynomial->eval(Rational(1)) == 2;
    ok = ok && su2_tropical_check(from_representation(rho), from_representation(sigma));
    ok = ok && v.conditions.condition_tropical;
    ok = ok && v.asymptotic && v.asymptotic->minimal_exponent == 3;
    ok = ok && v.catalyst && *v.catalyst == sigma &&
         contains(tensor(rho, *v.catalyst), tensor(sigma, *v.catalyst));
    double elapsed = seconds_since(start);
    ok = ok && elapsed < 5.0;
    report(7, "canonical pair: Sturm certificate, exponent 3, catalyst sigma, <5s", ok,
           std::to_string(elapsed) + "s");
    CHECK(ok);
}

TEST_CASE("criterion 8: curated forward-direction corpus") {
    SelftestCheck check = check_corpus_forward(REPCONTAIN_CORPUS_DIR, 4);
    bool ok = check.passed && !check.skipped;
    size_t pair_count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(REPCONTAIN_CORPUS_DIR)) {
        if (entry.path().extension() == ".json") ++pair_count;
    }
    ok = ok && pair_count >= 20;
    report(8, "corpus pairs all yield witnesses (n_max=12, default bounds)", ok, check.detail);
    CHECK(ok);
}

TEST_CASE("criterion 9: every witness passes the non-strict converse") {
    bool ok = true;
    int witnesses = 0;
    std::string failure;
    for (const auto& entry : std::filesystem::directory_iterator(REPCONTAIN_CORPUS_DIR)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream in(entry.path());
        json j;
        in >> j;
        Representation rho = representation_from_json(j.at("rho")).rep;
        Representation sigma = representation_from_json(j.at("sigma")).rep;
        Verdict v = run_pipeline(rho, sigma);
        ConverseWitness witness;
        if (v.catalyst) witness.catalyst = v.catalyst;
        if (v.asymptotic) witness.exponent = v.asymptotic->minimal_exponent;
        if (!witness.catalyst && !witness.exponent) continue;
        ++witnesses;
        try {
            ConverseReport conv = verify_converse(rho, sigma, witness,
                                                  v.conditions.near_equality_points, 200);
            if (!conv.wp_contained || conv.failures != 0) ok = false;
        } catch (const internal_inconsistency_error& e) {
            ok = false;
            failure = e.what();
        }
        if (!ok) break;
    }
    ok = ok && witnesses >= 20;
    report(9, "converse checks on all corpus witnesses, zero failures", ok,
           std::to_string(witnesses) + " witnesses" + (failure.empty() ? "" : "; " + failure));
    CHECK(ok);
}

TEST_CASE("criterion 10: power universality witnesses within analytic bounds") {
    bool ok = true;
    long tested = 0;
    std::string failure;
    for (int n = 2; n <= 4 && ok; ++n) {
        for (const Partition& lambda : partitions_up_to(5, n - 1)) {
            try {
                auto w = power_universality_witness(Representation::irreducible(n, lambda));
                ++tested;
                if (w.k_upper > lambda.size() ||
                    w.k_lower > n * lambda.part(0) - lambda.size()) {
                    ok = false;
                    failure = "bound exceeded at lambda=" + lambda.to_string() +
                              " n=" + std::to_string(n);
                }
            } catch (const std::exception& e) {
                ok = false;
                failure = e.what();
            }
        }
    }
    report(10, "k_upper <= |lambda|, k_lower <= n*lambda_1-|lambda| (|lambda|<=5, n<=4)", ok,
           ok ? std::to_string(tested) + " irreps" : failure);
    CHECK(ok);
}

TEST_CASE("criterion 11: byte-identical CLI output across thread counts") {
    bool ok = true;
    int compared = 0;
    for (const auto& entry : std::filesystem::directory_iterator(REPCONTAIN_CORPUS_DIR)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream in(entry.path());
        json j;
        in >> j;
        std::filesystem::path dir = std::filesystem::temp_directory_path() /
                                    ("repcontain-acceptance-" + std::to_string(compared));
        std::filesystem::create_directories(dir);
        {
            std::ofstream r(dir / "rho.json");
            r << j.at("rho").dump();
            std::ofstream s(dir / "sigma.json");
            s << j.at("sigma").dump();
        }
        std::string base = "check --rho " + (dir / "rho.json").string() + " --sigma " +
                           (dir / "sigma.json").string();
        int code1 = 0, code8 = 0, code1b = 0;
        std::string out1 = run_cli(base + " --threads 1", code1);
        std::string out8 = run_cli(base + " --threads 8", code8);
        std::string out1b = run_cli(base + " --threads 1", code1b);
        if (code1 != 0 || code8 != 0 || code1b != 0 || out1 != out8 || out1 != out1b ||
            out1.empty()) {
            ok = false;
        }
        ++compared;
        std::filesystem::remove_all(dir);
        if (!ok) break;
    }
    ok = ok && compared >= 20;
    report(11, "two runs, --threads 1 vs --threads 8, identical bytes", ok,
           std::to_string(compared) + " corpus pairs");
    CHECK(ok);
}

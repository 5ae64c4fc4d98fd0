#include "repcontain/selftest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "repcontain/io.hpp"

namespace repcontain {

namespace {

std::string pair_label(const Partition& mu, const Partition& nu, int n) {
    return "n=" + std::to_string(n) + " mu=" + mu.to_string() + " nu=" + nu.to_string();
}

}  // namespace

SelftestCheck check_lr_vs_monomial_oracle(int max_boxes, int max_n, bool inject_fault) {
    SelftestCheck check{"lr-vs-monomial-products", true, false, ""};
    long pairs = 0;
    bool injected = false;
    for (int n = 2; n <= max_n && check.passed; ++n) {
        auto shapes = partitions_up_to(max_boxes, n);
        for (const Partition& mu : shapes) {
            for (const Partition& nu : shapes) {
                SchurElement lr_route = multiply(SchurElement(n, mu), SchurElement(n, nu));
                if (inject_fault && !injected) {
                    lr_route.add_term(Partition{}, 1);
                    injected = true;
                }
                SchurElement oracle = decompose_monomials(monomial_product(
                    monomial_expansion(mu, n), monomial_expansion(nu, n)));
                ++pairs;
                if (!(lr_route == oracle)) {
                    check.passed = false;
                    check.detail = "mismatch at " + pair_label(mu, nu, n);
                    break;
                }
            }
            if (!check.passed) break;
        }
    }
    if (check.passed) check.detail = std::to_string(pairs) + " products matched the oracle";
    return check;
}

SelftestCheck check_tropical_closed_form(int max_boxes, int max_n) {
    SelftestCheck check{"tropical-closed-form-vs-support-max", true, false, ""};
    std::mt19937_64 rng(0x7409a11ULL);
    long evals = 0;
    for (int n = 2; n <= max_n && check.passed; ++n) {
        std::vector<std::vector<Rational>> dirs;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                std::vector<Rational> d(static_cast<size_t>(n), Rational(0));
                d[static_cast<size_t>(i)] = 1;
                d[static_cast<size_t>(j)] = -1;
                dirs.push_back(std::move(d));
            }
        }
        for (int s = 0; s < 20; ++s) {
            std::vector<Rational> d;
            for (int i = 0; i < n; ++i) {
                long num = static_cast<long>(rng() % 17) - 8;
                long den = static_cast<long>(rng() % 7) + 1;
                d.emplace_back(num, den);
            }
            dirs.push_back(std::move(d));
        }
        for (const Partition& lambda : partitions_up_to(max_boxes, n)) {
            SchurElement f(n, lambda);
            for (const auto& d : dirs) {
                Direction dir = make_direction(d, false);
                auto closed = trop_eval(f, dir);
                auto oracle = trop_eval_by_support(f, dir);
                ++evals;
                if (closed != oracle) {
                    check.passed = false;
                    check.detail = "mismatch at lambda=" + lambda.to_string() +
                                   " n=" + std::to_string(n);
                    break;
                }
            }
            if (!check.passed) break;
        }
    }
    if (check.passed) check.detail = std::to_string(evals) + " evaluations matched the oracle";
    return check;
}

SelftestCheck check_lp_vs_majorization(int instances_per_n, int max_n) {
    SelftestCheck check{"lp-vs-majorization", true, false, ""};
    std::mt19937_64 rng(0x10a901dULL);
    long instances = 0;
    for (int n = 2; n <= max_n && check.passed; ++n) {
        auto shapes = partitions_up_to(6, n - 1);
        for (int s = 0; s < instances_per_n; ++s) {
            const Partition& lambda = shapes[rng() % shapes.size()];
            Representation rep = Representation::irreducible(n, lambda);
            if (rep.is_zero()) continue;
            WeightPolytope P = weight_polytope(rep);
            const std::vector<Rational>& gen = P.generators.front();

            // Sample inside points, vertices, and perturbations.
            std::vector<Rational> p(static_cast<size_t>(n), Rational(0));
            unsigned mode = rng() % 3;
            if (mode == 0) {
                Rational total(0);
                std::vector<Rational> w;
                for (size_t v = 0; v < P.vertices.size(); ++v) {
                    Rational wi(static_cast<long>(rng() % 5), 1);
                    w.push_back(wi);
                    total += wi;
                }
                if (total == 0) {
                    w[0] = 1;
                    total = 1;
                }
                for (size_t v = 0; v < P.vertices.size(); ++v) {
                    for (size_t i = 0; i < p.size(); ++i) {
                        p[i] += w[v] / total * P.vertices[v][i];
                    }
                }
            } else if (mode == 1) {
                p = P.vertices[rng() % P.vertices.size()];
            } else {
                std::vector<Rational> raw;
                Rational mean(0);
                for (int i = 0; i < n; ++i) {
                    raw.emplace_back(static_cast<long>(rng() % 13) - 6,
                                     static_cast<long>(rng() % 3) + 1);
                    mean += raw.back();
                }
                mean /= n;
                for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = raw[static_cast<size_t>(i)] - mean;
            }

            MembershipResult lp = lp_relint_membership(p, P);
            MembershipResult oracle = orbit_membership_by_majorization(p, gen);
            ++instances;
            if (lp.inside_closed != oracle.inside_closed ||
                lp.inside_relint != oracle.inside_relint) {
                check.passed = false;
                check.detail = "mismatch at n=" + std::to_string(n) +
                               " lambda=" + lambda.to_string();
                break;
            }
        }
    }
    if (check.passed) check.detail = std::to_string(instances) + " memberships matched the oracle";
    return check;
}

SelftestCheck check_sturm_vs_sampling(int polynomials, int max_degree) {
    SelftestCheck check{"sturm-vs-sampling", true, false, ""};
    std::mt19937_64 rng(0x5702ULL);
    long certified = 0, refuted = 0;
    for (int t = 0; t < polynomials && check.passed; ++t) {
        int degree = static_cast<int>(rng() % (max_degree + 1));
        std::vector<BigInt> coeffs;
        for (int k = 0; k <= degree; ++k) {
            coeffs.emplace_back(static_cast<long>(rng() % 19) - 9);
        }
        IntPolynomial g(std::move(coeffs));
        PositivityCertificate cert = certify_strict_positive_on_ray(g);
        switch (cert.status) {
            case PositivityCertificate::Status::zero_polynomial:
                if (!g.is_zero()) {
                    check.passed = false;
                    check.detail = "nonzero polynomial reported as zero";
                }
                break;
            case PositivityCertificate::Status::not_positive:
                ++refuted;
                if (cert.witness) {
                    if (*cert.witness < 1 || g.eval(*cert.witness) > 0) {
                        check.passed = false;
                        check.detail = "witness failed exact re-check";
                    }
                } else if (!cert.root_interval || cert.root_interval->first < 1) {
                    check.passed = false;
                    check.detail = "refutation carried no certificate";
                }
                break;
            case PositivityCertificate::Status::certified: {
                ++certified;
                // Dense sampling oracle on [1, B] plus a far tail point.
                Rational bound(1);
                BigInt lead = abs(g.coefficients().back());
                for (const BigInt& c : g.coefficients()) {
                    Rational q(abs(c), lead);
                    if (q > bound) bound = q;
                }
                bound += 2;
                for (int k = 0; k <= 200 && check.passed; ++k) {
                    Rational s = Rational(1) + (bound - 1) * Rational(k, 200);
                    if (g.eval(s) <= 0) {
                        check.passed = false;
                        check.detail = "certified polynomial sampled nonpositive at " +
                                       rational_to_string(s);
                    }
                }
                if (check.passed && g.eval(bound * 4) <= 0) {
                    check.passed = false;
                    check.detail = "certified polynomial nonpositive far out";
                }
                break;
            }
        }
    }
    if (check.passed) {
        check.detail = std::to_string(certified) + " certified / " + std::to_string(refuted) +
                       " refuted, all consistent with sampling";
    }
    return check;
}

SelftestCheck check_dimension_cross_oracle(int max_boxes, int max_n) {
    SelftestCheck check{"dimension-ssyt-vs-weyl", true, false, ""};
    long count = 0;
    for (int n = 2; n <= max_n && check.passed; ++n) {
        for (const Partition& lambda : partitions_up_to(max_boxes, n - 1)) {
            ++count;
            if (ssyt_count(lambda, n) != weyl_dimension(lambda, n)) {
                check.passed = false;
                check.detail = "mismatch at lambda=" + lambda.to_string() +
                               " n=" + std::to_string(n);
                break;
            }
        }
    }
    if (check.passed) check.detail = std::to_string(count) + " dimensions matched";
    return check;
}

SelftestCheck check_corpus_forward(const std::string& corpus_dir, unsigned threads) {
    SelftestCheck check{"corpus-forward-direction", true, false, ""};
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    if (!corpus_dir.empty() && fs::is_directory(corpus_dir)) {
        for (const auto& entry : fs::directory_iterator(corpus_dir)) {
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        check.skipped = true;
        check.passed = true;
        check.detail = "no corpus pairs found under '" + corpus_dir + "'; skipping";
        return check;
    }
    PipelineParams params;
    params.check.search.threads = threads;
    params.catalyst.threads = threads;
    std::ostringstream failures;
    int ok = 0;
    for (const auto& file : files) {
        std::ifstream in(file);
        json j;
        in >> j;
        Representation rho = representation_from_json(j.at("rho")).rep;
        Representation sigma = representation_from_json(j.at("sigma")).rep;
        Verdict v = run_pipeline(rho, sigma, params);
        bool good = v.conditions.both_pass() && v.conditions.sigma_generic &&
                    v.asymptotic.has_value() && v.catalyst.has_value() &&
                    v.converse.has_value();
        if (good) {
            ++ok;
        } else {
            check.passed = false;
            failures << " " << file.filename().string();
        }
    }
    check.detail = std::to_string(ok) + "/" + std::to_string(files.size()) +
                   " corpus pairs yielded witnesses";
    if (!check.passed) check.detail += "; failed:" + failures.str();
    return check;
}

std::vector<SelftestCheck> run_selftest(const SelftestOptions& opts) {
    if (!opts.inject_fault.empty() && opts.inject_fault != "lr") {
        throw std::invalid_argument("unknown fault name: " + opts.inject_fault);
    }
    std::vector<SelftestCheck> checks;
    checks.push_back(check_lr_vs_monomial_oracle(5, 4, opts.inject_fault == "lr"));
    checks.push_back(check_tropical_closed_form(6, 4));
    checks.push_back(check_lp_vs_majorization(500, 4));
    checks.push_back(check_sturm_vs_sampling(1000, 12));
    checks.push_back(check_dimension_cross_oracle(6, 5));
    checks.push_back(check_corpus_forward(opts.corpus_dir, opts.threads));
    return checks;
}

}  // namespace repcontain

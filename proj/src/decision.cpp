#include "repcontain/decision.hpp"

#include <atomic>
#include <random>
#include <stdexcept>

#include "repcontain/parallel.hpp"

namespace repcontain {

namespace {

void require_pair(const Representation& rho, const Representation& sigma) {
    if (rho.group_rank() != sigma.group_rank()) {
        throw std::invalid_argument("mismatched group ranks");
    }
    if (rho.is_zero() || sigma.is_zero()) {
        throw std::invalid_argument("the decision pipeline requires nonzero representations");
    }
}

RealConditionOutcome rank2_real_condition(const Representation& rho,
                                          const Representation& sigma) {
    RealConditionOutcome out;
    MultiplicityMap mr = from_representation(rho);
    MultiplicityMap ms = from_representation(sigma);
    IntPolynomial g = char_diff_polynomial(mr, ms);
    out.gap_polynomial = g;
    PositivityCertificate cert = certify_strict_positive_on_ray(g);
    switch (cert.status) {
        case PositivityCertificate::Status::certified:
            out.status = RealConditionStatus::certified_strict;
            break;
        case PositivityCertificate::Status::zero_polynomial:
            // Identical characters: equality everywhere, witnessed at 1.
            out.status = RealConditionStatus::violated;
            out.witness = make_torus_point({Rational(1), Rational(1)}, true);
            break;
        case PositivityCertificate::Status::not_positive:
            out.status = RealConditionStatus::violated;
            if (cert.witness) {
                TorusPoint p = make_torus_point({*cert.witness, Rational(1) / *cert.witness},
                                                true);
                if (eval_char(rho, p) < eval_char(sigma, p)) {
                    throw internal_inconsistency_error(
                        "rank-2 witness failed exact character re-verification");
                }
                out.witness = p;
            } else {
                out.root_interval = cert.root_interval;
            }
            break;
    }
    return out;
}

}  // namespace

ConditionsVerdict check_conditions(const Representation& rho, const Representation& sigma,
                                   const CheckParams& params) {
    require_pair(rho, sigma);
    ConditionsVerdict verdict;
    verdict.n = rho.group_rank();
    verdict.dim_rho = dimension(rho);
    verdict.dim_sigma = dimension(sigma);
    verdict.dimension_strict_less = verdict.dim_rho < verdict.dim_sigma;
    verdict.condition_tropical = wp_strict_containment(rho, sigma);
    verdict.sigma_generic = is_generic(sigma);
    if (verdict.n == 2) {
        verdict.condition_real = rank2_real_condition(rho, sigma);
    } else {
        auto found = search_violation_detailed(rho, sigma, params.search);
        if (found.witness) {
            verdict.condition_real.status = RealConditionStatus::violated;
            verdict.condition_real.witness = found.witness;
        } else {
            verdict.condition_real.status = RealConditionStatus::no_violation_found;
            verdict.near_equality_points = found.near_minima;
        }
    }
    return verdict;
}

std::optional<AsymptoticResult> find_asymptotic_exponent(const Representation& rho,
                                                         const Representation& sigma,
                                                         int n_max) {
    require_pair(rho, sigma);
    if (n_max < 1) throw std::invalid_argument("exponent bound must be at least 1");
    Representation rho_k = Representation::trivial(rho.group_rank());
    Representation sigma_k = rho_k;
    int minimal = 0;
    bool all_good = true;
    for (int k = 1; k <= n_max; ++k) {
        rho_k = tensor(rho_k, rho);
        sigma_k = tensor(sigma_k, sigma);
        bool ok = contains(rho_k, sigma_k);
        if (ok && minimal == 0) minimal = k;
        if (!ok && minimal != 0) all_good = false;
    }
    if (minimal == 0) return std::nullopt;
    return AsymptoticResult{minimal, n_max, all_good};
}

namespace {

std::vector<Representation> catalyst_candidates(const Representation& sigma,
                                                const CatalystParams& params) {
    int n = sigma.group_rank();
    std::vector<Representation> out;
    out.push_back(Representation::trivial(n));

    std::vector<Representation> powers;
    Representation p = sigma;
    for (int k = 1; k <= params.max_power; ++k) {
        powers.push_back(p);
        out.push_back(p);
        if (k < params.max_power) p = tensor(p, sigma);
    }
    if (powers.size() > 1) {
        Representation partial = powers[0];
        for (size_t k = 1; k < powers.size(); ++k) {
            partial = direct_sum(partial, powers[k]);
            out.push_back(partial);
        }
    }

    std::vector<Representation> irreps;
    for (const Partition& lambda : partitions_up_to(params.max_boxes, n - 1)) {
        if (lambda.empty()) continue;  // trivial already listed
        Representation irrep = Representation::irreducible(n, lambda);
        irreps.push_back(irrep);
        out.push_back(irrep);
    }

    // Bounded sums: combinations with repetition of the irrep list.
    std::vector<size_t> pick;
    auto emit = [&](auto&& self, size_t start, int remaining) -> void {
        if (pick.size() >= 2) {
            Representation sum(n);
            bool first = true;
            for (size_t idx : pick) {
                sum = first ? irreps[idx] : direct_sum(sum, irreps[idx]);
                first = false;
            }
            out.push_back(sum);
        }
        if (remaining == 0) return;
        for (size_t i = start; i < irreps.size(); ++i) {
            pick.push_back(i);
            self(self, i, remaining - 1);
            pick.pop_back();
        }
    };
    emit(emit, 0, params.max_terms);
    return out;
}

}  // namespace

std::optional<Representation> find_catalyst(const Representation& rho,
                                            const Representation& sigma,
                                            const CatalystParams& params) {
    require_pair(rho, sigma);
    // Containment forces dim(rho x eta) <= dim(sigma x eta); dimensions
    // multiply, so a heavier rho can never be catalyzed.
    if (dimension(rho) > dimension(sigma)) return std::nullopt;

    std::vector<Representation> candidates = catalyst_candidates(sigma, params);
    size_t batch = std::max<size_t>(1, static_cast<size_t>(params.threads) * 4);
    for (size_t base = 0; base < candidates.size(); base += batch) {
        size_t count = std::min(batch, candidates.size() - base);
        std::vector<char> hit(count, 0);
        parallel_for(count, params.threads, [&](size_t i) {
            const Representation& eta = candidates[base + i];
            hit[i] = contains(tensor(rho, eta), tensor(sigma, eta)) ? 1 : 0;
        });
        for (size_t i = 0; i < count; ++i) {
            if (hit[i]) return candidates[base + i];
        }
    }
    return std::nullopt;
}

ConverseReport verify_converse(const Representation& rho, const Representation& sigma,
                               const ConverseWitness& witness,
                               const std::vector<TorusPoint>& extra_points,
                               int sample_count) {
    require_pair(rho, sigma);
    int n = rho.group_rank();

    // The witness must actually witness something.
    if (witness.catalyst) {
        if (witness.catalyst->is_zero() ||
            !contains(tensor(rho, *witness.catalyst), tensor(sigma, *witness.catalyst))) {
            throw internal_inconsistency_error("converse called with a non-witness catalyst");
        }
    }
    if (witness.exponent) {
        if (*witness.exponent < 1 ||
            !contains(tensor_power(rho, *witness.exponent),
                      tensor_power(sigma, *witness.exponent))) {
            throw internal_inconsistency_error("converse called with a non-witness exponent");
        }
    }

    ConverseReport report;
    report.wp_contained = wp_containment(rho, sigma);
    if (!report.wp_contained) {
        throw internal_inconsistency_error(
            "converse violated: weight polytope containment failed despite a witness");
    }

    std::vector<TorusPoint> points;
    points.push_back(make_torus_point(std::vector<Rational>(static_cast<size_t>(n), 1), true));
    points.insert(points.end(), extra_points.begin(), extra_points.end());
    std::mt19937_64 rng(0x5eed5eedULL);
    for (int s = 0; s < sample_count; ++s) {
        std::vector<Rational> prefix;
        for (int i = 0; i + 1 < n; ++i) {
            auto num = static_cast<long>(rng() % 24 + 1);
            auto den = static_cast<long>(rng() % 24 + 1);
            prefix.emplace_back(num, den);
        }
        points.push_back(sl_point_from_prefix(prefix));
    }
    for (const TorusPoint& p : points) {
        ++report.points_checked;
        if (eval_char(rho, p) > eval_char(sigma, p)) {
            ++report.failures;
            throw internal_inconsistency_error(
                "converse violated: strict character excess at a sampled point");
        }
    }
    return report;
}

Verdict run_pipeline(const Representation& rho, const Representation& sigma,
                     const PipelineParams& params) {
    Verdict verdict;
    verdict.conditions = check_conditions(rho, sigma, params.check);
    if (!verdict.conditions.both_pass()) return verdict;

    verdict.asymptotic = find_asymptotic_exponent(rho, sigma, params.n_max);
    verdict.catalyst = find_catalyst(rho, sigma, params.catalyst);

    if (verdict.asymptotic || verdict.catalyst) {
        ConverseWitness witness;
        if (verdict.catalyst) witness.catalyst = verdict.catalyst;
        if (verdict.asymptotic) witness.exponent = verdict.asymptotic->minimal_exponent;
        verdict.converse = verify_converse(rho, sigma, witness,
                                           verdict.conditions.near_equality_points,
                                           params.converse_samples);
    }
    return verdict;
}

}  // namespace repcontain

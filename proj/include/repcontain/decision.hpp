#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "repcontain/characters.hpp"
#include "repcontain/polytope.hpp"
#include "repcontain/su2.hpp"
#include "repcontain/tropical.hpp"

namespace repcontain {

enum class RealConditionStatus { certified_strict, no_violation_found, violated };

/// Outcome of the character-inequality condition. Witnesses are exact and
/// re-verified before being stored. At rank 2 the verdict is decided by the
/// positivity certificate; above that only a violation can be proven, so the
/// best non-violating answer is "no violation found".
struct RealConditionOutcome {
    RealConditionStatus status = RealConditionStatus::no_violation_found;
    std::optional<TorusPoint> witness;
    /// Rank-2 tangential case: the character gap vanishes at an irrational
    /// point inside this interval, so no rational witness exists.
    std::optional<std::pair<Rational, Rational>> root_interval;
    /// Rank-2 certificate data: the cleared character difference.
    std::optional<IntPolynomial> gap_polynomial;
};

struct CheckParams {
    ViolationSearchParams search;
};

struct ConditionsVerdict {
    int n = 0;
    BigInt dim_rho;
    BigInt dim_sigma;
    bool dimension_strict_less = false;  // the x = (1,...,1) special case
    RealConditionOutcome condition_real;
    bool condition_tropical = false;
    bool sigma_generic = false;
    /// Grid points where the numeric search saw the character gap come close
    /// to zero; the converse checks re-test these exactly.
    std::vector<TorusPoint> near_equality_points;

    bool both_pass() const {
        return condition_tropical &&
               condition_real.status != RealConditionStatus::violated;
    }
};

ConditionsVerdict check_conditions(const Representation& rho, const Representation& sigma,
                                   const CheckParams& params = {});

struct AsymptoticResult {
    int minimal_exponent = 0;
    int checked_up_to = 0;
    bool all_from_minimal = false;  // containment held for every k in between
};

/// Brute force over k = 1..n_max. The theorem predicts eventual containment,
/// not monotone containment, so both the least exponent and the full-range
/// flag are reported.
std::optional<AsymptoticResult> find_asymptotic_exponent(const Representation& rho,
                                                         const Representation& sigma,
                                                         int n_max = 12);

struct CatalystParams {
    int max_power = 6;  // sigma tensor powers and their partial sums
    int max_boxes = 6;  // single irreps up to this box count
    int max_terms = 4;  // sums of up to this many irreps
    unsigned threads = 1;
};

/// First catalyst in a deterministic candidate order: the trivial rep, then
/// sigma powers, partial sums of sigma powers, single irreps by box count,
/// then bounded multi-irrep sums.
std::optional<Representation> find_catalyst(const Representation& rho,
                                            const Representation& sigma,
                                            const CatalystParams& params = {});

struct ConverseWitness {
    std::optional<Representation> catalyst;
    std::optional<int> exponent;
};

struct ConverseReport {
    bool wp_contained = false;
    int points_checked = 0;
    int failures = 0;
};

/// Verifies the non-strict converse the theorem guarantees for a found
/// witness: exact hull containment and chi_rho <= chi_sigma on a
/// deterministic rational sample (plus any caller-supplied near-equality
/// points). Failure throws internal_inconsistency_error.
ConverseReport verify_converse(const Representation& rho, const Representation& sigma,
                               const ConverseWitness& witness,
                               const std::vector<TorusPoint>& extra_points = {},
                               int sample_count = 200);

struct PipelineParams {
    CheckParams check;
    int n_max = 12;
    CatalystParams catalyst;
    int converse_samples = 200;
};

struct Verdict {
    ConditionsVerdict conditions;
    std::optional<AsymptoticResult> asymptotic;
    std::optional<Representation> catalyst;
    std::optional<ConverseReport> converse;
};

/// check_conditions, then (when both conditions pass) the exponent and
/// catalyst searches, then the converse verification on whatever was found.
Verdict run_pipeline(const Representation& rho, const Representation& sigma,
                     const PipelineParams& params = {});

}  // namespace repcontain

#pragma once

#include <string>
#include <vector>

#include "repcontain/decision.hpp"

namespace repcontain {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

struct SelftestOptions {
    std::string corpus_dir;    // empty: skip corpus checks with a warning
    std::string inject_fault;  // test fixture: "lr" corrupts one product
    unsigned threads = 1;
};

/// Cross-validates every independently-computable quantity against its
/// oracle at the documented desk-scale sizes.
std::vector<SelftestCheck> run_selftest(const SelftestOptions& opts);

// Individual checks, shared with the acceptance suite.
SelftestCheck check_lr_vs_monomial_oracle(int max_boxes, int max_n, bool inject_fault = false);
SelftestCheck check_tropical_closed_form(int max_boxes, int max_n);
SelftestCheck check_lp_vs_majorization(int instances_per_n, int max_n);
SelftestCheck check_sturm_vs_sampling(int polynomials, int max_degree);
SelftestCheck check_dimension_cross_oracle(int max_boxes, int max_n);
SelftestCheck check_corpus_forward(const std::string& corpus_dir, unsigned threads);

}  // namespace repcontain

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "repcontain/io.hpp"
#include "repcontain/parallel.hpp"
#include "repcontain/selftest.hpp"

namespace {

using namespace repcontain;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;

unsigned resolve_threads(unsigned flag_value) {
    if (const char* env = std::getenv("REPCONTAIN_THREADS")) {
        try {
            unsigned v = static_cast<unsigned>(std::stoul(env));
            if (v >= 1) return v;
        } catch (...) {
            std::cerr << "warning: ignoring malformed REPCONTAIN_THREADS\n";
        }
    }
    return flag_value;
}

Representation load_rep(const std::string& path) {
    LoadedRepresentation loaded = load_representation_file(path);
    for (const std::string& w : loaded.warnings) {
        std::cerr << "warning: " << path << ": " << w << "\n";
    }
    return loaded.rep;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymptotic and catalytic containment of SU(n) representations"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned threads = default_thread_count();
    app.add_option("--threads", threads,
                   "worker threads (REPCONTAIN_THREADS overrides; default: available cores)");

    std::string rho_path, sigma_path, rep_path;
    std::string point_text, direction_text;
    int n_max = 12;
    int grid_depth = 33;
    int descent_iters = 50;
    double log_box = 8.0;
    int catalyst_boxes = 6;
    int catalyst_terms = 4;
    int catalyst_powers = 6;
    int converse_samples = 200;
    int tensor_power_arg = 1;
    std::string corpus_dir, inject_fault;

    CLI::App* check = app.add_subcommand("check", "full containment pipeline, JSON verdict");
    check->add_option("--rho", rho_path, "candidate subrepresentation (JSON file)")->required();
    check->add_option("--sigma", sigma_path, "candidate container (JSON file)")->required();
    check->add_option("--nmax", n_max, "largest tensor exponent to test");
    check->add_option("--grid-depth", grid_depth, "grid points per torus axis");
    check->add_option("--descent-iters", descent_iters, "coordinate-descent rounds");
    check->add_option("--log-box", log_box, "half-width of the log-coordinate scan box");
    check->add_option("--catalyst-boxes", catalyst_boxes, "max boxes for irrep catalysts");
    check->add_option("--catalyst-terms", catalyst_terms, "max irreps in a catalyst sum");
    check->add_option("--catalyst-powers", catalyst_powers, "max sigma power candidates");
    check->add_option("--converse-samples", converse_samples, "rational sample points");

    CLI::App* asym = app.add_subcommand("asymptotic", "search tensor-power containment only");
    asym->add_option("--rho", rho_path)->required();
    asym->add_option("--sigma", sigma_path)->required();
    asym->add_option("--nmax", n_max);

    CLI::App* cata = app.add_subcommand("catalyst", "search for a catalyst only");
    cata->add_option("--rho", rho_path)->required();
    cata->add_option("--sigma", sigma_path)->required();
    cata->add_option("--catalyst-boxes", catalyst_boxes);
    cata->add_option("--catalyst-terms", catalyst_terms);
    cata->add_option("--catalyst-powers", catalyst_powers);

    CLI::App* chr = app.add_subcommand("char", "evaluate a character at an SL torus point");
    chr->add_option("--rep", rep_path)->required();
    chr->add_option("--point", point_text, "comma-separated rationals, product 1")->required();

    CLI::App* trop = app.add_subcommand("trop", "tropical evaluation in a direction");
    trop->add_option("--rep", rep_path)->required();
    trop->add_option("--direction", direction_text, "comma-separated rationals, sum 0")
        ->required();

    CLI::App* tens = app.add_subcommand("tensor", "tensor product or power, JSON output");
    tens->add_option("--rho", rho_path)->required();
    tens->add_option("--sigma", sigma_path, "second factor (omit to use --power)");
    tens->add_option("--power", tensor_power_arg, "tensor power of --rho when --sigma absent");

    CLI::App* wp = app.add_subcommand("wp", "weight polytope report");
    wp->add_option("--rho", rho_path)->required();
    wp->add_option("--sigma", sigma_path, "second polytope for containment verdicts");

    CLI::App* su2c = app.add_subcommand("su2-certify", "rank-2 positivity certificate");
    su2c->add_option("--rho", rho_path)->required();
    su2c->add_option("--sigma", sigma_path)->required();

    CLI::App* st = app.add_subcommand("selftest", "run all oracle cross-checks");
    st->add_option("--corpus", corpus_dir, "directory of curated pair files");
    st->add_option("--inject-fault", inject_fault, "test fixture: corrupt a named check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    threads = resolve_threads(threads);
    if (threads < 1) threads = 1;

    try {
        if (check->parsed()) {
            Representation rho = load_rep(rho_path);
            Representation sigma = load_rep(sigma_path);
            PipelineParams params;
            params.check.search.grid_depth = grid_depth;
            params.check.search.descent_iters = descent_iters;
            params.check.search.log_box = log_box;
            params.check.search.threads = threads;
            params.n_max = n_max;
            params.catalyst.max_boxes = catalyst_boxes;
            params.catalyst.max_terms = catalyst_terms;
            params.catalyst.max_power = catalyst_powers;
            params.catalyst.threads = threads;
            params.converse_samples = converse_samples;
            emit(verdict_to_json(run_pipeline(rho, sigma, params)));
        } else if (asym->parsed()) {
            Representation rho = load_rep(rho_path);
            Representation sigma = load_rep(sigma_path);
            auto result = find_asymptotic_exponent(rho, sigma, n_max);
            json j;
            if (result) {
                j["asymptotic"] = {{"minimal_exponent", result->minimal_exponent},
                                   {"checked_up_to", result->checked_up_to},
                                   {"all_from_minimal", result->all_from_minimal}};
            } else {
                j["asymptotic"] = json();
                j["checked_up_to"] = n_max;
            }
            emit(j);
        } else if (cata->parsed()) {
            Representation rho = load_rep(rho_path);
            Representation sigma = load_rep(sigma_path);
            CatalystParams params;
            params.max_boxes = catalyst_boxes;
            params.max_terms = catalyst_terms;
            params.max_power = catalyst_powers;
            params.threads = threads;
            auto eta = find_catalyst(rho, sigma, params);
            json j;
            j["catalyst"] = eta ? representation_to_json(*eta) : json();
            emit(j);
        } else if (chr->parsed()) {
            Representation rep = load_rep(rep_path);
            TorusPoint p = make_torus_point(parse_rational_list(point_text), true);
            json j;
            j["point"] = torus_point_to_json(p);
            j["value"] = rational_to_string(eval_char(rep, p));
            emit(j);
        } else if (trop->parsed()) {
            Representation rep = load_rep(rep_path);
            Direction d = make_direction(parse_rational_list(direction_text), true);
            auto value = trop_eval(rep, d);
            json j;
            json dir = json::array();
            for (const Rational& c : d.y) dir.push_back(rational_to_string(c));
            j["direction"] = dir;
            j["value"] = value ? json(rational_to_string(*value)) : json();
            emit(j);
        } else if (tens->parsed()) {
            Representation rho = load_rep(rho_path);
            if (!sigma_path.empty()) {
                Representation sigma = load_rep(sigma_path);
                emit(representation_to_json(tensor(rho, sigma)));
            } else {
                if (tensor_power_arg < 0) throw std::invalid_argument("power must be >= 0");
                emit(representation_to_json(tensor_power(rho, tensor_power_arg)));
            }
        } else if (wp->parsed()) {
            Representation rho = load_rep(rho_path);
            WeightPolytope pr = weight_polytope(rho);
            json j;
            auto polytope_json = [](const WeightPolytope& P) {
                json out;
                json gens = json::array();
                for (const auto& g : P.generators) {
                    json row = json::array();
                    for (const Rational& c : g) row.push_back(rational_to_string(c));
                    gens.push_back(std::move(row));
                }
                out["generators"] = std::move(gens);
                out["vertex_count"] = P.vertices.size();
                out["affine_dimension"] = affine_dimension(P.vertices);
                return out;
            };
            j["rho"] = polytope_json(pr);
            if (!sigma_path.empty()) {
                Representation sigma = load_rep(sigma_path);
                j["sigma"] = polytope_json(weight_polytope(sigma));
                j["containment"] = {
                    {"rho_in_sigma", wp_containment(rho, sigma)},
                    {"rho_in_interior_sigma", wp_strict_containment(rho, sigma)},
                    {"sigma_in_rho", wp_containment(sigma, rho)},
                    {"sigma_in_interior_rho", wp_strict_containment(sigma, rho)}};
            }
            emit(j);
        } else if (su2c->parsed()) {
            Representation rho = load_rep(rho_path);
            Representation sigma = load_rep(sigma_path);
            MultiplicityMap mr = from_representation(rho);
            MultiplicityMap ms = from_representation(sigma);
            IntPolynomial g = char_diff_polynomial(mr, ms);
            PositivityCertificate cert = certify_strict_positive_on_ray(g);
            json j;
            json coeffs = json::array();
            for (const BigInt& c : g.coefficients()) coeffs.push_back(bigint_to_json(c));
            j["gap_polynomial"] = std::move(coeffs);
            j["gap_at_one"] = bigint_to_json(numerator(g.eval(Rational(1))));
            switch (cert.status) {
                case PositivityCertificate::Status::certified:
                    j["certificate"] = "certified";
                    break;
                case PositivityCertificate::Status::zero_polynomial:
                    j["certificate"] = "zero_polynomial";
                    break;
                case PositivityCertificate::Status::not_positive:
                    j["certificate"] = "not_positive";
                    break;
            }
            j["witness"] = cert.witness ? json(rational_to_string(*cert.witness)) : json();
            if (cert.root_interval) {
                j["root_interval"] =
                    json::array({rational_to_string(cert.root_interval->first),
                                 rational_to_string(cert.root_interval->second)});
            } else {
                j["root_interval"] = json();
            }
            j["tropical_strict"] = !mr.is_zero() && !ms.is_zero() && su2_tropical_check(mr, ms);
            emit(j);
        } else if (st->parsed()) {
            SelftestOptions opts;
            opts.corpus_dir = corpus_dir;
            opts.inject_fault = inject_fault;
            opts.threads = threads;
            auto checks = run_selftest(opts);
            bool all_ok = true;
            for (const SelftestCheck& c : checks) {
                const char* tag = c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL");
                std::cout << "[" << tag << "] " << c.name << ": " << c.detail << "\n";
                if (!c.passed) all_ok = false;
            }
            if (!all_ok) return kExitInconsistent;
        }
    } catch (const internal_inconsistency_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

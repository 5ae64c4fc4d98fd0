#include "repcontain/characters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "repcontain/parallel.hpp"

namespace repcontain {

TorusPoint make_torus_point(std::vector<Rational> coords, bool require_sl) {
    if (coords.empty()) throw std::invalid_argument("torus point needs at least one coordinate");
    Rational prod(1);
    for (const Rational& c : coords) {
        if (c <= 0) throw std::invalid_argument("torus coordinates must be strictly positive");
        prod *= c;
    }
    if (require_sl && prod != 1) {
        throw std::invalid_argument("SL torus point must have coordinate product exactly 1");
    }
    return TorusPoint{std::move(coords), require_sl};
}

TorusPoint sl_point_from_prefix(const std::vector<Rational>& prefix) {
    Rational prod(1);
    for (const Rational& c : prefix) {
        if (c <= 0) throw std::invalid_argument("torus coordinates must be strictly positive");
        prod *= c;
    }
    std::vector<Rational> coords = prefix;
    coords.push_back(Rational(1) / prod);
    return make_torus_point(std::move(coords), true);
}

namespace {

// Complete homogeneous evaluations h_0..h_max at x, by the one-variable-at-a-
// time recurrence.
template <typename Num>
std::vector<Num> homogeneous_evals(const std::vector<Num>& x, int max_degree) {
    std::vector<Num> h(static_cast<size_t>(max_degree) + 1, Num(0));
    h[0] = Num(1);
    for (const Num& xi : x) {
        for (int k = 1; k <= max_degree; ++k) {
            h[static_cast<size_t>(k)] += xi * h[static_cast<size_t>(k - 1)];
        }
    }
    return h;
}

Rational det_exact(std::vector<std::vector<Rational>> m) {
    size_t dim = m.size();
    Rational det(1);
    for (size_t col = 0; col < dim; ++col) {
        size_t pivot = col;
        while (pivot < dim && m[pivot][col] == 0) ++pivot;
        if (pivot == dim) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (size_t row = col + 1; row < dim; ++row) {
            if (m[row][col] == 0) continue;
            Rational factor = m[row][col] * inv;
            for (size_t k = col; k < dim; ++k) m[row][k] -= factor * m[col][k];
        }
    }
    return det;
}

double det_double(std::vector<std::vector<double>> m) {
    size_t dim = m.size();
    double det = 1.0;
    for (size_t col = 0; col < dim; ++col) {
        size_t pivot = col;
        for (size_t row = col + 1; row < dim; ++row) {
            if (std::fabs(m[row][col]) > std::fabs(m[pivot][col])) pivot = row;
        }
        if (m[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t row = col + 1; row < dim; ++row) {
            double factor = m[row][col] / m[col][col];
            for (size_t k = col; k < dim; ++k) m[row][k] -= factor * m[col][k];
        }
    }
    return det;
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}).
template <typename Num>
Num schur_via_jacobi_trudi(const Partition& lambda, const std::vector<Num>& x,
                           Num (*det)(std::vector<std::vector<Num>>)) {
    int rows = lambda.length();
    if (rows == 0) return Num(1);
    int max_degree = lambda.part(0) + rows - 1;
    std::vector<Num> h = homogeneous_evals(x, max_degree);
    std::vector<std::vector<Num>> m(static_cast<size_t>(rows),
                                    std::vector<Num>(static_cast<size_t>(rows), Num(0)));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < rows; ++j) {
            int deg = lambda.part(i) - i + j;
            if (deg >= 0) m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                h[static_cast<size_t>(deg)];
        }
    }
    return det(std::move(m));
}

constexpr int kMonomialEvalBoxLimit = 8;

}  // namespace

Rational eval_schur(const Partition& lambda, const std::vector<Rational>& x) {
    int n = static_cast<int>(x.size());
    if (lambda.length() > n) {
        throw std::invalid_argument("partition has more rows than coordinates");
    }
    if (lambda.size() <= kMonomialEvalBoxLimit) {
        Rational total(0);
        for (const auto& [alpha, c] : monomial_expansion(lambda, n).terms) {
            Rational term(c);
            for (size_t i = 0; i < alpha.size(); ++i) {
                for (int e = 0; e < alpha[i]; ++e) term *= x[i];
            }
            total += term;
        }
        return total;
    }
    return schur_via_jacobi_trudi<Rational>(lambda, x, det_exact);
}

Rational eval_char(const Representation& rho, const TorusPoint& x) {
    if (static_cast<int>(x.coords.size()) != rho.group_rank()) {
        throw std::invalid_argument("torus point dimension does not match the group rank");
    }
    if (!x.sl_constraint) {
        throw std::invalid_argument("character evaluation requires an SL torus point");
    }
    Rational total(0);
    for (const auto& [lambda, mult] : rho.element().terms()) {
        total += Rational(mult) * eval_schur(lambda, x.coords);
    }
    return total;
}

double eval_schur_d(const Partition& lambda, const std::vector<double>& x) {
    if (lambda.length() > static_cast<int>(x.size())) {
        throw std::invalid_argument("partition has more rows than coordinates");
    }
    return schur_via_jacobi_trudi<double>(lambda, x, det_double);
}

double eval_char_d(const Representation& rho, const std::vector<double>& x) {
    double total = 0.0;
    for (const auto& [lambda, mult] : rho.element().terms()) {
        total += mult.template convert_to<double>() * eval_schur_d(lambda, x);
    }
    return total;
}

namespace {

std::vector<double> grid_point(const std::vector<size_t>& idx, int depth, double box) {
    std::vector<double> y(idx.size());
    for (size_t d = 0; d < idx.size(); ++d) {
        y[d] = depth == 1 ? 0.0
                          : -box + 2.0 * box * static_cast<double>(idx[d]) /
                                static_cast<double>(depth - 1);
    }
    return y;
}

std::vector<double> torus_from_log(const std::vector<double>& y) {
    std::vector<double> x(y.size() + 1);
    double sum = 0.0;
    for (size_t i = 0; i < y.size(); ++i) {
        x[i] = std::exp(y[i]);
        sum += y[i];
    }
    x.back() = std::exp(-sum);
    return x;
}

// Exact re-verification of a float candidate: snap the first n-1 coordinates
// at several precisions and test chi_rho >= chi_sigma with rationals.
std::optional<TorusPoint> verify_candidate(const Representation& rho,
                                           const Representation& sigma,
                                           const std::vector<double>& y) {
    for (std::int64_t max_den : {1000000LL, 10000LL, 100LL}) {
        std::vector<Rational> prefix;
        prefix.reserve(y.size());
        for (double v : y) prefix.push_back(rational_approx(std::exp(v), max_den));
        TorusPoint p = sl_point_from_prefix(prefix);
        if (eval_char(rho, p) >= eval_char(sigma, p)) return p;
    }
    return std::nullopt;
}

}  // namespace

ViolationSearchResult search_violation_detailed(const Representation& rho,
                                                const Representation& sigma,
                                                const ViolationSearchParams& params) {
    if (rho.group_rank() != sigma.group_rank()) {
        throw std::invalid_argument("mismatched group ranks");
    }
    int n = rho.group_rank();
    ViolationSearchResult result;

    // The identity point first: there the gap is exactly dim sigma - dim rho.
    if (dimension(rho) >= dimension(sigma)) {
        result.witness = make_torus_point(std::vector<Rational>(static_cast<size_t>(n), 1), true);
        return result;
    }

    int dims = n - 1;
    int depth = std::max(1, params.grid_depth);
    size_t total = 1;
    for (int d = 0; d < dims; ++d) total *= static_cast<size_t>(depth);

    std::vector<double> gaps(total);
    parallel_for(total, params.threads, [&](size_t cell) {
        std::vector<size_t> idx(static_cast<size_t>(dims));
        size_t rest = cell;
        for (int d = dims - 1; d >= 0; --d) {
            idx[static_cast<size_t>(d)] = rest % static_cast<size_t>(depth);
            rest /= static_cast<size_t>(depth);
        }
        std::vector<double> x = torus_from_log(grid_point(idx, depth, params.log_box));
        gaps[cell] = eval_char_d(sigma, x) - eval_char_d(rho, x);
    });

    auto cell_log = [&](size_t cell) {
        std::vector<size_t> idx(static_cast<size_t>(dims));
        size_t rest = cell;
        for (int d = dims - 1; d >= 0; --d) {
            idx[static_cast<size_t>(d)] = rest % static_cast<size_t>(depth);
            rest /= static_cast<size_t>(depth);
        }
        return grid_point(idx, depth, params.log_box);
    };

    // Direct float violations, in row-major order.
    for (size_t cell = 0; cell < total; ++cell) {
        if (gaps[cell] > 0) continue;
        if (auto w = verify_candidate(rho, sigma, cell_log(cell))) {
            result.witness = w;
            return result;
        }
    }

    // Refine the shallowest gaps by coordinate descent.
    std::vector<size_t> order(total);
    for (size_t i = 0; i < total; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return gaps[a] < gaps[b]; });
    size_t seeds = std::min<size_t>(5, total);
    for (size_t s = 0; s < seeds; ++s) {
        std::vector<double> y = cell_log(order[s]);
        double best = gaps[order[s]];
        double step = depth > 1 ? 2.0 * params.log_box / (depth - 1) : 1.0;
        for (int iter = 0; iter < params.descent_iters && best > 0; ++iter) {
            bool improved = false;
            for (int d = 0; d < dims; ++d) {
                for (double dir : {+1.0, -1.0}) {
                    std::vector<double> cand = y;
                    cand[static_cast<size_t>(d)] =
                        std::clamp(cand[static_cast<size_t>(d)] + dir * step,
                                   -params.log_box, params.log_box);
                    double g = eval_char_d(sigma, torus_from_log(cand)) -
                               eval_char_d(rho, torus_from_log(cand));
                    if (g < best) {
                        best = g;
                        y = cand;
                        improved = true;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
        if (best <= 0) {
            if (auto w = verify_candidate(rho, sigma, y)) {
                result.witness = w;
                return result;
            }
        }
        std::vector<Rational> prefix;
        for (double v : y) prefix.push_back(rational_approx(std::exp(v), 1000000));
        result.near_minima.push_back(sl_point_from_prefix(prefix));
    }
    return result;
}

std::optional<TorusPoint> search_violation(const Representation& rho,
                                           const Representation& sigma,
                                           const ViolationSearchParams& params) {
    return search_violation_detailed(rho, sigma, params).witness;
}

}  // namespace repcontain

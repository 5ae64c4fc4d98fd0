#include "repcontain/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace repcontain {

WeightPolytope weight_polytope(const Representation& rho) {
    if (rho.is_zero()) {
        throw std::invalid_argument("the zero representation has no weight polytope");
    }
    int n = rho.group_rank();
    WeightPolytope P;
    P.n = n;
    std::set<std::vector<Rational>> gens;
    for (const auto& [lambda, mult] : rho.element().terms()) {
        std::vector<Rational> w(static_cast<size_t>(n));
        Rational mean(lambda.size(), n);
        for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = Rational(lambda.part(i)) - mean;
        gens.insert(std::move(w));
    }
    std::set<std::vector<Rational>> verts;
    for (const auto& g : gens) {
        std::vector<Rational> perm = g;
        std::sort(perm.begin(), perm.end());
        do {
            verts.insert(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    P.generators.assign(gens.begin(), gens.end());
    P.vertices.assign(verts.begin(), verts.end());
    return P;
}

MembershipResult lp_relint_membership(const std::vector<Rational>& p, const WeightPolytope& P) {
    if (static_cast<int>(p.size()) != P.n) {
        throw std::invalid_argument("point dimension does not match the polytope");
    }
    size_t V = P.vertices.size();
    size_t n = static_cast<size_t>(P.n);
    // Variables: slack weight d_v per vertex, then eps+ and eps-, with the
    // actual convex weight being c_v = d_v + eps.
    size_t nv = V + 2;
    std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(nv, Rational(0)));
    std::vector<Rational> b(n + 1, Rational(0));
    for (size_t v = 0; v < V; ++v) {
        for (size_t i = 0; i < n; ++i) A[i][v] = P.vertices[v][i];
        A[n][v] = 1;
    }
    for (size_t i = 0; i < n; ++i) {
        Rational coord_sum(0);
        for (size_t v = 0; v < V; ++v) coord_sum += P.vertices[v][i];
        A[i][V] = coord_sum;
        A[i][V + 1] = -coord_sum;
        b[i] = p[i];
    }
    A[n][V] = Rational(static_cast<long>(V));
    A[n][V + 1] = -Rational(static_cast<long>(V));
    b[n] = 1;
    std::vector<Rational> c(nv, Rational(0));
    c[V] = 1;
    c[V + 1] = -1;

    LPResult lp = lp_maximize(A, b, c);
    MembershipResult out;
    if (lp.status == LPResult::Status::unbounded) {
        throw internal_inconsistency_error("membership LP cannot be unbounded");
    }
    if (lp.status == LPResult::Status::infeasible) return out;

    Rational eps = lp.objective;
    // Re-substitute the reported solution exactly.
    Rational eps_check = lp.solution[V] - lp.solution[V + 1];
    std::vector<Rational> combo(n, Rational(0));
    Rational weight_sum(0);
    for (size_t v = 0; v < V; ++v) {
        Rational cv = lp.solution[v] + eps_check;
        if (cv < eps) throw internal_inconsistency_error("LP weight below the reported optimum");
        weight_sum += cv;
        for (size_t i = 0; i < n; ++i) combo[i] += cv * P.vertices[v][i];
    }
    if (eps_check != eps || weight_sum != 1 || combo != p) {
        throw internal_inconsistency_error("LP solution failed exact re-substitution");
    }
    out.epsilon = eps;
    out.inside_closed = eps >= 0;
    out.inside_relint = eps > 0;
    return out;
}

int affine_dimension(const std::vector<std::vector<Rational>>& points) {
    if (points.empty()) return -1;
    std::vector<std::vector<Rational>> diffs;
    for (size_t i = 1; i < points.size(); ++i) {
        std::vector<Rational> d(points[i].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    // Row rank of the difference matrix by exact elimination.
    int rank = 0;
    size_t cols = points[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < diffs.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < diffs.size() && diffs[sel][col] == 0) ++sel;
        if (sel == diffs.size()) continue;
        std::swap(diffs[sel], diffs[pivot_row]);
        for (size_t r = pivot_row + 1; r < diffs.size(); ++r) {
            if (diffs[r][col] == 0) continue;
            Rational factor = diffs[r][col] / diffs[pivot_row][col];
            for (size_t k = col; k < cols; ++k) diffs[r][k] -= factor * diffs[pivot_row][k];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

bool wp_strict_containment(const Representation& rho, const Representation& sigma) {
    if (rho.group_rank() != sigma.group_rank()) {
        throw std::invalid_argument("mismatched group ranks");
    }
    if (rho.is_zero() || sigma.is_zero()) {
        throw std::invalid_argument("weight polytopes require nonzero representations");
    }
    WeightPolytope ps = weight_polytope(sigma);
    if (affine_dimension(ps.vertices) != sigma.group_rank() - 1) return false;
    WeightPolytope pr = weight_polytope(rho);
    for (const auto& g : pr.generators) {
        if (!lp_relint_membership(g, ps).inside_relint) return false;
    }
    return true;
}

bool wp_containment(const Representation& rho, const Representation& sigma) {
    if (rho.group_rank() != sigma.group_rank()) {
        throw std::invalid_argument("mismatched group ranks");
    }
    if (rho.is_zero() || sigma.is_zero()) {
        throw std::invalid_argument("weight polytopes require nonzero representations");
    }
    WeightPolytope ps = weight_polytope(sigma);
    WeightPolytope pr = weight_polytope(rho);
    for (const auto& g : pr.generators) {
        if (!lp_relint_membership(g, ps).inside_closed) return false;
    }
    return true;
}

MembershipResult orbit_membership_by_majorization(const std::vector<Rational>& p,
                                                  const std::vector<Rational>& generator) {
    if (p.size() != generator.size()) {
        throw std::invalid_argument("point dimension does not match the generator");
    }
    std::vector<Rational> ps = p, gs = generator;
    std::sort(ps.begin(), ps.end(), std::greater<Rational>());
    std::sort(gs.begin(), gs.end(), std::greater<Rational>());
    MembershipResult out;
    Rational acc_p(0), acc_g(0);
    bool closed = true, strict = true;
    for (size_t k = 0; k < ps.size(); ++k) {
        acc_p += ps[k];
        acc_g += gs[k];
        if (k + 1 < ps.size()) {
            if (acc_p > acc_g) closed = false;
            if (acc_p >= acc_g) strict = false;
        }
    }
    if (acc_p != acc_g) {
        closed = false;
        strict = false;
    }
    out.inside_closed = closed;
    bool degenerate = gs.front() == gs.back();  // single-point orbit
    out.inside_relint = degenerate ? (closed && ps == gs) : (closed && strict);
    return out;
}

}  // namespace repcontain

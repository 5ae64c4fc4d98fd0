#include "repcontain/lp.hpp"

#include <stdexcept>

namespace repcontain {

namespace {

// Tableau with rows 0..m-1 holding the constraints (last column is the right
// hand side) and row m holding reduced costs with the negated objective value
// in the last column.
struct Tableau {
    std::vector<std::vector<Rational>> t;
    std::vector<size_t> basis;
    std::vector<bool> allowed;  // columns the entering rule may pick
    size_t rows, cols;          // constraint rows, variable columns

    void pivot(size_t p, size_t q) {
        Rational inv = Rational(1) / t[p][q];
        for (size_t j = 0; j <= cols; ++j) t[p][j] *= inv;
        for (size_t i = 0; i <= rows; ++i) {
            if (i == p || t[i][q] == 0) continue;
            Rational factor = t[i][q];
            for (size_t j = 0; j <= cols; ++j) t[i][j] -= factor * t[p][j];
        }
        basis[p] = q;
    }

    // Bland's rule: smallest-index entering column with positive reduced
    // cost, smallest basis index on ratio ties.
    LPResult::Status iterate() {
        for (;;) {
            size_t enter = cols;
            for (size_t j = 0; j < cols; ++j) {
                if (allowed[j] && t[rows][j] > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols) return LPResult::Status::optimal;
            size_t leave = rows;
            Rational best_ratio;
            for (size_t i = 0; i < rows; ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][cols] / t[i][enter];
                if (leave == rows || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows) return LPResult::Status::unbounded;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LPResult lp_maximize(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                     std::vector<Rational> c) {
    size_t m = A.size();
    size_t nv = c.size();
    for (const auto& row : A) {
        if (row.size() != nv) throw std::invalid_argument("constraint matrix shape mismatch");
    }
    if (b.size() != m) throw std::invalid_argument("right hand side length mismatch");

    for (size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            for (auto& v : A[i]) v = -v;
            b[i] = -b[i];
        }
    }

    Tableau tab;
    tab.rows = m;
    tab.cols = nv + m;  // artificials appended
    tab.t.assign(m + 1, std::vector<Rational>(tab.cols + 1, Rational(0)));
    tab.basis.resize(m);
    tab.allowed.assign(tab.cols, true);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < nv; ++j) tab.t[i][j] = A[i][j];
        tab.t[i][nv + i] = 1;
        tab.t[i][tab.cols] = b[i];
        tab.basis[i] = nv + i;
    }

    // Phase 1: maximize minus the artificial sum. Reduced costs of the
    // original columns are the column sums; artificials are basic.
    Rational rhs_sum(0);
    for (size_t i = 0; i < m; ++i) {
        rhs_sum += b[i];
        for (size_t j = 0; j < nv; ++j) tab.t[m][j] += tab.t[i][j];
    }
    tab.t[m][tab.cols] = rhs_sum;
    if (tab.iterate() != LPResult::Status::optimal) {
        throw internal_inconsistency_error("phase-1 simplex cannot be unbounded");
    }
    if (tab.t[m][tab.cols] != 0) {
        LPResult res;
        res.status = LPResult::Status::infeasible;
        return res;
    }
    // Drive leftover artificials out of the (degenerate) basis; a row with no
    // eligible pivot is a redundant constraint and keeps its artificial at 0.
    for (size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < nv) continue;
        size_t q = nv;
        for (size_t j = 0; j < nv; ++j) {
            if (tab.t[i][j] != 0) {
                q = j;
                break;
            }
        }
        if (q < nv) tab.pivot(i, q);
    }
    for (size_t j = nv; j < tab.cols; ++j) tab.allowed[j] = false;

    // Phase 2: install the real objective in reduced-cost form.
    for (size_t j = 0; j <= tab.cols; ++j) tab.t[m][j] = 0;
    for (size_t j = 0; j < nv; ++j) tab.t[m][j] = c[j];
    for (size_t i = 0; i < m; ++i) {
        if (tab.basis[i] >= nv) continue;
        Rational coeff = c[tab.basis[i]];
        if (coeff == 0) continue;
        for (size_t j = 0; j <= tab.cols; ++j) tab.t[m][j] -= coeff * tab.t[i][j];
    }
    LPResult res;
    res.status = tab.iterate();
    if (res.status != LPResult::Status::optimal) return res;
    res.objective = -tab.t[m][tab.cols];
    res.solution.assign(nv, Rational(0));
    for (size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < nv) res.solution[tab.basis[i]] = tab.t[i][tab.cols];
    }
    return res;
}

}  // namespace repcontain

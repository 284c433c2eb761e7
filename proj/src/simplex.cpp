#include "ihull/simplex.hpp"

#include <cstddef>

#include "ihull/errors.hpp"

namespace ihull {

namespace {

/**
 * Dense rational tableau for Ax = b, x ≥ 0 with one artificial variable per
 * row. Column layout: [0, nvars) structural, [nvars, nvars+m) artificial,
 * last column is the right-hand side. basis[i] is the column basic in row i.
 */
struct Tableau {
    std::size_t nvars = 0;
    std::size_t nrows = 0;
    std::vector<std::vector<Rat>> row; // nrows x (nvars + nrows + 1)
    std::vector<Rat> obj;              // reduced-cost row, same width
    std::vector<std::size_t> basis;

    std::size_t rhs_col() const { return nvars + nrows; }

    void pivot(std::size_t pr, std::size_t pc) {
        Rat piv = row[pr][pc];
        for (auto& v : row[pr]) v /= piv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == pr) continue;
            Rat f = row[i][pc];
            if (f == 0) continue;
            for (std::size_t j = 0; j <= rhs_col(); ++j)
                row[i][j] -= f * row[pr][j];
        }
        Rat f = obj[pc];
        if (f != 0)
            for (std::size_t j = 0; j <= rhs_col(); ++j)
                obj[j] -= f * row[pr][j];
        basis[pr] = pc;
    }

    /**
     * Runs simplex iterations until the reduced-cost row is nonnegative over
     * columns [0, limit). Returns false if an improving column had no
     * positive entry, i.e. the problem is unbounded below. Pricing starts
     * with Dantzig's rule and falls back to Bland's after a fixed pivot
     * budget; the Bland phase cannot cycle, so the loop terminates.
     */
    bool iterate(std::size_t limit) {
        std::size_t pivots = 0;
        const std::size_t dantzig_budget = 64 + 4 * (nrows + limit);
        for (;;) {
            std::size_t enter = limit;
            if (pivots < dantzig_budget) {
                for (std::size_t j = 0; j < limit; ++j)
                    if (obj[j] < 0 && (enter == limit || obj[j] < obj[enter])) enter = j;
            } else {
                for (std::size_t j = 0; j < limit; ++j)
                    if (obj[j] < 0) { enter = j; break; }
            }
            if (enter == limit) return true;
            ++pivots;

            std::size_t leave = nrows;
            Rat best;
            for (std::size_t i = 0; i < nrows; ++i) {
                if (row[i][enter] <= 0) continue;
                Rat ratio = row[i][rhs_col()] / row[i][enter];
                if (leave == nrows || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == nrows) return false;
            pivot(leave, enter);
        }
    }
};

Tableau build_phase1(const std::vector<std::vector<Rat>>& A,
                     const std::vector<Rat>& b, std::size_t n) {
    std::size_t m = A.size();
    if (b.size() != m) throw DomainError("lp: rows/rhs mismatch");
    for (const auto& r : A)
        if (r.size() != n) throw DomainError("lp: ragged constraint matrix");

    Tableau t;
    t.nvars = n;
    t.nrows = m;
    t.row.assign(m, std::vector<Rat>(n + m + 1, Rat(0)));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool neg = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            t.row[i][j] = neg ? Rat(-A[i][j]) : A[i][j];
        t.row[i][n + i] = 1;
        t.row[i][t.rhs_col()] = neg ? Rat(-b[i]) : b[i];
        t.basis[i] = n + i;
    }
    // Phase-1 reduced costs: cost 1 on artificials, 0 elsewhere, priced out
    // against the all-artificial starting basis.
    t.obj.assign(n + m + 1, Rat(0));
    for (std::size_t j = 0; j <= t.rhs_col(); ++j) {
        Rat s(0);
        for (std::size_t i = 0; i < m; ++i) s += t.row[i][j];
        t.obj[j] = (j >= n && j < n + m) ? Rat(1) - s : -s;
    }
    return t;
}

/**
 * Phase 1; returns false when the feasible region is empty. On success any
 * artificial still basic sits at value zero. Such a row either admits a
 * degenerate pivot onto a structural column, or has no structural entries
 * left at all; the latter kind is inert in phase 2 (every structural
 * coefficient is zero, so no later pivot touches it) and stays in place.
 */
bool run_phase1(Tableau& t) {
    t.iterate(t.nvars + t.nrows); // never unbounded: objective is >= 0
    if (t.obj[t.rhs_col()] != 0) return false; // optimum = -obj[rhs] > 0
    for (std::size_t i = 0; i < t.nrows; ++i) {
        if (t.basis[i] < t.nvars) continue;
        for (std::size_t j = 0; j < t.nvars; ++j)
            if (t.row[i][j] != 0) { t.pivot(i, j); break; }
    }
    return true;
}

} // namespace

LpResult solve_standard_min(const std::vector<std::vector<Rat>>& A,
                            const std::vector<Rat>& b,
                            const std::vector<Rat>& c) {
    std::size_t n = c.size();
    if (n == 0) throw DomainError("lp: empty objective");

    Tableau t = build_phase1(A, b, n);
    if (!run_phase1(t)) return {LpStatus::infeasible, Rat(0), {}};

    // Phase-2 reduced costs for the true objective; artificials are barred
    // from entering by capping the column scan at nvars.
    for (std::size_t j = 0; j <= t.rhs_col(); ++j) {
        Rat s(0);
        for (std::size_t i = 0; i < t.nrows; ++i)
            if (t.basis[i] < t.nvars) s += c[t.basis[i]] * t.row[i][j];
        t.obj[j] = (j < t.nvars ? c[j] : Rat(0)) - s;
    }
    if (!t.iterate(t.nvars))
        return {LpStatus::unbounded, Rat(0), {}};

    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = 0; i < t.nrows; ++i)
        if (t.basis[i] < n) x[t.basis[i]] = t.row[i][t.rhs_col()];
    Rat val(0);
    for (std::size_t j = 0; j < n; ++j) val += c[j] * x[j];
    return {LpStatus::optimum, val, std::move(x)};
}

bool standard_feasible(const std::vector<std::vector<Rat>>& A,
                       const std::vector<Rat>& b) {
    std::size_t n = A.empty() ? 0 : A[0].size();
    Tableau t = build_phase1(A, b, n);
    t.iterate(t.nvars + t.nrows);
    return t.obj[t.rhs_col()] == 0;
}

LpResult lp_solve(const std::vector<Rat>& objective,
                  const std::vector<Inequality>& constraints) {
    std::size_t n = objective.size();
    if (n == 0) throw DomainError("lp: empty objective");
    for (const auto& ineq : constraints)
        if (ineq.coeffs.size() != n)
            throw DomainError("lp: constraint width mismatch");

    // x = u - w with u, w >= 0, one slack per inequality; minimize the
    // negated objective.
    std::size_t m = constraints.size();
    std::vector<std::vector<Rat>> A(m, std::vector<Rat>(2 * n + m, Rat(0)));
    std::vector<Rat> b(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            A[i][j] = constraints[i].coeffs[j];
            A[i][n + j] = -constraints[i].coeffs[j];
        }
        A[i][2 * n + i] = 1;
        b[i] = constraints[i].rhs;
    }
    std::vector<Rat> c(2 * n + m, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
        c[j] = -objective[j];
        c[n + j] = objective[j];
    }

    LpResult inner = solve_standard_min(A, b, c);
    if (inner.status != LpStatus::optimum)
        return {inner.status, Rat(0), {}};
    std::vector<Rat> x(n);
    for (std::size_t j = 0; j < n; ++j)
        x[j] = inner.point[j] - inner.point[n + j];
    return {LpStatus::optimum, -inner.value, std::move(x)};
}

} // namespace ihull

#include "ihull/model.hpp"

#include <algorithm>
#include <optional>

#include "ihull/errors.hpp"
#include "ihull/simplex.hpp"

namespace ihull {

LinearSystem::LinearSystem(IntMatrix a, std::vector<Int> rhs) : A(std::move(a)), b(std::move(rhs)) {
    if (b.size() != A.rows())
        throw DomainError("system: right-hand side length does not match row count");
}

KnapsackInstance::KnapsackInstance(std::vector<Int> weights, Int bound) {
    if (weights.empty()) throw DomainError("knapsack: no variables");
    for (const Int& w : weights)
        if (w <= 0) throw DomainError("knapsack: weights must be positive");
    if (bound < 0) throw DomainError("knapsack: negative right-hand side");
    a = std::move(weights);
    a0 = std::move(bound);
    relaxed = false;
}

KnapsackInstance KnapsackInstance::relaxed_instance(std::vector<Int> weights, Int bound) {
    if (weights.empty()) throw DomainError("knapsack: no variables");
    for (const Int& w : weights)
        if (w < 0) throw DomainError("knapsack: negative weight");
    if (bound < 0) throw DomainError("knapsack: negative right-hand side");
    KnapsackInstance k;
    k.a = std::move(weights);
    k.a0 = std::move(bound);
    k.relaxed = true;
    return k;
}

CongruenceInstance::CongruenceInstance(std::vector<Int> coeffs, Int rhs, Int modulus) {
    if (coeffs.empty()) throw DomainError("congruence: no variables");
    if (modulus < 2) throw DomainError("congruence: modulus must be at least 2");
    delta = std::move(modulus);
    a.reserve(coeffs.size());
    for (Int& c : coeffs) {
        Int r = c % delta;
        if (r < 0) r += delta;
        a.push_back(std::move(r));
    }
    a0 = rhs % delta;
    if (a0 < 0) a0 += delta;
}

Int alpha(const LinearSystem& sys) {
    Int best(0);
    for (std::size_t i = 0; i < sys.rows(); ++i)
        for (std::size_t j = 0; j < sys.cols(); ++j)
            best = std::max(best, Int(abs(sys.A(i, j))));
    return best;
}

Int alpha1(const KnapsackInstance& k) {
    Int best(0);
    for (const Int& w : k.a) best = std::max(best, w);
    return best;
}

Real encoding_length(const LinearSystem& sys) {
    Real best(0L);
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        Real row(1L);
        for (std::size_t j = 0; j < sys.cols(); ++j)
            row = row + Real(1L) + log2(Real(Int(1 + abs(sys.A(i, j)))));
        row = row + log2(Real(Int(1 + abs(sys.b[i]))));
        if (row.compare(best) > 0) best = row;
    }
    return best;
}

StandardFormSystem to_standard_form(const LinearSystem& sys) {
    std::size_t m = sys.rows(), n = sys.cols();
    std::vector<std::vector<Int>> rows(m, std::vector<Int>(2 * n + m, Int(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rows[i][j] = sys.A(i, j);
            rows[i][n + j] = -sys.A(i, j);
        }
        rows[i][2 * n + i] = 1;
    }
    return {IntMatrix::from_rows(rows), sys.b, n};
}

Int delta_A(const LinearSystem& sys) {
    if (sys.rows() < sys.cols())
        throw DomainError("delta: fewer rows than columns, no full-order minors");
    return max_abs_minor(sys.A, sys.cols());
}

namespace {

/** Solves the square rational system Mx = r by Gaussian elimination. */
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> M,
                                             std::vector<Rat> r) {
    std::size_t n = M.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(M[piv], M[col]);
        std::swap(r[piv], r[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || M[i][col] == 0) continue;
            Rat f = M[i][col] / M[col][col];
            for (std::size_t j = col; j < n; ++j) M[i][j] -= f * M[col][j];
            r[i] -= f * r[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = r[i] / M[i][i];
    return x;
}

} // namespace

std::vector<std::vector<Rat>> rational_vertices(const LinearSystem& sys) {
    std::size_t m = sys.rows(), n = sys.cols();
    if (m > 20) throw DomainError("rational vertices: too many rows for subset enumeration");
    if (rank(sys.A) != n)
        throw DomainError("rational vertices: coefficient matrix must have full column rank");

    std::vector<std::vector<Rat>> out;
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    for (;;) {
        std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
        std::vector<Rat> r(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) M[i][j] = Rat(sys.A(pick[i], j));
            r[i] = Rat(sys.b[pick[i]]);
        }
        if (auto x = solve_square(std::move(M), std::move(r))) {
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i) {
                Rat lhs(0);
                for (std::size_t j = 0; j < n; ++j) lhs += Rat(sys.A(i, j)) * (*x)[j];
                ok = lhs <= Rat(sys.b[i]);
            }
            if (ok) out.push_back(std::move(*x));
        }

        // advance to the next n-subset of {0..m-1} in lexicographic order
        std::size_t i = n;
        while (i > 0 && pick[i - 1] == m - n + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw EmptyRegionError("rational vertices: empty polyhedron");
    return out;
}

std::set<std::size_t> active_index_set(const LinearSystem& sys,
                                       const std::vector<Rat>& v) {
    std::size_t n = sys.cols();
    if (v.size() != n) throw DomainError("active set: point dimension mismatch");
    Rat threshold(Int(n) * delta_A(sys));
    std::set<std::size_t> J;
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        Rat slack(sys.b[i]);
        for (std::size_t j = 0; j < n; ++j) slack -= Rat(sys.A(i, j)) * v[j];
        if (slack < threshold) J.insert(i);
    }
    return J;
}

std::vector<Int> round_point(const std::vector<Rat>& v) {
    std::vector<Int> w;
    w.reserve(v.size());
    for (const Rat& q : v) w.push_back(round_half_away(q));
    return w;
}

ShiftedSystem shift_by_rounded_vertex(const LinearSystem& sys,
                                      const std::vector<Rat>& v) {
    std::vector<Int> w = round_point(v);
    std::set<std::size_t> J = active_index_set(sys, v);
    if (J.empty()) throw DomainError("shift: no active rows at the given point");

    std::size_t n = sys.cols();
    std::vector<std::vector<Int>> rows;
    std::vector<Int> rhs;
    std::vector<std::size_t> idx;
    for (std::size_t i : J) {
        std::vector<Int> row(n);
        Int shifted = sys.b[i];
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = sys.A(i, j);
            shifted -= sys.A(i, j) * w[j];
        }
        rows.push_back(std::move(row));
        rhs.push_back(std::move(shifted));
        idx.push_back(i);
    }
    return {LinearSystem(IntMatrix::from_rows(rows), std::move(rhs)), std::move(w), std::move(idx)};
}

Rat diameter(const LinearSystem& sys) {
    std::size_t n = sys.cols();
    std::vector<Inequality> cons;
    cons.reserve(sys.rows());
    for (std::size_t i = 0; i < sys.rows(); ++i) {
        Inequality q;
        q.coeffs.resize(n);
        for (std::size_t j = 0; j < n; ++j) q.coeffs[j] = Rat(sys.A(i, j));
        q.rhs = Rat(sys.b[i]);
        cons.push_back(std::move(q));
    }

    Rat best(0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rat> obj(n, Rat(0));
        obj[j] = 1;
        LpResult hi = lp_solve(obj, cons);
        if (hi.status == LpStatus::infeasible) throw EmptyRegionError("diameter: empty polyhedron");
        if (hi.status == LpStatus::unbounded) throw UnboundedError("diameter: unbounded polyhedron");
        obj[j] = -1;
        LpResult lo = lp_solve(obj, cons);
        if (lo.status == LpStatus::unbounded) throw UnboundedError("diameter: unbounded polyhedron");
        Rat spread = hi.value + lo.value; // max x_j + max(-x_j)
        best = std::max(best, spread);
    }
    return best;
}

LinearSystem knapsack_system(const KnapsackInstance& k) {
    std::size_t n = k.dim();
    std::vector<std::vector<Int>> rows(n + 1, std::vector<Int>(n, Int(0)));
    std::vector<Int> rhs(n + 1, Int(0));
    for (std::size_t j = 0; j < n; ++j) rows[j][j] = -1;
    for (std::size_t j = 0; j < n; ++j) rows[n][j] = k.a[j];
    rhs[n] = k.a0;
    return LinearSystem(IntMatrix::from_rows(rows), std::move(rhs));
}

} // namespace ihull

#include "ihull/matrix.hpp"

#include <algorithm>

namespace ihull {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : m_(rows), n_(cols), e_(rows * cols, Int(0)) {
    if (rows == 0 || cols == 0)
        throw DomainError("IntMatrix: dimensions must be positive");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : m_(rows.size()), n_(rows.size() ? rows.begin()->size() : 0) {
    if (m_ == 0 || n_ == 0)
        throw DomainError("IntMatrix: dimensions must be positive");
    e_.reserve(m_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_)
            throw DomainError("IntMatrix: ragged rows");
        for (long v : r)
            e_.emplace_back(v);
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw DomainError("IntMatrix: dimensions must be positive");
    IntMatrix M(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != M.n_)
            throw DomainError("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < M.n_; ++j)
            M(i, j) = rows[i][j];
    }
    return M;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> r(n_);
    for (std::size_t j = 0; j < n_; ++j)
        r[j] = (*this)(i, j);
    return r;
}

namespace {

/*
 * Bareiss elimination on a working copy. Returns the number of pivots; when
 * det != nullptr the matrix must be square and *det receives the exact
 * determinant (the final pivot, sign-adjusted for row/column swaps).
 */
std::size_t bareiss(IntMatrix W, Int* det) {
    const std::size_t m = W.rows(), n = W.cols();
    int sign = 1;
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // pivot search over the remaining block, any nonzero entry will do
        std::size_t pi = r, pj = c;
        bool found = false;
        for (std::size_t i = r; i < m && !found; ++i)
            for (std::size_t j = c; j < n && !found; ++j)
                if (W(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found)
            break;
        if (pi != r) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(W(r, j), W(pi, j));
            sign = -sign;
        }
        if (pj != c) {
            for (std::size_t i = 0; i < m; ++i)
                std::swap(W(i, c), W(i, pj));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                Int t = W(r, c) * W(i, j) - W(i, c) * W(r, j);
                t /= prev; // exact at every Bareiss step
                W(i, j) = t;
            }
            W(i, c) = 0;
        }
        prev = W(r, c);
        ++r;
    }
    if (det) {
        if (m != n)
            throw DomainError("determinant: matrix not square");
        *det = (r == n) ? Int(sign * prev) : Int(0);
    }
    return r;
}

/* advances a k-subset of {0..n-1} in lexicographic order */
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    const std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] < n - k + i) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j)
                s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

Int determinant(const IntMatrix& M) {
    Int d;
    bareiss(M, &d);
    return d;
}

std::size_t rank(const IntMatrix& M) { return bareiss(M, nullptr); }

Int max_abs_minor(const IntMatrix& M, std::size_t k) {
    if (k == 0 || k > M.rows() || k > M.cols())
        throw DomainError("max_abs_minor: k out of range");
    std::vector<std::size_t> ri(k), ci(k);
    Int best = 0;
    for (std::size_t i = 0; i < k; ++i)
        ri[i] = i;
    do {
        for (std::size_t i = 0; i < k; ++i)
            ci[i] = i;
        do {
            IntMatrix S(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    S(i, j) = M(ri[i], ci[j]);
            Int d = determinant(S);
            if (d < 0)
                d = -d;
            if (d > best)
                best = d;
        } while (next_subset(ci, M.cols()));
    } while (next_subset(ri, M.rows()));
    return best;
}

} // namespace ihull

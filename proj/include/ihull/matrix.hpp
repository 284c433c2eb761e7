#ifndef IHULL_MATRIX_HPP
#define IHULL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ihull/numbers.hpp"

namespace ihull {

/** Dense integer matrix, m ≥ 1 rows and n ≥ 1 columns. */
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    std::vector<Int> row(std::size_t i) const;

    bool operator==(const IntMatrix& o) const = default;

private:
    std::size_t m_, n_;
    std::vector<Int> e_;
};

/** Exact determinant of a square matrix (Bareiss fraction-free elimination). */
Int determinant(const IntMatrix& M);

/** Exact rank over the rationals via fraction-free elimination. */
std::size_t rank(const IntMatrix& M);

/**
 * Maximum of |det| over all k×k submatrices. Exhaustive over row/column
 * subsets; intended for desk-scale matrices.
 */
Int max_abs_minor(const IntMatrix& M, std::size_t k);

} // namespace ihull

#endif

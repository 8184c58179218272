#pragma once

#include "okc/algebra/bigint.hpp"

#include <cstddef>
#include <vector>

namespace okc {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<BigInt> row(std::size_t r) const;
    IntMatrix transpose() const;
    IntMatrix columns(const std::vector<std::size_t>& idx) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix&) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

struct SNFResult {
    /// Nonzero invariant factors d_1 | d_2 | ..., all positive.
    std::vector<BigInt> factors;
    std::size_t rank = 0;
    /// Unimodular transforms with U * M * V = diag(factors, 0...).
    IntMatrix u, v;
};

SNFResult smith_normal_form(const IntMatrix& m);

/// Reduce a list of integer row vectors of length `cols` to an echelon
/// basis of the lattice they span (zero rows dropped). Rows are processed
/// incrementally, so very tall sparse relation systems stay cheap.
IntMatrix lattice_basis(const std::vector<std::vector<BigInt>>& rows, std::size_t cols);

struct QuotientBasis {
    std::size_t free_rank = 0;
    /// Invariant factors > 1 of the torsion part.
    std::vector<BigInt> torsion;
    /// Indices of the coordinate vectors chosen as a Z-basis of the free
    /// part, selected greedily in index order (smallest index first).
    std::vector<std::size_t> representatives;
    /// coords(j, k): coordinate k of the image of e_j in the free part.
    IntMatrix coords;
    /// Row k is a vector of Z^m whose class is the k-th free basis element
    /// dual to `coords` (so free_basis * coords = identity).
    IntMatrix free_basis;
};

/// Describe Z^m / span(relations). Representatives are the earliest
/// coordinate vectors whose images extend to a Z-basis of the free part;
/// if no such selection of size free_rank exists, representatives is
/// shorter than free_rank.
QuotientBasis quotient_basis(const std::vector<std::vector<BigInt>>& relations, std::size_t m);

/// Inverse of a square matrix with determinant +-1. Throws
/// std::domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Express each free-part coordinate vector in terms of the representative
/// basis: row j holds the coefficients of e_j on `representatives`.
/// Requires a complete representative selection.
IntMatrix express_in_representatives(const QuotientBasis& q);

}  // namespace okc

#include "okc/algebra/matrix.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace okc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::columns(const std::vector<std::size_t>& idx) const {
    IntMatrix out(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k) out(i, k) = (*this)(i, idx[k]);
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
        }
    }
    return c;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Position of the nonzero entry of least absolute value in the trailing
// submatrix starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> min_entry(const IntMatrix& a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    BigInt best_abs;
    for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            BigInt v = abs_big(a(i, j));
            if (!best || v < best_abs) {
                best = {i, j};
                best_abs = v;
                if (best_abs == 1) return best;
            }
        }
    }
    return best;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(r);
    IntMatrix v = IntMatrix::identity(c);

    auto swap_r = [&](std::size_t i, std::size_t j) { a.swap_rows(i, j); u.swap_rows(i, j); };
    auto swap_c = [&](std::size_t i, std::size_t j) { a.swap_cols(i, j); v.swap_cols(i, j); };
    auto add_r = [&](std::size_t d, std::size_t s, const BigInt& k) { a.add_row_multiple(d, s, k); u.add_row_multiple(d, s, k); };
    auto add_c = [&](std::size_t d, std::size_t s, const BigInt& k) { a.add_col_multiple(d, s, k); v.add_col_multiple(d, s, k); };

    std::size_t t = 0;
    for (; t < std::min(r, c); ++t) {
        auto pos = min_entry(a, t);
        if (!pos) break;
        swap_r(t, pos->first);
        swap_c(t, pos->second);
        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a(i, t) == 0) continue;
                add_r(i, t, -(a(i, t) / a(t, t)));
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a(t, j) == 0) continue;
                add_c(j, t, -(a(t, j) / a(t, t)));
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot survived; make it the pivot.
                std::size_t bi = t, bj = t;
                BigInt best = abs_big(a(t, t));
                for (std::size_t i = t + 1; i < r; ++i)
                    if (a(i, t) != 0 && abs_big(a(i, t)) < best) { best = abs_big(a(i, t)); bi = i; bj = t; }
                for (std::size_t j = t + 1; j < c; ++j)
                    if (a(t, j) != 0 && abs_big(a(t, j)) < best) { best = abs_big(a(t, j)); bi = t; bj = j; }
                swap_r(t, bi);
                swap_c(t, bj);
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < r && !bad_row; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (a(i, j) % a(t, t) != 0) { bad_row = i; break; }
            if (!bad_row) break;
            add_r(t, *bad_row, 1);
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < c; ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < r; ++j) u(t, j) = -u(t, j);
        }
    }

    SNFResult res;
    res.rank = t;
    for (std::size_t i = 0; i < t; ++i) res.factors.push_back(a(i, i));
    res.u = std::move(u);
    res.v = std::move(v);
    return res;
}

IntMatrix lattice_basis(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
    std::map<std::size_t, std::vector<BigInt>> pivots;
    auto axpy = [](std::vector<BigInt>& y, const BigInt& k, const std::vector<BigInt>& x) {
        for (std::size_t i = 0; i < y.size(); ++i)
            if (x[i] != 0) y[i] += k * x[i];
    };
    for (const auto& input : rows) {
        if (input.size() != cols) throw std::invalid_argument("lattice_basis: row length mismatch");
        std::vector<BigInt> r = input;
        for (std::size_t col = 0; col < cols; ++col) {
            if (r[col] == 0) continue;
            auto it = pivots.find(col);
            if (it == pivots.end()) {
                if (r[col] < 0) for (auto& x : r) x = -x;
                pivots.emplace(col, std::move(r));
                break;
            }
            auto& p = it->second;
            if (r[col] % p[col] == 0) {
                axpy(r, -(r[col] / p[col]), p);
                continue;
            }
            // Extended gcd: replace the pivot row by a combination whose
            // leading entry is gcd(p, r), and keep reducing the cofactor row.
            BigInt a = p[col], b = r[col];
            BigInt s0 = 1, s1 = 0, t0 = 0, t1 = 1;
            BigInt x = a, y = b;
            while (y != 0) {
                BigInt q = x / y;
                BigInt tmp = x - q * y; x = y; y = tmp;
                tmp = s0 - q * s1; s0 = s1; s1 = tmp;
                tmp = t0 - q * t1; t0 = t1; t1 = tmp;
            }
            // x = s0*a + t0*b
            std::vector<BigInt> np(cols), nr(cols);
            BigInt ag = a / x, bg = b / x;
            for (std::size_t i = 0; i < cols; ++i) {
                np[i] = s0 * p[i] + t0 * r[i];
                nr[i] = bg * p[i] - ag * r[i];
            }
            if (np[col] < 0) for (auto& e : np) e = -e;
            p = std::move(np);
            r = std::move(nr);
        }
    }
    IntMatrix out(pivots.size(), cols);
    std::size_t i = 0;
    for (const auto& [col, row] : pivots) {
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = row[j];
        ++i;
    }
    return out;
}

namespace {

bool is_primitive_independent(const IntMatrix& cols_matrix) {
    SNFResult s = smith_normal_form(cols_matrix);
    if (s.rank != cols_matrix.cols()) return false;
    return std::all_of(s.factors.begin(), s.factors.end(), [](const BigInt& d) { return d == 1; });
}

}  // namespace

QuotientBasis quotient_basis(const std::vector<std::vector<BigInt>>& relations, std::size_t m) {
    IntMatrix basis = lattice_basis(relations, m);
    SNFResult snf = smith_normal_form(basis);

    QuotientBasis q;
    q.free_rank = m - snf.rank;
    for (const auto& d : snf.factors)
        if (d != 1) q.torsion.push_back(d);

    // x lies in the relation lattice iff (x V) vanishes in the free
    // coordinates and is divisible by d_i in the torsion ones.
    q.coords = IntMatrix(m, q.free_rank);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < q.free_rank; ++k) q.coords(j, k) = snf.v(j, snf.rank + k);

    IntMatrix vinv = unimodular_inverse(snf.v);
    q.free_basis = IntMatrix(q.free_rank, m);
    for (std::size_t k = 0; k < q.free_rank; ++k)
        for (std::size_t j = 0; j < m; ++j) q.free_basis(k, j) = vinv(snf.rank + k, j);

    for (std::size_t j = 0; j < m && q.representatives.size() < q.free_rank; ++j) {
        std::vector<std::size_t> cand = q.representatives;
        cand.push_back(j);
        IntMatrix sel(q.free_rank, cand.size());
        for (std::size_t a = 0; a < cand.size(); ++a)
            for (std::size_t k = 0; k < q.free_rank; ++k) sel(k, a) = q.coords(cand[a], k);
        if (is_primitive_independent(sel)) q.representatives = std::move(cand);
    }
    return q;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("unimodular_inverse: matrix is not square");
    SNFResult s = smith_normal_form(m);
    if (s.rank != m.rows()) throw std::domain_error("unimodular_inverse: matrix is singular");
    for (const auto& d : s.factors)
        if (d != 1) throw std::domain_error("unimodular_inverse: determinant is not +-1");
    // U m V = I gives m^{-1} = V U.
    return s.v * s.u;
}

IntMatrix express_in_representatives(const QuotientBasis& q) {
    const std::size_t k = q.free_rank;
    if (q.representatives.size() != k) {
        throw std::domain_error("quotient has no basis of coordinate representatives");
    }
    IntMatrix qb(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t row = 0; row < k; ++row) qb(row, a) = q.coords(q.representatives[a], row);
    IntMatrix inv = unimodular_inverse(qb);
    IntMatrix out(q.coords.rows(), k);
    for (std::size_t j = 0; j < q.coords.rows(); ++j)
        for (std::size_t a = 0; a < k; ++a) {
            BigInt acc = 0;
            for (std::size_t b = 0; b < k; ++b) acc += inv(a, b) * q.coords(j, b);
            out(j, a) = acc;
        }
    return out;
}

}  // namespace okc

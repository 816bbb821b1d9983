#pragma once

#include <cstddef>
#include <initializer_list>
#include <tuple>
#include <vector>

#include "motivic/rational.hpp"

namespace motivic {

// Dense row-major matrix over Q. All algorithms are exact (fraction
// arithmetic, no pivot-size heuristics needed at desk scale).
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

    RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        e_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw ShapeMismatch("ragged initializer rows");
            for (long x : row)
                e_.emplace_back(x);
        }
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    static RatMatrix from_columns(const std::vector<RatVec>& cols,
                                  std::size_t rows) {
        RatMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows)
                throw ShapeMismatch("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i)
                m.at(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i))
                    return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (x != 0)
                return false;
        return true;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) {
        return !(a == b);
    }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        check_same_shape(a, b, "+");
        RatMatrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            c.e_[k] = a.e_[k] + b.e_[k];
        return c;
    }

    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        check_same_shape(a, b, "-");
        RatMatrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            c.e_[k] = a.e_[k] - b.e_[k];
        return c;
    }

    friend RatMatrix operator*(const Rational& s, const RatMatrix& a) {
        RatMatrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            c.e_[k] = s * a.e_[k];
        return c;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeMismatch("matrix product of " + a.shape_str() +
                                " by " + b.shape_str());
        RatMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    friend RatVec operator*(const RatMatrix& a, const RatVec& x) {
        if (a.cols_ != x.size())
            throw ShapeMismatch("matrix-vector product of " + a.shape_str() +
                                " by length " + std::to_string(x.size()));
        RatVec y(a.rows_, Rational(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                y[i] += a.at(i, j) * x[j];
        return y;
    }

    Rational det() const {
        if (!is_square())
            throw ShapeMismatch("determinant of " + shape_str());
        RatMatrix m = *this;
        Rational d(1);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t pivot = col;
            while (pivot < rows_ && m.at(pivot, col) == 0)
                ++pivot;
            if (pivot == rows_)
                return Rational(0);
            if (pivot != col) {
                m.swap_rows(pivot, col);
                d = -d;
            }
            const Rational p = m.at(col, col);
            d *= p;
            for (std::size_t r = col + 1; r < rows_; ++r) {
                if (m.at(r, col) == 0)
                    continue;
                const Rational f = m.at(r, col) / p;
                for (std::size_t c = col; c < cols_; ++c)
                    m.at(r, c) -= f * m.at(col, c);
            }
        }
        return d;
    }

    // Exact solve of A x = b for square A. Throws SingularMatrix.
    RatVec solve(const RatVec& b) const {
        if (!is_square())
            throw ShapeMismatch("solve needs a square matrix, got " +
                                shape_str());
        if (b.size() != rows_)
            throw ShapeMismatch("right-hand side length " +
                                std::to_string(b.size()) + " for " +
                                shape_str());
        RatMatrix m = *this;
        RatVec rhs = b;
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t pivot = col;
            while (pivot < rows_ && m.at(pivot, col) == 0)
                ++pivot;
            if (pivot == rows_)
                throw SingularMatrix("zero pivot in column " +
                                     std::to_string(col));
            if (pivot != col) {
                m.swap_rows(pivot, col);
                std::swap(rhs[pivot], rhs[col]);
            }
            const Rational p = m.at(col, col);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == col || m.at(r, col) == 0)
                    continue;
                const Rational f = m.at(r, col) / p;
                for (std::size_t c = col; c < cols_; ++c)
                    m.at(r, c) -= f * m.at(col, c);
                rhs[r] -= f * rhs[col];
            }
        }
        RatVec x(cols_);
        for (std::size_t i = 0; i < cols_; ++i)
            x[i] = rhs[i] / m.at(i, i);
        return x;
    }

    RatMatrix inverse() const {
        if (!is_square())
            throw ShapeMismatch("inverse of " + shape_str());
        RatMatrix inv(rows_, rows_);
        for (std::size_t j = 0; j < rows_; ++j) {
            RatVec e(rows_, Rational(0));
            e[j] = 1;
            RatVec col = solve(e);
            for (std::size_t i = 0; i < rows_; ++i)
                inv.at(i, j) = col[i];
        }
        return inv;
    }

    // Reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pivot = row;
            while (pivot < rows_ && at(pivot, col) == 0)
                ++pivot;
            if (pivot == rows_)
                continue;
            swap_rows(pivot, row);
            const Rational p = at(row, col);
            for (std::size_t c = col; c < cols_; ++c)
                at(row, c) /= p;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || at(r, col) == 0)
                    continue;
                const Rational f = at(r, col);
                for (std::size_t c = col; c < cols_; ++c)
                    at(r, c) -= f * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        RatMatrix m = *this;
        return m.rref().size();
    }

    // Exact basis of the null space; empty when injective. Deterministic:
    // one basis vector per free column, in column order.
    std::vector<RatVec> kernel() const {
        RatMatrix m = *this;
        const std::vector<std::size_t> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots)
            is_pivot[c] = true;
        std::vector<RatVec> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free])
                continue;
            RatVec v(cols_, Rational(0));
            v[free] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -m.at(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Sylvester test by leading principal minors: negative definite iff
    // (-1)^k det(leading k-minor) > 0 for all k. Throws NotSymmetric.
    bool is_negative_definite() const {
        if (!is_symmetric())
            throw NotSymmetric("definiteness test needs a symmetric matrix");
        int expected = -1;
        for (std::size_t k = 1; k <= rows_; ++k) {
            if (sign_of(leading_minor(k)) != expected)
                return false;
            expected = -expected;
        }
        return true;
    }

    Rational leading_minor(std::size_t k) const {
        RatMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                sub.at(i, j) = at(i, j);
        return sub.det();
    }

    // Exact inertia (n_plus, n_minus, n_zero) of a symmetric matrix via
    // congruence reduction; handles zero diagonals with the 2x2 trick
    // (adding row/col j to i turns a hyperbolic pair into a usable pivot).
    std::tuple<int, int, int> signature() const {
        if (!is_symmetric())
            throw NotSymmetric("signature of a non-symmetric matrix");
        RatMatrix m = *this;
        const std::size_t n = rows_;
        std::vector<bool> done(n, false);
        int pos = 0, neg = 0, zero = 0;
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t k = n;
            for (std::size_t i = 0; i < n; ++i)
                if (!done[i] && m.at(i, i) != 0) {
                    k = i;
                    break;
                }
            if (k == n) {
                std::size_t i = n, j = n;
                for (std::size_t p = 0; p < n && i == n; ++p) {
                    if (done[p])
                        continue;
                    for (std::size_t q = 0; q < n; ++q)
                        if (!done[q] && q != p && m.at(p, q) != 0) {
                            i = p;
                            j = q;
                            break;
                        }
                }
                if (i == n) {
                    for (std::size_t p = 0; p < n; ++p)
                        if (!done[p])
                            ++zero;
                    break;
                }
                for (std::size_t c = 0; c < n; ++c)
                    m.at(i, c) += m.at(j, c);
                for (std::size_t r = 0; r < n; ++r)
                    m.at(r, i) += m.at(r, j);
                k = i;
            }
            const Rational p = m.at(k, k);
            (sign_of(p) > 0 ? pos : neg) += 1;
            for (std::size_t r = 0; r < n; ++r) {
                if (done[r] || r == k || m.at(r, k) == 0)
                    continue;
                const Rational f = m.at(r, k) / p;
                for (std::size_t c = 0; c < n; ++c)
                    m.at(r, c) -= f * m.at(k, c);
                for (std::size_t c = 0; c < n; ++c)
                    m.at(c, r) -= f * m.at(c, k);
            }
            done[k] = true;
        }
        return {pos, neg, zero};
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    static void check_same_shape(const RatMatrix& a, const RatMatrix& b,
                                 const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeMismatch(std::string("'") + op + "' on " +
                                a.shape_str() + " and " + b.shape_str());
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(at(i, c), at(j, c));
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> e_;
};

inline Rational dot(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size())
        throw ShapeMismatch("dot product of lengths " +
                            std::to_string(x.size()) + " and " +
                            std::to_string(y.size()));
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i)
        s += x[i] * y[i];
    return s;
}

// x^T Q y, the pairing every module here revolves around.
inline Rational pair(const RatMatrix& q, const RatVec& x, const RatVec& y) {
    return dot(x, q * y);
}

inline RatVec mat_solve(const RatMatrix& a, const RatVec& b) {
    return a.solve(b);
}

inline std::vector<RatVec> mat_kernel(const RatMatrix& a) {
    return a.kernel();
}

inline bool is_negative_definite(const RatMatrix& g) {
    return g.is_negative_definite();
}

} // namespace motivic

#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "polyspec/exact.hpp"
#include "polyspec/errors.hpp"

namespace polyspec {

// Dense integer matrix, row-major.  Immutable in spirit: every operation
// below returns a fresh value.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw dimension_error("ragged matrix literal");
            for (const auto& x : r) data_.push_back(x);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    // Columns are the given vectors.
    static IntMatrix from_columns(const std::vector<IntVec>& cols) {
        if (cols.empty()) return IntMatrix();
        IntMatrix m(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) throw dimension_error("ragged column list");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVec>& rows) {
        if (rows.empty()) return IntMatrix();
        IntMatrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw dimension_error("ragged row list");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVec column(std::size_t j) const {
        IntVec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    IntVec row(std::size_t i) const {
        IntVec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& other) const {
        if (cols_ != other.rows_) throw dimension_error("matrix product shape mismatch");
        IntMatrix p(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    p(i, j) += a * other(k, j);
            }
        return p;
    }

    IntVec operator*(const IntVec& v) const {
        if (cols_ != v.size()) throw dimension_error("matrix-vector shape mismatch");
        IntVec r(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// Exact determinant by Bareiss fraction-free elimination.
inline Int det(const IntMatrix& m) {
    if (!m.square()) throw dimension_error("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = t / prev;  // exact by Bareiss
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// Exact solution of m x = b over the rationals.
inline RatVec solve_rational(const IntMatrix& m, const IntVec& b) {
    if (!m.square()) throw dimension_error("solve_rational: matrix not square");
    const std::size_t n = m.rows();
    if (b.size() != n) throw dimension_error("solve_rational: rhs length mismatch");
    std::vector<RatVec> a(n, RatVec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
        a[i][n] = Rat(b[i]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw singular_matrix_error("solve_rational: singular matrix");
        std::swap(a[k], a[p]);
        const Rat piv = a[k][k];
        for (std::size_t j = k; j <= n; ++j) a[k][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const Rat f = a[i][k];
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

struct SmithNormalForm {
    IntMatrix u;  // rows transform, |det u| = 1
    IntMatrix d;  // diagonal, d_1 | d_2 | ...
    IntMatrix v;  // columns transform, |det v| = 1
};

// Smith normal form with transforms: u * m * v = d.  The transforms are
// accumulated during the reduction, not recovered afterwards.
inline SmithNormalForm snf(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < rows; ++c) std::swap(u(i, c), u(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < cols; ++r) std::swap(v(r, i), v(r, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t c = 0; c < cols; ++c) a(dst, c) += f * a(src, c);
        for (std::size_t c = 0; c < rows; ++c) u(dst, c) += f * u(src, c);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t r = 0; r < rows; ++r) a(r, dst) += f * a(r, src);
        for (std::size_t r = 0; r < cols; ++r) v(r, dst) += f * v(r, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < cols; ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < rows; ++c) u(i, c) = -u(i, c);
    };

    const std::size_t t_max = std::min(rows, cols);
    for (std::size_t t = 0; t < t_max; ++t) {
        // Pivot: entry of smallest absolute value in the remaining block.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a(i, j) == 0) continue;
                if (!found || abs(a(i, j)) < abs(a(pi, pj))) { pi = i; pj = j; found = true; }
            }
        if (!found) break;  // remaining block is zero
        if (pi != t) swap_rows(t, pi);
        if (pj != t) swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                add_row(i, t, -q);
                if (a(i, t) != 0) { swap_rows(t, i); clean = false; }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                add_col(j, t, -q);
                if (a(t, j) != 0) { swap_cols(t, j); clean = false; }
            }
            if (clean) break;
        }
        if (a(t, t) < 0) negate_row(t);

        // Divisibility: fold any non-multiple into the pivot and redo.
        for (std::size_t i = t + 1; i < rows; ++i) {
            bool redo = false;
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a(i, j) % a(t, t) != 0) { redo = true; break; }
            if (redo) {
                add_row(t, i, 1);
                --t;  // reprocess this pivot position (wraps, then ++t restores)
                break;
            }
        }
    }
    return {std::move(u), std::move(a), std::move(v)};
}

// Unimodular u (m x m) with u * q = (0, ..., 0, 1), for primitive q.
inline IntMatrix unimodular_completion(const IntVec& q) {
    const std::size_t m = q.size();
    if (m == 0) throw dimension_error("unimodular_completion: empty vector");
    if (vec_gcd(q) != 1) throw gcd_error("unimodular_completion: vector not primitive");
    IntMatrix col(m, 1);
    for (std::size_t i = 0; i < m; ++i) col(i, 0) = q[i];
    SmithNormalForm s = snf(col);
    // s.u * q * v = (1, 0, ..., 0)^T with v = (+-1); so s.u * q = +-e_1.
    IntMatrix u = std::move(s.u);
    IntVec img(m, Int(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) img[i] += u(i, j) * q[j];
    if (img[0] == -1)
        for (std::size_t j = 0; j < m; ++j) u(0, j) = -u(0, j);
    // Cycle rows so the image lands on the last coordinate.
    IntMatrix p(m, m);
    for (std::size_t i = 0; i + 1 < m; ++i) p(i, i + 1) = 1;
    p(m - 1, 0) = 1;
    IntMatrix result = p * u;
    check_internal(result * q == [&] { IntVec e(m, Int(0)); e[m - 1] = 1; return e; }(),
                   "unimodular_completion: postcondition U q = e_m failed");
    check_internal(abs(det(result)) == 1, "unimodular_completion: U not unimodular");
    return result;
}

// Row-style Hermite reduction: returns unimodular t such that t * b is upper
// triangular with positive diagonal and entries above each pivot reduced into
// [0, pivot).  Used to bring vertex coordinates down to the size of the
// minors.
inline IntMatrix hermite_row_transform(const IntMatrix& b) {
    if (!b.square()) throw dimension_error("hermite_row_transform: matrix not square");
    const std::size_t n = b.rows();
    IntMatrix a = b;
    IntMatrix t = IntMatrix::identity(n);
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) { std::swap(a(i, c), a(j, c)); std::swap(t(i, c), t(j, c)); }
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t c = 0; c < n; ++c) { a(dst, c) += f * a(src, c); t(dst, c) += f * t(src, c); }
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < n; ++c) { a(i, c) = -a(i, c); t(i, c) = -t(i, c); }
    };
    for (std::size_t j = 0; j < n; ++j) {
        // gcd elimination in column j, rows j..n-1
        for (;;) {
            std::size_t p = j;
            bool found = false;
            for (std::size_t i = j; i < n; ++i) {
                if (a(i, j) == 0) continue;
                if (!found || abs(a(i, j)) < abs(a(p, j))) { p = i; found = true; }
            }
            if (!found) throw singular_matrix_error("hermite_row_transform: singular matrix");
            if (p != j) swap_rows(j, p);
            bool done = true;
            for (std::size_t i = j + 1; i < n; ++i) {
                if (a(i, j) == 0) continue;
                add_row(i, j, -(a(i, j) / a(j, j)));
                if (a(i, j) != 0) done = false;
            }
            if (done) break;
        }
        if (a(j, j) < 0) negate_row(j);
        for (std::size_t i = 0; i < j; ++i) {
            Int q = a(i, j) / a(j, j);
            if (a(i, j) - q * a(j, j) < 0) --q;
            if (q != 0) add_row(i, j, -q);
        }
    }
    return t;
}

}  // namespace polyspec

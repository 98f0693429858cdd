#include "ccx/linalg.hpp"

#include "ccx/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <utility>

namespace ccx {

QMatrix transpose(const QMatrix& m) {
    QMatrix t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

QMatrix hcat(const QMatrix& left, const QMatrix& right) {
    if (left.rows == 0 && left.cols == 0) return right;
    if (right.rows == 0 && right.cols == 0) return left;
    if (left.rows != right.rows) throw Error("hcat: row mismatch");
    QMatrix m(left.rows, left.cols + right.cols);
    for (int r = 0; r < left.rows; ++r) {
        for (int c = 0; c < left.cols; ++c) m.at(r, c) = left.at(r, c);
        for (int c = 0; c < right.cols; ++c) m.at(r, left.cols + c) = right.at(r, c);
    }
    return m;
}

int rank(const QMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    const int rows = m.rows, cols = m.cols;

    // Clear denominators row by row; row scaling does not change the rank.
    std::vector<std::vector<Integer>> w(static_cast<std::size_t>(rows),
                                        std::vector<Integer>(static_cast<std::size_t>(cols)));
    for (int r = 0; r < rows; ++r) {
        Integer l = 1;
        for (int c = 0; c < cols; ++c) l = lcm(l, denominator(m.at(r, c)));
        for (int c = 0; c < cols; ++c) {
            const Rational& q = m.at(r, c);
            w[r][c] = numerator(q) * (l / denominator(q));
        }
    }

    Integer prev = 1;
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int pivot = -1;
        for (int r = rk; r < rows; ++r) {
            if (w[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rk) std::swap(w[pivot], w[rk]);
        const Integer& piv = w[rk][col];
        // Bareiss step: exact integer division by the previous pivot.
        // Each row update is independent, which keeps the result identical
        // for any thread count.
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int r = rk + 1; r < rows; ++r) {
            const Integer head = w[r][col];
            for (int c = col; c < cols; ++c) {
                w[r][c] = (w[r][c] * piv - head * w[rk][c]) / prev;
            }
        }
        prev = piv;
        ++rk;
    }
    return rk;
}

int rank_serial(const QMatrix& m) {
    QMatrix w = m;
    int rk = 0;
    for (int col = 0; col < w.cols && rk < w.rows; ++col) {
        int pivot = -1;
        for (int r = rk; r < w.rows; ++r) {
            if (w.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rk)
            for (int c = 0; c < w.cols; ++c) std::swap(w.at(pivot, c), w.at(rk, c));
        const Rational piv = w.at(rk, col);
        for (int r = rk + 1; r < w.rows; ++r) {
            if (w.at(r, col) == 0) continue;
            const Rational f = w.at(r, col) / piv;
            for (int c = col; c < w.cols; ++c) w.at(r, c) -= f * w.at(rk, c);
        }
        ++rk;
    }
    return rk;
}

Rref rref(QMatrix m) {
    Rref out;
    int rk = 0;
    for (int col = 0; col < m.cols && rk < m.rows; ++col) {
        int pivot = -1;
        for (int r = rk; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rk)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rk, c));
        const Rational piv = m.at(rk, col);
        for (int c = col; c < m.cols; ++c) m.at(rk, c) /= piv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rk || m.at(r, col) == 0) continue;
            const Rational f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(rk, c);
        }
        out.pivot_cols.push_back(col);
        ++rk;
    }
    out.rank = rk;
    out.mat = std::move(m);
    return out;
}

std::optional<std::vector<Rational>> solve(const QMatrix& A, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != A.rows) throw Error("solve: size mismatch");
    QMatrix aug(A.rows, A.cols + 1);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols) = b[r];
    }
    Rref rr = rref(std::move(aug));
    // Inconsistent iff some pivot sits in the appended column.
    for (int col : rr.pivot_cols)
        if (col == A.cols) return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(A.cols), Rational(0));
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
        x[rr.pivot_cols[i]] = rr.mat.at(static_cast<int>(i), A.cols);
    return x;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& A) {
    Rref rr = rref(A);
    std::vector<std::vector<Rational>> basis;
    std::vector<bool> is_pivot(static_cast<std::size_t>(A.cols), false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;
    for (int freec = 0; freec < A.cols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(A.cols), Rational(0));
        v[freec] = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.mat.at(static_cast<int>(i), freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rational>> left_nullspace(const QMatrix& A) {
    return nullspace(transpose(A));
}

} // namespace ccx

#ifndef CCX_LINALG_HPP
#define CCX_LINALG_HPP

#include "ccx/rational.hpp"

#include <optional>
#include <vector>

namespace ccx {

struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a; // row-major

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

QMatrix transpose(const QMatrix& m);
QMatrix hcat(const QMatrix& left, const QMatrix& right);

// Rank by fraction-free (Bareiss) elimination on denominator-cleared rows.
// Pivot choice is the first row with a nonzero entry in the current column,
// so the result does not depend on the number of threads; the row updates
// run under OpenMP when available.
int rank(const QMatrix& m);

// Single-threaded rational Gaussian elimination. Kept as the reference
// implementation the parallel kernel is tested and benchmarked against.
int rank_serial(const QMatrix& m);

struct Rref {
    QMatrix mat;
    std::vector<int> pivot_cols;
    int rank = 0;
};

Rref rref(QMatrix m);

// One solution of A x = b, if any.
std::optional<std::vector<Rational>> solve(const QMatrix& A, const std::vector<Rational>& b);

// Basis of the right null space (vectors of length cols).
std::vector<std::vector<Rational>> nullspace(const QMatrix& A);

// Basis of the left null space: f with f * A = 0 (vectors of length rows).
std::vector<std::vector<Rational>> left_nullspace(const QMatrix& A);

} // namespace ccx

#endif

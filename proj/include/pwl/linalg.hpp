#pragma once

#include "pwl/rational.hpp"

#include <optional>
#include <vector>

namespace pwl {

/// Dense row-major rational matrix.
struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Q> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Q(0)) {}

    Q& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Q& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static QMatrix from_rows(const std::vector<QVec>& rows);
    QVec row(int i) const;
    QVec apply(const QVec& x) const;
    QMatrix transpose() const;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m);
int rank(QMatrix m);
Q determinant(QMatrix m);

/// Some solution of A x = b, or nullopt if inconsistent. Free variables are 0.
std::optional<QVec> solve(const QMatrix& A, const QVec& b);

/// Basis of {x : A x = 0}.
std::vector<QVec> nullspace(const QMatrix& A);

/// LU factorization of a square matrix, reusable for many right-hand sides.
/// Zero entries are skipped, so sparse systems stay cheap.
class LUSolver {
public:
    explicit LUSolver(QMatrix A);
    int size() const { return n_; }
    QVec solve(const QVec& b) const;

private:
    int n_ = 0;
    QMatrix lu_;
    std::vector<int> perm_;
    std::vector<std::vector<int>> lower_nz_;
    std::vector<std::vector<int>> upper_nz_;
};

struct LPResult {
    bool bounded = true;
    Q value;
    QVec x;
};

/// Maximize c.x subject to A x <= b with x free; requires b >= 0 so the origin is feasible.
/// Exact simplex with Bland's rule.
LPResult lp_maximize(const QMatrix& A, const QVec& b, const QVec& c);

}  // namespace pwl

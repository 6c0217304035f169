#include "pwl/linalg.hpp"

#include "pwl/errors.hpp"

#include <limits>
#include <utility>

namespace pwl {

QMatrix QMatrix::from_rows(const std::vector<QVec>& rs) {
    if (rs.empty()) return {};
    QMatrix m(static_cast<int>(rs.size()), static_cast<int>(rs[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        if (static_cast<int>(rs[i].size()) != m.cols) throw DomainError("ragged matrix rows");
        for (int j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
    }
    return m;
}

QVec QMatrix::row(int i) const {
    return QVec(a.begin() + static_cast<long>(i) * cols, a.begin() + static_cast<long>(i + 1) * cols);
}

QVec QMatrix::apply(const QVec& x) const {
    if (static_cast<int>(x.size()) != cols) throw DomainError("matrix-vector dimension mismatch");
    QVec y(static_cast<std::size_t>(rows), Q(0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (sgn((*this)(i, j)) != 0 && sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
    return y;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    Q f;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (sgn(m(i, c)) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        Q inv = 1 / m(r, c);
        std::vector<int> nz;
        for (int j = c; j < m.cols; ++j)
            if (sgn(m(r, j)) != 0) {
                m(r, j) *= inv;
                nz.push_back(j);
            }
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            f = m(i, c);
            for (int j : nz) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

Q determinant(QMatrix m) {
    if (m.rows != m.cols) throw DomainError("determinant of non-square matrix");
    Q det = 1, f;
    for (int c = 0; c < m.cols; ++c) {
        int p = -1;
        for (int i = c; i < m.rows; ++i)
            if (sgn(m(i, c)) != 0) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (int i = c + 1; i < m.rows; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            f = m(i, c) / m(c, c);
            for (int j = c; j < m.cols; ++j)
                if (sgn(m(c, j)) != 0) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<QVec> solve(const QMatrix& A, const QVec& b) {
    if (static_cast<int>(b.size()) != A.rows) throw DomainError("right-hand side dimension mismatch");
    QMatrix aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
        aug(i, A.cols) = b[i];
    }
    auto piv = rref(aug);
    QVec x(static_cast<std::size_t>(A.cols), Q(0));
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == A.cols) return std::nullopt;
        x[piv[r]] = aug(static_cast<int>(r), A.cols);
    }
    return x;
}

std::vector<QVec> nullspace(const QMatrix& A) {
    QMatrix m = A;
    auto piv = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(A.cols), false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (int f = 0; f < A.cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(static_cast<std::size_t>(A.cols), Q(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

LUSolver::LUSolver(QMatrix A) : n_(A.rows), lu_(std::move(A)) {
    if (lu_.rows != lu_.cols) throw DomainError("LU of non-square matrix");
    perm_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) perm_[i] = i;
    lower_nz_.assign(static_cast<std::size_t>(n_), {});
    upper_nz_.assign(static_cast<std::size_t>(n_), {});
    Q l;
    for (int k = 0; k < n_; ++k) {
        // Sparsest candidate row keeps fill-in down.
        int best = -1, best_nz = std::numeric_limits<int>::max();
        for (int i = k; i < n_; ++i) {
            if (sgn(lu_(i, k)) == 0) continue;
            int nz = 0;
            for (int j = k; j < n_; ++j) nz += sgn(lu_(i, j)) != 0;
            if (nz < best_nz) {
                best_nz = nz;
                best = i;
            }
        }
        if (best < 0) throw TheoremViolation("singular matrix in LU factorization");
        if (best != k) {
            for (int j = 0; j < n_; ++j) std::swap(lu_(best, j), lu_(k, j));
            std::swap(perm_[best], perm_[k]);
            std::swap(lower_nz_[best], lower_nz_[k]);
        }
        std::vector<int> nz;
        for (int j = k + 1; j < n_; ++j)
            if (sgn(lu_(k, j)) != 0) nz.push_back(j);
        for (int i = k + 1; i < n_; ++i) {
            if (sgn(lu_(i, k)) == 0) continue;
            l = lu_(i, k) / lu_(k, k);
            lu_(i, k) = l;
            lower_nz_[i].push_back(k);
            for (int j : nz) lu_(i, j) -= l * lu_(k, j);
        }
        upper_nz_[k] = std::move(nz);
    }
}

QVec LUSolver::solve(const QVec& b) const {
    if (static_cast<int>(b.size()) != n_) throw DomainError("right-hand side dimension mismatch");
    QVec y(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        y[i] = b[perm_[i]];
        for (int k : lower_nz_[i])
            if (sgn(y[k]) != 0) y[i] -= lu_(i, k) * y[k];
    }
    QVec x(static_cast<std::size_t>(n_));
    for (int i = n_ - 1; i >= 0; --i) {
        Q s = y[i];
        for (int j : upper_nz_[i])
            if (sgn(x[j]) != 0) s -= lu_(i, j) * x[j];
        x[i] = s / lu_(i, i);
    }
    return x;
}

LPResult lp_maximize(const QMatrix& A, const QVec& b, const QVec& c) {
    const int m = A.rows, n = A.cols;
    if (static_cast<int>(b.size()) != m || static_cast<int>(c.size()) != n)
        throw DomainError("LP dimension mismatch");
    for (const auto& bi : b)
        if (sgn(bi) < 0) throw DomainError("LP requires a feasible origin (b >= 0)");
    // Columns: u (n), v (n), slack (m), rhs.
    const int nv = 2 * n + m;
    QMatrix t(m + 1, nv + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            t(i, j) = A(i, j);
            t(i, n + j) = -A(i, j);
        }
        t(i, 2 * n + i) = 1;
        t(i, nv) = b[i];
    }
    // Objective row holds -c so that a negative entry means "can improve".
    for (int j = 0; j < n; ++j) {
        t(m, j) = -c[j];
        t(m, n + j) = c[j];
    }
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) basis[i] = 2 * n + i;

    Q f;
    for (;;) {
        int enter = -1;
        for (int j = 0; j < nv; ++j)
            if (sgn(t(m, j)) < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Q best_ratio;
        for (int i = 0; i < m; ++i) {
            if (sgn(t(i, enter)) <= 0) continue;
            Q ratio = t(i, nv) / t(i, enter);
            if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) return LPResult{false, 0, {}};
        Q inv = 1 / t(leave, enter);
        for (int j = 0; j <= nv; ++j)
            if (sgn(t(leave, j)) != 0) t(leave, j) *= inv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave || sgn(t(i, enter)) == 0) continue;
            f = t(i, enter);
            for (int j = 0; j <= nv; ++j)
                if (sgn(t(leave, j)) != 0) t(i, j) -= f * t(leave, j);
        }
        basis[leave] = enter;
    }
    LPResult res;
    res.value = t(m, nv);
    QVec z(static_cast<std::size_t>(nv), Q(0));
    for (int i = 0; i < m; ++i) z[basis[i]] = t(i, nv);
    res.x.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) res.x[j] = z[j] - z[n + j];
    return res;
}

}  // namespace pwl

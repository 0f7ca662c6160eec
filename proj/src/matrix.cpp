#include "advlin/matrix.hpp"

#include <cmath>

namespace advlin {

BigInt divexact(const BigInt& a, const BigInt& b) {
    if (b == 0) throw DomainError("division by zero");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw DomainError("inexact integer division");
    return q;
}

double frobenius_norm(const CMat& m) {
    double s = 0.0;
    for (const auto& z : m.data()) s += std::norm(z);
    return std::sqrt(s);
}

double max_abs(const CMat& m) {
    double s = 0.0;
    for (const auto& z : m.data()) s = std::max(s, std::abs(z));
    return s;
}

double one_norm(const CMat& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

CMat to_cmat(const ZMat& m) {
    CMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_scalar(m(i, j));
    return r;
}

CMat to_cmat(const QMat& m) {
    CMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_scalar(m(i, j));
    return r;
}

QMat to_qmat(const ZMat& m) {
    QMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = BigRat(m(i, j));
    return r;
}

double hermitian_defect(const CMat& m) { return frobenius_norm(m - adjoint(m)); }

double normality_defect(const CMat& m) {
    CMat ms = adjoint(m);
    return frobenius_norm(m * ms - ms * m);
}

double unitarity_defect(const CMat& m) {
    return frobenius_norm(adjoint(m) * m - CMat::identity(m.cols()));
}

CMat solve(const CMat& a, const CMat& b) {
    if (!a.square() || a.rows() != b.rows()) throw DomainError("solve: shape mismatch");
    const std::size_t n = a.rows();
    CMat u = a, x = b;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(u(i, k)) > std::abs(u(piv, k))) piv = i;
        if (std::abs(u(piv, k)) == 0.0) throw RefusalError("solve: singular matrix");
        u.swap_rows(k, piv);
        x.swap_rows(k, piv);
        for (std::size_t i = k + 1; i < n; ++i) {
            Scalar f = u(i, k) / u(k, k);
            if (f == Scalar(0)) continue;
            for (std::size_t j = k; j < n; ++j) u(i, j) -= f * u(k, j);
            for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= f * x(k, j);
        }
    }
    for (std::size_t kk = n; kk-- > 0;) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            Scalar s = x(kk, j);
            for (std::size_t c = kk + 1; c < n; ++c) s -= u(kk, c) * x(c, j);
            x(kk, j) = s / u(kk, kk);
        }
    }
    return x;
}

CMat inverse(const CMat& a) { return solve(a, CMat::identity(a.rows())); }

QMat inverse_exact(const QMat& a) {
    if (!a.square()) throw DomainError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    QMat u = a, x = QMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && u(piv, k) == 0) ++piv;
        if (piv == n) throw RefusalError("singular matrix has no exact inverse");
        u.swap_rows(k, piv);
        x.swap_rows(k, piv);
        BigRat d = u(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            u(k, j) /= d;
            x(k, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || u(i, k) == 0) continue;
            BigRat f = u(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                u(i, j) -= f * u(k, j);
                x(i, j) -= f * x(k, j);
            }
        }
    }
    return x;
}

namespace {

// Row echelon form in place; returns pivot column list.
std::vector<std::size_t> row_reduce(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        BigRat d = m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) /= d;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            BigRat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank_exact(const QMat& a) {
    QMat m = a;
    return row_reduce(m).size();
}

QMat kernel_exact(const QMat& a) {
    QMat m = a;
    std::vector<std::size_t> pivots = row_reduce(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t nullity = a.cols() - pivots.size();
    QMat k(a.cols(), nullity);
    std::size_t col = 0;
    for (std::size_t free_c = 0; free_c < a.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        k(free_c, col) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], col) = -m(r, free_c);
        ++col;
    }
    return k;
}

}  // namespace advlin

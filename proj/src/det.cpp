#include "advlin/det.hpp"

#include <algorithm>
#include <cmath>

#include "advlin/perm.hpp"

namespace advlin {

Scalar det(const CMat& m) {
    if (!m.square()) throw DomainError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    CMat u = m;
    Scalar d(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(u(i, k)) > std::abs(u(piv, k))) piv = i;
        if (std::abs(u(piv, k)) == 0.0) return {0.0, 0.0};
        if (piv != k) {
            u.swap_rows(k, piv);
            d = -d;
        }
        d *= u(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            Scalar f = u(i, k) / u(k, k);
            if (f == Scalar(0)) continue;
            for (std::size_t j = k + 1; j < n; ++j) u(i, j) -= f * u(k, j);
        }
    }
    return d;
}

BigInt det(const ZMat& m) {
    if (!m.square()) throw DomainError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    ZMat u = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (u(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && u(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            u.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                u(i, j) = divexact(u(k, k) * u(i, j) - u(i, k) * u(k, j), prev);
            u(i, k) = 0;
        }
        prev = u(k, k);
    }
    return sign > 0 ? u(n - 1, n - 1) : -u(n - 1, n - 1);
}

BigRat det(const QMat& m) {
    if (!m.square()) throw DomainError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    QMat u = m;
    BigRat d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && u(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            u.swap_rows(k, piv);
            d = -d;
        }
        d *= u(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (u(i, k) == 0) continue;
            BigRat f = u(i, k) / u(k, k);
            for (std::size_t j = k; j < n; ++j) u(i, j) -= f * u(k, j);
        }
    }
    return d;
}

template <typename T>
T det_permutation_sum(const Matrix<T>& m) {
    if (!m.square()) throw DomainError("determinant of non-square matrix");
    const int n = static_cast<int>(m.rows());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    T total(0);
    do {
        Perm p(idx);
        T term(perm_signature(p));
        for (int i = 0; i < n; ++i) term *= m(i, idx[i]);
        total += term;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return total;
}

template Scalar det_permutation_sum<Scalar>(const Matrix<Scalar>&);
template BigInt det_permutation_sum<BigInt>(const Matrix<BigInt>&);
template BigRat det_permutation_sum<BigRat>(const Matrix<BigRat>&);

}  // namespace advlin

#include "advlin/factor.hpp"

#include <cmath>
#include <string>

namespace advlin::factor {

PLUDecomp plu(const CMat& m) {
    if (!m.square()) throw DomainError("plu needs a square matrix");
    const std::size_t n = m.rows();
    CMat u = m;
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    CMat l = CMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(u(i, k)) > std::abs(u(piv, k))) piv = i;
        if (piv != k) {
            u.swap_rows(k, piv);
            std::swap(p[k], p[piv]);
            for (std::size_t j = 0; j < k; ++j) std::swap(l(k, j), l(piv, j));
        }
        if (std::abs(u(k, k)) == 0.0) continue;  // singular: zero pivot stays in U
        for (std::size_t i = k + 1; i < n; ++i) {
            Scalar f = u(i, k) / u(k, k);
            l(i, k) = f;
            for (std::size_t j = k; j < n; ++j) u(i, j) -= f * u(k, j);
            u(i, k) = 0.0;
        }
    }
    // p[i] names the original row now sitting at position i, so the
    // permutation with 1 at (i, p[i]) satisfies P A = L U.
    return {Perm(std::vector<int>(p.begin(), p.end())), std::move(l), std::move(u)};
}

LDUDecomp ldu(const CMat& m, double tol) {
    if (!m.square()) throw DomainError("ldu needs a square matrix");
    const std::size_t n = m.rows();
    const double scale = std::max(1.0, max_abs(m));
    CMat u = m;
    CMat l = CMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(u(k, k)) <= tol * scale)
            throw RefusalError("ldu: leading principal minor " + std::to_string(k + 1) +
                               " vanishes");
        for (std::size_t i = k + 1; i < n; ++i) {
            Scalar f = u(i, k) / u(k, k);
            l(i, k) = f;
            for (std::size_t j = k; j < n; ++j) u(i, j) -= f * u(k, j);
            u(i, k) = 0.0;
        }
    }
    CMat d(n, n), uu = CMat::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        d(i, i) = u(i, i);
        for (std::size_t j = i + 1; j < n; ++j) uu(i, j) = u(i, j) / u(i, i);
    }
    return {std::move(l), std::move(d), std::move(uu)};
}

QRDecomp qr(const CMat& m) {
    const std::size_t n = m.rows(), c = m.cols();
    if (n < c) throw DomainError("qr needs rows >= cols");
    CMat r = m;
    CMat q = CMat::identity(n);
    std::vector<Scalar> v(n);
    for (std::size_t k = 0; k < c; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k; i < n; ++i) xnorm += std::norm(r(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        Scalar x0 = r(k, k);
        Scalar phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : Scalar(1.0);
        Scalar alpha = -phase * xnorm;
        double vnorm2 = 0.0;
        for (std::size_t i = k; i < n; ++i) {
            v[i] = r(i, k);
            if (i == k) v[i] -= alpha;
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0.0) continue;
        // r <- (1 - 2 v v*/|v|^2) r ; q <- q (1 - 2 v v*/|v|^2)
        for (std::size_t j = k; j < c; ++j) {
            Scalar dot(0);
            for (std::size_t i = k; i < n; ++i) dot += std::conj(v[i]) * r(i, j);
            dot *= 2.0 / vnorm2;
            for (std::size_t i = k; i < n; ++i) r(i, j) -= dot * v[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            Scalar dot(0);
            for (std::size_t j = k; j < n; ++j) dot += q(i, j) * v[j];
            dot *= 2.0 / vnorm2;
            for (std::size_t j = k; j < n; ++j) q(i, j) -= dot * std::conj(v[j]);
        }
    }
    // Absorb the diagonal phases into Q so that diag(R) >= 0.
    for (std::size_t k = 0; k < c; ++k) {
        Scalar d = r(k, k);
        if (std::abs(d) == 0.0) continue;
        Scalar phase = d / std::abs(d);
        for (std::size_t j = k; j < c; ++j) r(k, j) *= std::conj(phase);
        r(k, k) = Scalar(std::abs(d), 0.0);
        for (std::size_t i = 0; i < n; ++i) q(i, k) *= phase;
    }
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < i; ++j) r(i, j) = 0.0;
    return {std::move(q), std::move(r)};
}

namespace {

// Unitary 2x2 [c, s; -conj(s), c] with c real, zeroing b in (a, b)^t.
struct Givens {
    double c;
    Scalar s;
};

// Applied from the left as [[c, conj(s)], [-s, c]], sends (a,b) to (h,0).
Givens make_givens(Scalar a, Scalar b) {
    double na = std::abs(a), nb = std::abs(b);
    if (nb == 0.0) return {1.0, Scalar(0)};
    double h = std::hypot(na, nb);
    if (na == 0.0) return {0.0, std::conj(b) / nb};
    return {na / h, (std::conj(a) / na) * b / h};
}

}  // namespace

SchurDecomp schur(const CMat& m) {
    if (!m.square()) throw DomainError("schur needs a square matrix");
    const std::size_t n = m.rows();
    CMat h = m;
    CMat q = CMat::identity(n);
    if (n <= 1) return {std::move(q), std::move(h), true};

    // Householder reduction to upper Hessenberg form.
    std::vector<Scalar> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        Scalar x0 = h(k + 1, k);
        Scalar phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : Scalar(1.0);
        Scalar alpha = -phase * xnorm;
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = h(i, k);
            if (i == k + 1) v[i] -= alpha;
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0.0) continue;
        for (std::size_t j = k; j < n; ++j) {
            Scalar dot(0);
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
            dot *= 2.0 / vnorm2;
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= dot * v[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            Scalar dot(0);
            for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
            dot *= 2.0 / vnorm2;
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= dot * std::conj(v[j]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            Scalar dot(0);
            for (std::size_t j = k + 1; j < n; ++j) dot += q(i, j) * v[j];
            dot *= 2.0 / vnorm2;
            for (std::size_t j = k + 1; j < n; ++j) q(i, j) -= dot * std::conj(v[j]);
        }
    }

    // Single-shift QR iteration with deflation.
    const double eps = std::numeric_limits<double>::epsilon();
    bool converged = true;
    std::size_t hi = n - 1;
    int since_deflation = 0;
    const int max_total = 60 * static_cast<int>(n);
    int total = 0;
    while (true) {
        // Zero negligible subdiagonals.
        for (std::size_t i = 1; i <= hi; ++i) {
            double small = eps * (std::abs(h(i - 1, i - 1)) + std::abs(h(i, i)));
            if (small == 0.0) small = eps * frobenius_norm(h);
            if (std::abs(h(i, i - 1)) <= small) h(i, i - 1) = 0.0;
        }
        while (hi > 0 && std::abs(h(hi, hi - 1)) == 0.0) {
            --hi;
            since_deflation = 0;
        }
        if (hi == 0) break;
        std::size_t lo = hi;
        while (lo > 0 && std::abs(h(lo, lo - 1)) != 0.0) --lo;

        if (++total > max_total) {
            converged = false;
            break;
        }

        // Wilkinson shift from the trailing 2x2 block.
        Scalar a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
        Scalar tr = a + d, det2 = a * d - b * c;
        Scalar sq = csqrt(tr * tr - 4.0 * det2);
        Scalar l1 = (tr + sq) / 2.0, l2 = (tr - sq) / 2.0;
        Scalar mu = (std::abs(l1 - d) < std::abs(l2 - d)) ? l1 : l2;
        if (++since_deflation % 12 == 0) {
            // Exceptional shift to break symmetric stalls.
            mu = d + Scalar(std::abs(h(hi, hi - 1)), 0.0);
        }

        // Implicit shifted QR sweep on rows lo..hi via Givens rotations.
        Scalar x = h(lo, lo) - mu;
        Scalar y = h(lo + 1, lo);
        for (std::size_t k = lo; k < hi; ++k) {
            Givens g = make_givens(x, y);
            Scalar gc(g.c, 0.0);
            // Left rotation on rows k, k+1.
            for (std::size_t j = (k > lo ? k - 1 : lo); j < n; ++j) {
                Scalar t1 = h(k, j), t2 = h(k + 1, j);
                h(k, j) = std::conj(gc) * t1 + std::conj(g.s) * t2;
                h(k + 1, j) = -g.s * t1 + gc * t2;
            }
            // Right rotation on columns k, k+1.
            std::size_t rmax = std::min(hi, k + 2);
            for (std::size_t i = 0; i <= rmax; ++i) {
                Scalar t1 = h(i, k), t2 = h(i, k + 1);
                h(i, k) = t1 * gc + t2 * g.s;
                h(i, k + 1) = -t1 * std::conj(g.s) + t2 * gc;
            }
            for (std::size_t i = 0; i < n; ++i) {
                Scalar t1 = q(i, k), t2 = q(i, k + 1);
                q(i, k) = t1 * gc + t2 * g.s;
                q(i, k + 1) = -t1 * std::conj(g.s) + t2 * gc;
            }
            if (k + 1 < hi) {
                x = h(k + 1, k);
                y = h(k + 2, k);
            }
        }
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) h(i, j) = 0.0;
    return {std::move(q), std::move(h), converged};
}

LQDecomp lq(const CMat& m) {
    QRDecomp d = qr(adjoint(m));
    return {adjoint(d.r), adjoint(d.q)};
}

RQDecomp rq(const CMat& m) {
    // Reverse rows, take LQ, reverse back; keeps the triangle upper.
    const std::size_t n = m.rows();
    CMat rev = m;
    for (std::size_t i = 0; i < n / 2; ++i) rev.swap_rows(i, n - 1 - i);
    LQDecomp d = lq(rev);
    CMat r(d.l.rows(), d.l.cols()), q = d.q;
    for (std::size_t i = 0; i < d.l.rows(); ++i)
        for (std::size_t j = 0; j < d.l.cols(); ++j)
            r(d.l.rows() - 1 - i, d.l.cols() - 1 - j) = d.l(i, j);
    // r now has the anti-transposed triangle; flip q rows to match.
    CMat q2(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) q2(q.rows() - 1 - i, j) = q(i, j);
    return {std::move(r), std::move(q2)};
}

FullPivLU full_pivot_lu(const CMat& m, double tol) {
    if (!m.square()) throw DomainError("full_pivot_lu needs a square matrix");
    const std::size_t n = m.rows();
    CMat u = m;
    std::vector<int> pr(n), pc(n);
    for (std::size_t i = 0; i < n; ++i) pr[i] = pc[i] = static_cast<int>(i);
    CMat l = CMat::identity(n);
    const double scale = std::max(1.0, max_abs(m));
    std::size_t rank = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pi = k, pj = k;
        double best = 0.0;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (std::abs(u(i, j)) > best) {
                    best = std::abs(u(i, j));
                    pi = i;
                    pj = j;
                }
        if (best <= tol * scale) break;
        if (pi != k) {
            u.swap_rows(k, pi);
            std::swap(pr[k], pr[pi]);
            for (std::size_t j = 0; j < k; ++j) std::swap(l(k, j), l(pi, j));
        }
        if (pj != k) {
            u.swap_cols(k, pj);
            std::swap(pc[k], pc[pj]);
        }
        ++rank;
        for (std::size_t i = k + 1; i < n; ++i) {
            Scalar f = u(i, k) / u(k, k);
            l(i, k) = f;
            for (std::size_t j = k; j < n; ++j) u(i, j) -= f * u(k, j);
            u(i, k) = 0.0;
        }
    }
    return {Perm(std::vector<int>(pr.begin(), pr.end())),
            Perm(std::vector<int>(pc.begin(), pc.end())), std::move(l), std::move(u), rank};
}

}  // namespace advlin::factor

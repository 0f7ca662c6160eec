#include "advlin/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace advlin::poly {

namespace {

template <typename T>
PolyT<T> trim_impl(const PolyT<T>& p) {
    std::vector<T> c = p.c;
    while (c.size() > 1 && c.back() == T(0)) c.pop_back();
    return PolyT<T>(std::move(c));
}

// The resultant R(P,P') is divisible by the leading coefficient over the
// integers, so the integer backend divides exactly.
Scalar divide_by_leading(const Scalar& r, const Scalar& a) { return r / a; }
BigRat divide_by_leading(const BigRat& r, const BigRat& a) { return r / a; }
BigInt divide_by_leading(const BigInt& r, const BigInt& a) { return divexact(r, a); }

}  // namespace

ZPoly trim(const ZPoly& p) { return trim_impl(p); }
QPoly trim(const QPoly& p) { return trim_impl(p); }

template <typename T>
Matrix<T> sylvester_matrix(const PolyT<T>& p, const PolyT<T>& q) {
    const int k = p.degree(), l = q.degree();
    if (k < 1 || l < 1) throw DomainError("sylvester matrix needs nonconstant polynomials");
    Matrix<T> s(k + l, k + l);
    // l shifted columns of p's coefficients, top down from the leading one.
    for (int col = 0; col < l; ++col)
        for (int d = 0; d <= k; ++d) s(col + d, col) = p.c[k - d];
    // k shifted columns of q's coefficients.
    for (int col = 0; col < k; ++col)
        for (int d = 0; d <= l; ++d) s(col + d, l + col) = q.c[l - d];
    return s;
}

template <typename T>
T resultant(const PolyT<T>& p, const PolyT<T>& q) {
    return det(sylvester_matrix(p, q));
}

template <typename T>
T discriminant(const PolyT<T>& p) {
    const int n = p.degree();
    if (n < 2) throw DomainError("discriminant needs degree >= 2");
    if (p.c[n] == T(0)) throw DomainError("zero leading coefficient");
    T r = resultant(p, p.derivative());
    bool negate = ((static_cast<long>(n) * (n - 1) / 2) % 2) != 0;
    if (negate) r = -r;
    return divide_by_leading(r, p.c[n]);
}

template Scalar discriminant(const Poly&);
template BigInt discriminant(const ZPoly&);
template BigRat discriminant(const QPoly&);

template <typename T>
T discriminant_quadratic(const T& a, const T& b, const T& c) {
    return b * b - T(4) * a * c;
}

template <typename T>
T discriminant_cubic(const T& a, const T& b, const T& c, const T& d) {
    return b * b * c * c - T(4) * a * c * c * c - T(4) * b * b * b * d -
           T(27) * a * a * d * d + T(18) * a * b * c * d;
}

template Matrix<Scalar> sylvester_matrix(const Poly&, const Poly&);
template Matrix<BigInt> sylvester_matrix(const ZPoly&, const ZPoly&);
template Matrix<BigRat> sylvester_matrix(const QPoly&, const QPoly&);
template Scalar resultant(const Poly&, const Poly&);
template BigInt resultant(const ZPoly&, const ZPoly&);
template BigRat resultant(const QPoly&, const QPoly&);
template Scalar discriminant_quadratic(const Scalar&, const Scalar&, const Scalar&);
template BigInt discriminant_quadratic(const BigInt&, const BigInt&, const BigInt&);
template BigRat discriminant_quadratic(const BigRat&, const BigRat&, const BigRat&);
template Scalar discriminant_cubic(const Scalar&, const Scalar&, const Scalar&, const Scalar&);
template BigInt discriminant_cubic(const BigInt&, const BigInt&, const BigInt&, const BigInt&);
template BigRat discriminant_cubic(const BigRat&, const BigRat&, const BigRat&, const BigRat&);

RootClass classify_real_roots(const std::vector<double>& ascending, double tol) {
    QPoly p;
    {
        std::vector<BigRat> c;
        c.reserve(ascending.size());
        for (double x : ascending) c.emplace_back(x);
        p = trim(QPoly(std::move(c)));
    }
    const int n = p.degree();
    if (n < 2 || n > 4) throw DomainError("classification covers degrees 2..4");
    double delta = to_double(discriminant(p));
    if (std::abs(delta) <= tol)
        throw RefusalError("degenerate polynomial, classification withheld");

    RootClass rc;
    rc.degree = n;
    rc.discriminant_value = delta;
    switch (n) {
        case 2:
            rc.real_roots = delta > 0 ? 2 : 0;
            break;
        case 3:
            rc.real_roots = delta > 0 ? 3 : 1;
            break;
        case 4:
            if (delta < 0) {
                rc.real_roots = 2;
            } else {
                // All real or all complex; decide from the computed roots.
                std::vector<Scalar> cs(p.c.size());
                for (std::size_t i = 0; i < p.c.size(); ++i) cs[i] = to_scalar(p.c[i]);
                auto rts = roots(Poly(std::move(cs)));
                double scale = 0.0;
                for (auto z : rts) scale = std::max(scale, std::abs(z));
                int re = 0;
                for (auto z : rts)
                    if (std::abs(z.imag()) <= 1e-7 * (1.0 + scale)) ++re;
                rc.real_roots = (re >= 3) ? 4 : 0;
            }
            break;
    }
    return rc;
}

std::array<Scalar, 2> solve_quadratic_monic(Scalar b, Scalar c) {
    Scalar s = csqrt(b * b - 4.0 * c);
    // Pick the sign that avoids cancellation in -b -/+ s.
    Scalar u = (std::abs(-b - s) >= std::abs(-b + s)) ? (-b - s) : (-b + s);
    Scalar x1 = u / 2.0;
    Scalar x2 = (x1 == Scalar(0)) ? -b - x1 : c / x1;
    return {x1, x2};
}

std::array<Scalar, 3> solve_cubic(Scalar p, Scalar q) {
    // x = w u + w^2 v over the cube roots of unity w, with
    // u^3, v^3 = -q +- sqrt(p^3 + q^2) and the pairing constraint u v = -p.
    Scalar s = csqrt(p * p * p + q * q);
    Scalar a3 = -q + s, b3 = -q - s;
    if (std::abs(b3) > std::abs(a3)) std::swap(a3, b3);
    Scalar u = ccbrt(a3);
    Scalar v;
    if (std::abs(u) > 0.0) {
        v = -p / u;  // re-phases the second cube root so that u v = -p
    } else {
        v = ccbrt(b3);
    }
    const Scalar w = root_of_unity(1, 3), w2 = root_of_unity(2, 3);
    return {u + v, w * u + w2 * v, w2 * u + w * v};
}

namespace {

double quartic_residual(Scalar x, Scalar p, Scalar q, Scalar r) {
    return std::abs(((x * x + 6.0 * p) * x + 4.0 * q) * x + 3.0 * r);
}

std::array<Scalar, 4> quartic_from_resolvent(Scalar y, Scalar p, Scalar q) {
    // Splits x^4 + 6px^2 + 4qx + 3r into two quadratics
    //   x^2 +- s x + (y -+ 2q/s) = 0   with s = sqrt(2y - 6p).
    Scalar s = csqrt(2.0 * y - 6.0 * p);
    Scalar shift = 2.0 * q / s;
    auto r1 = solve_quadratic_monic(s, y - shift);
    auto r2 = solve_quadratic_monic(-s, y + shift);
    return {r1[0], r1[1], r2[0], r2[1]};
}

}  // namespace

std::array<Scalar, 4> solve_quartic(Scalar p, Scalar q, Scalar r) {
    double scale = std::max({std::abs(p), std::abs(q), std::abs(r)});
    if (scale == 0.0) return {Scalar(0), Scalar(0), Scalar(0), Scalar(0)};

    // Biquadratic path: the resolvent split divides by sqrt(2y-6p),
    // which can vanish when q = 0.
    if (std::abs(q) <= 1e-14 * scale) {
        auto u = solve_quadratic_monic(6.0 * p, 3.0 * r);
        Scalar s0 = csqrt(u[0]), s1 = csqrt(u[1]);
        return {s0, -s0, s1, -s1};
    }

    // Resolvent (y^2-3r)(y-3p) = 2q^2, solved by y = t + p + a/t with
    // t^3 = b + sqrt(b^2 - a^3), a = p^2 + r, b = p^3 - 3pr + q^2.
    Scalar a = p * p + r;
    Scalar b = p * p * p - 3.0 * p * r + q * q;
    Scalar disc = csqrt(b * b - a * a * a);
    Scalar t3 = b + disc;
    if (std::abs(b - disc) > std::abs(t3)) t3 = b - disc;
    Scalar t = ccbrt(t3);

    std::array<Scalar, 4> best{};
    double best_res = std::numeric_limits<double>::infinity();
    auto consider = [&](Scalar y) {
        if (std::abs(2.0 * y - 6.0 * p) <= 1e-14 * (1.0 + std::abs(y) + std::abs(p))) return;
        auto cand = quartic_from_resolvent(y, p, q);
        double res = 0.0;
        for (auto x : cand) res = std::max(res, quartic_residual(x, p, q, r));
        if (res < best_res) {
            best_res = res;
            best = cand;
        }
    };
    if (std::abs(t) > 0.0) {
        // The three cube-root phases give the three resolvent roots; the
        // formulas degenerate when 2y-6p ~ 0, so keep the best candidate.
        for (int j = 0; j < 3; ++j) {
            Scalar tj = t * root_of_unity(j, 3);
            consider(tj + p + a / tj);
        }
    }
    if (!std::isfinite(best_res) || best_res > 1e-9 * std::pow(1.0 + std::cbrt(scale), 4)) {
        // Degenerate resolvent (t ~ 0 or all splits ill-posed): perturbed root.
        auto ys = solve_cubic(-a, -b);  // z^3 - 3az - 2b = 0, y = z + p
        for (auto z : ys) consider(z + p);
        if (!std::isfinite(best_res)) {
            consider(p + Scalar(1e-8) * (1.0 + std::abs(p)));
        }
    }
    return best;
}

Poly char_poly(const CMat& m) {
    if (!m.square()) throw DomainError("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Poly({Scalar(1)});
    // Evaluate det(A - x) at scaled roots of unity and invert the DFT;
    // the nodes are perfectly conditioned for interpolation.
    const std::size_t pts = n + 1;
    const double rad = 1.0 + max_abs(m);
    std::vector<Scalar> vals(pts);
    for (std::size_t j = 0; j < pts; ++j) {
        Scalar x = rad * root_of_unity(static_cast<long>(j), static_cast<long>(pts));
        CMat s = m;
        for (std::size_t i = 0; i < n; ++i) s(i, i) -= x;
        vals[j] = det(s);
    }
    std::vector<Scalar> coeffs(pts);
    for (std::size_t k = 0; k < pts; ++k) {
        Scalar acc(0);
        for (std::size_t j = 0; j < pts; ++j)
            acc += vals[j] * root_of_unity(-static_cast<long>(k * j), static_cast<long>(pts));
        coeffs[k] = acc / (static_cast<double>(pts) * std::pow(rad, static_cast<double>(k)));
    }
    return Poly(std::move(coeffs));
}

QPoly char_poly(const QMat& m) {
    if (!m.square()) throw DomainError("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return QPoly({BigRat(1)});
    // det(A - x) at x = 0..n, then exact Lagrange interpolation.
    const std::size_t pts = n + 1;
    std::vector<BigRat> vals(pts);
    for (std::size_t j = 0; j < pts; ++j) {
        QMat s = m;
        for (std::size_t i = 0; i < n; ++i) s(i, i) -= BigRat(static_cast<long>(j));
        vals[j] = det(s);
    }
    QPoly acc;  // zero
    for (std::size_t j = 0; j < pts; ++j) {
        QPoly basis({BigRat(1)});
        BigRat denom = 1;
        for (std::size_t i = 0; i < pts; ++i) {
            if (i == j) continue;
            basis = basis * QPoly({BigRat(-static_cast<long>(i)), BigRat(1)});
            denom *= BigRat(static_cast<long>(j)) - BigRat(static_cast<long>(i));
        }
        for (auto& c : basis.c) c *= vals[j] / denom;
        acc = acc + basis;
    }
    acc.c.resize(pts, BigRat(0));
    return acc;
}

ZPoly char_poly(const ZMat& m) {
    QPoly q = char_poly(to_qmat(m));
    std::vector<BigInt> c(q.c.size());
    for (std::size_t i = 0; i < q.c.size(); ++i) {
        if (q.c[i].get_den() != 1) throw DomainError("integer characteristic polynomial expected");
        c[i] = q.c[i].get_num();
    }
    return ZPoly(std::move(c));
}

std::vector<std::pair<Scalar, int>> cluster_roots(const std::vector<Scalar>& rts, double rel_tol) {
    double scale = 0.0;
    for (auto z : rts) scale = std::max(scale, std::abs(z));
    const double tol = rel_tol * (1.0 + scale);
    std::vector<std::pair<Scalar, int>> out;
    std::vector<bool> used(rts.size(), false);
    for (std::size_t i = 0; i < rts.size(); ++i) {
        if (used[i]) continue;
        Scalar sum = rts[i];
        int cnt = 1;
        used[i] = true;
        for (std::size_t j = i + 1; j < rts.size(); ++j) {
            if (!used[j] && std::abs(rts[j] - sum / static_cast<double>(cnt)) <= tol) {
                sum += rts[j];
                ++cnt;
                used[j] = true;
            }
        }
        out.emplace_back(sum / static_cast<double>(cnt), cnt);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });
    return out;
}

}  // namespace advlin::poly

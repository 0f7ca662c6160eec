#include "advlin/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "advlin/factor.hpp"

namespace advlin::spectra {

namespace {

constexpr std::size_t kJacobiLimit = 48;

void sort_eigensystem(std::vector<double>& vals, CMat& vecs, bool with_vectors) {
    std::vector<std::size_t> idx(vals.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<double> sv(vals.size());
    CMat sm = with_vectors ? CMat(vecs.rows(), vecs.cols()) : CMat();
    for (std::size_t j = 0; j < idx.size(); ++j) {
        sv[j] = vals[idx[j]];
        if (with_vectors)
            for (std::size_t i = 0; i < vecs.rows(); ++i) sm(i, j) = vecs(i, idx[j]);
    }
    vals = std::move(sv);
    if (with_vectors) vecs = std::move(sm);
}

std::pair<std::vector<double>, CMat> jacobi_hermitian(CMat a, bool want_vectors) {
    const std::size_t n = a.rows();
    CMat v = CMat::identity(n);
    const double norm = frobenius_norm(a);
    const double stop = 1e-15 * std::max(norm, 1e-300);
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= stop) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double r = std::abs(a(p, q));
                if (r <= 1e-300) continue;
                Scalar phase = a(p, q) / r;
                double app = a(p, p).real(), aqq = a(q, q).real();
                double theta = 0.5 * std::atan2(2.0 * r, aqq - app);
                double c = std::cos(theta), s = std::sin(theta);
                // Unitary update with U(p,p)=e^{i phi}c, U(p,q)=e^{i phi}s,
                // U(q,p)=-s, U(q,q)=c; A <- U* A U, V <- V U.
                for (std::size_t i = 0; i < n; ++i) {
                    Scalar aip = a(i, p), aiq = a(i, q);
                    a(i, p) = aip * (phase * c) - aiq * s;
                    a(i, q) = aip * (phase * s) + aiq * c;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    Scalar apj = a(p, j), aqj = a(q, j);
                    a(p, j) = std::conj(phase) * c * apj - s * aqj;
                    a(q, j) = std::conj(phase) * s * apj + c * aqj;
                }
                if (want_vectors) {
                    for (std::size_t i = 0; i < n; ++i) {
                        Scalar vip = v(i, p), viq = v(i, q);
                        v(i, p) = vip * (phase * c) - viq * s;
                        v(i, q) = vip * (phase * s) + viq * c;
                    }
                }
                a(p, q) = std::conj(a(q, p));
            }
        }
    }
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = a(i, i).real();
    sort_eigensystem(vals, v, want_vectors);
    return {std::move(vals), std::move(v)};
}

// Householder tridiagonalization followed by implicit-shift QL.
std::pair<std::vector<double>, CMat> tridiag_hermitian(CMat a, bool want_vectors) {
    const std::size_t n = a.rows();
    CMat z = CMat::identity(n);
    std::vector<Scalar> u(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(a(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        Scalar x0 = a(k + 1, k);
        Scalar phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : Scalar(1.0);
        Scalar alpha = -phase * xnorm;
        double un2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            u[i] = a(i, k);
            if (i == k + 1) u[i] -= alpha;
            un2 += std::norm(u[i]);
        }
        if (un2 == 0.0) continue;
        auto reflect_left = [&](CMat& m, std::size_t col0) {
            for (std::size_t j = col0; j < n; ++j) {
                Scalar dot(0);
                for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(u[i]) * m(i, j);
                dot *= 2.0 / un2;
                for (std::size_t i = k + 1; i < n; ++i) m(i, j) -= dot * u[i];
            }
        };
        auto reflect_right = [&](CMat& m) {
            for (std::size_t i = 0; i < n; ++i) {
                Scalar dot(0);
                for (std::size_t j = k + 1; j < n; ++j) dot += m(i, j) * u[j];
                dot *= 2.0 / un2;
                for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= dot * std::conj(u[j]);
            }
        };
        reflect_left(a, k);
        reflect_right(a);
        if (want_vectors) reflect_right(z);
    }

    // Phase-scale so that the off-diagonal is real nonnegative.
    std::vector<double> d(n), e(n, 0.0);
    std::vector<Scalar> dphase(n, Scalar(1.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Scalar ei = a(i + 1, i);
        double r = std::abs(ei);
        e[i] = r;
        Scalar next = (r > 0.0) ? dphase[i] * (ei / r) : dphase[i];
        dphase[i + 1] = next;
    }
    if (want_vectors)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) z(i, j) *= dphase[j];

    // Implicit QL with Wilkinson-style shifts on the real tridiagonal.
    const double eps = std::numeric_limits<double>::epsilon();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(d[i]) + std::abs(e[i]));
    const double floor_tol = 0.5 * eps * scale + 1e-300;
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd + floor_tol) break;
            }
            if (m != l) {
                if (iter++ == 80) throw RefusalError("tridiagonal QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (want_vectors) {
                        for (std::size_t k2 = 0; k2 < n; ++k2) {
                            Scalar zf = z(k2, i + 1);
                            z(k2, i + 1) = s * z(k2, i) + c * zf;
                            z(k2, i) = c * z(k2, i) - s * zf;
                        }
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    sort_eigensystem(d, z, want_vectors);
    return {std::move(d), std::move(z)};
}

}  // namespace

std::pair<std::vector<double>, CMat> hermitian_eigen(const CMat& m, bool want_vectors) {
    if (!m.square()) throw DomainError("hermitian_eigen needs a square matrix");
    // Work on the hermitian part so roundoff in callers cannot bias us.
    CMat h = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    if (m.rows() <= kJacobiLimit) return jacobi_hermitian(std::move(h), want_vectors);
    return tridiag_hermitian(std::move(h), want_vectors);
}

std::vector<double> hermitian_eigenvalues(const CMat& m) {
    return hermitian_eigen(m, false).first;
}

std::vector<Scalar> eigenvalues(const CMat& m) {
    auto sd = factor::schur(m);
    std::vector<Scalar> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = sd.t(i, i);
    return v;
}

namespace {

// Eigenvectors of an upper triangular matrix by back-substitution,
// with perturbed denominators at repeated diagonal entries.
CMat triangular_eigenvectors(const CMat& t) {
    const std::size_t n = t.rows();
    const double tiny = 1e-30 + 1e-14 * frobenius_norm(t);
    CMat y(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        Scalar lam = t(c, c);
        y(c, c) = 1.0;
        for (std::size_t i = c; i-- > 0;) {
            Scalar s(0);
            for (std::size_t k = i + 1; k <= c; ++k) s += t(i, k) * y(k, c);
            Scalar denom = t(i, i) - lam;
            if (std::abs(denom) < tiny) denom = Scalar(tiny, 0.0);
            y(i, c) = -s / denom;
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i <= c; ++i) nrm += std::norm(y(i, c));
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i <= c; ++i) y(i, c) /= nrm;
    }
    return y;
}

}  // namespace

EigenDecomp eigen(const CMat& m, EigenKind kind, double tol) {
    if (!m.square()) throw DomainError("eigen needs a square matrix");
    const std::size_t n = m.rows();
    EigenDecomp out;
    out.kind = kind;
    switch (kind) {
        case EigenKind::hermitian: {
            if (hermitian_defect(m) > tol * (1.0 + frobenius_norm(m)))
                throw DomainError("hermitian hint on a non-hermitian matrix");
            auto [vals, vecs] = hermitian_eigen(m);
            out.values.assign(vals.begin(), vals.end());
            out.passage = std::move(vecs);
            return out;
        }
        case EigenKind::normal: {
            if (normality_defect(m) > tol * (1.0 + frobenius_norm(m) * frobenius_norm(m)))
                throw DomainError("normal hint on a non-normal matrix");
            auto sd = factor::schur(m);
            out.values.resize(n);
            for (std::size_t i = 0; i < n; ++i) out.values[i] = sd.t(i, i);
            out.passage = std::move(sd.q);
            return out;
        }
        case EigenKind::general: {
            auto sd = factor::schur(m);
            out.values.resize(n);
            for (std::size_t i = 0; i < n; ++i) out.values[i] = sd.t(i, i);
            CMat y = triangular_eigenvectors(sd.t);
            out.passage = sd.q * y;
            // Defective inputs have no eigenvector basis; detect through
            // near-singularity of the passage matrix.
            double smin = svd(out.passage).singulars.back();
            if (smin < 1e-7)
                throw RefusalError("defective matrix: geometric multiplicity below algebraic");
            return out;
        }
    }
    throw DomainError("unknown eigen kind");
}

Scalar AtomicLaw::moment(int k) const {
    Scalar s(0);
    for (const auto& [loc, w] : atoms) s += w * std::pow(loc, k);
    return s;
}

Scalar AtomicLaw::colored_moment(const std::vector<bool>& word) const {
    Scalar s(0);
    for (const auto& [loc, w] : atoms) {
        Scalar t(1.0, 0.0);
        for (bool bar : word) t *= bar ? std::conj(loc) : loc;
        s += w * t;
    }
    return s;
}

AtomicLaw matrix_law(const CMat& m, double tol, double merge_tol) {
    double nf = frobenius_norm(m);
    if (normality_defect(m) > tol * (1.0 + nf * nf))
        throw DomainError("law of a non-normal matrix is not a measure");
    auto vals = eigenvalues(m);
    const double w = 1.0 / static_cast<double>(vals.size());
    AtomicLaw law;
    std::vector<bool> used(vals.size(), false);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (used[i]) continue;
        Scalar loc = vals[i];
        double weight = w;
        int cnt = 1;
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
            if (!used[j] && std::abs(vals[j] - loc / static_cast<double>(cnt)) <= merge_tol) {
                loc += vals[j];
                ++cnt;
                weight += w;
                used[j] = true;
            }
        }
        law.atoms.emplace_back(loc / static_cast<double>(cnt), weight);
    }
    std::sort(law.atoms.begin(), law.atoms.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });
    return law;
}

CMat funcalc(const CMat& m, const std::function<Scalar(Scalar)>& f, double tol) {
    double nf = frobenius_norm(m);
    if (normality_defect(m) > tol * (1.0 + nf * nf))
        throw DomainError("functional calculus needs a normal matrix");
    auto sd = factor::schur(m);
    const std::size_t n = m.rows();
    CMat d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Scalar fx = f(sd.t(i, i));
        if (!is_finite(fx)) throw DomainError("function undefined at an eigenvalue");
        d(i, i) = fx;
    }
    return sd.q * d * adjoint(sd.q);
}

SVDDecomp svd(const CMat& m) {
    const std::size_t n = m.rows(), c = m.cols();
    if (n < c) {
        SVDDecomp t = svd(adjoint(m));
        return {std::move(t.right), std::move(t.singulars), std::move(t.left)};
    }
    // Right singular vectors from the hermitian eigenproblem of A*A;
    // then sigma_i = |A v_i| and u_i = A v_i / sigma_i, so that the
    // reconstruction error reduces to the orthogonality of V.
    auto [evals, v] = hermitian_eigen(adjoint(m) * m);
    (void)evals;
    // Ascending -> descending.
    CMat vd(c, c);
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t i = 0; i < c; ++i) vd(i, j) = v(i, c - 1 - j);
    std::vector<double> sig(c);
    CMat u(n, n);
    double smax = 0.0;
    CMat av = m * vd;
    for (std::size_t j = 0; j < c; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::norm(av(i, j));
        sig[j] = std::sqrt(s);
        smax = std::max(smax, sig[j]);
    }
    const double cut = smax * 1e-14;
    std::size_t filled = 0;
    for (std::size_t j = 0; j < c; ++j) {
        if (sig[j] > cut) {
            for (std::size_t i = 0; i < n; ++i) u(i, j) = av(i, j) / sig[j];
            filled = j + 1;
        }
    }
    // Complete U to a unitary basis (null directions and the n-c tail).
    for (std::size_t j = filled; j < n; ++j) {
        // Start from a coordinate vector and orthogonalize twice.
        for (std::size_t attempt = 0; attempt < n; ++attempt) {
            CMat cand(n, 1);
            cand((j + attempt) % n, 0) = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t k = 0; k < j; ++k) {
                    Scalar dot(0);
                    for (std::size_t i = 0; i < n; ++i) dot += std::conj(u(i, k)) * cand(i, 0);
                    for (std::size_t i = 0; i < n; ++i) cand(i, 0) -= dot * u(i, k);
                }
            double nrm = 0.0;
            for (std::size_t i = 0; i < n; ++i) nrm += std::norm(cand(i, 0));
            nrm = std::sqrt(nrm);
            if (nrm > 1e-3) {
                for (std::size_t i = 0; i < n; ++i) u(i, j) = cand(i, 0) / nrm;
                break;
            }
        }
    }
    return {std::move(u), std::move(sig), std::move(vd)};
}

CMat SVDDecomp::reconstruct() const {
    CMat s(left.cols(), right.cols());
    for (std::size_t i = 0; i < singulars.size(); ++i) s(i, i) = singulars[i];
    return left * s * adjoint(right);
}

PolarDecomp polar(const CMat& m, double tol) {
    if (!m.square()) throw DomainError("polar needs a square matrix");
    SVDDecomp d = svd(m);
    const std::size_t n = m.rows();
    double smax = d.singulars.empty() ? 0.0 : d.singulars.front();
    CMat sd(n, n);
    for (std::size_t i = 0; i < n; ++i) sd(i, i) = d.singulars[i];
    CMat modulus = d.right * sd * adjoint(d.right);
    // Partial isometry supported on the row space; unitary when invertible.
    CMat iso(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (d.singulars[k] <= tol * std::max(1.0, smax)) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                iso(i, j) += d.left(i, k) * std::conj(d.right(j, k));
    }
    return {std::move(iso), std::move(modulus)};
}

CMat expm(const CMat& m) {
    if (!m.square()) throw DomainError("expm needs a square matrix");
    const std::size_t n = m.rows();
    double nrm = one_norm(m);
    int squarings = 0;
    if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
    CMat a = m;
    if (squarings > 0) a *= Scalar(std::ldexp(1.0, -squarings), 0.0);
    CMat term = CMat::identity(n);
    CMat sum = term;
    for (int k = 1; k <= 80; ++k) {
        term = term * a;
        term *= Scalar(1.0 / k, 0.0);
        sum += term;
        if (frobenius_norm(term) < 1e-18 * frobenius_norm(sum)) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

PositivityClass positivity_class(const CMat& m, double tol) {
    if (!m.square()) throw DomainError("positivity_class needs a square matrix");
    const double scale = 1.0 + frobenius_norm(m);
    if (hermitian_defect(m) > tol * scale) return PositivityClass::not_selfadjoint;
    auto vals = hermitian_eigenvalues(m);
    bool any_negative = false, any_zero = false;
    for (double v : vals) {
        if (v < -tol * scale) any_negative = true;
        else if (v <= tol * scale) any_zero = true;
    }
    if (any_negative) return PositivityClass::indefinite;
    return any_zero ? PositivityClass::positive : PositivityClass::strictly_positive;
}

Inertia inertia(const CMat& m, double tol) {
    if (!m.square()) throw DomainError("inertia needs a square matrix");
    const double scale = 1.0 + frobenius_norm(m);
    for (const auto& z : m.data())
        if (std::abs(z.imag()) > tol * scale) throw DomainError("inertia needs a real symmetric matrix");
    if (hermitian_defect(m) > tol * scale) throw DomainError("inertia needs a real symmetric matrix");
    auto vals = hermitian_eigenvalues(m);
    Inertia r;
    for (double v : vals) {
        if (v > tol * scale) ++r.n_plus;
        else if (v < -tol * scale) ++r.n_minus;
        else ++r.n_zero;
    }
    return r;
}

}  // namespace advlin::spectra

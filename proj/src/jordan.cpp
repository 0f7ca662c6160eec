#include "advlin/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "advlin/spectra.hpp"

namespace advlin::jordan {

template <typename T>
Matrix<T> companion(const poly::PolyT<T>& p) {
    const int k = p.degree();
    if (k < 1) throw DomainError("companion matrix needs degree >= 1");
    if (!(p.c[k] == T(1))) throw DomainError("companion matrix needs a monic polynomial");
    Matrix<T> m(k, k);
    for (int i = 1; i < k; ++i) m(i, i - 1) = T(1);
    for (int i = 0; i < k; ++i) m(i, k - 1) = -p.c[i];
    return m;
}

template Matrix<Scalar> companion(const poly::PolyT<Scalar>&);
template Matrix<BigInt> companion(const poly::PolyT<BigInt>&);
template Matrix<BigRat> companion(const poly::PolyT<BigRat>&);

CMat JordanForm::assemble() const {
    int n = 0;
    for (const auto& [lam, sz] : blocks) n += sz;
    CMat j(n, n);
    int at = 0;
    for (const auto& [lam, sz] : blocks) {
        for (int i = 0; i < sz; ++i) {
            j(at + i, at + i) = lam;
            if (i + 1 < sz) j(at + i, at + i + 1) = 1.0;
        }
        at += sz;
    }
    return j;
}

namespace {

// Single-linkage clustering of eigenvalues.
std::vector<std::vector<std::size_t>> cluster_values(const std::vector<Scalar>& vals,
                                                     double tol) {
    const std::size_t n = vals.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = static_cast<int>(clusters.size());
        std::vector<std::size_t> members;
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            members.push_back(a);
            for (std::size_t b = 0; b < n; ++b) {
                if (comp[b] < 0 && std::abs(vals[a] - vals[b]) <= tol) {
                    comp[b] = comp[i];
                    stack.push_back(b);
                }
            }
        }
        clusters.push_back(std::move(members));
    }
    return clusters;
}

// Orthonormal kernel basis of m at the given singular-value threshold.
CMat kernel_basis(const CMat& m, double thresh) {
    auto d = spectra::svd(m);
    const std::size_t c = m.cols();
    std::size_t nullity = 0;
    for (std::size_t i = 0; i < c; ++i)
        if (d.singulars[i] <= thresh) ++nullity;
    CMat k(c, nullity);
    std::size_t at = 0;
    for (std::size_t i = 0; i < c; ++i) {
        if (d.singulars[i] > thresh) continue;
        for (std::size_t r = 0; r < c; ++r) k(r, at) = d.right(r, i);
        ++at;
    }
    return k;
}

void orthogonalize_against(std::vector<Scalar>& v, const std::vector<std::vector<Scalar>>& basis) {
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) {
            Scalar dot(0);
            for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(b[i]) * v[i];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dot * b[i];
        }
}

double vec_norm(const std::vector<Scalar>& v) {
    double s = 0.0;
    for (auto z : v) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace

JordanForm jordan_form(const CMat& m, double cluster_tol) {
    if (!m.square()) throw DomainError("jordan_form needs a square matrix");
    const std::size_t n = m.rows();
    const double anorm = std::max(frobenius_norm(m), 1.0);
    if (cluster_tol <= 0.0) {
        // A defective eigenvalue of block size s scatters its computed
        // copies by about (eps |A|)^{1/s}, so the default must follow the
        // matrix size, not plain eps.
        double defective_spread =
            std::pow(2.2e-16 * (1.0 + anorm), 1.0 / static_cast<double>(std::max<std::size_t>(n, 1)));
        cluster_tol = std::max(1e-6 * anorm, 2.5 * defective_spread);
    }

    auto vals = spectra::eigenvalues(m);
    auto clusters = cluster_values(vals, cluster_tol);

    // Clusters must be cleanly separated for the rank tests to be meaningful.
    for (std::size_t a = 0; a < clusters.size(); ++a)
        for (std::size_t b = a + 1; b < clusters.size(); ++b)
            for (auto ia : clusters[a])
                for (auto ib : clusters[b])
                    if (std::abs(vals[ia] - vals[ib]) < 10.0 * cluster_tol)
                        throw RefusalError("ill-separated eigenvalue clusters");

    JordanForm out;
    std::vector<std::vector<Scalar>> passage_cols;

    for (const auto& members : clusters) {
        Scalar lam(0);
        for (auto i : members) lam += vals[i];
        lam /= static_cast<double>(members.size());
        const int mult = static_cast<int>(members.size());
        double spread = 0.0;
        for (auto i : members) spread = std::max(spread, std::abs(vals[i] - lam));

        // Kernel filtration by the staircase rule ker(M^{j+1}) = preimage of
        // ker(M^j): kernels of (1 - K_j K_j*) M. Unlike explicit powers this
        // never amplifies the eigenvalue-cluster perturbation.
        auto staircase = [&](Scalar center, double thresh,
                             const std::vector<int>* fixed_dims) {
            CMat sh = m;
            for (std::size_t i = 0; i < n; ++i) sh(i, i) -= center;
            std::vector<CMat> ks;
            std::vector<int> ds;
            for (int j = 0; j < mult; ++j) {
                CMat target = sh;
                if (j > 0) {
                    const CMat& prev = ks.back();
                    target = sh - prev * (adjoint(prev) * sh);
                }
                CMat k;
                if (fixed_dims) {
                    if (j >= static_cast<int>(fixed_dims->size())) break;
                    auto d = spectra::svd(target);
                    const std::size_t want = (*fixed_dims)[j];
                    k = CMat(n, want);
                    for (std::size_t c2 = 0; c2 < want; ++c2)
                        for (std::size_t r = 0; r < n; ++r)
                            k(r, c2) = d.right(r, n - 1 - c2);
                } else {
                    k = kernel_basis(target, thresh);
                }
                if (j > 0 && k.cols() <= ks.back().cols()) break;  // filtration stalled
                ks.push_back(std::move(k));
                ds.push_back(static_cast<int>(ks.back().cols()));
                if (ds.back() >= mult) break;
            }
            return std::pair{std::move(ks), std::move(ds)};
        };

        const double thresh =
            std::max(1e-9 * (1.0 + frobenius_norm(m)), 30.0 * spread + 1e-12);
        auto [kernels, dims] = staircase(lam, thresh, nullptr);

        // The first pass fixes the filtration dimensions; the eigenvalue is
        // then refined on the recovered invariant subspace (the first-order
        // error of the cluster mean cancels there), and the kernels rebuilt
        // at pinned dimensions around the refined value.
        if (!kernels.empty() && dims.back() == mult) {
            const CMat& q = kernels.back();
            Scalar refined = (adjoint(q) * (m * q)).trace() / static_cast<double>(mult);
            if (std::abs(refined - lam) < std::max(10.0 * spread, 1e-8)) {
                lam = refined;
                auto pass2 = staircase(lam, thresh, &dims);
                if (pass2.second == dims) kernels = std::move(pass2.first);
            }
        }

        CMat shifted = m;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lam;
        const int depth = static_cast<int>(kernels.size());
        // Blocks of size >= j+1: dims[j] - dims[j-1].
        std::vector<int> ge(depth);
        for (int j = 0; j < depth; ++j) ge[j] = dims[j] - (j ? dims[j - 1] : 0);
        std::vector<int> exact(depth);
        for (int j = 0; j < depth; ++j) exact[j] = ge[j] - (j + 1 < depth ? ge[j + 1] : 0);

        // Chains, longest first. A head at this level must stay independent
        // modulo K_{level-1} and the links that longer chains push down to
        // this level; all of those live inside K_level, so orthogonalizing
        // against them keeps the head in the kernel.
        auto apply_shifted = [&](const std::vector<Scalar>& v) {
            std::vector<Scalar> next(n, Scalar(0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j2 = 0; j2 < n; ++j2) next[i] += shifted(i, j2) * v[j2];
            return next;
        };
        std::vector<std::pair<std::vector<Scalar>, int>> seeds;  // (head, chain length)
        for (int level = depth; level >= 1; --level) {
            std::vector<std::vector<Scalar>> avoid;
            if (level >= 2)
                for (std::size_t c2 = 0; c2 < kernels[level - 2].cols(); ++c2) {
                    std::vector<Scalar> col(n);
                    for (std::size_t r = 0; r < n; ++r) col[r] = kernels[level - 2](r, c2);
                    avoid.push_back(std::move(col));
                }
            for (const auto& [head, size] : seeds) {
                std::vector<Scalar> link = head;
                for (int step = 0; step < size - level; ++step) link = apply_shifted(link);
                double ln = vec_norm(link);
                if (ln > 1e-300)
                    for (auto& z : link) z /= ln;
                avoid.push_back(std::move(link));
            }
            for (int b = 0; b < exact[level - 1]; ++b) {
                std::vector<Scalar> head;
                double best = -1.0;
                for (std::size_t c2 = 0; c2 < kernels[level - 1].cols(); ++c2) {
                    std::vector<Scalar> cand(n);
                    for (std::size_t r = 0; r < n; ++r) cand[r] = kernels[level - 1](r, c2);
                    orthogonalize_against(cand, avoid);
                    double nr = vec_norm(cand);
                    if (nr > best) {
                        best = nr;
                        head = std::move(cand);
                    }
                }
                if (head.empty() || best < 1e-10)
                    throw RefusalError("jordan chain construction failed");
                double nr = vec_norm(head);
                for (auto& z : head) z /= nr;
                avoid.push_back(head);
                seeds.emplace_back(std::move(head), level);
            }
        }
        for (const auto& [head, size] : seeds) {
            std::vector<std::vector<Scalar>> chain{head};
            for (int step = 1; step < size; ++step) chain.push_back(apply_shifted(chain.back()));
            // chain[s] = (A-lam)^s v; columns go bottom of the chain first.
            for (int s = size - 1; s >= 0; --s) passage_cols.push_back(chain[s]);
            out.blocks.emplace_back(lam, size);
        }
    }

    int total = 0;
    for (auto& [lam, sz] : out.blocks) total += sz;
    if (total != static_cast<int>(n)) throw RefusalError("jordan structure inconsistent");

    out.passage = CMat(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) out.passage(i, j) = passage_cols[j][i];

    // Gauss-Newton polish for the fixed block structure: alternate an
    // eigenvalue re-estimate from diag(P^{-1} A P) with a passage update
    // through the pseudo-inverse of the Sylvester operator X -> AX - XJ.
    // The chain tails would otherwise carry the kernel error amplified by
    // ||A - lam||^{block size}.
    for (int round = 0; round < 4; ++round) {
        CMat d = inverse(out.passage) * m * out.passage;
        std::size_t at = 0;
        for (auto& [lam, sz] : out.blocks) {
            Scalar mean(0);
            for (int i = 0; i < sz; ++i) mean += d(at + i, at + i);
            mean /= static_cast<double>(sz);
            if (std::abs(mean - lam) < 100.0 * cluster_tol) lam = mean;
            at += static_cast<std::size_t>(sz);
        }
        CMat j = out.assemble();
        CMat r = m * out.passage - out.passage * j;
        if (frobenius_norm(r) <= 1e-15 * (1.0 + frobenius_norm(m))) break;
        CMat sylv = kron(m, CMat::identity(n)) - kron(CMat::identity(n), j.transpose());
        auto op = spectra::svd(sylv);
        double smax = op.singulars.empty() ? 0.0 : op.singulars.front();
        // delta = -pinv(sylv) vec(r), row-major vectorization
        CMat rv(n * n, 1);
        for (std::size_t t = 0; t < n * n; ++t) rv(t, 0) = r.data()[t];
        CMat y = adjoint(op.left) * rv;
        CMat x(n * n, 1);
        for (std::size_t t = 0; t < n * n; ++t)
            if (op.singulars[t] > 1e-10 * smax) x(t, 0) = y(t, 0) / op.singulars[t];
        CMat delta = op.right * x;
        for (std::size_t t = 0; t < n * n; ++t) out.passage.data()[t] -= delta(t, 0);
    }

    CMat recon = out.passage * out.assemble() * inverse(out.passage);
    out.residual = frobenius_norm(recon - m);
    return out;
}

CMat jordan_expm(const JordanForm& jf) {
    int n = 0;
    for (const auto& [lam, sz] : jf.blocks) n += sz;
    CMat ej(n, n);
    int at = 0;
    for (const auto& [lam, sz] : jf.blocks) {
        // e^lambda times the upper triangular Toeplitz of 1/k!.
        Scalar el = std::exp(lam);
        double fact = 1.0;
        for (int d = 0; d < sz; ++d) {
            if (d > 0) fact *= d;
            for (int i = 0; i + d < sz; ++i) ej(at + i, at + i + d) = el / fact;
        }
        at += sz;
    }
    return jf.passage * ej * inverse(jf.passage);
}

double cayley_hamilton_residual(const CMat& m) {
    if (!m.square()) throw DomainError("cayley_hamilton_residual needs a square matrix");
    poly::Poly p = poly::char_poly(m);
    const std::size_t n = m.rows();
    CMat acc(n, n);
    CMat power = CMat::identity(n);
    for (std::size_t k = 0; k < p.c.size(); ++k) {
        acc += p.c[k] * power;
        if (k + 1 < p.c.size()) power = power * m;
    }
    return frobenius_norm(acc);
}

BigInt cayley_hamilton_residual(const ZMat& m) {
    poly::ZPoly p = poly::char_poly(m);
    const std::size_t n = m.rows();
    ZMat acc(n, n);
    ZMat power = ZMat::identity(n);
    for (std::size_t k = 0; k < p.c.size(); ++k) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) acc(i, j) += p.c[k] * power(i, j);
        if (k + 1 < p.c.size()) power = power * m;
    }
    BigInt s = 0;
    for (const auto& x : acc.data()) s += x * x;
    return s;
}

ExactJordanForm jordan_form_exact(const ZMat& m) {
    if (!m.square()) throw DomainError("jordan_form_exact needs a square matrix");
    const std::size_t n = m.rows();
    poly::ZPoly cp = poly::char_poly(m);

    // Rational eigenvalues of an integer matrix are integers dividing the
    // trailing nonzero coefficient (the characteristic polynomial is monic
    // up to sign).
    std::vector<std::pair<BigRat, int>> eigs;
    {
        poly::QPoly q;
        {
            std::vector<BigRat> c(cp.c.size());
            for (std::size_t i = 0; i < cp.c.size(); ++i) c[i] = BigRat(cp.c[i]);
            q = poly::QPoly(std::move(c));
        }
        // Deflate integer roots.
        poly::QPoly cur = q;
        bool progress = true;
        while (cur.degree() > 0 && progress) {
            progress = false;
            BigInt tail = 0;
            std::size_t low = 0;
            while (low < cur.c.size() && cur.c[low] == 0) ++low;
            if (low > 0) {
                // x = 0 root with multiplicity `low`.
                bool found = false;
                for (auto& [v, mult] : eigs)
                    if (v == 0) {
                        mult += static_cast<int>(low);
                        found = true;
                    }
                if (!found) eigs.emplace_back(BigRat(0), static_cast<int>(low));
                std::vector<BigRat> c(cur.c.begin() + static_cast<long>(low), cur.c.end());
                cur = poly::QPoly(std::move(c));
                progress = true;
                continue;
            }
            tail = cur.c[0].get_num();
            std::vector<BigInt> candidates;
            BigInt t = abs(tail);
            for (BigInt dcand = 1; dcand * dcand <= t; ++dcand) {
                if (t % dcand == 0) {
                    candidates.push_back(dcand);
                    candidates.push_back(t / dcand);
                }
            }
            for (const BigInt& cnd : candidates) {
                for (int sign = 1; sign >= -1; sign -= 2) {
                    BigRat x = BigRat(sign > 0 ? cnd : -cnd);
                    if (cur.eval(x) == 0) {
                        bool found = false;
                        for (auto& [v, mult] : eigs)
                            if (v == x) {
                                ++mult;
                                found = true;
                            }
                        if (!found) eigs.emplace_back(x, 1);
                        // Synthetic division by (X - x).
                        std::vector<BigRat> c(cur.c.size() - 1);
                        BigRat carry = cur.c.back();
                        for (std::size_t i = cur.c.size() - 1; i-- > 0;) {
                            c[i] = carry;
                            carry = cur.c[i] + carry * x;
                        }
                        cur = poly::QPoly(std::move(c));
                        progress = true;
                        break;
                    }
                }
                if (progress) break;
            }
        }
        if (cur.degree() > 0)
            throw RefusalError("exact jordan form needs a rational spectrum");
    }

    ExactJordanForm out;
    QMat a = to_qmat(m);
    std::vector<std::vector<BigRat>> cols;
    for (const auto& [lam, mult] : eigs) {
        QMat shifted = a;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lam;
        std::vector<QMat> kernels;
        QMat power = QMat::identity(n);
        std::vector<int> dims;
        for (int j = 0; j < mult; ++j) {
            power = power * shifted;
            kernels.push_back(kernel_exact(power));
            dims.push_back(static_cast<int>(kernels.back().cols()));
            if (dims.back() >= mult) break;
        }
        const int depth = static_cast<int>(kernels.size());
        std::vector<int> ge(depth);
        for (int j = 0; j < depth; ++j) ge[j] = dims[j] - (j ? dims[j - 1] : 0);
        std::vector<int> exact_cnt(depth);
        for (int j = 0; j < depth; ++j) exact_cnt[j] = ge[j] - (j + 1 < depth ? ge[j + 1] : 0);

        // Chains by exact rank tests: a head is a kernel column keeping the
        // chosen set independent modulo the previous kernel.
        std::vector<std::vector<BigRat>> occupied;
        for (int size = depth; size >= 1; --size) {
            for (int b = 0; b < exact_cnt[size - 1]; ++b) {
                std::vector<std::vector<BigRat>> avoid;
                if (size >= 2)
                    for (std::size_t c2 = 0; c2 < kernels[size - 2].cols(); ++c2) {
                        std::vector<BigRat> col(n);
                        for (std::size_t r = 0; r < n; ++r) col[r] = kernels[size - 2](r, c2);
                        avoid.push_back(std::move(col));
                    }
                for (const auto& o : occupied) avoid.push_back(o);

                std::vector<BigRat> head;
                for (std::size_t c2 = 0; c2 < kernels[size - 1].cols(); ++c2) {
                    std::vector<BigRat> cand(n);
                    for (std::size_t r = 0; r < n; ++r) cand[r] = kernels[size - 1](r, c2);
                    // Independent of avoid-span iff rank grows.
                    QMat test(n, avoid.size() + 1);
                    for (std::size_t cc = 0; cc < avoid.size(); ++cc)
                        for (std::size_t r = 0; r < n; ++r) test(r, cc) = avoid[cc][r];
                    for (std::size_t r = 0; r < n; ++r) test(r, avoid.size()) = cand[r];
                    if (rank_exact(test) == avoid.size() + 1) {
                        head = std::move(cand);
                        break;
                    }
                }
                if (head.empty()) throw RefusalError("exact jordan chain construction failed");

                std::vector<std::vector<BigRat>> chain{head};
                for (int step = 1; step < size; ++step) {
                    const auto& prev = chain.back();
                    std::vector<BigRat> next(n, BigRat(0));
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j2 = 0; j2 < n; ++j2) next[i] += shifted(i, j2) * prev[j2];
                    chain.push_back(std::move(next));
                }
                for (int s = size - 1; s >= 0; --s) cols.push_back(chain[s]);
                for (const auto& link : chain) occupied.push_back(link);
                out.blocks.emplace_back(lam, size);
            }
        }
    }
    int total = 0;
    for (auto& [lam, sz] : out.blocks) total += sz;
    if (total != static_cast<int>(n)) throw RefusalError("exact jordan structure inconsistent");
    out.passage = QMat(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) out.passage(i, j) = cols[j][i];
    return out;
}

}  // namespace advlin::jordan

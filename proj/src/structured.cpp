#include "advlin/structured.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace advlin::structured {

CMat fourier_matrix(std::size_t n) {
    if (n < 1) throw DomainError("fourier_matrix needs n >= 1");
    CMat f(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            f(i, j) = root_of_unity(static_cast<long>((i * j) % n), static_cast<long>(n));
    return f;
}

CMat group_fourier(const std::vector<std::size_t>& factors) {
    if (factors.empty()) throw DomainError("group_fourier needs at least one factor");
    CMat f = fourier_matrix(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) f = kron(f, fourier_matrix(factors[i]));
    return f;
}

CMat circulant(const std::vector<Scalar>& xi) {
    const std::size_t n = xi.size();
    if (n < 1) throw DomainError("circulant needs a nonempty symbol");
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = xi[(j + n - i % n) % n];
    return m;
}

CirculantDiag circulant_diagonalize(const std::vector<Scalar>& xi) {
    const std::size_t n = xi.size();
    CMat f = fourier_matrix(n);
    std::vector<Scalar> q(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n; ++r) q[i] += f(i, r) * xi[r];
    CMat d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = q[i];
    CMat recon = f * d * adjoint(f);
    recon *= Scalar(1.0 / static_cast<double>(n), 0.0);
    double res = frobenius_norm(recon - circulant(xi));
    return {std::move(q), res};
}

bool is_hadamard(const ZMat& m) {
    if (!m.square()) return false;
    const std::size_t n = m.rows();
    for (const auto& x : m.data())
        if (x != 1 && x != -1) return false;
    ZMat g = m * m.transpose();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g(i, j) != (i == j ? BigInt(static_cast<long>(n)) : BigInt(0))) return false;
    return true;
}

bool is_hadamard(const CMat& m, HadamardKind kind, double tol) {
    if (!m.square()) return false;
    const std::size_t n = m.rows();
    if (kind == HadamardKind::real) {
        ZMat z(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double re = m(i, j).real();
                if (std::abs(m(i, j).imag()) > tol || std::abs(std::abs(re) - 1.0) > tol)
                    return false;
                z(i, j) = re > 0 ? 1 : -1;
            }
        return is_hadamard(z);
    }
    for (const auto& x : m.data())
        if (std::abs(std::abs(x) - 1.0) > tol) return false;
    CMat g = m * adjoint(m);
    for (std::size_t i = 0; i < n; ++i) g(i, i) -= static_cast<double>(n);
    return frobenius_norm(g) <= tol * static_cast<double>(n) * std::sqrt(static_cast<double>(n));
}

ZMat walsh(int k) {
    if (k < 1) throw DomainError("walsh needs k >= 1");
    ZMat w2{{BigInt(1), BigInt(1)}, {BigInt(1), BigInt(-1)}};
    ZMat w = w2;
    for (int i = 1; i < k; ++i) w = kron(w, w2);
    return w;
}

namespace {

bool is_prime(long q) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// chi(a) = a^{(q-1)/2} mod q, as +-1 (0 at a = 0).
int quad_char(long a, long q) {
    a %= q;
    if (a < 0) a += q;
    if (a == 0) return 0;
    long e = (q - 1) / 2;
    long base = a, r = 1;
    while (e) {
        if (e & 1) r = (r * base) % q;
        base = (base * base) % q;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

}  // namespace

ZMat paley_character_matrix(long q) {
    if (!is_prime(q) || q == 2) throw DomainError("paley needs an odd prime q");
    ZMat qm(q, q);
    for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b) qm(a, b) = quad_char(b - a, q);
    return qm;
}

ZMat paley1(long q) {
    if (!is_prime(q) || q % 4 != 3) throw DomainError("paley1 needs a prime q = 3 (mod 4)");
    ZMat qm = paley_character_matrix(q);
    const long n = q + 1;
    ZMat h(n, n);
    h(0, 0) = 1;
    for (long j = 1; j < n; ++j) {
        h(0, j) = 1;
        h(j, 0) = -1;
    }
    for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b) h(a + 1, b + 1) = qm(a, b) + (a == b ? 1 : 0);
    return h;
}

ZMat paley2(long q) {
    if (!is_prime(q) || q % 4 != 1) throw DomainError("paley2 needs a prime q = 1 (mod 4)");
    ZMat qm = paley_character_matrix(q);
    const long base = q + 1;
    ZMat core(base, base);  // [[0, 1...1],[1...1, Q]]
    for (long j = 1; j < base; ++j) {
        core(0, j) = 1;
        core(j, 0) = 1;
    }
    for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b) core(a + 1, b + 1) = qm(a, b);
    // 0 -> G, +-1 -> +-F on 2x2 blocks.
    ZMat f{{BigInt(1), BigInt(1)}, {BigInt(1), BigInt(-1)}};
    ZMat g{{BigInt(1), BigInt(-1)}, {BigInt(-1), BigInt(-1)}};
    const long n = 2 * base;
    ZMat h(n, n);
    for (long a = 0; a < base; ++a)
        for (long b = 0; b < base; ++b) {
            const ZMat* blk = nullptr;
            int sign = 1;
            if (a == b && core(a, b) == 0) blk = &g;
            else {
                blk = &f;
                sign = core(a, b) == 1 ? 1 : (core(a, b) == -1 ? -1 : 0);
            }
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    h(2 * a + i, 2 * b + j) = sign == 0 ? BigInt(0) : BigInt(sign) * (*blk)(i, j);
        }
    return h;
}

ZMat williamson(const std::vector<int>& a, const std::vector<int>& b,
                const std::vector<int>& c, const std::vector<int>& d) {
    const std::size_t k = a.size();
    if (b.size() != k || c.size() != k || d.size() != k)
        throw DomainError("williamson needs four symbols of equal length");
    auto circ = [&](const std::vector<int>& s) {
        ZMat m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                int v = s[(j + k - i % k) % k];
                if (v != 1 && v != -1) throw DomainError("williamson symbols must be +-1");
                m(i, j) = v;
            }
        return m;
    };
    ZMat A = circ(a), B = circ(b), C = circ(c), D = circ(d);
    for (auto [name, mp] : {std::pair{"A", &A}, {"B", &B}, {"C", &C}, {"D", &D}}) {
        if (!(*mp == mp->transpose()))
            throw RefusalError(std::string("williamson symbol ") + name + " is not symmetric");
    }
    ZMat s = A * A + B * B + C * C + D * D;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            BigInt want = (i == j) ? BigInt(4 * static_cast<long>(k)) : BigInt(0);
            if (s(i, j) != want)
                throw RefusalError("williamson condition A^2+B^2+C^2+D^2 = 4K fails at entry (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    const std::size_t n = 4 * k;
    ZMat h(n, n);
    const ZMat* blocks[4][4] = {{&A, &B, &C, &D}, {&B, &A, &D, &C}, {&C, &D, &A, &B}, {&D, &C, &B, &A}};
    const int signs[4][4] = {{1, 1, 1, 1}, {-1, 1, -1, 1}, {-1, 1, 1, -1}, {-1, -1, 1, 1}};
    for (int bi = 0; bi < 4; ++bi)
        for (int bj = 0; bj < 4; ++bj)
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    h(bi * k + i, bj * k + j) = BigInt(signs[bi][bj]) * (*blocks[bi][bj])(i, j);
    return h;
}

CMat f4q_family(Scalar q, double tol) {
    if (std::abs(std::abs(q) - 1.0) > tol) throw DomainError("f4q needs |q| = 1");
    CMat h(4, 4);
    const Scalar one(1.0, 0.0);
    Scalar rows[4][4] = {{one, one, one, one},
                         {one, -one, one, -one},
                         {one, q, -one, -q},
                         {one, -q, -one, q}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) h(i, j) = rows[i][j];
    return h;
}

namespace {

// Canonical form under row/column permutation and sign flips, by
// branch-and-bound over row orderings after sign normalization.
std::string hadamard_canonical_form(const ZMat& m) {
    const std::size_t n = m.rows();
    if (n > 8) throw BudgetError("hadamard equivalence limited to N <= 8");
    std::vector<std::string> candidates;
    // Normalize: flip columns so chosen first row is all ones, then flip
    // rows, then sort rows; try every row as the first one.
    for (std::size_t r0 = 0; r0 < n; ++r0) {
        ZMat w = m;
        for (std::size_t j = 0; j < n; ++j)
            if (w(r0, j) < 0)
                for (std::size_t i = 0; i < n; ++i) w(i, j) = -w(i, j);
        for (std::size_t i = 0; i < n; ++i)
            if (w(i, 0) < 0)
                for (std::size_t j = 0; j < n; ++j) w(i, j) = -w(i, j);
        // Sort columns lexicographically (by rows), then rows.
        std::vector<std::vector<int>> colv(n, std::vector<int>(n));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) colv[j][i] = static_cast<int>(w(i, j).get_si());
        std::sort(colv.begin(), colv.end());
        std::vector<std::vector<int>> rowv(n, std::vector<int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rowv[i][j] = colv[j][i];
        std::sort(rowv.begin(), rowv.end());
        std::string s;
        for (const auto& row : rowv)
            for (int v : row) s += (v > 0 ? '+' : '-');
        candidates.push_back(std::move(s));
    }
    return *std::min_element(candidates.begin(), candidates.end());
}

}  // namespace

bool hadamard_equivalent(const ZMat& a, const ZMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return hadamard_canonical_form(a) == hadamard_canonical_form(b);
}

bool hadamard_equivalent(const CMat& a, const CMat& b, double tol) {
    auto to_sign = [&](const CMat& m) {
        ZMat z(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (std::abs(m(i, j).imag()) > tol) throw DomainError("not a real sign matrix");
                z(i, j) = m(i, j).real() > 0 ? 1 : -1;
            }
        return z;
    };
    return hadamard_equivalent(to_sign(a), to_sign(b));
}

std::vector<std::vector<int>> circulant_hadamard_search(int n) {
    if (n < 1 || n > 28) throw BudgetError("circulant search budget is 1 <= N <= 28");
    std::vector<std::vector<int>> found;
    if (n > 2 && n % 4 != 0) return found;  // row orthogonality forces 4 | N
    if (n == 1) return {{1}, {-1}};

    // Gray-code walk over sign vectors with incremental autocorrelation
    // updates: c_k = sum_i g_i g_{i+k} must vanish for k = 1..N-1.
    std::vector<int> g(n, 1);
    const int half = n / 2;
    std::vector<long> corr(half + 1, 0);
    for (int k = 1; k <= half; ++k) {
        long s = 0;
        for (int i = 0; i < n; ++i) s += g[i] * g[(i + k) % n];
        corr[k] = s;
    }
    auto all_zero = [&]() {
        for (int k = 1; k <= half; ++k) {
            // c_{N-k} = c_k, so checking up to N/2 suffices; at k = N/2 the
            // sum double counts, and must vanish all the same.
            if (corr[k] != 0) return false;
        }
        return true;
    };
    auto flip = [&](int i) {
        // The terms at positions i and i-k are the only ones touching g_i.
        for (int k = 1; k <= half; ++k) {
            int up = g[(i + k) % n], dn = g[(i - k + n) % n];
            corr[k] -= 2L * g[i] * (up + dn);
        }
        g[i] = -g[i];
    };

    const std::uint64_t total = 1ULL << n;
    if (all_zero()) found.push_back(g);
    for (std::uint64_t it = 1; it < total; ++it) {
        int bit = __builtin_ctzll(it);
        flip(bit);
        if (all_zero()) found.push_back(g);
    }
    std::sort(found.begin(), found.end());
    return found;
}

BistochasticReport bistochastic_check(const CMat& m, double tol) {
    if (!m.square()) throw DomainError("bistochastic_check needs a square matrix");
    const std::size_t n = m.rows();
    BistochasticReport rep;
    rep.row_sums.resize(n, Scalar(0));
    rep.col_sums.resize(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rep.row_sums[i] += m(i, j);
            rep.col_sums[j] += m(i, j);
        }
    const double scale = 1.0 + max_abs(m) * static_cast<double>(n);
    Scalar lambda = rep.row_sums[0];
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
        if (std::abs(rep.row_sums[i] - lambda) > tol * scale) ok = false;
    for (std::size_t j = 0; j < n && ok; ++j)
        if (std::abs(rep.col_sums[j] - lambda) > tol * scale) ok = false;
    rep.is_bistochastic = ok;
    rep.has_common_sum = ok;
    if (ok) rep.common_sum = lambda;

    // Consistency with the unitary criterion: row stochastic with |l| = 1
    // forces bistochastic.
    if (unitarity_defect(m) <= tol * scale) {
        bool row_stochastic = true;
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(rep.row_sums[i] - rep.row_sums[0]) > tol * scale) row_stochastic = false;
        if (row_stochastic && std::abs(std::abs(rep.row_sums[0]) - 1.0) <= tol * scale && !ok)
            throw DomainError("unitary row-stochastic matrix failed the bistochastic cross-check");
    }
    return rep;
}

CMat k_matrix(std::size_t n) {
    CMat k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            k(i, j) = (i == j) ? Scalar((2.0 - static_cast<double>(n)) / static_cast<double>(n), 0)
                               : Scalar(2.0 / static_cast<double>(n), 0);
    return k;
}

CMat dephase(const CMat& h) {
    CMat d = h;
    const std::size_t n = h.rows();
    for (std::size_t j = 0; j < h.cols(); ++j) {
        Scalar ph = d(0, j);
        if (std::abs(ph) == 0.0) continue;
        ph /= std::abs(ph);
        for (std::size_t i = 0; i < n; ++i) d(i, j) *= std::conj(ph);
    }
    for (std::size_t i = 0; i < n; ++i) {
        Scalar ph = d(i, 0);
        if (std::abs(ph) == 0.0) continue;
        ph /= std::abs(ph);
        for (std::size_t j = 0; j < h.cols(); ++j) d(i, j) *= std::conj(ph);
    }
    return d;
}

std::string sign_matrix_to_text(const ZMat& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out += (m(i, j) > 0) ? '+' : '-';
        out += '\n';
    }
    return out;
}

ZMat sign_matrix_from_text(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) rows.push_back(line);
    }
    if (rows.empty()) throw DomainError("empty sign matrix");
    ZMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw DomainError("ragged sign matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            char c = rows[i][j];
            if (c != '+' && c != '-') throw DomainError("sign matrix entries must be + or -");
            m(i, j) = (c == '+') ? 1 : -1;
        }
    }
    return m;
}

}  // namespace advlin::structured

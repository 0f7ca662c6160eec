#include <doctest.h>

#include <cmath>

#include "advlin/det.hpp"
#include "advlin/rmt.hpp"
#include "advlin/spectra.hpp"
#include "advlin/structured.hpp"

using namespace advlin;
using namespace advlin::structured;

TEST_CASE("fourier matrices") {
    SUBCASE("N=1") {
        CMat f = fourier_matrix(1);
        CHECK(std::abs(f(0, 0) - Scalar(1)) < 1e-15);
    }
    SUBCASE("N=2 is the first walsh matrix") {
        CMat f = fourier_matrix(2);
        CHECK(std::abs(f(0, 0) - Scalar(1)) < 1e-14);
        CHECK(std::abs(f(0, 1) - Scalar(1)) < 1e-14);
        CHECK(std::abs(f(1, 0) - Scalar(1)) < 1e-14);
        CHECK(std::abs(f(1, 1) + Scalar(1)) < 1e-14);
    }
    SUBCASE("N=4 entries are fourth roots of unity") {
        CMat f = fourier_matrix(4);
        for (const auto& z : f.data()) {
            bool ok = std::abs(z - Scalar(1)) < 1e-12 || std::abs(z + Scalar(1)) < 1e-12 ||
                      std::abs(z - Scalar(0, 1)) < 1e-12 || std::abs(z + Scalar(0, 1)) < 1e-12;
            CHECK(ok);
        }
    }
    SUBCASE("F_N*F_N = N for N <= 64") {
        for (std::size_t n : {3, 8, 17, 64}) {
            CMat f = fourier_matrix(n);
            CMat g = adjoint(f) * f;
            for (std::size_t i = 0; i < n; ++i) g(i, i) -= static_cast<double>(n);
            CHECK(frobenius_norm(g) < 1e-12 * static_cast<double>(n) * std::sqrt(n));
        }
    }
}

TEST_CASE("group fourier") {
    SUBCASE("(2,2) is the second walsh matrix") {
        CMat w4 = group_fourier({2, 2});
        ZMat walsh2 = walsh(2);
        CHECK(frobenius_norm(w4 - to_cmat(walsh2)) < 1e-13);
    }
    SUBCASE("single factor reduces to the fourier matrix") {
        CHECK(frobenius_norm(group_fourier({5}) - fourier_matrix(5)) < 1e-14);
    }
    SUBCASE("(2,3) rescaled unitarity") {
        CMat f = group_fourier({2, 3});
        CHECK(unitarity_defect(f * Scalar(1.0 / std::sqrt(6.0), 0.0)) < 1e-12);
    }
}

TEST_CASE("circulant diagonalization") {
    SUBCASE("flat symbol") {
        auto d = circulant_diagonalize(std::vector<Scalar>(5, Scalar(1)));
        CHECK(std::abs(d.q[0] - Scalar(5)) < 1e-12);
        for (int i = 1; i < 5; ++i) CHECK(std::abs(d.q[i]) < 1e-12);
        CHECK(d.residual < 1e-12);
    }
    SUBCASE("delta symbol gives the identity") {
        std::vector<Scalar> xi(4, Scalar(0));
        xi[0] = 1.0;
        auto d = circulant_diagonalize(xi);
        for (auto q : d.q) CHECK(std::abs(q - Scalar(1)) < 1e-13);
        CHECK(frobenius_norm(circulant(xi) - CMat::identity(4)) < 1e-15);
    }
    SUBCASE("random symbol N=7") {
        rmt::Rng rng{61};
        std::vector<Scalar> xi(7);
        for (auto& x : xi) x = Scalar(rng.gauss(), rng.gauss());
        CHECK(circulant_diagonalize(xi).residual < 1e-10);
    }
    SUBCASE("circulant matrices commute") {
        rmt::Rng rng{62};
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Scalar> a(6), b(6);
            for (auto& x : a) x = Scalar(rng.gauss(), rng.gauss());
            for (auto& x : b) x = Scalar(rng.gauss(), rng.gauss());
            CMat ma = circulant(a), mb = circulant(b);
            CHECK(frobenius_norm(ma * mb - mb * ma) < 1e-10);
        }
    }
}

TEST_CASE("hadamard predicates") {
    CHECK(is_hadamard(walsh(1)));
    CHECK(is_hadamard(walsh(3)));
    CHECK_FALSE(is_hadamard(ZMat(4, 4, BigInt(1))));
    for (std::size_t n : {2, 3, 5, 8}) CHECK(is_hadamard(fourier_matrix(n), HadamardKind::complex));
    CHECK_FALSE(is_hadamard(CMat(3, 3, Scalar(1)), HadamardKind::complex));
}

TEST_CASE("hadamard determinant bound is saturated") {
    // |det H| = N^{N/2} exactly on the integer backend
    ZMat w = walsh(2);
    BigInt d = det(w);
    CHECK(abs(d) == 16);  // 4^{4/2}
    ZMat p = paley1(3);
    CHECK(abs(det(p)) == bigint_pow(BigInt(4), 2));
}

TEST_CASE("paley constructions") {
    SUBCASE("character matrix identities QQ^t = q1 - I, QI = IQ = 0") {
        for (long q : {3, 5, 7, 11, 13, 19, 23}) {
            ZMat qm = paley_character_matrix(q);
            ZMat qqt = qm * qm.transpose();
            for (long a = 0; a < q; ++a)
                for (long b = 0; b < q; ++b)
                    CHECK(qqt(a, b) == (a == b ? BigInt(q) - 1 : BigInt(-1)));
            for (long a = 0; a < q; ++a) {
                BigInt row = 0, col = 0;
                for (long b = 0; b < q; ++b) {
                    row += qm(a, b);
                    col += qm(b, a);
                }
                CHECK(row == 0);
                CHECK(col == 0);
            }
        }
    }
    SUBCASE("paley1 gives skew-symmetric hadamard matrices") {
        for (long q : {3, 7, 11, 19, 23}) {
            ZMat h = paley1(q);
            REQUIRE(h.rows() == static_cast<std::size_t>(q + 1));
            CHECK(is_hadamard(h));
            ZMat sym = h + h.transpose();
            for (std::size_t i = 0; i < h.rows(); ++i)
                for (std::size_t j = 0; j < h.cols(); ++j)
                    CHECK(sym(i, j) == (i == j ? BigInt(2) : BigInt(0)));
        }
    }
    SUBCASE("paley2 gives symmetric hadamard matrices") {
        for (long q : {5, 13}) {
            ZMat h = paley2(q);
            REQUIRE(h.rows() == static_cast<std::size_t>(2 * q + 2));
            CHECK(is_hadamard(h));
            CHECK(h == h.transpose());
        }
    }
    SUBCASE("wrong residue classes are refused") {
        CHECK_THROWS_AS(paley1(5), DomainError);
        CHECK_THROWS_AS(paley2(7), DomainError);
        CHECK_THROWS_AS(paley1(9), DomainError);  // not prime
    }
}

TEST_CASE("williamson assembly") {
    // K = 1: A = B = C = D = (1) gives the 4x4 construction
    std::vector<int> one{1};
    ZMat h = williamson(one, one, one, one);
    CHECK(is_hadamard(h));
    // K = 3 circulant symmetric symbols with A^2+B^2+C^2+D^2 = 12
    std::vector<int> a{1, 1, 1}, b{1, -1, -1}, c{1, -1, -1}, d{1, -1, -1};
    ZMat h3 = williamson(a, b, c, d);
    REQUIRE(h3.rows() == 12);
    CHECK(is_hadamard(h3));
    // violating quadruple is reported
    std::vector<int> bad{1, 1, -1};
    CHECK_THROWS_AS(williamson(a, bad, c, d), RefusalError);
}

TEST_CASE("f4q family") {
    SUBCASE("q=1 is equivalent to the walsh matrix") {
        CMat h = f4q_family(Scalar(1));
        CHECK(is_hadamard(h, HadamardKind::real));
        CHECK(hadamard_equivalent(h, to_cmat(walsh(2)), 1e-12));
    }
    SUBCASE("q=i and random phases stay hadamard") {
        CHECK(is_hadamard(f4q_family(Scalar(0, 1)), HadamardKind::complex));
        rmt::Rng rng{63};
        for (int trial = 0; trial < 10; ++trial) {
            Scalar q = std::polar(1.0, rng.uniform01() * 6.28);
            CHECK(is_hadamard(f4q_family(q), HadamardKind::complex));
        }
    }
    SUBCASE("|q| != 1 is refused") { CHECK_THROWS_AS(f4q_family(Scalar(2)), DomainError); }
}

TEST_CASE("circulant hadamard search") {
    SUBCASE("N=4 finds exactly the eight one-sign-out vectors") {
        auto found = circulant_hadamard_search(4);
        CHECK(found.size() == 8);
        for (const auto& g : found) {
            int sum = 0;
            for (int x : g) sum += x;
            CHECK(std::abs(sum) == 2);  // exactly one entry against the other three
        }
    }
    SUBCASE("N=8 comes back empty") { CHECK(circulant_hadamard_search(8).empty()); }
    SUBCASE("non-multiples of four are trivially empty") {
        CHECK(circulant_hadamard_search(6).empty());
        CHECK(circulant_hadamard_search(2).empty());
    }
    SUBCASE("N=1 has both signs") { CHECK(circulant_hadamard_search(1).size() == 2); }
    SUBCASE("budget enforced") { CHECK_THROWS_AS(circulant_hadamard_search(29), BudgetError); }
}

TEST_CASE("bistochastic checks") {
    SUBCASE("flat projection") {
        CMat p(4, 4, Scalar(0.25, 0.0));
        auto rep = bistochastic_check(p);
        CHECK(rep.is_bistochastic);
        CHECK(std::abs(rep.common_sum - Scalar(1)) < 1e-12);
    }
    SUBCASE("K_N is orthogonal bistochastic with sum one") {
        CMat k = k_matrix(6);
        CHECK(unitarity_defect(k) < 1e-12);
        auto rep = bistochastic_check(k);
        CHECK(rep.is_bistochastic);
        CHECK(std::abs(rep.common_sum - Scalar(1)) < 1e-12);
        // K_N fixes the all-one vector
        CMat xi(6, 1, Scalar(1));
        CHECK(frobenius_norm(k * xi - xi) < 1e-12);
    }
    SUBCASE("diag(1,2) is not bistochastic") {
        CMat d(2, 2);
        d(0, 0) = 1.0;
        d(1, 1) = 2.0;
        CHECK_FALSE(bistochastic_check(d).is_bistochastic);
    }
}

TEST_CASE("sign matrix text round trip") {
    ZMat w = walsh(2);
    ZMat back = sign_matrix_from_text(sign_matrix_to_text(w));
    CHECK(back == w);
}

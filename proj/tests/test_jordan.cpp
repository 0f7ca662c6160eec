#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "advlin/det.hpp"
#include "advlin/jordan.hpp"
#include "advlin/rmt.hpp"
#include "advlin/spectra.hpp"

using namespace advlin;

namespace {

// Random integer matrix with small determinant, invertible.
ZMat random_unimodularish(int n, rmt::Rng& rng) {
    while (true) {
        ZMat p(n, n);
        for (auto& e : p.data()) e = static_cast<long>(rng.bounded(5)) - 2;
        BigInt d = det(p);
        if (d != 0 && abs(d) <= 1000000) return p;
    }
}

CMat conjugate_blocks(const std::vector<std::pair<double, int>>& blocks, const ZMat& p) {
    int n = 0;
    for (auto& [l, s] : blocks) n += s;
    jordan::JordanForm jf;
    for (auto& [l, s] : blocks) jf.blocks.emplace_back(Scalar(l, 0.0), s);
    CMat j = jf.assemble();
    CMat pc = to_cmat(p);
    return pc * j * inverse(pc);
}

std::multiset<std::pair<double, int>> block_multiset(const jordan::JordanForm& jf) {
    std::multiset<std::pair<double, int>> out;
    for (auto& [l, s] : jf.blocks) out.insert({std::round(l.real() * 1e6) / 1e6, s});
    return out;
}

}  // namespace

TEST_CASE("companion matrices") {
    SUBCASE("x^2 - 1") {
        poly::Poly p({Scalar(-1), Scalar(0), Scalar(1)});
        CMat c = jordan::companion(p);
        CMat want{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
        CHECK(frobenius_norm(c - want) < 1e-15);
    }
    SUBCASE("x^2") {
        poly::ZPoly p({BigInt(0), BigInt(0), BigInt(1)});
        ZMat c = jordan::companion(p);
        CHECK(c == ZMat{{BigInt(0), BigInt(0)}, {BigInt(1), BigInt(0)}});
    }
    SUBCASE("x^3 + 2x + 5 last column") {
        poly::ZPoly p({BigInt(5), BigInt(2), BigInt(0), BigInt(1)});
        ZMat c = jordan::companion(p);
        CHECK(c(0, 2) == -5);
        CHECK(c(1, 2) == -2);
        CHECK(c(2, 2) == 0);
        CHECK(c(1, 0) == 1);
        CHECK(c(2, 1) == 1);
    }
    SUBCASE("char_poly(companion(P)) = +-P") {
        poly::ZPoly p({BigInt(7), BigInt(-3), BigInt(2), BigInt(1)});
        poly::ZPoly cp = poly::char_poly(jordan::companion(p));
        // degree 3: det(A - x) = -P(x)
        REQUIRE(cp.c.size() == p.c.size());
        for (std::size_t i = 0; i < p.c.size(); ++i) CHECK(cp.c[i] == -p.c[i]);
    }
    SUBCASE("non-monic refused") {
        poly::ZPoly p({BigInt(1), BigInt(2)});
        CHECK_THROWS_AS(jordan::companion(p), DomainError);
    }
    SUBCASE("squarefree companion is diagonalizable") {
        // roots 1, -1, 2 distinct
        poly::Poly p({Scalar(2), Scalar(-1), Scalar(-2), Scalar(1)});
        auto d = spectra::eigen(jordan::companion(p), spectra::EigenKind::general);
        CHECK(d.values.size() == 3);
    }
}

TEST_CASE("jordan_form structure recovery") {
    SUBCASE("nilpotent cell") {
        CMat j{{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}};
        auto jf = jordan::jordan_form(j);
        REQUIRE(jf.blocks.size() == 1);
        CHECK(jf.blocks[0].second == 2);
        CHECK(std::abs(jf.blocks[0].first) < 1e-8);
        CHECK(jf.residual < 1e-10);
    }
    SUBCASE("diagonalizable input gives all blocks of size one") {
        rmt::Rng rng{51};
        CMat a(4, 4);
        for (std::size_t i = 0; i < 4; ++i) a(i, i) = Scalar(static_cast<double>(i), 0.0);
        auto jf = jordan::jordan_form(a);
        CHECK(jf.blocks.size() == 4);
        for (auto& [l, s] : jf.blocks) CHECK(s == 1);
    }
    SUBCASE("constructed J2(3)+J1(3)+J1(-1) recovered") {
        rmt::Rng rng{52};
        ZMat p = random_unimodularish(4, rng);
        CMat a = conjugate_blocks({{3.0, 2}, {3.0, 1}, {-1.0, 1}}, p);
        auto jf = jordan::jordan_form(a);
        auto got = block_multiset(jf);
        std::multiset<std::pair<double, int>> want{{3.0, 2}, {3.0, 1}, {-1.0, 1}};
        CHECK(got == want);
        CHECK(jf.residual < 1e-8);
    }
    SUBCASE("random construct-recover across shapes") {
        rmt::Rng rng{53};
        std::vector<std::vector<std::pair<double, int>>> shapes{
            {{2.0, 3}, {2.0, 1}, {-1.0, 2}},
            {{0.0, 2}, {1.0, 2}, {5.0, 1}},
            {{1.0, 4}},
            {{-2.0, 1}, {3.0, 1}, {7.0, 2}},
        };
        for (const auto& shape : shapes) {
            int n = 0;
            for (auto& [l, s] : shape) n += s;
            ZMat p = random_unimodularish(n, rng);
            CMat a = conjugate_blocks(shape, p);
            auto jf = jordan::jordan_form(a);
            std::multiset<std::pair<double, int>> want(shape.begin(), shape.end());
            CHECK(block_multiset(jf) == want);
            CHECK(jf.residual < 1e-8);
        }
    }
    SUBCASE("ill-separated clusters refused") {
        CMat a(2, 2);
        a(0, 0) = 1.0;
        a(1, 1) = 1.0 + 3e-6;
        CHECK_THROWS_AS(jordan::jordan_form(a, 1e-6), RefusalError);
    }
}

TEST_CASE("block sizes tally with multiplicities") {
    rmt::Rng rng{54};
    ZMat p = random_unimodularish(5, rng);
    CMat a = conjugate_blocks({{2.0, 2}, {2.0, 2}, {0.0, 1}}, p);
    auto jf = jordan::jordan_form(a);
    // sum of sizes at 2 = algebraic multiplicity 4; block count = geometric dim
    int alg = 0, cnt = 0;
    for (auto& [l, s] : jf.blocks)
        if (std::abs(l - Scalar(2.0)) < 1e-6) {
            alg += s;
            ++cnt;
        }
    CHECK(alg == 4);
    auto sv = spectra::svd(a - 2.0 * CMat::identity(5)).singulars;
    int kerdim = 0;
    for (double s : sv)
        if (s < 1e-8 * sv[0]) ++kerdim;
    CHECK(cnt == kerdim);
}

TEST_CASE("jordan exponential") {
    SUBCASE("nilpotent 3x3 block") {
        jordan::JordanForm jf;
        jf.blocks.emplace_back(Scalar(0), 3);
        jf.passage = CMat::identity(3);
        CMat e = jordan::jordan_expm(jf);
        CHECK(e(0, 0).real() == doctest::Approx(1.0));
        CHECK(e(0, 1).real() == doctest::Approx(1.0));
        CHECK(e(0, 2).real() == doctest::Approx(0.5));
        CHECK(e(1, 2).real() == doctest::Approx(1.0));
        CHECK(std::abs(e(1, 0)) + std::abs(e(2, 0)) + std::abs(e(2, 1)) < 1e-14);
    }
    SUBCASE("single cell is e^lambda") {
        jordan::JordanForm jf;
        jf.blocks.emplace_back(Scalar(1.5, 0.5), 1);
        jf.passage = CMat::identity(1);
        CHECK(std::abs(jordan::jordan_expm(jf)(0, 0) - std::exp(Scalar(1.5, 0.5))) < 1e-14);
    }
    SUBCASE("agrees with the series exponential") {
        rmt::Rng rng{55};
        ZMat p = random_unimodularish(4, rng);
        CMat a = conjugate_blocks({{1.0, 2}, {-1.0, 2}}, p);
        auto jf = jordan::jordan_form(a);
        CHECK(frobenius_norm(jordan::jordan_expm(jf) - spectra::expm(a)) < 1e-8);
    }
}

TEST_CASE("cayley-hamilton") {
    CHECK(jordan::cayley_hamilton_residual(CMat::identity(3)) < 1e-12);
    rmt::Rng rng{56};
    SUBCASE("exactly zero on the integer backend") {
        for (int trial = 0; trial < 10; ++trial) {
            ZMat a(3, 3);
            for (auto& e : a.data()) e = static_cast<long>(rng.bounded(11)) - 5;
            CHECK(jordan::cayley_hamilton_residual(a) == 0);
        }
    }
    SUBCASE("small relative residual on random float 6x6") {
        for (int trial = 0; trial < 10; ++trial) {
            CMat a(6, 6);
            for (auto& e : a.data()) e = Scalar(rng.gauss(), rng.gauss());
            double scale = std::pow(1.0 + frobenius_norm(a), 6);
            CHECK(jordan::cayley_hamilton_residual(a) < 1e-6 * scale);
        }
    }
}

TEST_CASE("char poly of a block assembly is the product over blocks") {
    poly::ZPoly p1({BigInt(3), BigInt(1), BigInt(1)});      // x^2+x+3
    poly::ZPoly p2({BigInt(-2), BigInt(0), BigInt(1)});     // x^2-2
    ZMat c1 = jordan::companion(p1), c2 = jordan::companion(p2);
    ZMat blk(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            blk(i, j) = c1(i, j);
            blk(2 + i, 2 + j) = c2(i, j);
        }
    poly::ZPoly whole = poly::char_poly(blk);
    poly::ZPoly prod = poly::char_poly(c1) * poly::char_poly(c2);
    REQUIRE(whole.c.size() == prod.c.size());
    for (std::size_t i = 0; i < whole.c.size(); ++i) CHECK(whole.c[i] == prod.c[i]);
}

namespace {

// Unimodular integer matrix from random elementary operations.
ZMat random_unimodular(int n, rmt::Rng& rng) {
    ZMat p = ZMat::identity(n);
    for (int step = 0; step < 4 * n; ++step) {
        int i = static_cast<int>(rng.bounded(n)), j = static_cast<int>(rng.bounded(n));
        if (i == j) continue;
        long f = static_cast<long>(rng.bounded(5)) - 2;
        for (int c = 0; c < n; ++c) p(i, c) += BigInt(f) * p(j, c);
    }
    return p;
}

}  // namespace

TEST_CASE("exact jordan form on integer-spectrum matrices") {
    rmt::Rng rng{57};
    ZMat p = random_unimodular(4, rng);
    // assemble J2(3) + J1(3) + J1(-1) over the integers
    ZMat j(4, 4);
    j(0, 0) = 3;
    j(0, 1) = 1;
    j(1, 1) = 3;
    j(2, 2) = 3;
    j(3, 3) = -1;
    QMat aq = to_qmat(p) * to_qmat(j) * inverse_exact(to_qmat(p));
    ZMat az(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            REQUIRE(aq(r, c).get_den() == 1);  // unimodular conjugation stays integral
            az(r, c) = aq(r, c).get_num();
        }
    auto jf = jordan::jordan_form_exact(az);
    std::multiset<std::pair<long, int>> got, want{{3, 2}, {3, 1}, {-1, 1}};
    for (auto& [l, s] : jf.blocks) got.insert({static_cast<long>(l.get_num().get_si()), s});
    CHECK(got == want);
    // exact reconstruction
    QMat jj(4, 4);
    int at = 0;
    for (auto& [l, s] : jf.blocks) {
        for (int i = 0; i < s; ++i) {
            jj(at + i, at + i) = l;
            if (i + 1 < s) jj(at + i, at + i + 1) = 1;
        }
        at += s;
    }
    QMat recon = jf.passage * jj * inverse_exact(jf.passage);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) CHECK(recon(r, c) == BigRat(az(r, c)));
}

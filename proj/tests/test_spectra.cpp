#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "advlin/poly.hpp"
#include "advlin/rmt.hpp"
#include "advlin/spectra.hpp"
#include "advlin/structured.hpp"

using namespace advlin;
using spectra::EigenKind;

namespace {

CMat random_cmat(std::size_t r, std::size_t c, rmt::Rng& rng) {
    CMat m(r, c);
    for (auto& e : m.data()) e = Scalar(rng.gauss(), rng.gauss());
    return m;
}

CMat random_hermitian(std::size_t n, rmt::Rng& rng) {
    CMat a = random_cmat(n, n, rng);
    return a + adjoint(a);
}

CMat flat_matrix(std::size_t n) { return CMat(n, n, Scalar(1.0, 0.0)); }

}  // namespace

TEST_CASE("hermitian eigen: real values, unitary passage, reconstruction") {
    rmt::Rng rng{31};
    for (std::size_t n : {2, 5, 9}) {
        CMat a = random_hermitian(n, rng);
        auto d = spectra::eigen(a, EigenKind::hermitian);
        CHECK(unitarity_defect(d.passage) < 1e-10);
        CMat lam(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(d.values[i].imag()) < 1e-10);
            lam(i, i) = d.values[i];
        }
        CHECK(frobenius_norm(d.passage * lam * adjoint(d.passage) - a) < 1e-9);
    }
}

TEST_CASE("tridiagonal path agrees with jacobi") {
    rmt::Rng rng{32};
    CMat a = random_hermitian(60, rng);  // above the jacobi size limit
    auto vals = spectra::hermitian_eigenvalues(a);
    auto [v2, vecs] = spectra::hermitian_eigen(a);
    CHECK(unitarity_defect(vecs) < 1e-9);
    CMat lam(60, 60);
    for (std::size_t i = 0; i < 60; ++i) lam(i, i) = v2[i];
    CHECK(frobenius_norm(vecs * lam * adjoint(vecs) - a) < 1e-8);
    for (std::size_t i = 0; i < 60; ++i) CHECK(vals[i] == doctest::Approx(v2[i]).epsilon(1e-10));
}

TEST_CASE("rotation matrix eigenvalues are e^{+-it}") {
    double t = 0.7;
    CMat r{{Scalar(std::cos(t)), Scalar(-std::sin(t))}, {Scalar(std::sin(t)), Scalar(std::cos(t))}};
    auto d = spectra::eigen(r, EigenKind::normal);
    std::vector<Scalar> want{std::polar(1.0, -t), std::polar(1.0, t)};
    for (auto w : want) {
        double best = 1e9;
        for (auto v : d.values) best = std::min(best, std::abs(v - w));
        CHECK(best < 1e-10);
    }
    CHECK(unitarity_defect(d.passage) < 1e-10);
}

TEST_CASE("flat matrix spectrum is (N, 0, ..., 0)") {
    auto d = spectra::eigen(flat_matrix(6), EigenKind::hermitian);
    std::vector<double> got;
    for (auto v : d.values) got.push_back(v.real());
    std::sort(got.begin(), got.end());
    for (std::size_t i = 0; i + 1 < 6; ++i) CHECK(std::abs(got[i]) < 1e-10);
    CHECK(got[5] == doctest::Approx(6.0));
}

TEST_CASE("simplex adjacency spectrum is (N-1, -1, ..., -1)") {
    const std::size_t n = 7;
    CMat a = flat_matrix(n) - CMat::identity(n);
    auto vals = spectra::hermitian_eigenvalues(a);
    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(vals[i] == doctest::Approx(-1.0));
    CHECK(vals[n - 1] == doctest::Approx(static_cast<double>(n - 1)));
}

TEST_CASE("general eigen reports defective input") {
    CMat j{{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}};
    CHECK_THROWS_WITH_AS(spectra::eigen(j, EigenKind::general), doctest::Contains("defective"),
                         RefusalError);
}

TEST_CASE("unitary spectra sit on the circle") {
    rmt::Rng rng{33};
    for (int trial = 0; trial < 10; ++trial) {
        CMat u = rmt::haar_orthogonal(6, rng);
        for (auto v : spectra::eigenvalues(u)) CHECK(std::abs(std::abs(v) - 1.0) < 1e-10);
    }
}

TEST_CASE("matrix_law") {
    SUBCASE("diag(1,1,0)") {
        CMat d(3, 3);
        d(0, 0) = 1.0;
        d(1, 1) = 1.0;
        auto law = spectra::matrix_law(d);
        REQUIRE(law.atoms.size() == 2);
        CHECK(std::abs(law.atoms[0].first) < 1e-12);
        CHECK(law.atoms[0].second == doctest::Approx(1.0 / 3.0));
        CHECK(std::abs(law.atoms[1].first - Scalar(1)) < 1e-12);
        CHECK(law.atoms[1].second == doctest::Approx(2.0 / 3.0));
    }
    SUBCASE("identity is a Dirac mass") {
        auto law = spectra::matrix_law(CMat::identity(4));
        REQUIRE(law.atoms.size() == 1);
        CHECK(law.atoms[0].second == doctest::Approx(1.0));
    }
    SUBCASE("unitary circulant has atoms on the circle") {
        std::vector<Scalar> q(5);
        for (int i = 0; i < 5; ++i) q[i] = std::polar(1.0, 0.3 + 0.9 * i);
        CMat f = structured::fourier_matrix(5);
        CMat diag(5, 5);
        for (int i = 0; i < 5; ++i) diag(i, i) = q[i];
        CMat u = f * diag * adjoint(f);
        u *= Scalar(1.0 / 5.0, 0.0);
        auto law = spectra::matrix_law(u);
        for (auto [loc, w] : law.atoms) CHECK(std::abs(std::abs(loc) - 1.0) < 1e-10);
    }
    SUBCASE("non-normal input refused") {
        CMat j{{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}};
        CHECK_THROWS_AS(spectra::matrix_law(j), DomainError);
    }
    SUBCASE("moments are normalized power traces") {
        rmt::Rng rng{34};
        CMat a = random_hermitian(5, rng);
        auto law = spectra::matrix_law(a);
        CMat p = CMat::identity(5);
        for (int k = 1; k <= 6; ++k) {
            p = p * a;
            CHECK(std::abs(law.moment(k) - p.trace() / 5.0) < 1e-8 * (1.0 + std::abs(p.trace())));
        }
    }
}

TEST_CASE("funcalc") {
    rmt::Rng rng{35};
    CMat a = random_hermitian(2, rng);
    SUBCASE("identity function") {
        CMat b = spectra::funcalc(a, [](Scalar z) { return z; });
        CHECK(frobenius_norm(b - a) < 1e-10);
    }
    SUBCASE("square matches direct product") {
        CMat b = spectra::funcalc(a, [](Scalar z) { return z * z; });
        CHECK(frobenius_norm(b - a * a) < 1e-9);
    }
    SUBCASE("sqrt of A*A reproduces the modulus") {
        CMat m = random_cmat(3, 3, rng);
        CMat aa = adjoint(m) * m;
        CMat root = spectra::funcalc(aa, [](Scalar z) { return csqrt(z); });
        CHECK(frobenius_norm(root - spectra::polar(m).modulus) < 1e-8);
    }
    SUBCASE("inversion at a null eigenvalue is refused") {
        CMat d(2, 2);
        d(0, 0) = 1.0;
        CHECK_THROWS_AS(spectra::funcalc(d, [](Scalar z) { return 1.0 / z; }), DomainError);
    }
}

TEST_CASE("polar decomposition") {
    SUBCASE("positive diagonal gives identity isometry") {
        CMat d(2, 2);
        d(0, 0) = 2.0;
        d(1, 1) = 3.0;
        auto p = spectra::polar(d);
        CHECK(frobenius_norm(p.isometry - CMat::identity(2)) < 1e-12);
    }
    SUBCASE("nilpotent jordan cell") {
        CMat j{{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}};
        auto p = spectra::polar(j);
        CMat want(2, 2);
        want(1, 1) = 1.0;
        CHECK(frobenius_norm(p.modulus - want) < 1e-12);
        CHECK(frobenius_norm(p.isometry * p.modulus - j) < 1e-12);
        // U*U is a projection
        CMat uu = adjoint(p.isometry) * p.isometry;
        CHECK(frobenius_norm(uu * uu - uu) < 1e-12);
    }
    SUBCASE("random invertible input: unitary factor, tight reconstruction") {
        rmt::Rng rng{36};
        for (int trial = 0; trial < 20; ++trial) {
            CMat a = random_cmat(4, 4, rng);
            auto p = spectra::polar(a);
            CHECK(frobenius_norm(p.isometry * p.modulus - a) < 1e-10);
            CHECK(unitarity_defect(p.isometry) < 1e-10);
            CHECK(frobenius_norm(p.modulus * p.modulus - adjoint(a) * a) < 1e-8);
        }
    }
}

TEST_CASE("svd") {
    SUBCASE("diag(3,-2) has singulars (3,2)") {
        CMat d(2, 2);
        d(0, 0) = 3.0;
        d(1, 1) = -2.0;
        auto s = spectra::svd(d);
        CHECK(s.singulars[0] == doctest::Approx(3.0));
        CHECK(s.singulars[1] == doctest::Approx(2.0));
    }
    SUBCASE("unitary input has unit singulars") {
        rmt::Rng rng{37};
        CMat u = rmt::haar_orthogonal(5, rng);
        for (double s : spectra::svd(u).singulars) CHECK(s == doctest::Approx(1.0));
    }
    SUBCASE("random rectangular reconstruction") {
        rmt::Rng rng{38};
        for (int trial = 0; trial < 20; ++trial) {
            CMat a = random_cmat(3, 5, rng);
            auto s = spectra::svd(a);
            CHECK(unitarity_defect(s.left) < 1e-11);
            CHECK(unitarity_defect(s.right) < 1e-11);
            CHECK(frobenius_norm(s.reconstruct() - a) < 1e-10);
            CHECK(std::is_sorted(s.singulars.rbegin(), s.singulars.rend()));
        }
    }
    SUBCASE("singular values are the eigenvalues of the modulus") {
        rmt::Rng rng{39};
        CMat a = random_cmat(4, 4, rng);
        auto s = spectra::svd(a);
        auto mod_eigs = spectra::hermitian_eigenvalues(spectra::polar(a).modulus);
        std::sort(mod_eigs.rbegin(), mod_eigs.rend());
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(s.singulars[i] == doctest::Approx(mod_eigs[i]).epsilon(1e-8));
    }
}

TEST_CASE("expm") {
    SUBCASE("expm(0) = 1") {
        CHECK(frobenius_norm(spectra::expm(CMat(3, 3)) - CMat::identity(3)) < 1e-14);
    }
    SUBCASE("nilpotent cell") {
        CMat j{{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}};
        CMat want{{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}};
        CHECK(frobenius_norm(spectra::expm(j) - want) < 1e-14);
    }
    SUBCASE("symmetry exponential in cosh/sinh") {
        CMat s{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
        CMat e = spectra::expm(s);
        CHECK(e(0, 0).real() == doctest::Approx(std::cosh(1.0)));
        CHECK(e(0, 1).real() == doctest::Approx(std::sinh(1.0)));
        CHECK(e(1, 0).real() == doctest::Approx(std::sinh(1.0)));
        CHECK(e(1, 1).real() == doctest::Approx(std::cosh(1.0)));
    }
    SUBCASE("additivity for commuting pairs, counterexample for J, J*") {
        rmt::Rng rng{40};
        CMat a = random_cmat(4, 4, rng);
        CMat b = 0.5 * a * a + 2.0 * a;  // commutes with a
        CHECK(frobenius_norm(spectra::expm(a + b) - spectra::expm(a) * spectra::expm(b)) < 1e-8);
        CMat j{{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}};
        CMat js = adjoint(j);
        double gap = frobenius_norm(spectra::expm(j + js) - spectra::expm(j) * spectra::expm(js));
        CHECK(gap > 0.1);
    }
    SUBCASE("det(e^A) = e^{Tr A}") {
        rmt::Rng rng{41};
        for (int trial = 0; trial < 20; ++trial) {
            CMat a(6, 6);
            for (auto& e : a.data()) e = Scalar(2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0);
            Scalar lhs = det(spectra::expm(a));
            Scalar rhs = std::exp(a.trace());
            CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
        }
    }
}

TEST_CASE("positivity classes") {
    rmt::Rng rng{42};
    CMat c = random_cmat(4, 4, rng);
    auto cls = spectra::positivity_class(c * adjoint(c));
    bool ok = cls == spectra::PositivityClass::positive ||
              cls == spectra::PositivityClass::strictly_positive;
    CHECK(ok);
    // rank-deficient gram matrix is positive but not strictly
    CMat rect = random_cmat(4, 2, rng);
    CHECK(spectra::positivity_class(rect * adjoint(rect)) == spectra::PositivityClass::positive);
    CHECK(spectra::positivity_class(CMat::identity(3)) == spectra::PositivityClass::strictly_positive);
    CMat ind(2, 2);
    ind(0, 0) = 1.0;
    ind(1, 1) = -1.0;
    CHECK(spectra::positivity_class(ind) == spectra::PositivityClass::indefinite);
    CHECK(spectra::positivity_class(c) == spectra::PositivityClass::not_selfadjoint);
}

TEST_CASE("inertia") {
    CHECK(spectra::inertia(CMat::identity(4)).n_plus == 4);
    CMat d(3, 3);
    d(0, 0) = 2.0;
    d(1, 1) = -3.0;
    auto i = spectra::inertia(d);
    CHECK(i.n_plus == 1);
    CHECK(i.n_minus == 1);
    CHECK(i.n_zero == 1);
    rmt::Rng rng{43};
    CMat c(4, 4);
    for (auto& e : c.data()) e = Scalar(rng.gauss(), 0.0);
    auto g = spectra::inertia(c.transpose() * c);
    CHECK(g.n_plus == 4);
    CHECK_THROWS_AS(spectra::inertia(random_cmat(3, 3, rng)), DomainError);
}

TEST_CASE("perturbation by a generic diagonal separates eigenvalues") {
    CMat j{{Scalar(0), Scalar(1), Scalar(0)},
           {Scalar(0), Scalar(0), Scalar(1)},
           {Scalar(0), Scalar(0), Scalar(0)}};
    const double eps = 1e-3;
    CMat p = j;
    for (std::size_t i = 0; i < 3; ++i) p(i, i) += eps * static_cast<double>(i + 1);
    poly::Poly cp = poly::char_poly(p);
    CHECK(std::abs(poly::discriminant(cp)) > 1e-18);
}

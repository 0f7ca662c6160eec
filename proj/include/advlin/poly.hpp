#pragma once

#include <array>
#include <vector>

#include "advlin/det.hpp"
#include "advlin/matrix.hpp"

namespace advlin::poly {

// Univariate polynomial, coefficients ascending by degree.
template <typename T>
struct PolyT {
    std::vector<T> c;

    PolyT() : c{T(0)} {}
    explicit PolyT(std::vector<T> coeffs) : c(std::move(coeffs)) {
        if (c.empty()) c.push_back(T(0));
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const {
        for (const auto& x : c)
            if (!(x == T(0))) return false;
        return true;
    }

    T eval(const T& x) const {
        T r(0);
        for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    PolyT derivative() const {
        if (c.size() <= 1) return PolyT();
        std::vector<T> d(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * T(static_cast<long>(i));
        return PolyT(std::move(d));
    }

    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        std::vector<T> r(a.c.size() + b.c.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return PolyT(std::move(r));
    }

    friend PolyT operator+(const PolyT& a, const PolyT& b) {
        std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return PolyT(std::move(r));
    }
};

using Poly = PolyT<Scalar>;
using ZPoly = PolyT<BigInt>;
using QPoly = PolyT<BigRat>;

// Strips exactly-zero leading coefficients (exact backends only).
ZPoly trim(const ZPoly& p);
QPoly trim(const QPoly& p);

// Sylvester matrix of size deg p + deg q; p's coefficient columns first.
template <typename T>
Matrix<T> sylvester_matrix(const PolyT<T>& p, const PolyT<T>& q);

template <typename T>
T resultant(const PolyT<T>& p, const PolyT<T>& q);

template <typename T>
T discriminant(const PolyT<T>& p);

// Closed forms, used as the independent route against the resultant path.
template <typename T>
T discriminant_quadratic(const T& a, const T& b, const T& c);
template <typename T>
T discriminant_cubic(const T& a, const T& b, const T& c, const T& d);

// Number of real roots for nondegenerate real polynomials of degree 2..4.
struct RootClass {
    int degree = 0;
    int real_roots = 0;
    double discriminant_value = 0.0;
};
RootClass classify_real_roots(const std::vector<double>& ascending_coeffs, double tol);

// Roots of x^2 + bx + c.
std::array<Scalar, 2> solve_quadratic_monic(Scalar b, Scalar c);

// Roots of x^3 + 3 p x + 2 q.
std::array<Scalar, 3> solve_cubic(Scalar p, Scalar q);

// Roots of x^4 + 6 p x^2 + 4 q x + 3 r.
std::array<Scalar, 4> solve_quartic(Scalar p, Scalar q, Scalar r);

// Coefficients of det(A - x 1).
Poly char_poly(const CMat& m);
ZPoly char_poly(const ZMat& m);
QPoly char_poly(const QMat& m);

// All roots with multiplicity, via the companion matrix.
std::vector<Scalar> roots(const Poly& p);

// Multiplicity report: clusters roots at the given relative tolerance.
std::vector<std::pair<Scalar, int>> cluster_roots(const std::vector<Scalar>& rts,
                                                  double rel_tol = 1e-6);

}  // namespace advlin::poly

#pragma once

#include <utility>
#include <vector>

#include "advlin/matrix.hpp"
#include "advlin/poly.hpp"

namespace advlin::jordan {

struct JordanForm {
    std::vector<std::pair<Scalar, int>> blocks;  // (eigenvalue, size)
    CMat passage;                                // A = P J P^{-1}
    double residual = 0.0;

    CMat assemble() const;  // block-diagonal J
};

// Subdiagonal of ones, last column of negated coefficients.
template <typename T>
Matrix<T> companion(const poly::PolyT<T>& p);

extern template Matrix<Scalar> companion(const poly::PolyT<Scalar>&);
extern template Matrix<BigInt> companion(const poly::PolyT<BigInt>&);
extern template Matrix<BigRat> companion(const poly::PolyT<BigRat>&);

// Numerical Jordan form: eigenvalue clustering, rank sequences of
// (A - lambda)^j, generalized-eigenvector chains. Refuses when clusters
// are separated by less than 10 * cluster_tol.
JordanForm jordan_form(const CMat& m, double cluster_tol = 0.0);

// Exact path for integer matrices with rational (hence integer) spectrum.
struct ExactJordanForm {
    std::vector<std::pair<BigRat, int>> blocks;
    QMat passage;
};
ExactJordanForm jordan_form_exact(const ZMat& m);

// e^{P J P^{-1}} through the closed form of the Jordan block exponential.
CMat jordan_expm(const JordanForm& jf);

// ||P_A(A)|| with P_A the characteristic polynomial.
double cayley_hamilton_residual(const CMat& m);

// Exactly zero on the exact backend.
BigInt cayley_hamilton_residual(const ZMat& m);

}  // namespace advlin::jordan

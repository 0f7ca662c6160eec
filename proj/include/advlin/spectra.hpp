#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "advlin/matrix.hpp"

namespace advlin::spectra {

enum class EigenKind { general, hermitian, normal };

struct EigenDecomp {
    std::vector<Scalar> values;
    CMat passage;  // columns are eigenvectors
    EigenKind kind = EigenKind::general;
};

// Weighted atoms on C; weights sum to 1.
struct AtomicLaw {
    std::vector<std::pair<Scalar, double>> atoms;

    Scalar moment(int k) const;
    // Colored moment: word over {false = z, true = conj(z)}.
    Scalar colored_moment(const std::vector<bool>& word) const;
};

struct PolarDecomp {
    CMat isometry;  // partial isometry U with U |A| = A
    CMat modulus;   // |A| = sqrt(A*A), positive semidefinite
};

struct SVDDecomp {
    CMat left;
    std::vector<double> singulars;  // descending, nonnegative
    CMat right;

    CMat reconstruct() const;
};

enum class PositivityClass { not_selfadjoint, indefinite, positive, strictly_positive };

struct Inertia {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
};

// Eigenvalues and orthonormal eigenvectors of a hermitian matrix,
// ascending. Jacobi rotations at small sizes, Householder tridiagonal
// reduction plus implicit-shift QL above that.
std::pair<std::vector<double>, CMat> hermitian_eigen(const CMat& m, bool want_vectors = true);

std::vector<double> hermitian_eigenvalues(const CMat& m);

// Eigenvalues only, via the Schur form.
std::vector<Scalar> eigenvalues(const CMat& m);

// Full decomposition. The hermitian hint requires ||A-A*|| <= tol, the
// normal hint ||AA*-A*A|| <= tol; the general path throws RefusalError
// with a "defective" message when an eigenvector basis does not exist.
EigenDecomp eigen(const CMat& m, EigenKind kind = EigenKind::general, double tol = kDefaultTol);

AtomicLaw matrix_law(const CMat& m, double tol = kDefaultTol, double merge_tol = 1e-8);

CMat funcalc(const CMat& m, const std::function<Scalar(Scalar)>& f, double tol = kDefaultTol);

PolarDecomp polar(const CMat& m, double tol = kDefaultTol);

SVDDecomp svd(const CMat& m);

CMat expm(const CMat& m);

PositivityClass positivity_class(const CMat& m, double tol = kDefaultTol);

Inertia inertia(const CMat& m, double tol = kDefaultTol);

}  // namespace advlin::spectra

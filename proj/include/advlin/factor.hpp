#pragma once

#include "advlin/matrix.hpp"
#include "advlin/perm.hpp"

namespace advlin::factor {

struct PLUDecomp {
    Perm perm;   // perm_matrix(perm) * A = lower * upper
    CMat lower;  // unit lower triangular
    CMat upper;
};

struct LDUDecomp {
    CMat lower;  // unit lower triangular
    CMat diag;
    CMat upper;  // unit upper triangular
};

struct QRDecomp {
    CMat q;  // square unitary
    CMat r;  // upper triangular, real nonnegative diagonal
};

struct SchurDecomp {
    CMat q;  // unitary
    CMat t;  // upper triangular, eigenvalues on the diagonal
    bool converged = true;
};

struct FullPivLU {
    Perm row_perm;
    Perm col_perm;
    CMat lower;
    CMat upper;
    std::size_t rank = 0;
};

PLUDecomp plu(const CMat& m);

// Requires every leading principal minor nonzero; refuses otherwise,
// naming the failing minor.
LDUDecomp ldu(const CMat& m, double tol = kDefaultTol);

// Householder QR for rows >= cols.
QRDecomp qr(const CMat& m);

// Hessenberg reduction plus shifted QR iteration.
SchurDecomp schur(const CMat& m);

// Transposition wrappers around qr: A = L Q with L lower triangular,
// and A = R Q with R upper triangular (cols >= rows).
struct LQDecomp {
    CMat l;
    CMat q;
};
LQDecomp lq(const CMat& m);

struct RQDecomp {
    CMat r;
    CMat q;
};
RQDecomp rq(const CMat& m);

// Rank-revealing P A Q = L U.
FullPivLU full_pivot_lu(const CMat& m, double tol = kDefaultTol);

}  // namespace advlin::factor

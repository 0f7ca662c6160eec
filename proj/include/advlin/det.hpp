#pragma once

#include "advlin/matrix.hpp"

namespace advlin {

// Partially pivoted elimination.
Scalar det(const CMat& m);

// Bareiss fraction-free elimination; exact, overflow-free.
BigInt det(const ZMat& m);

// Exact rational elimination.
BigRat det(const QMat& m);

// Signed permutation sum, for cross-checks at small sizes.
template <typename T>
T det_permutation_sum(const Matrix<T>& m);

extern template Scalar det_permutation_sum<Scalar>(const Matrix<Scalar>&);
extern template BigInt det_permutation_sum<BigInt>(const Matrix<BigInt>&);
extern template BigRat det_permutation_sum<BigRat>(const Matrix<BigRat>&);

}  // namespace advlin

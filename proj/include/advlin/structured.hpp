#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "advlin/matrix.hpp"

namespace advlin::structured {

// (w^{ij})_{ij}, w = e^{2 pi i / n}, indices 0..n-1. F_n/sqrt(n) is unitary.
CMat fourier_matrix(std::size_t n);

// F_{N_1} x ... x F_{N_s}, the Fourier matrix of a product of cyclic groups.
CMat group_fourier(const std::vector<std::size_t>& factors);

// M_{ij} = xi_{j-i}, indices mod n.
CMat circulant(const std::vector<Scalar>& xi);

struct CirculantDiag {
    std::vector<Scalar> q;  // M = (1/N) F diag(q) F*, q = F xi
    double residual;
};
CirculantDiag circulant_diagonalize(const std::vector<Scalar>& xi);

enum class HadamardKind { real, complex };

// Real kind: entries +-1 and H H^t = N exactly. Complex kind: unit-modulus
// entries and H H* = N within tol.
bool is_hadamard(const ZMat& m);
bool is_hadamard(const CMat& m, HadamardKind kind, double tol = kDefaultTol);

// Walsh matrix W_2^{x k} of size 2^k.
ZMat walsh(int k);

// Paley constructions from the quadratic character mod a prime q:
// size q+1 for q = 3 (mod 4), size 2q+2 for q = 1 (mod 4).
ZMat paley1(long q);
ZMat paley2(long q);

// Quadratic character matrix Q_{ab} = chi(b-a), indices mod q.
ZMat paley_character_matrix(long q);

// 4K x 4K assembly from circulant symmetric +-1 symbols with
// A^2+B^2+C^2+D^2 = 4K; reports the offending identity otherwise.
ZMat williamson(const std::vector<int>& a, const std::vector<int>& b,
                const std::vector<int>& c, const std::vector<int>& d);

// The one-parameter family deforming W_4; complex Hadamard for every |q|=1.
CMat f4q_family(Scalar q, double tol = kDefaultTol);

// Hadamard equivalence (row/column permutations and sign flips), N <= 8.
bool hadamard_equivalent(const ZMat& a, const ZMat& b);
bool hadamard_equivalent(const CMat& a, const CMat& b, double tol);

// Exhaustive scan over sign vectors; returns every gamma whose circulant
// matrix is Hadamard. Budget n <= 28.
std::vector<std::vector<int>> circulant_hadamard_search(int n);

struct BistochasticReport {
    std::vector<Scalar> row_sums;
    std::vector<Scalar> col_sums;
    bool is_bistochastic = false;
    bool has_common_sum = false;
    Scalar common_sum{0.0, 0.0};
};
BistochasticReport bistochastic_check(const CMat& m, double tol = kDefaultTol);

// The orthogonal bistochastic matrix with diagonal (2-N)/N, off-diagonal 2/N.
CMat k_matrix(std::size_t n);

// Dephased form: first row and column rotated to 1.
CMat dephase(const CMat& h);

std::string sign_matrix_to_text(const ZMat& m);
ZMat sign_matrix_from_text(const std::string& text);

}  // namespace advlin::structured

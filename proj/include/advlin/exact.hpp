#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "advlin/scalar.hpp"

namespace advlin {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt bigint_pow(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// N(N-1)...(N-m+1)
inline BigInt falling_factorial(const BigInt& n, unsigned long m) {
    BigInt r = 1;
    for (unsigned long i = 0; i < m; ++i) r *= n - static_cast<long>(i);
    return r;
}

// Exact quotient; throws if the division is not exact.
BigInt divexact(const BigInt& a, const BigInt& b);

inline double to_double(const BigRat& q) { return q.get_d(); }
inline double to_double(const BigInt& z) { return z.get_d(); }

inline Scalar to_scalar(const BigRat& q) { return {q.get_d(), 0.0}; }
inline Scalar to_scalar(const BigInt& z) { return {z.get_d(), 0.0}; }

}  // namespace advlin

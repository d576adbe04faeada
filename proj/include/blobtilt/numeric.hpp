#pragma once

#include <gmpxx.h>
#include <stdexcept>

namespace blobtilt {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals from GMP, no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a specialization violates [2]_q != 0 or [m]_q != 0.
struct InvalidSpecialization : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when an idempotent is requested at a point where [2]_q vanishes.
struct DegenerateParameter : std::domain_error {
    using std::domain_error::domain_error;
};

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

inline Int int_pow(long base, unsigned long e) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
    return out;
}

}  // namespace blobtilt

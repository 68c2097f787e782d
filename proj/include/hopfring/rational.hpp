#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfring {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rat_factorial(int n) {
    if (n < 0) throw std::invalid_argument("rat_factorial: negative argument");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(z);
}

// Exact binomial coefficient; throws if the result does not fit in long long.
inline long long binom_ll(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!z.fits_slong_p()) throw std::overflow_error("binom_ll: result out of range");
    return z.get_si();
}

}  // namespace hopfring

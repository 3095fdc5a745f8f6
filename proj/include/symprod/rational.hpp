#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace symprod {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// r^k for any integer k; 0^k with k < 0 is the caller's problem (checked upstream).
inline Rational pow(const Rational& r, std::int64_t k) {
    if (k == 0) return Rational(1);
    const unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), e);
    Rational out = k > 0 ? Rational(num, den) : Rational(den, num);
    out.canonicalize();
    return out;
}

/// Exact square root of a nonnegative rational, if one exists.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0 ||
        mpz_perfect_square_p(r.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
    return Rational(num, den);
}

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

} // namespace symprod

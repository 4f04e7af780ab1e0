// Exact rational scalar type and small helpers. All arithmetic in this
// library is exact; Rational is the only scalar type.
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace momideal {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" when q != 1, plain "p" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts an optional sign, an integer numerator and an optional
// "/denominator". Throws std::invalid_argument on anything else.
Rational rational_from_string(std::string_view text);

Rational pow(const Rational& base, unsigned long exponent);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace momideal

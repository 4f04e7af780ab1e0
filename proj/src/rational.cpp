#include "momideal/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace momideal {

Rational rational_from_string(std::string_view text) {
    std::size_t i = 0, n = text.size();
    auto fail = [&] { throw std::invalid_argument("bad rational: '" + std::string(text) + "'"); };
    auto digits = [&](std::string& out) {
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
            out += text[i++];
    };

    std::string num, den;
    if (i < n && (text[i] == '+' || text[i] == '-')) num += text[i++];
    digits(num);
    if (i < n && text[i] == '/') {
        ++i;
        digits(den);
    }
    if (i != n) fail();

    Rational q;
    if (den.empty()) {
        q = Rational(Integer(num));
    } else {
        Integer d(den);
        if (d == 0) fail();
        q = Rational(Integer(num), d);
        q.canonicalize();
    }
    return q;
}

Rational pow(const Rational& base, unsigned long exponent) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return r;
}

}  // namespace momideal

// Sparse bivariate polynomials over the rationals: monomial orders,
// multivariate division, S-polynomials, Buchberger's algorithm and
// reduced Groebner bases.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "momideal/errors.hpp"
#include "momideal/rational.hpp"

namespace momideal {

struct Monomial {
    unsigned ex = 0;
    unsigned ey = 0;

    unsigned total_degree() const { return ex + ey; }
    bool is_one() const { return ex == 0 && ey == 0; }
    bool divides(const Monomial& m) const { return ex <= m.ex && ey <= m.ey; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return {a.ex + b.ex, a.ey + b.ey};
    }
    // Pre: divides(m) on the divisor side, i.e. b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        return {a.ex - b.ex, a.ey - b.ey};
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const;  // "1", "x", "x^2*y", ...
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// Both orders take x > y.
enum class MonomialOrder { Lex, Grlex };

std::strong_ordering compare(const Monomial& a, const Monomial& b,
                             MonomialOrder ord);

// Strict-weak ordering used as the canonical in-memory term order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare(a, b, MonomialOrder::Grlex) < 0;
    }
};

// The column enumeration shared by moment and Vandermonde-like matrices:
// degree blocks ascending, each block listed x^d, x^(d-1)*y, ..., y^d.
std::vector<Monomial> column_monomials(std::size_t count);

class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;  // zero
    explicit Polynomial(Rational constant);
    static Polynomial term(const Monomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial.
    int total_degree() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(const Monomial& m) const;

    std::pair<Rational, Monomial> leading_term(MonomialOrder ord) const;
    Monomial leading_monomial(MonomialOrder ord) const;

    Rational evaluate(const Rational& x, const Rational& y) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) {
        a += b;
        return a;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) {
        a -= b;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& p, const Rational& c);
    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        return p * c;
    }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Leading coefficient 1 under ord. Pre: nonzero.
    Polynomial monic(MonomialOrder ord) const;
    // Integer coefficients with content 1 and positive leading coefficient
    // under ord. Zero maps to zero.
    Polynomial primitive_integer_form(MonomialOrder ord) const;

    // Terms in decreasing ord; round-trips through parse_polynomial.
    std::string to_string(MonomialOrder ord = MonomialOrder::Lex) const;

  private:
    TermMap terms_;
    void add_term(const Monomial& m, const Rational& c);
};

// Grammar: [+|-] term { (+|-) term }, term = factor { '*' factor },
// factor = rational | ('x'|'y') ['^' uint]. Whitespace insensitive.
Polynomial parse_polynomial(std::string_view text);

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

// Division algorithm for an ordered divisor tuple: the first divisor whose
// leading term divides wins. f == sum(quotients[i]*divisors[i]) + remainder,
// and no monomial of the remainder is divisible by any leading monomial.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      MonomialOrder ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        MonomialOrder ord);

struct GroebnerBasis {
    std::vector<Polynomial> polys;
    MonomialOrder order = MonomialOrder::Lex;
    bool reduced = false;

    friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

// Buchberger with a FIFO pair queue and the coprime-leading-monomial skip.
// Zero generators are dropped; the inputs are a prefix of the output.
GroebnerBasis buchberger(std::vector<Polynomial> generators, MonomialOrder ord);

// Unique reduced basis of the same ideal: monic members, no monomial of any
// member divisible by another member's leading monomial, sorted by ascending
// leading monomial.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

// Remainder of f modulo the basis is zero.
bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis);

// Every pairwise S-polynomial leaves remainder zero.
bool is_groebner_basis(const GroebnerBasis& basis);

// Monomials divisible by no leading monomial of the basis, or nullopt when
// there are infinitely many (the ideal is not zero-dimensional).
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis& basis);

}  // namespace momideal

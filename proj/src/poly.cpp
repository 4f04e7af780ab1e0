#include "momideal/poly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <utility>

namespace momideal {

Monomial lcm(const Monomial& a, const Monomial& b) {
    return {std::max(a.ex, b.ex), std::max(a.ey, b.ey)};
}

bool coprime(const Monomial& a, const Monomial& b) {
    return std::min(a.ex, b.ex) == 0 && std::min(a.ey, b.ey) == 0;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b,
                             MonomialOrder ord) {
    if (ord == MonomialOrder::Grlex) {
        if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    }
    if (auto c = a.ex <=> b.ex; c != 0) return c;
    return a.ey <=> b.ey;
}

std::string Monomial::to_string() const {
    if (is_one()) return "1";
    std::string s;
    auto var = [&s](char v, unsigned e) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += v;
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    };
    var('x', ex);
    var('y', ey);
    return s;
}

std::vector<Monomial> column_monomials(std::size_t count) {
    std::vector<Monomial> out;
    out.reserve(count);
    for (unsigned d = 0; out.size() < count; ++d)
        for (unsigned j = 0; j <= d && out.size() < count; ++j)
            out.push_back({d - j, j});
    return out;
}

Polynomial::Polynomial(Rational constant) {
    add_term({0, 0}, constant);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, int(m.total_degree()));
    return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Rational, Monomial> Polynomial::leading_term(MonomialOrder ord) const {
    if (is_zero()) throw ZeroPolynomial("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (compare(it->first, best->first, ord) > 0) best = it;
    return {best->second, best->first};
}

Monomial Polynomial::leading_monomial(MonomialOrder ord) const {
    return leading_term(ord).second;
}

Rational Polynomial::evaluate(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) acc += c * pow(x, m.ex) * pow(y, m.ey);
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial operator*(const Polynomial& p, const Rational& c) {
    Polynomial out;
    if (c == 0) return out;
    for (const auto& [m, pc] : p.terms_) out.terms_.emplace(m, pc * c);
    return out;
}

Polynomial Polynomial::monic(MonomialOrder ord) const {
    auto [lc, lm] = leading_term(ord);
    return *this * (Rational(1) / lc);
}

Polynomial Polynomial::primitive_integer_form(MonomialOrder ord) const {
    if (is_zero()) return {};
    Integer den_lcm(1);
    for (const auto& [m, c] : terms_) den_lcm = lcm(den_lcm, c.get_den());
    Integer content(0);
    for (const auto& [m, c] : terms_)
        content = gcd(content, Integer(c.get_num() * den_lcm / c.get_den()));
    Rational scale = Rational(den_lcm) / Rational(content);
    if (leading_term(ord).first < 0) scale = -scale;
    return *this * scale;
}

std::string Polynomial::to_string(MonomialOrder ord) const {
    if (is_zero()) return "0";
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [ord](const auto* a, const auto* b) {
        return compare(a->first, b->first, ord) > 0;
    });
    std::string s;
    for (const auto* t : order) {
        const auto& [m, c] = *t;
        Rational a = abs(c);
        if (s.empty()) {
            if (c < 0) s += '-';
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            s += momideal::to_string(a);
        } else {
            if (a != 1) {
                s += momideal::to_string(a);
                s += '*';
            }
            s += m.to_string();
        }
    }
    return s;
}

namespace {

// Single-line recursive-descent parser for the polynomial grammar.
class PolyParser {
  public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Polynomial run() {
        Polynomial p;
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [m, c] = parse_term();
            p += Polynomial::term(m, c * sign);
            skip_space();
            first = false;
        }
        return p;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(1, pos_ + 1, what);
    }

    std::pair<Monomial, Rational> parse_term() {
        Monomial m;
        Rational c(1);
        bool expect_factor = true;
        while (expect_factor) {
            skip_space();
            if (at_end()) fail("expected a factor");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c *= parse_rational();
            } else if (peek() == 'x' || peek() == 'y') {
                char v = peek();
                ++pos_;
                unsigned e = 1;
                skip_space();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_space();
                    e = parse_uint();
                }
                if (v == 'x')
                    m.ex += e;
                else
                    m.ey += e;
            } else {
                fail("expected a coefficient or variable");
            }
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
            } else {
                expect_factor = false;
            }
        }
        return {m, c};
    }

    unsigned parse_uint() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an integer");
        unsigned long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + unsigned(peek() - '0');
            if (v > 100000) fail("exponent too large");
            ++pos_;
        }
        return unsigned(v);
    }

    Rational parse_rational() {
        Integer num = parse_integer();
        skip_space();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_space();
            Integer den = parse_integer();
            if (den == 0) fail("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    Integer parse_integer() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected an integer");
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            ++pos_;
        }
        return Integer(digits);
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    return PolyParser(text).run();
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      MonomialOrder ord) {
    if (divisors.empty()) throw EmptyDivisorList("division by an empty tuple");
    for (const auto& d : divisors)
        if (d.is_zero()) throw ZeroDivisor("zero polynomial in divisor tuple");

    DivisionResult out;
    out.quotients.assign(divisors.size(), Polynomial{});
    Polynomial h = f;
    while (!h.is_zero()) {
        auto [hc, hm] = h.leading_term(ord);
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            auto [dc, dm] = divisors[i].leading_term(ord);
            if (!dm.divides(hm)) continue;
            Polynomial t = Polynomial::term(hm / dm, hc / dc);
            out.quotients[i] += t;
            h -= t * divisors[i];
            divided = true;
            break;
        }
        if (!divided) {
            Polynomial t = Polynomial::term(hm, hc);
            out.remainder += t;
            h -= t;
        }
    }
    return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        MonomialOrder ord) {
    if (f.is_zero() || g.is_zero())
        throw ZeroPolynomial("S-polynomial of a zero polynomial");
    auto [fc, fm] = f.leading_term(ord);
    auto [gc, gm] = g.leading_term(ord);
    Monomial l = lcm(fm, gm);
    return Polynomial::term(l / fm, Rational(1) / fc) * f -
           Polynomial::term(l / gm, Rational(1) / gc) * g;
}

GroebnerBasis buchberger(std::vector<Polynomial> generators, MonomialOrder ord) {
    std::vector<Polynomial> basis;
    for (auto& g : generators)
        if (!g.is_zero()) basis.push_back(std::move(g));
    if (basis.empty()) throw EmptyInput("no nonzero generators");

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (coprime(basis[i].leading_monomial(ord), basis[j].leading_monomial(ord)))
            continue;
        Polynomial r =
            divide(s_polynomial(basis[i], basis[j], ord), basis, ord).remainder;
        if (r.is_zero()) continue;
        basis.push_back(std::move(r));
        for (std::size_t t = 0; t + 1 < basis.size(); ++t)
            pairs.emplace_back(t, basis.size() - 1);
    }
    return {std::move(basis), ord, false};
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
    const MonomialOrder ord = basis.order;
    std::vector<Polynomial> polys;
    for (const auto& p : basis.polys)
        if (!p.is_zero()) polys.push_back(p.monic(ord));

    // Minimalize: drop any member whose leading monomial is divisible by
    // another remaining member's (duplicates collapse to the first).
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        Monomial lm = polys[i].leading_monomial(ord);
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.leading_monomial(ord).divides(lm)) redundant = true;
        for (std::size_t j = i + 1; j < polys.size() && !redundant; ++j) {
            Monomial other = polys[j].leading_monomial(ord);
            if (other.divides(lm) && !(lm == other)) redundant = true;
        }
        if (!redundant) minimal.push_back(polys[i]);
    }

    // Autoreduce tails until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            if (others.empty()) continue;
            Polynomial r = divide(minimal[i], others, ord).remainder;
            if (!(r == minimal[i])) {
                minimal[i] = r.monic(ord);
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(),
              [ord](const Polynomial& a, const Polynomial& b) {
                  return compare(a.leading_monomial(ord), b.leading_monomial(ord),
                                 ord) < 0;
              });
    return {std::move(minimal), ord, true};
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis) {
    if (f.is_zero()) return true;
    return divide(f, basis.polys, basis.order).remainder.is_zero();
}

bool is_groebner_basis(const GroebnerBasis& basis) {
    for (std::size_t i = 0; i < basis.polys.size(); ++i)
        for (std::size_t j = i + 1; j < basis.polys.size(); ++j) {
            Polynomial s = s_polynomial(basis.polys[i], basis.polys[j], basis.order);
            if (!divide(s, basis.polys, basis.order).remainder.is_zero())
                return false;
        }
    return true;
}

std::optional<std::vector<Monomial>> standard_monomials(
    const GroebnerBasis& basis) {
    std::vector<Monomial> leading;
    for (const auto& p : basis.polys)
        if (!p.is_zero()) leading.push_back(p.leading_monomial(basis.order));

    // Finitely many standard monomials iff some pure x power and some pure
    // y power are leading-divisible.
    unsigned x_bound = 0, y_bound = 0;
    bool x_found = false, y_found = false;
    for (const auto& m : leading) {
        if (m.ey == 0 && (!x_found || m.ex < x_bound)) {
            x_bound = m.ex;
            x_found = true;
        }
        if (m.ex == 0 && (!y_found || m.ey < y_bound)) {
            y_bound = m.ey;
            y_found = true;
        }
    }
    if (!x_found || !y_found) return std::nullopt;

    std::vector<Monomial> standard;
    for (unsigned i = 0; i < x_bound; ++i)
        for (unsigned j = 0; j < y_bound; ++j) {
            Monomial m{i, j};
            bool divisible = false;
            for (const auto& lm : leading)
                if (lm.divides(m)) divisible = true;
            if (!divisible) standard.push_back(m);
        }
    std::sort(standard.begin(), standard.end(), GrlexLess{});
    return standard;
}

}  // namespace momideal

#include "momideal/variety.hpp"

#include <algorithm>
#include <set>

namespace momideal {

namespace {

// Dense univariate polynomial, coefficient of degree i at index i, no
// trailing zeros (zero polynomial is the empty vector).
using UniPoly = std::vector<Rational>;

void trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UniPoly& p) { return int(p.size()) - 1; }

Rational eval(const UniPoly& p, const Rational& t) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
}

UniPoly derivative(const UniPoly& p) {
    UniPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(long(i)));
    trim(d);
    return d;
}

UniPoly remainder(UniPoly a, const UniPoly& b) {
    while (degree(a) >= degree(b)) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

UniPoly gcd(UniPoly a, UniPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UniPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational inv = Rational(1) / a.back();
        for (auto& c : a) c *= inv;
    }
    return a;
}

// Exact quotient; pre: b divides a.
UniPoly quotient(UniPoly a, const UniPoly& b) {
    UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (degree(a) >= degree(b)) {
        Rational f = a.back() / b.back();
        q[a.size() - b.size()] = f;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    trim(q);
    return q;
}

UniPoly square_free_part(const UniPoly& p) {
    UniPoly d = derivative(p);
    if (d.empty()) return p;  // constants
    UniPoly g = gcd(p, d);
    if (degree(g) <= 0) return p;
    return quotient(p, g);
}

// Integer coefficients, content 1, positive leading coefficient.
std::vector<Integer> primitive_integer(const UniPoly& p) {
    Integer den_lcm(1);
    for (const auto& c : p)
        if (c != 0) den_lcm = lcm(den_lcm, c.get_den());
    Integer content(0);
    for (const auto& c : p)
        if (c != 0) content = gcd(content, Integer(c.get_num() * den_lcm / c.get_den()));
    std::vector<Integer> out;
    out.reserve(p.size());
    for (const auto& c : p)
        out.push_back(Integer(c.get_num() * (den_lcm / c.get_den())) / content);
    if (!out.empty() && out.back() < 0)
        for (auto& z : out) z = -z;
    return out;
}

std::vector<Integer> positive_divisors(const Integer& n_in) {
    Integer n = abs(n_in);
    std::vector<Integer> out;
    for (Integer d(1); d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    return out;
}

std::string univariate_to_string(const UniPoly& p, char var) {
    Polynomial q;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Monomial m = var == 'y' ? Monomial{0, unsigned(i)} : Monomial{unsigned(i), 0};
        q += Polynomial::term(m, p[i]);
    }
    return q.primitive_integer_form(MonomialOrder::Lex).to_string();
}

// All rational roots of p; throws IrrationalRoots if a square-free factor of
// degree >= 2 remains rootless.
std::vector<Rational> rational_roots(const UniPoly& p, char var) {
    UniPoly sf = square_free_part(p);
    std::vector<Rational> roots;

    // Factor out the root at zero first so the constant term is nonzero.
    std::size_t zero_order = 0;
    while (zero_order < sf.size() && sf[zero_order] == 0) ++zero_order;
    if (zero_order > 0) {
        roots.emplace_back(0);
        sf.erase(sf.begin(), sf.begin() + long(zero_order));
    }
    if (degree(sf) <= 0) return roots;

    const std::vector<Integer> z = primitive_integer(sf);
    std::set<Rational> candidates;
    for (const Integer& num : positive_divisors(z.front()))
        for (const Integer& den : positive_divisors(z.back())) {
            if (gcd(num, den) != 1) continue;
            Rational q(num, den);
            q.canonicalize();
            candidates.insert(q);
            candidates.insert(-q);
        }

    UniPoly residual = sf;
    for (const Rational& c : candidates) {
        if (degree(residual) <= 0) break;
        if (eval(sf, c) != 0) continue;
        roots.push_back(c);
        // Synthetic division by (t - c); exact since c is a root.
        residual = quotient(residual, UniPoly{-c, Rational(1)});
    }
    if (degree(residual) >= 1) throw IrrationalRoots(univariate_to_string(residual, var));
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool pure_in_y(const Polynomial& p) {
    for (const auto& [m, c] : p.terms())
        if (m.ex != 0) return false;
    return true;
}

UniPoly as_univariate_y(const Polynomial& p) {
    UniPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (out.size() <= m.ey) out.resize(m.ey + 1, Rational(0));
        out[m.ey] = c;
    }
    trim(out);
    return out;
}

UniPoly substitute_y(const Polynomial& p, const Rational& y) {
    UniPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (out.size() <= m.ex) out.resize(m.ex + 1, Rational(0));
        out[m.ex] += c * pow(y, m.ey);
    }
    trim(out);
    return out;
}

}  // namespace

VarietyPoints solve_variety(const GroebnerBasis& basis) {
    std::vector<Polynomial> members;
    for (const auto& p : basis.polys)
        if (!p.is_zero()) members.push_back(p);

    UniPoly eliminant;
    bool have_eliminant = false;
    for (const auto& p : members)
        if (pure_in_y(p)) {
            eliminant = have_eliminant ? gcd(eliminant, as_univariate_y(p))
                                       : as_univariate_y(p);
            have_eliminant = true;
        }
    if (!have_eliminant)
        throw NoUnivariateMember("basis has no member univariate in y");

    VarietyPoints out;
    for (const Rational& y : rational_roots(eliminant, 'y')) {
        UniPoly fiber;
        bool have_fiber = false;
        for (const auto& p : members) {
            if (pure_in_y(p)) continue;
            UniPoly sub = substitute_y(p, y);
            fiber = have_fiber ? gcd(fiber, sub) : sub;
            have_fiber = true;
        }
        if (!have_fiber || fiber.empty())
            throw NoUnivariateMember("no univariate-in-x member on the fiber y = " +
                                     to_string(y));
        if (degree(fiber) == 0) continue;  // no point above this root
        for (const Rational& x : rational_roots(fiber, 'x')) {
            bool common = true;
            for (const auto& p : members)
                if (p.evaluate(x, y) != 0) common = false;
            if (common) out.points.emplace_back(x, y);
        }
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const Atom& a, const Atom& b) {
                  return a.second != b.second ? a.second < b.second
                                              : a.first < b.first;
              });
    return out;
}

AtomicMeasure measure_from_points(const VarietyPoints& points,
                                  std::vector<Rational> densities,
                                  bool normalize) {
    return AtomicMeasure(points.points, std::move(densities), normalize);
}

bool positivity_screen(const VarietyPoints& points) {
    for (const auto& [x, y] : points.points)
        if (x < 0 || y < 0) return false;
    return true;
}

}  // namespace momideal

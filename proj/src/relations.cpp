#include "momideal/relations.hpp"

#include <algorithm>
#include <stdexcept>

namespace momideal {

RelationSet recursive_relations(const AtomicMeasure& mu, unsigned k) {
    const auto basis = monomial_basis(k);
    const auto kernel = kernel_basis(vandermonde(mu, k));
    std::vector<Polynomial> relations;
    relations.reserve(kernel.size());
    for (const auto& v : kernel) {
        Polynomial p;
        for (std::size_t j = 0; j < basis.size(); ++j)
            p += Polynomial::term(basis[j], v[j]);
        relations.push_back(std::move(p));
    }
    return {k, std::move(relations), mu};
}

bool verify_relation(const AtomicMeasure& mu, unsigned k, const Polynomial& p) {
    if (p.total_degree() > int(k))
        throw DegreeTooHigh("polynomial degree " +
                            std::to_string(p.total_degree()) +
                            " exceeds truncation " + std::to_string(k));

    const auto basis = monomial_basis(k);
    std::vector<Rational> phat(basis.size(), Rational(0));
    for (std::size_t j = 0; j < basis.size(); ++j) phat[j] = p.coeff(basis[j]);
    bool matrix_zero = true;
    for (const auto& entry : matvec(moment_matrix(mu, k), phat))
        if (entry != 0) matrix_zero = false;

    bool vanishes = true;
    for (const auto& [x, y] : mu.atoms())
        if (p.evaluate(x, y) != 0) vanishes = false;

    if (matrix_zero != vanishes)
        throw std::logic_error(
            "internal: matrix-product and atom-evaluation checks disagree");
    return matrix_zero;
}

bool check_recursively_generated(const AtomicMeasure& mu, unsigned k) {
    const auto rel = recursive_relations(mu, k);
    for (const auto& p : rel.relations) {
        const unsigned dp = unsigned(p.total_degree());
        for (const auto& q : monomial_basis(k - dp))
            if (!verify_relation(mu, k, p * Polynomial::term(q, 1))) return false;
    }
    return true;
}

GroebnerBasis groebner_of_relations(const AtomicMeasure& mu, MonomialOrder ord) {
    const std::size_t n = mu.atom_count();
    unsigned k = 0;
    while ((std::size_t(k) + 1) * (k + 2) / 2 < n) ++k;

    // The recipe degree k+1 suffices for atoms in general position. For
    // degenerate configurations (e.g. collinear atoms) the degree-(k+1)
    // relations generate a strictly smaller ideal, so escalate until the
    // quotient has exactly n standard monomials; ideals of n planar points
    // are generated in degree <= n, so this stops.
    for (unsigned d = k + 1;; ++d) {
        auto rel = recursive_relations(mu, d);
        GroebnerBasis gb = reduce_basis(buchberger(rel.relations, ord));
        auto standard = standard_monomials(gb);
        if (standard && standard->size() == n) return gb;
        if (standard && standard->size() < n)
            throw std::logic_error("internal: quotient smaller than atom count");
        if (d > std::max<unsigned>(k + 1, unsigned(n)) + 1)
            throw std::logic_error("internal: relation ideal did not stabilize");
    }
}

RelationSet lift_relations(const RelationSet& rel) {
    const unsigned d = rel.degree_bound;
    RelationSet out{d + 1, rel.relations, rel.source_measure};

    auto member_with_lm = [&rel](const Monomial& m) -> const Polynomial* {
        for (const auto& p : rel.relations)
            if (!p.is_zero() && p.leading_monomial(MonomialOrder::Grlex) == m)
                return &p;
        return nullptr;
    };

    for (unsigned j = 0; j <= d + 1; ++j) {
        Monomial m{d + 1 - j, j};
        // Prefer dividing out x on the x-heavy half, y elsewhere.
        Monomial preferred = m.ex > m.ey ? Monomial{1, 0} : Monomial{0, 1};
        Monomial fallback = preferred == Monomial{1, 0} ? Monomial{0, 1}
                                                        : Monomial{1, 0};
        const Polynomial* base = nullptr;
        Monomial mult;
        for (const Monomial& v : {preferred, fallback}) {
            if (!v.divides(m)) continue;
            if (const Polynomial* g = member_with_lm(m / v)) {
                base = g;
                mult = v;
                break;
            }
        }
        if (!base)
            throw MissingLeadingMonomial("no relation with leading monomial " +
                                         (m / preferred).to_string() + " or " +
                                         (m / fallback).to_string() +
                                         " to lift to " + m.to_string());
        out.relations.push_back(Polynomial::term(mult, 1) * *base);
    }
    return out;
}

ExtensionMatrix extension_matrix(const RelationSet& rel) {
    if (rel.degree_bound == 0)
        throw MissingLeadingMonomial("cannot extend from degree 0 relations");
    const unsigned top = rel.degree_bound;          // row monomial degree
    const unsigned k = top - 1;                     // source truncation degree
    const auto lower = monomial_basis(k);

    // Row monomials processed ascending in grlex so any degree-top tail
    // monomial of a later relation can be substituted by its finished row.
    std::vector<Monomial> row_monos;
    for (unsigned j = 0; j <= top; ++j) row_monos.push_back({top - j, j});
    std::vector<Monomial> process = row_monos;
    std::sort(process.begin(), process.end(), GrlexLess{});

    std::map<Monomial, std::vector<Rational>, GrlexLess> rows;
    for (const Monomial& m : process) {
        const Polynomial* found = nullptr;
        for (const auto& p : rel.relations)
            if (!p.is_zero() && p.leading_monomial(MonomialOrder::Grlex) == m) {
                found = &p;
                break;
            }
        if (!found)
            throw MissingLeadingMonomial("no relation with leading monomial " +
                                         m.to_string());
        Polynomial g = found->monic(MonomialOrder::Grlex);
        std::vector<Rational> row(lower.size(), Rational(0));
        for (const auto& [mono, c] : g.terms()) {
            if (mono == m) continue;
            if (mono.total_degree() <= k) {
                auto it = std::find(lower.begin(), lower.end(), mono);
                row[std::size_t(it - lower.begin())] -= c;
            } else {
                // A degree-top tail monomial is expanded through its own,
                // already computed row.
                const auto& sub = rows.at(mono);
                for (std::size_t j = 0; j < row.size(); ++j) row[j] -= c * sub[j];
            }
        }
        rows.emplace(m, std::move(row));
    }

    RatMatrix c(row_monos.size(), lower.size());
    for (std::size_t i = 0; i < row_monos.size(); ++i) {
        const auto& row = rows.at(row_monos[i]);
        for (std::size_t j = 0; j < lower.size(); ++j) c.at(i, j) = row[j];
    }
    return {std::move(c), k};
}

RatMatrix extend_moment_matrix(const RatMatrix& m_k, const ExtensionMatrix& ext) {
    const std::size_t expected = (std::size_t(ext.k) + 1) * (ext.k + 2) / 2;
    if (m_k.rows() != expected || m_k.cols() != expected ||
        ext.C.cols() != expected)
        throw DimensionMismatch("extension blocks are not conformable");
    RatMatrix ct = transpose(ext.C);
    RatMatrix cm = matmul(ext.C, m_k);
    return block_compose(m_k, matmul(m_k, ct), cm, matmul(cm, ct));
}

}  // namespace momideal

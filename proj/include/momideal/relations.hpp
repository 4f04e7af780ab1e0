// Recursive relations of moment matrices: kernel-derived relation sets,
// verification, the ideal-like closure check, Groebner bases of the relation
// ideal, and block extension of truncated moment matrices.
#pragma once

#include <vector>

#include "momideal/linalg.hpp"
#include "momideal/measure.hpp"
#include "momideal/poly.hpp"

namespace momideal {

struct RelationSet {
    unsigned degree_bound = 0;
    std::vector<Polynomial> relations;
    AtomicMeasure source_measure;
};

// Polynomials of the normalized kernel basis of vandermonde(mu, k), read
// against monomial_basis(k). Every member vanishes at every atom.
RelationSet recursive_relations(const AtomicMeasure& mu, unsigned k);

// True iff moment_matrix(mu, k) * phat == 0; cross-checked against vanishing
// at every atom, the two must agree. Throws DegreeTooHigh when deg p > k.
bool verify_relation(const AtomicMeasure& mu, unsigned k, const Polynomial& p);

// The ideal-like property of the kernel, checked with monomial multipliers:
// for every relation p and monomial q with deg(pq) <= k, pq is a relation.
bool check_recursively_generated(const AtomicMeasure& mu, unsigned k);

// Groebner basis (reduced) of the full ideal of relations. Starts from the
// smallest k with atom_count <= (k+1)(k+2)/2 and relations of degree k+1,
// escalating the degree until the quotient has exactly atom_count standard
// monomials, which certifies that the generated ideal is the ideal of the
// atom set.
GroebnerBasis groebner_of_relations(const AtomicMeasure& mu,
                                    MonomialOrder ord = MonomialOrder::Lex);

// Degree-raising step used for moment-matrix extension: for every monomial m
// of degree rel.degree_bound + 1, multiply a member whose grlex leading
// monomial is m/x (when ex > ey) or m/y by that variable. The result carries
// the original members plus one new relation with grlex leading monomial m
// for each such m. Throws MissingLeadingMonomial.
RelationSet lift_relations(const RelationSet& rel);

struct ExtensionMatrix {
    RatMatrix C;
    unsigned k;  // source truncation degree: rows index degree k+1 monomials
};

// Builds C: for each monomial m of degree rel.degree_bound, one row holding
// the negated, leading-coefficient-normalized lower-degree coefficients of a
// member with grlex leading monomial m, so that column m of the extended
// moment matrix equals C-row times the degree <= k columns. Throws
// MissingLeadingMonomial.
ExtensionMatrix extension_matrix(const RelationSet& rel);

// [[M, M*C^T], [C*M, C*M*C^T]]; equals moment_matrix(mu, k+1) when M is
// moment_matrix(mu, k) and C was built from relations of mu.
RatMatrix extend_moment_matrix(const RatMatrix& m_k, const ExtensionMatrix& ext);

}  // namespace momideal

// Inversion: from a lex Groebner basis of a zero-dimensional ideal to the
// finite rational variety, and back to a measure.
#pragma once

#include <vector>

#include "momideal/measure.hpp"
#include "momideal/poly.hpp"

namespace momideal {

struct VarietyPoints {
    std::vector<Atom> points;

    friend bool operator==(const VarietyPoints&, const VarietyPoints&) = default;
};

// Rational-root solving of a reduced lex (x > y) basis: the univariate-in-y
// member is solved by the rational root theorem after primitive-part
// extraction and square-free reduction; each root is back-substituted and the
// x-fibers solved the same way. Points are returned sorted by y, then x.
// Throws NoUnivariateMember and IrrationalRoots (irrational coordinates are
// reported, never approximated).
VarietyPoints solve_variety(const GroebnerBasis& basis);

// Any positive densities summing to 1 (or normalize) give back a measure
// whose relations generate the original ideal.
AtomicMeasure measure_from_points(const VarietyPoints& points,
                                  std::vector<Rational> densities,
                                  bool normalize = false);

// Both coordinates of every point nonnegative.
bool positivity_screen(const VarietyPoints& points);

}  // namespace momideal

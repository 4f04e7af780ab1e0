// Weight data of the commuting pair of weighted shifts attached to a
// measure. Weights are stored as squares so everything stays rational.
#pragma once

#include <map>

#include "momideal/measure.hpp"
#include "momideal/rational.hpp"

namespace momideal {

struct WeightFamily {
    unsigned order = 0;  // values stored for k1 + k2 <= order
    std::map<MultiIndex, Rational, MultiIndexLess> alpha_sq;
    std::map<MultiIndex, Rational, MultiIndexLess> beta_sq;

    // Throw OrderExceeded for indices outside the stored range.
    const Rational& alpha2(const MultiIndex& k) const;
    const Rational& beta2(const MultiIndex& k) const;
};

// alpha2_k = gamma(k+e1)/gamma(k), beta2_k = gamma(k+e2)/gamma(k) for all
// k1 + k2 <= N. Requires strictly positive atom coordinates; throws
// NonpositiveAtomCoordinate.
WeightFamily weights_from_measure(const AtomicMeasure& mu, unsigned N);

// The four-case product formula; defined for k1 + k2 <= order + 1.
Rational moments_from_weights(const WeightFamily& w, const MultiIndex& k);

// alpha2(k+e2) * beta2(k) == beta2(k+e1) * alpha2(k) at every in-range index.
bool commutativity_check(const WeightFamily& w);

}  // namespace momideal

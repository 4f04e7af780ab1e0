#include "momideal/shift.hpp"

namespace momideal {

namespace {

const Rational& lookup(const std::map<MultiIndex, Rational, MultiIndexLess>& m,
                       const MultiIndex& k, const char* name) {
    auto it = m.find(k);
    if (it == m.end())
        throw OrderExceeded(std::string(name) + "(" + std::to_string(k.k1) + "," +
                            std::to_string(k.k2) + ") is outside the stored range");
    return it->second;
}

}  // namespace

const Rational& WeightFamily::alpha2(const MultiIndex& k) const {
    return lookup(alpha_sq, k, "alpha2");
}

const Rational& WeightFamily::beta2(const MultiIndex& k) const {
    return lookup(beta_sq, k, "beta2");
}

WeightFamily weights_from_measure(const AtomicMeasure& mu, unsigned N) {
    for (const auto& [x, y] : mu.atoms())
        if (x <= 0 || y <= 0)
            throw NonpositiveAtomCoordinate("atom (" + to_string(x) + ", " +
                                            to_string(y) +
                                            ") has a nonpositive coordinate");
    WeightFamily w;
    w.order = N;
    for (unsigned d = 0; d <= N; ++d)
        for (unsigned j = 0; j <= d; ++j) {
            MultiIndex k{d - j, j};
            Rational g = moment(mu, k);
            w.alpha_sq.emplace(k, moment(mu, {k.k1 + 1, k.k2}) / g);
            w.beta_sq.emplace(k, moment(mu, {k.k1, k.k2 + 1}) / g);
        }
    return w;
}

Rational moments_from_weights(const WeightFamily& w, const MultiIndex& k) {
    if (k.total() > w.order + 1)
        throw OrderExceeded("moment order " + std::to_string(k.total()) +
                            " exceeds " + std::to_string(w.order + 1));
    Rational gamma(1);
    for (unsigned i = 0; i < k.k1; ++i) gamma *= w.alpha2({i, 0});
    for (unsigned j = 0; j < k.k2; ++j) gamma *= w.beta2({k.k1, j});
    return gamma;
}

bool commutativity_check(const WeightFamily& w) {
    for (unsigned d = 0; d + 1 <= w.order; ++d)
        for (unsigned j = 0; j <= d; ++j) {
            MultiIndex k{d - j, j};
            if (w.alpha2({k.k1, k.k2 + 1}) * w.beta2(k) !=
                w.beta2({k.k1 + 1, k.k2}) * w.alpha2(k))
                return false;
        }
    return true;
}

}  // namespace momideal

// Deterministic random inputs shared by the unit and acceptance suites.
#pragma once

#include <random>
#include <utility>
#include <vector>

#include "momideal/measure.hpp"
#include "momideal/poly.hpp"
#include "momideal/rational.hpp"

namespace momideal::testing {

class Sampler {
  public:
    explicit Sampler(unsigned seed) : gen_(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen_);
    }

    // Grid rational p/q with |p| <= num_bound, 1 <= q <= den_bound.
    Rational rational(int num_bound, int den_bound) {
        Rational q(uniform(-num_bound, num_bound), uniform(1, den_bound));
        q.canonicalize();
        return q;
    }

    Rational positive_rational(int num_bound, int den_bound) {
        Rational q(uniform(1, num_bound), uniform(1, den_bound));
        q.canonicalize();
        return q;
    }

    std::vector<Atom> distinct_atoms(std::size_t n, bool positive,
                                     int num_bound = 9, int den_bound = 4) {
        std::vector<Atom> atoms;
        while (atoms.size() < n) {
            Atom a = positive
                         ? Atom{positive_rational(num_bound, den_bound),
                                positive_rational(num_bound, den_bound)}
                         : Atom{rational(num_bound, den_bound),
                                rational(num_bound, den_bound)};
            bool fresh = true;
            for (const auto& b : atoms)
                if (a == b) fresh = false;
            if (fresh) atoms.push_back(std::move(a));
        }
        return atoms;
    }

    std::vector<Rational> densities(std::size_t n) {
        std::vector<Rational> d;
        Rational total(0);
        for (std::size_t i = 0; i < n; ++i) {
            d.push_back(positive_rational(9, 5));
            total += d.back();
        }
        for (auto& v : d) v /= total;
        return d;
    }

    AtomicMeasure measure(std::size_t n, bool positive = false) {
        return AtomicMeasure(distinct_atoms(n, positive), densities(n));
    }

    Polynomial polynomial(unsigned max_degree, int terms, int coeff_bound = 9) {
        Polynomial p;
        for (int t = 0; t < terms; ++t) {
            unsigned ex = unsigned(uniform(0, int(max_degree)));
            unsigned ey = unsigned(uniform(0, int(max_degree - ex)));
            Rational c(uniform(-coeff_bound, coeff_bound), uniform(1, 4));
            c.canonicalize();
            p += Polynomial::term({ex, ey}, c);
        }
        return p;
    }

    std::mt19937& engine() { return gen_; }

  private:
    std::mt19937 gen_;
};

}  // namespace momideal::testing

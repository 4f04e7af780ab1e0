// Finitely atomic measures on the plane, their moments, moment matrices and
// Vandermonde-like matrices.
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "momideal/errors.hpp"
#include "momideal/linalg.hpp"
#include "momideal/poly.hpp"
#include "momideal/rational.hpp"

namespace momideal {

struct MultiIndex {
    unsigned k1 = 0;
    unsigned k2 = 0;

    unsigned total() const { return k1 + k2; }
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

struct MultiIndexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return a.k1 != b.k1 ? a.k1 < b.k1 : a.k2 < b.k2;
    }
};

using Atom = std::pair<Rational, Rational>;

// Probability measure sum lambda_i * delta(x_i, y_i) with positive densities
// and pairwise distinct atoms. Immutable after construction.
class AtomicMeasure {
  public:
    // Throws LengthMismatch, EmptyInput, NonpositiveDensity, DuplicateAtom.
    // Densities must sum to 1 unless normalize is set, in which case they are
    // divided by their total. Throws DensitySumNotOne otherwise.
    AtomicMeasure(std::vector<Atom> atoms, std::vector<Rational> densities,
                  bool normalize = false);

    std::size_t atom_count() const { return atoms_.size(); }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<Rational>& densities() const { return densities_; }

    friend bool operator==(const AtomicMeasure&, const AtomicMeasure&) = default;

  private:
    std::vector<Atom> atoms_;
    std::vector<Rational> densities_;
};

// Text format: '#' starts a comment line; each data line is
// "<lambda> <x> <y>" with exact rational tokens.
AtomicMeasure parse_measure(std::string_view text, bool normalize = false);
AtomicMeasure load_measure(const std::filesystem::path& path,
                           bool normalize = false);
std::string to_text(const AtomicMeasure& mu);

// gamma_k = sum_i lambda_i x_i^k1 y_i^k2, exact.
Rational moment(const AtomicMeasure& mu, const MultiIndex& k);

// All monomials of total degree <= k in the shared column enumeration;
// length (k+1)(k+2)/2.
std::vector<Monomial> monomial_basis(unsigned k);

// Square symmetric matrix with entry (i,j) the moment of m_i*m_j.
RatMatrix moment_matrix(const AtomicMeasure& mu, unsigned k);

// One row per atom: monomial_basis(k) evaluated there. Densities do not
// appear.
RatMatrix vandermonde(const AtomicMeasure& mu, unsigned k);

}  // namespace momideal

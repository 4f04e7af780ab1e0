// Dense exact-rational matrices: RREF, kernel bases normalized against the
// monomial column enumeration, and an exact positive-semidefiniteness check.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "momideal/errors.hpp"
#include "momideal/poly.hpp"
#include "momideal/rational.hpp"

namespace momideal {

class RatMatrix {
  public:
    RatMatrix(std::size_t rows, std::size_t cols);  // zero-filled
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

struct RrefResult {
    RatMatrix matrix;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank;
};

RrefResult rref(const RatMatrix& m);

// Basis of the right kernel. Columns are read as the standard monomial
// enumeration (column_monomials); each vector is scaled to primitive integer
// entries with a positive entry at its grlex-largest nonzero coordinate, and
// vectors are listed by their free column ascending in grlex.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

// Exact symmetric elimination: pivot on positive diagonal entries; a negative
// diagonal entry, or a zero diagonal entry with a nonzero residual row, means
// not positive semidefinite. Throws NotSymmetric.
bool psd_check(const RatMatrix& m);

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);
std::vector<Rational> matvec(const RatMatrix& m, const std::vector<Rational>& v);
RatMatrix transpose(const RatMatrix& m);
RatMatrix block_compose(const RatMatrix& top_left, const RatMatrix& top_right,
                        const RatMatrix& bottom_left,
                        const RatMatrix& bottom_right);

// One row per line, entries as exact fractions separated by single spaces.
std::string to_string(const RatMatrix& m);
RatMatrix parse_matrix(std::string_view text);

}  // namespace momideal

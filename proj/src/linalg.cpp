#include "momideal/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace momideal {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {
    if (rows == 0 || cols == 0)
        throw DimensionMismatch("matrix dimensions must be at least 1x1");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RrefResult rref(const RatMatrix& input) {
    RatMatrix r = input;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t p = row;
        while (p < r.rows() && r.at(p, col) == 0) ++p;
        if (p == r.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < r.cols(); ++j)
                swap(r.at(p, j), r.at(row, j));
        Rational inv = Rational(1) / r.at(row, col);
        for (std::size_t j = col; j < r.cols(); ++j) r.at(row, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col) == 0) continue;
            Rational f = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) -= f * r.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    std::size_t rank = pivots.size();
    return {std::move(r), std::move(pivots), rank};
}

namespace {

// Scale to primitive integer entries, sign fixed so the grlex-largest
// nonzero coordinate is positive.
void normalize_kernel_vector(std::vector<Rational>& v,
                             const std::vector<Monomial>& cols) {
    Integer den_lcm(1);
    for (const auto& q : v)
        if (q != 0) den_lcm = lcm(den_lcm, q.get_den());
    Integer content(0);
    for (const auto& q : v)
        if (q != 0) content = gcd(content, Integer(q.get_num() * den_lcm / q.get_den()));
    Rational scale = Rational(den_lcm) / Rational(content);

    std::size_t top = v.size();
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        if (top == v.size() || compare(cols[j], cols[top], MonomialOrder::Grlex) > 0)
            top = j;
    }
    if (top != v.size() && v[top] * scale < 0) scale = -scale;
    for (auto& q : v) q *= scale;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    auto [r, pivots, rank] = rref(m);
    const std::vector<Monomial> cols = column_monomials(m.cols());

    std::vector<std::size_t> free_cols;
    for (std::size_t col = 0; col < m.cols(); ++col)
        if (std::find(pivots.begin(), pivots.end(), col) == pivots.end())
            free_cols.push_back(col);
    std::sort(free_cols.begin(), free_cols.end(),
              [&cols](std::size_t a, std::size_t b) {
                  return compare(cols[a], cols[b], MonomialOrder::Grlex) < 0;
              });

    std::vector<std::vector<Rational>> basis;
    basis.reserve(free_cols.size());
    for (std::size_t f : free_cols) {
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, f);
        normalize_kernel_vector(v, cols);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool psd_check(const RatMatrix& input) {
    if (input.rows() != input.cols())
        throw NotSymmetric("psd check requires a square matrix");
    for (std::size_t i = 0; i < input.rows(); ++i)
        for (std::size_t j = i + 1; j < input.cols(); ++j)
            if (input.at(i, j) != input.at(j, i))
                throw NotSymmetric("psd check requires a symmetric matrix");

    RatMatrix a = input;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const Rational& d = a.at(i, i);
        if (d < 0) return false;
        if (d == 0) {
            for (std::size_t j = i + 1; j < n; ++j)
                if (a.at(i, j) != 0) return false;
            continue;
        }
        // Updating every trailing column keeps the Schur complement
        // symmetric, which the zero-diagonal row test relies on.
        for (std::size_t r = i + 1; r < n; ++r) {
            if (a.at(r, i) == 0) continue;
            Rational f = a.at(r, i) / d;
            for (std::size_t c = i; c < n; ++c) a.at(r, c) -= f * a.at(i, c);
        }
    }
    return true;
}

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matmul: " + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()));
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

std::vector<Rational> matvec(const RatMatrix& m, const std::vector<Rational>& v) {
    if (m.cols() != v.size())
        throw DimensionMismatch("matvec: " + std::to_string(m.cols()) + " vs " +
                                std::to_string(v.size()));
    std::vector<Rational> out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

RatMatrix transpose(const RatMatrix& m) {
    RatMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
    return out;
}

RatMatrix block_compose(const RatMatrix& tl, const RatMatrix& tr,
                        const RatMatrix& bl, const RatMatrix& br) {
    if (tl.rows() != tr.rows() || bl.rows() != br.rows() ||
        tl.cols() != bl.cols() || tr.cols() != br.cols())
        throw DimensionMismatch("block_compose: blocks are not conformable");
    RatMatrix out(tl.rows() + bl.rows(), tl.cols() + tr.cols());
    auto paste = [&out](const RatMatrix& block, std::size_t ro, std::size_t co) {
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
                out.at(ro + i, co + j) = block.at(i, j);
    };
    paste(tl, 0, 0);
    paste(tr, 0, tl.cols());
    paste(bl, tl.rows(), 0);
    paste(br, tl.rows(), tl.cols());
    return out;
}

std::string to_string(const RatMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ' ';
            s += to_string(m.at(i, j));
        }
        s += '\n';
    }
    return s;
}

RatMatrix parse_matrix(std::string_view text) {
    std::vector<std::vector<Rational>> rows;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(
            start, end == std::string_view::npos ? text.size() - start : end - start);
        ++line_no;
        std::vector<Rational> row;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            if (i >= line.size()) break;
            std::size_t tok_start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            try {
                row.push_back(rational_from_string(line.substr(tok_start, i - tok_start)));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, tok_start + 1, e.what());
            }
        }
        if (!row.empty()) {
            if (!rows.empty() && rows.front().size() != row.size())
                throw ParseError(line_no, 1, "ragged matrix row");
            rows.push_back(std::move(row));
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (rows.empty()) throw ParseError(line_no, 1, "empty matrix");
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace momideal

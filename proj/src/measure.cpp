#include "momideal/measure.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace momideal {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms,
                             std::vector<Rational> densities, bool normalize)
    : atoms_(std::move(atoms)), densities_(std::move(densities)) {
    if (atoms_.size() != densities_.size())
        throw LengthMismatch("atom and density counts differ");
    if (atoms_.empty()) throw EmptyInput("a measure needs at least one atom");
    Rational total(0);
    for (const auto& d : densities_) {
        if (d <= 0) throw NonpositiveDensity("density " + to_string(d));
        total += d;
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        for (std::size_t j = i + 1; j < atoms_.size(); ++j)
            if (atoms_[i] == atoms_[j])
                throw DuplicateAtom("atom (" + to_string(atoms_[i].first) + ", " +
                                    to_string(atoms_[i].second) + ") repeats");
    if (normalize) {
        for (auto& d : densities_) d /= total;
    } else if (total != 1) {
        throw DensitySumNotOne("densities sum to " + to_string(total));
    }
}

AtomicMeasure parse_measure(std::string_view text, bool normalize) {
    std::vector<Atom> atoms;
    std::vector<Rational> densities;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(
            start, end == std::string_view::npos ? text.size() - start : end - start);
        ++line_no;

        std::vector<Rational> tokens;
        std::size_t i = 0;
        bool comment = false;
        while (i < line.size() && !comment) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            if (i >= line.size()) break;
            if (line[i] == '#') {
                comment = true;
                break;
            }
            std::size_t tok_start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            try {
                tokens.push_back(rational_from_string(line.substr(tok_start, i - tok_start)));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, tok_start + 1, e.what());
            }
        }
        if (!tokens.empty()) {
            if (tokens.size() != 3)
                throw ParseError(line_no, 1,
                                 "expected \"<lambda> <x> <y>\", got " +
                                     std::to_string(tokens.size()) + " tokens");
            densities.push_back(tokens[0]);
            atoms.emplace_back(tokens[1], tokens[2]);
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (atoms.empty()) throw ParseError(line_no, 1, "no atoms in measure");
    return AtomicMeasure(std::move(atoms), std::move(densities), normalize);
}

AtomicMeasure load_measure(const std::filesystem::path& path, bool normalize) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open measure file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_measure(buf.str(), normalize);
}

std::string to_text(const AtomicMeasure& mu) {
    std::string s;
    for (std::size_t i = 0; i < mu.atom_count(); ++i) {
        s += to_string(mu.densities()[i]);
        s += ' ';
        s += to_string(mu.atoms()[i].first);
        s += ' ';
        s += to_string(mu.atoms()[i].second);
        s += '\n';
    }
    return s;
}

Rational moment(const AtomicMeasure& mu, const MultiIndex& k) {
    Rational acc(0);
    for (std::size_t i = 0; i < mu.atom_count(); ++i)
        acc += mu.densities()[i] * pow(mu.atoms()[i].first, k.k1) *
               pow(mu.atoms()[i].second, k.k2);
    return acc;
}

std::vector<Monomial> monomial_basis(unsigned k) {
    return column_monomials(std::size_t(k + 1) * (k + 2) / 2);
}

RatMatrix moment_matrix(const AtomicMeasure& mu, unsigned k) {
    const auto basis = monomial_basis(k);
    RatMatrix m(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            Monomial prod = basis[i] * basis[j];
            Rational v = moment(mu, {prod.ex, prod.ey});
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

RatMatrix vandermonde(const AtomicMeasure& mu, unsigned k) {
    const auto basis = monomial_basis(k);
    RatMatrix v(mu.atom_count(), basis.size());
    for (std::size_t i = 0; i < mu.atom_count(); ++i) {
        const auto& [x, y] = mu.atoms()[i];
        for (std::size_t j = 0; j < basis.size(); ++j)
            v.at(i, j) = pow(x, basis[j].ex) * pow(y, basis[j].ey);
    }
    return v;
}

}  // namespace momideal

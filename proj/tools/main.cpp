// momideal command line front end: moments, moment/Vandermonde matrices,
// recursive relations, Groebner bases, variety recovery, relation
// verification, moment-matrix extension, shift weights, and the full
// measure -> basis -> variety roundtrip.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "momideal/errors.hpp"
#include "momideal/linalg.hpp"
#include "momideal/measure.hpp"
#include "momideal/poly.hpp"
#include "momideal/rational.hpp"
#include "momideal/relations.hpp"
#include "momideal/shift.hpp"
#include "momideal/variety.hpp"

namespace {

using namespace momideal;

struct Options {
    std::string measure_path;
    int degree = -1;
    std::vector<std::string> polys;
    std::string order = "lex";
    bool normalize = false;
    std::string densities;
};

MonomialOrder parse_order(const std::string& name) {
    return name == "grlex" ? MonomialOrder::Grlex : MonomialOrder::Lex;
}

AtomicMeasure measure_of(const Options& opt) {
    return load_measure(opt.measure_path, opt.normalize);
}

std::vector<Rational> parse_density_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        std::string tok = text.substr(
            start, end == std::string::npos ? text.size() - start : end - start);
        if (!tok.empty()) out.push_back(rational_from_string(tok));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

void for_each_index(unsigned max_degree, auto&& fn) {
    for (unsigned d = 0; d <= max_degree; ++d)
        for (unsigned j = 0; j <= d; ++j) fn(MultiIndex{d - j, j});
}

int run_moments(const Options& opt) {
    AtomicMeasure mu = measure_of(opt);
    for_each_index(unsigned(opt.degree), [&mu](const MultiIndex& k) {
        std::cout << "gamma(" << k.k1 << "," << k.k2
                  << ") = " << to_string(moment(mu, k)) << "\n";
    });
    return 0;
}

int run_matrix(const Options& opt) {
    std::cout << to_string(moment_matrix(measure_of(opt), unsigned(opt.degree)));
    return 0;
}

int run_vandermonde(const Options& opt) {
    std::cout << to_string(vandermonde(measure_of(opt), unsigned(opt.degree)));
    return 0;
}

int run_relations(const Options& opt) {
    auto rel = recursive_relations(measure_of(opt), unsigned(opt.degree));
    for (const auto& p : rel.relations)
        std::cout << p.primitive_integer_form(MonomialOrder::Grlex)
                         .to_string(MonomialOrder::Grlex)
                  << "\n";
    return 0;
}

int run_groebner(const Options& opt) {
    MonomialOrder ord = parse_order(opt.order);
    GroebnerBasis gb = groebner_of_relations(measure_of(opt), ord);
    for (const auto& p : gb.polys) std::cout << p.to_string(ord) << "\n";
    return 0;
}

int run_verify(const Options& opt) {
    Polynomial p = parse_polynomial(opt.polys.front());
    bool ok = verify_relation(measure_of(opt), unsigned(opt.degree), p);
    std::cout << "RELATION: " << (ok ? "yes" : "no") << "\n";
    return 0;
}

int run_variety(const Options& opt) {
    GroebnerBasis gb;
    if (!opt.polys.empty()) {
        std::vector<Polynomial> gens;
        for (const auto& text : opt.polys) gens.push_back(parse_polynomial(text));
        gb = reduce_basis(buchberger(std::move(gens), MonomialOrder::Lex));
    } else {
        gb = groebner_of_relations(measure_of(opt));
    }
    VarietyPoints pts = solve_variety(gb);
    if (!opt.densities.empty()) {
        AtomicMeasure rebuilt = measure_from_points(
            pts, parse_density_list(opt.densities), opt.normalize);
        std::cout << to_text(rebuilt);
    } else {
        for (const auto& [x, y] : pts.points)
            std::cout << to_string(x) << " " << to_string(y) << "\n";
    }
    return 0;
}

int run_extend(const Options& opt) {
    AtomicMeasure mu = measure_of(opt);
    unsigned k = unsigned(opt.degree);
    ExtensionMatrix ext =
        extension_matrix(lift_relations(recursive_relations(mu, k)));
    std::cout << "C:\n" << to_string(ext.C);
    std::cout << "\nM(" << k + 1 << "):\n"
              << to_string(extend_moment_matrix(moment_matrix(mu, k), ext));
    return 0;
}

int run_weights(const Options& opt) {
    WeightFamily w = weights_from_measure(measure_of(opt), unsigned(opt.degree));
    for_each_index(w.order, [&w](const MultiIndex& k) {
        std::cout << "alpha2(" << k.k1 << "," << k.k2
                  << ") = " << to_string(w.alpha2(k)) << "\n";
    });
    for_each_index(w.order, [&w](const MultiIndex& k) {
        std::cout << "beta2(" << k.k1 << "," << k.k2
                  << ") = " << to_string(w.beta2(k)) << "\n";
    });
    return 0;
}

int run_roundtrip(const Options& opt) {
    AtomicMeasure mu = measure_of(opt);
    GroebnerBasis gb = groebner_of_relations(mu);
    VarietyPoints pts = solve_variety(gb);
    std::vector<Atom> atoms = mu.atoms();
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    bool ok = atoms == pts.points;
    std::cout << "ROUNDTRIP: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact moment-matrix relations, Groebner bases and atom recovery "
                 "for finitely atomic planar measures"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd, bool needs_measure, bool needs_degree,
                             bool takes_poly = false) {
        auto* m = cmd->add_option("--measure", opt.measure_path,
                                  "measure file: lines \"<lambda> <x> <y>\"");
        if (needs_measure) m->required()->check(CLI::ExistingFile);
        if (needs_degree)
            cmd->add_option("--degree", opt.degree, "truncation degree")
                ->required()
                ->check(CLI::NonNegativeNumber);
        if (takes_poly)
            cmd->add_option("--poly", opt.polys, "polynomial in x and y");
        cmd->add_flag("--normalize", opt.normalize,
                      "divide densities by their total");
        return cmd;
    };

    auto* c_moments = add_common(app.add_subcommand("moments", "moments up to a degree"), true, true);
    auto* c_matrix = add_common(app.add_subcommand("matrix", "moment matrix"), true, true);
    auto* c_vander = add_common(app.add_subcommand("vandermonde", "Vandermonde-like matrix"), true, true);
    auto* c_rel = add_common(app.add_subcommand("relations", "recursive relations"), true, true);
    auto* c_groeb = add_common(app.add_subcommand("groebner", "reduced Groebner basis of the relation ideal"), true, false);
    c_groeb->add_option("--order", opt.order, "monomial order")
        ->check(CLI::IsMember({"lex", "grlex"}));
    auto* c_verify = add_common(app.add_subcommand("verify", "check a proposed relation"), true, true, true);
    c_verify->get_option("--poly")->required();
    auto* c_variety = add_common(app.add_subcommand("variety", "recover the atoms"), false, false, true);
    c_variety->add_option("--densities", opt.densities,
                          "comma list of densities for measure reconstruction");
    auto* c_extend = add_common(app.add_subcommand("extend", "block-extend the moment matrix by one degree"), true, true);
    auto* c_weights = add_common(app.add_subcommand("weights", "squared shift weights"), true, true);
    auto* c_round = add_common(app.add_subcommand("roundtrip", "measure -> basis -> variety -> compare"), true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (c_moments->parsed()) return run_moments(opt);
        if (c_matrix->parsed()) return run_matrix(opt);
        if (c_vander->parsed()) return run_vandermonde(opt);
        if (c_rel->parsed()) return run_relations(opt);
        if (c_groeb->parsed()) return run_groebner(opt);
        if (c_verify->parsed()) return run_verify(opt);
        if (c_variety->parsed()) {
            if (opt.polys.empty() && opt.measure_path.empty()) {
                std::cerr << "error: variety needs --measure or --poly\n";
                return 2;
            }
            return run_variety(opt);
        }
        if (c_extend->parsed()) return run_extend(opt);
        if (c_weights->parsed()) return run_weights(opt);
        if (c_round->parsed()) return run_roundtrip(opt);
    } catch (const momideal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

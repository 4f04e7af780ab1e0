// Python bindings. Rationals cross the boundary as fractions.Fraction; the
// conversion goes through the exact "p/q" string form in both directions.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "momideal/errors.hpp"
#include "momideal/linalg.hpp"
#include "momideal/measure.hpp"
#include "momideal/poly.hpp"
#include "momideal/rational.hpp"
#include "momideal/relations.hpp"
#include "momideal/shift.hpp"
#include "momideal/variety.hpp"

namespace py = pybind11;
using namespace momideal;

namespace pybind11::detail {

template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (src.is_none()) return false;
        if (!PyLong_Check(src.ptr())) {
            handle type = py::type::handle_of(src);
            std::string name = py::str(type.attr("__name__"));
            if (name != "Fraction" && name != "int") return false;
        }
        try {
            value = rational_from_string(std::string(py::str(src)));
        } catch (const std::invalid_argument&) {
            return false;
        }
        return true;
    }

    static handle cast(const Rational& q, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(to_string(q)).release();
    }
};

}  // namespace pybind11::detail

namespace {

std::vector<std::vector<Rational>> matrix_to_lists(const RatMatrix& m) {
    std::vector<std::vector<Rational>> out(m.rows(),
                                           std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
    return out;
}

RatMatrix matrix_from_lists(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw DimensionMismatch("matrix needs at least one row and column");
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.front().size())
            throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact moment-matrix relations, Groebner bases and atom recovery "
              "for finitely atomic planar measures";

    py::register_exception<Error>(m, "MomidealError", PyExc_ValueError);

    py::enum_<MonomialOrder>(m, "MonomialOrder")
        .value("LEX", MonomialOrder::Lex)
        .value("GRLEX", MonomialOrder::Grlex);

    py::class_<Monomial>(m, "Monomial")
        .def(py::init<unsigned, unsigned>(), py::arg("ex") = 0, py::arg("ey") = 0)
        .def_readonly("ex", &Monomial::ex)
        .def_readonly("ey", &Monomial::ey)
        .def_property_readonly("total_degree", &Monomial::total_degree)
        .def("__str__", &Monomial::to_string)
        .def("__repr__", [](const Monomial& v) { return "Monomial(" + v.to_string() + ")"; })
        .def(py::self == py::self)
        .def(py::self * py::self);

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](const std::string& text) { return parse_polynomial(text); }))
        .def_static("term", &Polynomial::term)
        .def("is_zero", &Polynomial::is_zero)
        .def_property_readonly("total_degree", &Polynomial::total_degree)
        .def("coeff", &Polynomial::coeff)
        .def("coefficients",
             [](const Polynomial& p) {
                 py::dict d;
                 for (const auto& [mono, c] : p.terms())
                     d[py::make_tuple(mono.ex, mono.ey)] = py::cast(c);
                 return d;
             })
        .def("leading_term", &Polynomial::leading_term, py::arg("order"))
        .def("evaluate", &Polynomial::evaluate, py::arg("x"), py::arg("y"))
        .def("monic", &Polynomial::monic, py::arg("order"))
        .def("primitive_integer_form", &Polynomial::primitive_integer_form,
             py::arg("order"))
        .def("to_string", &Polynomial::to_string,
             py::arg("order") = MonomialOrder::Lex)
        .def("__str__", [](const Polynomial& p) { return p.to_string(); })
        .def("__repr__",
             [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self);

    py::class_<GroebnerBasis>(m, "GroebnerBasis")
        .def(py::init<std::vector<Polynomial>, MonomialOrder, bool>(),
             py::arg("polys"), py::arg("order") = MonomialOrder::Lex,
             py::arg("reduced") = false)
        .def_readonly("polys", &GroebnerBasis::polys)
        .def_readonly("order", &GroebnerBasis::order)
        .def_readonly("reduced", &GroebnerBasis::reduced)
        .def(py::self == py::self);

    py::class_<RatMatrix>(m, "RatMatrix")
        .def(py::init(&matrix_from_lists))
        .def_property_readonly("rows", &RatMatrix::rows)
        .def_property_readonly("cols", &RatMatrix::cols)
        .def("at", [](const RatMatrix& m_, std::size_t i, std::size_t j) {
            return m_.at(i, j);
        })
        .def("to_lists", &matrix_to_lists)
        .def("__str__", [](const RatMatrix& m_) { return to_string(m_); })
        .def(py::self == py::self);

    py::class_<AtomicMeasure>(m, "AtomicMeasure")
        .def(py::init<std::vector<Atom>, std::vector<Rational>, bool>(),
             py::arg("atoms"), py::arg("densities"), py::arg("normalize") = false)
        .def_property_readonly("atoms", &AtomicMeasure::atoms)
        .def_property_readonly("densities", &AtomicMeasure::densities)
        .def_property_readonly("atom_count", &AtomicMeasure::atom_count)
        .def("__str__", [](const AtomicMeasure& mu) { return to_text(mu); })
        .def(py::self == py::self);

    py::class_<RelationSet>(m, "RelationSet")
        .def_readonly("degree_bound", &RelationSet::degree_bound)
        .def_readonly("relations", &RelationSet::relations)
        .def_readonly("source_measure", &RelationSet::source_measure);

    py::class_<ExtensionMatrix>(m, "ExtensionMatrix")
        .def_readonly("C", &ExtensionMatrix::C)
        .def_readonly("k", &ExtensionMatrix::k);

    py::class_<VarietyPoints>(m, "VarietyPoints")
        .def_readonly("points", &VarietyPoints::points);

    py::class_<WeightFamily>(m, "WeightFamily")
        .def_readonly("order", &WeightFamily::order)
        .def("alpha2",
             [](const WeightFamily& w, unsigned k1, unsigned k2) {
                 return w.alpha2({k1, k2});
             })
        .def("beta2", [](const WeightFamily& w, unsigned k1, unsigned k2) {
            return w.beta2({k1, k2});
        });

    // poly
    m.def("parse_polynomial",
          [](const std::string& text) { return parse_polynomial(text); });
    m.def("divide",
          [](const Polynomial& f, const std::vector<Polynomial>& divisors,
             MonomialOrder ord) {
              auto r = divide(f, divisors, ord);
              return py::make_tuple(r.quotients, r.remainder);
          },
          py::arg("f"), py::arg("divisors"), py::arg("order"));
    m.def("s_polynomial", &s_polynomial, py::arg("f"), py::arg("g"), py::arg("order"));
    m.def("buchberger", &buchberger, py::arg("generators"), py::arg("order"));
    m.def("reduce_basis", &reduce_basis);
    m.def("ideal_membership", &ideal_membership, py::arg("f"), py::arg("basis"));
    m.def("is_groebner_basis", &is_groebner_basis);
    m.def("standard_monomials", [](const GroebnerBasis& basis) {
        return standard_monomials(basis);
    });

    // linalg
    m.def("rref", [](const RatMatrix& m_) {
        auto r = rref(m_);
        return py::make_tuple(r.matrix, r.pivot_columns, r.rank);
    });
    m.def("kernel_basis", &kernel_basis);
    m.def("psd_check", &psd_check);
    m.def("matmul", &matmul);
    m.def("transpose", &transpose);
    m.def("block_compose", &block_compose, py::arg("top_left"),
          py::arg("top_right"), py::arg("bottom_left"), py::arg("bottom_right"));

    // measure
    m.def("parse_measure",
          [](const std::string& text, bool normalize) {
              return parse_measure(text, normalize);
          },
          py::arg("text"), py::arg("normalize") = false);
    m.def("moment",
          [](const AtomicMeasure& mu, unsigned k1, unsigned k2) {
              return moment(mu, {k1, k2});
          },
          py::arg("mu"), py::arg("k1"), py::arg("k2"));
    m.def("monomial_basis", &monomial_basis, py::arg("k"));
    m.def("moment_matrix", &moment_matrix, py::arg("mu"), py::arg("k"));
    m.def("vandermonde", &vandermonde, py::arg("mu"), py::arg("k"));

    // relations
    m.def("recursive_relations", &recursive_relations, py::arg("mu"), py::arg("k"));
    m.def("verify_relation", &verify_relation, py::arg("mu"), py::arg("k"),
          py::arg("p"));
    m.def("check_recursively_generated", &check_recursively_generated,
          py::arg("mu"), py::arg("k"));
    m.def("groebner_of_relations", &groebner_of_relations, py::arg("mu"),
          py::arg("order") = MonomialOrder::Lex);
    m.def("lift_relations", &lift_relations);
    m.def("extension_matrix", &extension_matrix);
    m.def("extend_moment_matrix", &extend_moment_matrix, py::arg("m_k"),
          py::arg("ext"));

    // variety
    m.def("solve_variety", &solve_variety);
    m.def("measure_from_points", &measure_from_points, py::arg("points"),
          py::arg("densities"), py::arg("normalize") = false);
    m.def("positivity_screen", &positivity_screen);

    // shift
    m.def("weights_from_measure", &weights_from_measure, py::arg("mu"), py::arg("n"));
    m.def("moments_from_weights",
          [](const WeightFamily& w, unsigned k1, unsigned k2) {
              return moments_from_weights(w, {k1, k2});
          },
          py::arg("w"), py::arg("k1"), py::arg("k2"));
    m.def("commutativity_check", &commutativity_check);
}

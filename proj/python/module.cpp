/// Python bindings. Every entry point speaks text: algebras, data, pairs and
/// matrices travel in the same line-oriented formats the CLI reads and
/// writes, scalars travel as exact literals ("-3/7"), and structured results
/// come back as plain dicts. Mathematical check failures raise AxiomFailure;
/// malformed input raises ValueError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "liext/catalog.hpp"
#include "liext/enumerate.hpp"
#include "liext/error.hpp"
#include "liext/extending.hpp"
#include "liext/io.hpp"
#include "liext/report.hpp"
#include "liext/twder.hpp"

namespace py = pybind11;
using namespace liext;

namespace {

std::vector<std::string> vec_strings(const Vec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Scalar& c : v) out.push_back(c.str());
    return out;
}

py::dict report_dict(const AxiomReport& report) {
    py::dict d;
    d["passed"] = report.passed();
    d["report"] = report.str();
    return d;
}

LieAlgebra alg(const std::string& text) { return parse_algebra(text); }

py::dict census_dict(const Census& census) {
    py::dict d;
    d["raw"] = census.raw_count;
    d["valid"] = census.valid_count;
    d["cross_check_failures"] = census.cross_check_failures;
    d["orbits_equiv"] = census.orbit_count_equiv;
    d["orbits_cohom"] = census.orbit_count_cohom;
    return d;
}

SearchSpec make_spec(long p, const std::string& g_name, std::size_t dimv, std::size_t threads) {
    SearchSpec spec{catalog(g_name, FieldSpec::prime(p)), dimv};
    spec.threads = threads;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact solver for Lie algebra extension problems: axiom checking, "
        "twisted derivations, unified/twisted/crossed/bicrossed products and "
        "finite-field enumeration. All structures travel as text in the same "
        "formats the command-line tool uses.";

    // Translators run newest-first, so the base class goes in first and the
    // most specific exception last.
    py::register_exception<Error>(m, "SolverError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<AxiomError>(m, "AxiomFailure");

    m.def("catalog_names", [] { return catalog_names(); },
          "Names of the built-in algebras.");

    m.def(
        "catalog_algebra",
        [](const std::string& name, const std::string& field) {
            return serialize_algebra(catalog(name, FieldSpec::parse(field)));
        },
        py::arg("name"), py::arg("field") = "Q",
        "Serialize a built-in algebra over the given field ('Q' or 'F<p>').");

    m.def(
        "check",
        [](const std::string& text) {
            const LieAlgebra l = alg(text);
            py::dict d = report_dict(check_lie(l));
            d["name"] = l.name();
            d["dim"] = l.dim();
            d["field"] = l.field().str();
            return d;
        },
        py::arg("algebra"),
        "Check the alternating and Jacobi laws of an algebra given as text.");

    m.def(
        "derivation_dims",
        [](const std::string& text) {
            const LieAlgebra l = alg(text);
            py::dict d;
            d["der"] = derivations(l).dim();
            d["inner"] = inner_derivations(l).dim();
            d["outer"] = outer_dimension(l);
            return d;
        },
        py::arg("algebra"), "Dimensions of the derivation, inner and outer spaces.");

    m.def(
        "lambda_dim",
        [](const std::string& text) { return lambda_space(alg(text)).dim(); },
        py::arg("algebra"),
        "Dimension of the space of functionals vanishing on brackets.");

    m.def(
        "dspace_dim",
        [](const std::string& text, const std::string& lambda_csv) {
            const LieAlgebra l = alg(text);
            return dspace_for_lambda(l, parse_scalar_list(lambda_csv, l.field())).dim();
        },
        py::arg("algebra"), py::arg("lam"),
        "Dimension of the twisted-derivation space for one functional "
        "(comma-separated coordinates).");

    m.def(
        "check_pair",
        [](const std::string& text, const std::string& pair) {
            const LieAlgebra l = alg(text);
            const TwistedDerivation t = parse_twder_pair(pair, l);
            return report_dict(check_twisted_derivation(l, t.lambda, t.d));
        },
        py::arg("algebra"), py::arg("pair"),
        "Check the two twisted-derivation laws of a (lambda, D) pair file.");

    m.def(
        "equivalent",
        [](const std::string& text, const std::string& pair_a,
           const std::string& pair_b) -> py::object {
            const LieAlgebra l = alg(text);
            const std::optional<EquivalenceWitness> w =
                twder_equivalent(l, parse_twder_pair(pair_a, l), parse_twder_pair(pair_b, l));
            if (!w) return py::none();
            py::dict d;
            d["q"] = w->q.str();
            d["g0"] = vec_strings(w->g0);
            return d;
        },
        py::arg("algebra"), py::arg("pair_a"), py::arg("pair_b"),
        "Witness (q, g0) relating two pairs up to scaling and inner shift, or None.");

    m.def(
        "cohomologous",
        [](const std::string& text, const std::string& pair_a,
           const std::string& pair_b) -> py::object {
            const LieAlgebra l = alg(text);
            const std::optional<Vec> g0 =
                twder_cohomologous(l, parse_twder_pair(pair_a, l), parse_twder_pair(pair_b, l));
            if (!g0) return py::none();
            return py::cast(vec_strings(*g0));
        },
        py::arg("algebra"), py::arg("pair_a"), py::arg("pair_b"),
        "Inner shift g0 relating two pairs with the scale pinned to 1, or None.");

    m.def(
        "codim1",
        [](const std::string& text, const std::string& lambda_csv, const std::string& matrix) {
            const LieAlgebra l = alg(text);
            return serialize_algebra(codim1_product(l, parse_scalar_list(lambda_csv, l.field()),
                                                    parse_matrix_rows(matrix, l.field())));
        },
        py::arg("algebra"), py::arg("lam"), py::arg("matrix"),
        "One-line extension of an algebra by a (lambda, D) pair, as text.");

    m.def(
        "product",
        [](const std::string& datum_text, const std::string& kind) {
            const ExtendingDatum d = parse_datum(datum_text);
            const LieAlgebra v = LieAlgebra::from_tensor(d.g().name() + ".v", d.vbracket());
            if (kind == "unified") return serialize_algebra(unified_product(d));
            if (kind == "twisted")
                return serialize_algebra(twisted_product(d.g(), v, d.cocycle()));
            if (kind == "crossed")
                return serialize_algebra(crossed_product(d.g(), v, d.raction(), d.cocycle()));
            if (kind == "bicrossed")
                return serialize_algebra(bicrossed_product(d.g(), v, d.laction(), d.raction()));
            throw Error("unknown product kind '" + kind + "'");
        },
        py::arg("datum"), py::arg("kind") = "unified",
        "Assemble a product algebra from a datum file: kind is 'unified', "
        "'twisted', 'crossed' or 'bicrossed'.");

    m.def(
        "extract",
        [](const std::string& text, std::size_t gdim) {
            return serialize_datum(extract_datum(alg(text), gdim));
        },
        py::arg("algebra"), py::arg("gdim"),
        "Datum of an algebra relative to its leading coordinate block, as text.");

    m.def(
        "census",
        [](long p, const std::string& g_name, std::size_t dimv, const std::string& relation,
           std::size_t threads) {
            const SearchSpec spec = make_spec(p, g_name, dimv, threads);
            if (relation.empty())
                return census_dict(enumerate_extending_structures(spec).census);
            if (relation == "equiv") return census_dict(orbit_census(spec, Relation::equiv));
            if (relation == "cohom") return census_dict(orbit_census(spec, Relation::cohom));
            throw Error("unknown relation '" + relation + "'");
        },
        py::arg("p"), py::arg("g"), py::arg("dimv") = 1, py::arg("relation") = "",
        py::arg("threads") = 1,
        "Exhaustive census over F_p on a built-in base algebra; relation "
        "'equiv' or 'cohom' additionally counts orbits.");

    m.def(
        "bijection",
        [](long p, const std::string& g_name) {
            const BijectionReport r = verify_unifdim1_bijection(catalog(g_name, FieldSpec::prime(p)));
            py::dict d;
            d["data"] = r.datum_count;
            d["pairs"] = r.pair_count;
            d["match"] = r.match;
            return d;
        },
        py::arg("p"), py::arg("g"),
        "Compare one-line data with (lambda, D) pairs over F_p; match means "
        "the two enumerations coincide.");
}

#include "fintop/census.hpp"
#include "fintop/closure.hpp"
#include "fintop/error.hpp"
#include "fintop/initial.hpp"
#include "fintop/io.hpp"
#include "fintop/subspace.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace fintop;

namespace {

// Python sees subsets as frozensets of point labels.
PointSet to_set(Carrier c, const py::iterable& points)
{
    Mask m = 0;
    for (const auto& item : points) {
        const long p = item.cast<long>();
        if (p < 0 || p >= static_cast<long>(c.size()))
            throw PreconditionError("point " + std::to_string(p) + " outside carrier of size "
                                    + std::to_string(c.size()));
        m |= Mask{1} << p;
    }
    return PointSet(c, m);
}

py::frozenset from_set(const PointSet& s)
{
    py::set out;
    for (Point p : s.elements())
        out.add(p);
    return py::frozenset(out);
}

py::list from_sets(const std::vector<PointSet>& sets)
{
    py::list out;
    for (const auto& s : sets)
        out.append(from_set(s));
    return out;
}

std::vector<PointSet> to_sets(Carrier c, const py::iterable& family)
{
    std::vector<PointSet> out;
    for (const auto& item : family)
        out.push_back(to_set(c, py::reinterpret_borrow<py::iterable>(item)));
    return out;
}

std::vector<std::string> violations(const ViolationReport& r)
{
    return r.lines();
}

Topology make_topology(unsigned n, const py::iterable& opens)
{
    const Carrier c(n);
    const auto v = validate(c, to_sets(c, opens));
    if (!v)
        throw PreconditionError("not a topology: " + v.report().lines().front());
    return v.value();
}

ClosureOperator make_operator(unsigned n, const py::iterable& table)
{
    const Carrier c(n);
    const auto v = validate_kuratowski(c, to_sets(c, table));
    if (!v)
        throw PreconditionError("not a closure operator: " + v.report().lines().front());
    return v.value();
}

py::tuple subspace_result(const SubspaceView& view)
{
    return py::make_tuple(view.sub(), view.embed());
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Finite topological spaces: subspaces, closure operators, initial topologies.";

    auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<CarrierMismatch>(m, "CarrierMismatch", error);
    py::register_exception<PreconditionError>(m, "PreconditionError", error);
    py::register_exception<NotRelativelyOpen>(m, "NotRelativelyOpen", error);
    py::register_exception<PartialTable>(m, "PartialTable", error);
    py::register_exception<LimitExceeded>(m, "LimitExceeded", error);
    py::register_exception<ParseError>(m, "ParseError", error);

    m.attr("MAX_POINTS") = Carrier::kMaxSize;

    py::class_<Topology>(m, "Topology")
        .def(py::init(&make_topology), py::arg("n"), py::arg("opens"),
             "Validate a family of subsets of {0..n-1}; raises PreconditionError if it is not a topology.")
        .def_static("discrete", [](unsigned n) { return Topology::discrete(Carrier(n)); })
        .def_static("indiscrete", [](unsigned n) { return Topology::indiscrete(Carrier(n)); })
        .def_static("from_json", [](const std::string& text) { return parse_topology(text); })
        .def_property_readonly("n", [](const Topology& t) { return t.carrier().size(); })
        .def_property_readonly("opens", [](const Topology& t) { return from_sets(t.opens()); })
        .def("is_open", [](const Topology& t, const py::iterable& a) { return t.is_open(to_set(t.carrier(), a)); })
        .def("is_closed",
             [](const Topology& t, const py::iterable& a) { return t.is_closed(to_set(t.carrier(), a)); })
        .def("closure",
             [](const Topology& t, const py::iterable& a) { return from_set(closure_of(t, to_set(t.carrier(), a))); })
        .def("interior",
             [](const Topology& t, const py::iterable& a) { return from_set(interior_of(t, to_set(t.carrier(), a))); })
        .def("closed_sets", [](const Topology& t) { return from_sets(closed_sets(t)); })
        .def("to_json", &emit_topology)
        .def("__len__", &Topology::size)
        .def("__eq__", [](const Topology& a, const Topology& b) { return a == b; })
        .def("__hash__", [](const Topology& t) { return py::hash(py::str(emit_topology(t))); })
        .def("__repr__", [](const Topology& t) { return "Topology(" + emit_topology(t) + ")"; });

    py::class_<ClosureOperator>(m, "ClosureOperator")
        .def(py::init(&make_operator), py::arg("n"), py::arg("table"),
             "Validate a closure table indexed by subset bitmask; raises PreconditionError on a failed axiom.")
        .def_static("from_topology", &closure_from_topology)
        .def_property_readonly("n", [](const ClosureOperator& op) { return op.carrier().size(); })
        .def_property_readonly("table", [](const ClosureOperator& op) {
            py::list out;
            for (Mask m : op.table())
                out.append(from_set(PointSet(op.carrier(), m)));
            return out;
        })
        .def("__call__",
             [](const ClosureOperator& op, const py::iterable& a) { return from_set(op(to_set(op.carrier(), a))); })
        .def("topology", &topology_from_closure)
        .def("to_json", &emit_operator)
        .def("__eq__", [](const ClosureOperator& a, const ClosureOperator& b) { return a == b; });

    py::class_<FiniteFunction>(m, "Function")
        .def(py::init([](unsigned dom, unsigned cod, std::vector<Point> table) {
                 return FiniteFunction(Carrier(dom), Carrier(cod), std::move(table));
             }),
             py::arg("dom_n"), py::arg("cod_n"), py::arg("table"))
        .def_static("from_json", [](const std::string& text) { return parse_function(text); })
        .def_property_readonly("dom_n", [](const FiniteFunction& f) { return f.dom().size(); })
        .def_property_readonly("cod_n", [](const FiniteFunction& f) { return f.cod().size(); })
        .def_property_readonly("table", &FiniteFunction::table)
        .def_property_readonly("injective", &FiniteFunction::is_injective)
        .def_property_readonly("surjective", &FiniteFunction::is_surjective)
        .def("__call__", [](const FiniteFunction& f, Point p) { return f(p); })
        .def("preimage",
             [](const FiniteFunction& f, const py::iterable& a) { return from_set(preimage(f, to_set(f.cod(), a))); })
        .def("to_json", &emit_function)
        .def("__eq__", [](const FiniteFunction& a, const FiniteFunction& b) { return a == b; });

    m.def(
        "validate",
        [](unsigned n, const py::iterable& family) {
            const Carrier c(n);
            const auto v = validate(c, to_sets(c, family));
            return v ? std::vector<std::string>{} : violations(v.report());
        },
        py::arg("n"), py::arg("family"), "Axiom violations with their least witnesses; empty for a topology.");
    m.def(
        "validate_kuratowski",
        [](unsigned n, const py::iterable& table) {
            const Carrier c(n);
            const auto v = validate_kuratowski(c, to_sets(c, table));
            return v ? std::vector<std::string>{} : violations(v.report());
        },
        py::arg("n"), py::arg("table"));

    m.def("is_finer", &is_finer, py::arg("t1"), py::arg("t2"));
    m.def("is_continuous", &is_continuous, py::arg("f"), py::arg("t_dom"), py::arg("t_cod"));

    m.def(
        "subspace",
        [](const Topology& t, const py::iterable& y) { return subspace_result(subspace_topology(t, to_set(t.carrier(), y))); },
        py::arg("t"), py::arg("y"), "Returns (relative topology relabeled onto 0..|Y|-1, embedding list).");
    m.def(
        "subspace_canonical",
        [](const Topology& t, const py::iterable& y) {
            const CanonicalSubspace c = subspace_topology_canonical(t, to_set(t.carrier(), y));
            return py::make_tuple(c.view.sub(), c.view.embed(), c.certificate.lines());
        },
        py::arg("t"), py::arg("y"));
    m.def(
        "subspace_via_closure",
        [](const Topology& t, const py::iterable& y) { return subspace_result(subspace_via_closure(t, to_set(t.carrier(), y))); },
        py::arg("t"), py::arg("y"));
    m.def(
        "maximal_open_representative",
        [](const Topology& t, const py::iterable& y, const py::iterable& v) {
            return from_set(maximal_open_representative(t, to_set(t.carrier(), y), to_set(t.carrier(), v)));
        },
        py::arg("t"), py::arg("y"), py::arg("v"));

    m.def(
        "initial_topology",
        [](const Topology& tX, const FiniteFunction& f, const std::string& method) {
            if (method == "direct")
                return initial_topology_direct(tX, f);
            if (method == "image")
                return initial_topology_via_image(tX, f);
            if (method == "closure")
                return initial_topology_via_closure(tX, f);
            throw PreconditionError("unknown method '" + method + "' (expected direct, image or closure)");
        },
        py::arg("t_cod"), py::arg("f"), py::arg("method") = "direct");
    m.def(
        "verify_weakest",
        [](const Topology& tX, const FiniteFunction& f, const Topology& tY) {
            const WeakestVerdict v = verify_weakest(tX, f, tY);
            return py::make_tuple(v.holds, v.describe());
        },
        py::arg("t_cod"), py::arg("f"), py::arg("t_dom"));

    m.def(
        "census",
        [](unsigned n, const std::string& method) { return enumerate(n, parse_census_method(method)).topologies; },
        py::arg("n"), py::arg("method") = "brute", "Every labeled topology on n points, in canonical order.");
    m.def(
        "random_topology",
        [](unsigned n, std::uint64_t seed, std::optional<unsigned> k) {
            return k ? random_topology(n, seed, *k) : random_topology(n, seed);
        },
        py::arg("n"), py::arg("seed"), py::arg("k") = py::none());
}

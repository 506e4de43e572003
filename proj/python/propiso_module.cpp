// Python bindings for the propiso core: parsing, semantics, canonical forms
// and both isomorphism deciders.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "propiso/canon.hpp"
#include "propiso/construct.hpp"
#include "propiso/formula.hpp"
#include "propiso/linking.hpp"
#include "propiso/oracle.hpp"
#include "propiso/semantics.hpp"

namespace py = pybind11;
using namespace propiso;

namespace {

std::vector<std::pair<int, int>> rel_list(const TypedRelArrow& arrow) {
    return {arrow.rel.begin(), arrow.rel.end()};
}

std::vector<std::string> trace_list(const RewriteTrace& trace) {
    std::vector<std::string> out;
    out.reserve(trace.size());
    for (const auto& step : trace) out.push_back(step_text(step));
    return out;
}

py::dict witness_dict(const IsoWitness& w) {
    py::dict d;
    d["f"] = rel_list(w.f);
    d["g"] = rel_list(w.g);
    d["gf_is_identity"] = w.gf_is_identity;
    d["fg_is_identity"] = w.fg_is_identity;
    return d;
}

}  // namespace

PYBIND11_MODULE(propiso_core, m) {
    m.doc() = "decision procedures for isomorphism of propositional formulae";

    py::register_exception<Error>(m, "PropisoError");

    py::class_<Formula>(m, "Formula")
        .def_static("parse", &parse, py::arg("text"))
        .def("__str__", &print)
        .def("__repr__", [](const Formula& f) { return "Formula('" + print(f) + "')"; })
        .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
        .def("__hash__", [](const Formula& f) { return py::hash(py::str(print(f))); });

    m.def("parse", &parse, py::arg("text"));
    m.def("print_formula", &print, py::arg("formula"));
    m.def("letters", &letters, py::arg("formula"));
    m.def("is_diversified", &is_diversified, py::arg("formula"));
    m.def("is_neg_reduced", &is_neg_reduced, py::arg("formula"));
    m.def(
        "occurrences",
        [](const Formula& f) {
            std::vector<std::tuple<int, std::string, std::optional<std::string>>> out;
            for (const auto& o : occurrences(f)) {
                std::optional<std::string> pol;
                if (o.polarity)
                    pol = *o.polarity == Polarity::Positive ? "pos" : "neg";
                out.emplace_back(o.index, o.letter, pol);
            }
            return out;
        },
        py::arg("formula"));
    m.def("substitute", &substitute, py::arg("formula"), py::arg("letter"),
          py::arg("replacement"));
    m.def(
        "signed_counts",
        [](const Formula& f) {
            std::map<std::pair<std::string, std::string>, int> out;
            for (const auto& [key, n] : signed_counts(f))
                out[{key.first, key.second == Polarity::Positive ? "pos" : "neg"}] = n;
            return out;
        },
        py::arg("formula"));

    m.def("is_tautology", &is_tautology, py::arg("formula"),
          py::arg("max_letters") = kDefaultMaxLetters);
    m.def("are_equivalent", &are_equivalent, py::arg("a"), py::arg("b"),
          py::arg("max_letters") = kDefaultMaxLetters);

    m.def(
        "nnf",
        [](const Formula& f) {
            auto [reduced, trace] = nnf(f);
            return std::make_pair(reduced, trace_list(trace));
        },
        py::arg("formula"));
    m.def(
        "canonical", [](const Formula& f) { return render(ac_canonical(f)); },
        py::arg("formula"));
    m.def("is_theorem_av", &is_theorem_av, py::arg("a"), py::arg("b"));
    m.def("is_theorem_nav", &is_theorem_nav, py::arg("a"), py::arg("b"));
    m.def(
        "derive", [](const Formula& a, const Formula& b) { return trace_list(derive(a, b)); },
        py::arg("a"), py::arg("b"));

    m.def(
        "decide_iso_boolean",
        [](const Formula& a, const Formula& b, int max_letters) {
            IsoVerdict v = decide_iso_boolean(a, b, max_letters);
            py::dict d;
            d["iso"] = v.iso;
            d["reason"] = v.reason;
            if (v.witness) d["witness"] = witness_dict(*v.witness);
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("max_letters") = kDefaultMaxLetters);
    m.def(
        "decide_iso_generality",
        [](const Formula& a, const Formula& b) {
            GeneralityVerdict v = decide_iso_generality(a, b);
            py::dict d;
            d["iso"] = v.iso;
            d["reason"] = v.reason;
            if (v.trace) d["trace"] = trace_list(*v.trace);
            if (v.bijection) d["bijection"] = rel_list(*v.bijection);
            return d;
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "generalize",
        [](const Formula& a, const Formula& b, const std::string& links) {
            GeneralizeResult r =
                generalize(a, b, parse_links(links, occurrence_count(a), occurrence_count(b)));
            return std::make_tuple(r.a1, r.b1, r.substitution);
        },
        py::arg("a"), py::arg("b"), py::arg("links"));

    m.def(
        "oracle_theorem",
        [](const Formula& a, const Formula& b, int depth) {
            return oracle_theorem(a, b, depth) == OracleAnswer::Yes ? "yes" : "unknown";
        },
        py::arg("a"), py::arg("b"), py::arg("depth") = 4);
}

// Pybind11 bindings for the knotforge core. Diagrams and reports cross the
// boundary as JSON strings or plain lists; polynomials as [exponent, coeff]
// pairs with Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotforge/annulus.hpp"
#include "knotforge/cache.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/invariants.hpp"
#include "knotforge/io.hpp"
#include "knotforge/obstruction.hpp"
#include "knotforge/openbook.hpp"

namespace py = pybind11;
namespace kf = knotforge;

namespace {

py::object py_int(const kf::BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.to_string());
}

py::list poly_pairs(const kf::LaurentPoly& p) {
    py::list out;
    for (const auto& [e, c] : p.terms()) {
        py::tuple t = py::make_tuple(e, py_int(c));
        out.append(t);
    }
    return out;
}

kf::PlanarDiagram diagram_from_pd_list(const std::vector<std::array<int, 4>>& pd,
                                       const std::string& name) {
    return kf::PlanarDiagram::from_pd(pd, name);
}

py::list pd_list(const kf::PlanarDiagram& d) {
    py::list out;
    for (const kf::Crossing& c : d.crossings())
        out.append(py::make_tuple(c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]));
    return out;
}

py::object fraction(const kf::Rational& r) {
    auto frac = py::module_::import("fractions").attr("Fraction");
    return frac(r.num().to_string() + "/" + r.den().to_string());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact knot invariants, annulus twist families, and slice-ribbon "
              "obstructions";

    py::register_exception<kf::input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<kf::math_error>(m, "MathError", PyExc_ArithmeticError);

    py::class_<kf::PlanarDiagram>(m, "PlanarDiagram")
        .def_static("from_pd", &diagram_from_pd_list, py::arg("pd"), py::arg("name") = "")
        .def_static("parse", &kf::PlanarDiagram::parse, py::arg("text"), py::arg("name") = "")
        .def_static("unknot", &kf::PlanarDiagram::unknot, py::arg("name") = "unknot")
        .def_property_readonly("name", &kf::PlanarDiagram::name)
        .def_property_readonly("crossing_count", &kf::PlanarDiagram::crossing_count)
        .def_property_readonly("arc_count", &kf::PlanarDiagram::arc_count)
        .def("pd", &pd_list)
        .def("writhe", &kf::PlanarDiagram::writhe)
        .def("mirror", &kf::PlanarDiagram::mirrored)
        .def("reverse", &kf::PlanarDiagram::reversed)
        .def("simplify", [](const kf::PlanarDiagram& d) { return kf::simplified(d); })
        .def("same_diagram", &kf::PlanarDiagram::same_diagram)
        .def("to_json", [](const kf::PlanarDiagram& d) { return kf::diagram_to_json(d).dump(); })
        .def("__repr__", [](const kf::PlanarDiagram& d) {
            return "<PlanarDiagram '" + d.name() + "' with " +
                   std::to_string(d.crossing_count()) + " crossings>";
        });

    m.def("connected_sum", &kf::connected_sum);
    m.def("diagram_from_json", [](const std::string& s) {
        return kf::diagram_from_json(kf::json::parse(s));
    });

    m.def("kauffman_bracket",
          [](const kf::PlanarDiagram& d) { return poly_pairs(kf::kauffman_bracket(d)); },
          "Kauffman bracket as [exponent, coefficient] pairs in A");
    m.def("jones", [](const kf::PlanarDiagram& d) { return poly_pairs(kf::jones(d).in_t()); },
          "Jones polynomial as [exponent, coefficient] pairs in t");
    m.def("alexander",
          [](const kf::PlanarDiagram& d) { return poly_pairs(kf::alexander(d).poly()); },
          "Alexander polynomial (unit normal form) as [exponent, coefficient] pairs");
    m.def("determinant",
          [](const kf::PlanarDiagram& d) { return py_int(kf::determinant(d)); });

    m.def("family_63", [](int n) { return kf::family_63(n); }, py::arg("n"),
          "n-fold annulus twist of the built-in presentation of 6_3");
    m.def("annulus_twist_json", [](const std::string& ap_json, int n) {
        kf::AnnulusPresentation ap = kf::annulus_from_json(kf::json::parse(ap_json));
        return kf::diagram_to_json(kf::annulus_twist(ap, n)).dump();
    });
    m.def("annulus_presentation_63_json",
          [] { return kf::annulus_to_json(kf::annulus_presentation_63()).dump(); });

    m.def("word_for_An", [](int n) {
        py::list out;
        for (const kf::TwistLetter& l : kf::word_for_An(n).letters)
            out.append(py::make_tuple(l.curve.name, l.exponent));
        return out;
    });
    m.def("alexander_from_monodromy", [](int n) {
        return poly_pairs(kf::alexander_from_monodromy(kf::word_for_An(n)).poly());
    });
    m.def("homological_action", [](int n) { return kf::homological_action(kf::word_for_An(n)); });
    m.def("signature", &kf::signature);
    m.def("d3_family", [](int n) { return fraction(kf::family_d3(n)); });
    m.def("d3", [](const std::string& surgery_json) {
        return fraction(kf::d3(kf::surgery_from_json(kf::json::parse(surgery_json))));
    });
    m.def("same_fibered_knot", &kf::same_fibered_knot);

    m.def("ribbon_check",
          [](const kf::PlanarDiagram& d0, const kf::PlanarDiagram& d1, bool fibered0,
             bool fibered1) {
              auto cert = [&](const kf::PlanarDiagram& d, bool fib, const char* fallback) {
                  return kf::make_certificate(
                      d, d.name().empty() ? fallback : d.name(),
                      fib ? std::optional<kf::FiberednessSource>(
                                kf::FiberednessSource::KnotTable)
                          : std::nullopt);
              };
              kf::KnotCertificate c0 = cert(d0, fibered0, "K0");
              kf::KnotCertificate c1 = cert(d1, fibered1, "K1");
              if (c0.jones != c1.jones) {
                  c0.distinctness_evidence = kf::DistinctnessEvidence::JonesMismatch;
                  c1.distinctness_evidence = kf::DistinctnessEvidence::JonesMismatch;
              }
              return kf::verdict_to_json(kf::miyazaki_verdict(c0, c1)).dump();
          },
          py::arg("k0"), py::arg("k1"), py::arg("fibered0") = true, py::arg("fibered1") = true);
    m.def("dichotomy", [](int n, int m2) {
        return kf::dichotomy_to_json(kf::dichotomy_report(n, m2)).dump();
    });

    m.attr("__version__") = kf::kToolVersion;
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rgcr/enumerate.hpp"
#include "rgcr/geometry.hpp"
#include "rgcr/gluing.hpp"
#include "rgcr/signatures.hpp"

namespace py = pybind11;
using namespace rgcr;

namespace {

std::string rational_str(const BigRational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

SurfaceMap map_from_text(const std::string& text) {
    std::istringstream in(text);
    return from_gluing(parse_diagram(in));
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Tiling signatures, hyperbolic polygon geometry and diagram "
                "verifiers for alternating links on thickened surfaces";

    py::register_exception<SearchTooLarge>(mod, "SearchTooLargeError");
    py::register_exception<ParseError>(mod, "DiagramParseError");
    py::register_exception<GluingError>(mod, "GluingError");
    py::register_exception<MapError>(mod, "MapError");

    py::class_<TilingSignature>(mod, "TilingSignature")
        .def(py::init<int, int, int, std::optional<long long>, std::optional<long long>>(),
             py::arg("genus"), py::arg("n"), py::arg("m"), py::arg("k_n") = py::none(),
             py::arg("k_m") = py::none())
        .def_readonly("genus", &TilingSignature::genus)
        .def_readonly("n", &TilingSignature::n)
        .def_readonly("m", &TilingSignature::m)
        .def_readonly("k_n", &TilingSignature::k_n)
        .def_readonly("k_m", &TilingSignature::k_m)
        .def("euclidean", &TilingSignature::euclidean)
        .def("__eq__", [](const TilingSignature& a, const TilingSignature& b) { return a == b; })
        .def("__repr__", [](const TilingSignature& s) {
            std::ostringstream os;
            os << "TilingSignature(genus=" << s.genus << ", n=" << s.n << ", m=" << s.m;
            if (s.k_n) os << ", k_n=" << *s.k_n << ", k_m=" << *s.k_m;
            os << ")";
            return os.str();
        });

    mod.def("enumerate_signatures", &enumerate_signatures, py::arg("genus"));
    mod.def("signature_from_pair", &signature_from_pair, py::arg("genus"), py::arg("n"),
            py::arg("m"));
    mod.def("special_case_k1", &special_case_k1, py::arg("genus"));
    mod.def("euclidean_signature", &euclidean_signature, py::arg("n"), py::arg("m"),
            py::arg("scale") = 1);
    mod.def(
        "count_bounds",
        [](int genus) {
            const auto b = count_bounds(genus);
            return py::make_tuple(rational_str(b.pair_bound), rational_str(b.link_bound));
        },
        py::arg("genus"), "Exact (pair_bound, link_bound) as 'num/den' strings");

    py::class_<PolygonGeometry>(mod, "PolygonGeometry")
        .def_readonly("sides", &PolygonGeometry::sides)
        .def_readonly("alpha", &PolygonGeometry::alpha)
        .def_readonly("edge_length", &PolygonGeometry::edge_length)
        .def_readonly("area", &PolygonGeometry::area)
        .def_readonly("flat", &PolygonGeometry::flat);

    py::class_<WedgeAngles>(mod, "WedgeAngles")
        .def_readonly("A", &WedgeAngles::A)
        .def_readonly("B", &WedgeAngles::B)
        .def_readonly("C", &WedgeAngles::C)
        .def_readonly("D", &WedgeAngles::D)
        .def_readonly("E", &WedgeAngles::E)
        .def_readonly("F", &WedgeAngles::F);

    mod.def("interior_angles", &interior_angles, py::arg("n"), py::arg("m"));
    mod.def("polygon_geometry", &polygon_geometry, py::arg("sides"), py::arg("alpha"));
    mod.def("gauss_bonnet_residual", &gauss_bonnet_residual, py::arg("signature"));
    mod.def("wedge_angles", &wedge_angles, py::arg("n"), py::arg("alpha"));
    mod.def("dihedral_check", &dihedral_check, py::arg("alpha_n"), py::arg("alpha_m"));
    mod.def("regular_cross_ratio", &regular_cross_ratio, py::arg("x"));

    py::class_<TwoCutWitness>(mod, "TwoCutWitness")
        .def_readonly("edge_a", &TwoCutWitness::edge_a)
        .def_readonly("edge_b", &TwoCutWitness::edge_b)
        .def_readonly("face_a", &TwoCutWitness::face_a)
        .def_readonly("face_b", &TwoCutWitness::face_b)
        .def_readonly("disk_vertices", &TwoCutWitness::disk_vertices);

    py::class_<SurfaceMap>(mod, "SurfaceMap")
        .def(py::init<std::vector<Dart>, std::vector<Dart>>(), py::arg("rotation"),
             py::arg("involution"))
        .def_static("from_diagram_text", &map_from_text, py::arg("text"))
        .def_property_readonly("dart_count", &SurfaceMap::dart_count)
        .def_property_readonly("vertex_count", &SurfaceMap::vertex_count)
        .def_property_readonly("edge_count", &SurfaceMap::edge_count)
        .def_property_readonly("face_count", &SurfaceMap::face_count)
        .def("connected", &SurfaceMap::connected)
        .def("genus", &SurfaceMap::genus)
        .def("vertex_pattern", &SurfaceMap::vertex_pattern, py::arg("n"), py::arg("m"))
        .def("face_vector", &SurfaceMap::face_vector)
        .def("checkerboard",
             [](const SurfaceMap& m) -> std::optional<std::vector<int>> {
                 auto res = m.checkerboard();
                 if (!res.ok()) return std::nullopt;
                 return res.coloring->color;
             })
        .def("components", &SurfaceMap::components)
        .def("weakly_prime",
             [](const SurfaceMap& m) {
                 auto res = m.weakly_prime();
                 return py::make_tuple(res.weakly_prime,
                                       res.witness ? py::cast(*res.witness) : py::none());
             })
        .def("gear_shift_edge_classes",
             [](const SurfaceMap& m) {
                 auto res = m.checkerboard();
                 if (!res.ok()) throw MapError("map is not checkerboard colorable");
                 return m.gear_shift_edge_classes(*res.coloring);
             })
        .def("canonical_form",
             [](const SurfaceMap& m, bool mirror_quotient) {
                 auto bytes = m.canonical_form(mirror_quotient);
                 return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
             },
             py::arg("mirror_quotient") = true)
        .def("mirrored", &SurfaceMap::mirrored);

    mod.def("maps_isomorphic", &maps_isomorphic, py::arg("a"), py::arg("b"),
            py::arg("mirror_quotient") = true);

    py::class_<DiagramReport>(mod, "DiagramReport")
        .def_readonly("genus", &DiagramReport::genus)
        .def_readonly("face_vector", &DiagramReport::face_vector)
        .def_readonly("vertex_pattern_ok", &DiagramReport::vertex_pattern_ok)
        .def_readonly("colorable", &DiagramReport::colorable)
        .def_readonly("cellular", &DiagramReport::cellular)
        .def_readonly("weakly_prime", &DiagramReport::weakly_prime)
        .def_readonly("witness", &DiagramReport::witness)
        .def_readonly("components", &DiagramReport::components)
        .def_readonly("edge_class_sizes", &DiagramReport::edge_class_sizes);

    mod.def(
        "verify_diagram_text",
        [](const std::string& text) { return verify_map(map_from_text(text)); },
        py::arg("text"));

    py::class_<EnumeratedDiagram>(mod, "EnumeratedDiagram")
        .def_property_readonly("canonical",
                               [](const EnumeratedDiagram& d) {
                                   return py::bytes(
                                       reinterpret_cast<const char*>(d.canonical.data()),
                                       d.canonical.size());
                               })
        .def_property_readonly("diagram_text",
                               [](const EnumeratedDiagram& d) { return diagram_to_string(d.gluing); })
        .def_readonly("report", &EnumeratedDiagram::report);

    mod.def(
        "enumerate_diagrams",
        [](const TilingSignature& sig, int max_edges, bool mirror_quotient) {
            SearchLimits limits;
            limits.max_edges = max_edges;
            auto res = enumerate_diagrams(sig, limits, mirror_quotient);
            return py::make_tuple(res.diagrams, res.knot_count);
        },
        py::arg("signature"), py::arg("max_edges") = 24, py::arg("mirror_quotient") = true);
    mod.def(
        "find_knots",
        [](const TilingSignature& sig, int max_edges, bool mirror_quotient) {
            SearchLimits limits;
            limits.max_edges = max_edges;
            return find_knots(sig, limits, mirror_quotient);
        },
        py::arg("signature"), py::arg("max_edges") = 24, py::arg("mirror_quotient") = true);
}

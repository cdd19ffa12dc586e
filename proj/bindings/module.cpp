// Python bindings for the core operations: coordinate conversion and
// validation, intersection numbers, diagram reconstruction, family
// generation, and SVG rendering.  Puncture counts cross the boundary as
// plain ints; transit kinds and loop sides as strings.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <lamkit/coords.hpp>
#include <lamkit/intersection.hpp>
#include <lamkit/oracle.hpp>
#include <lamkit/render.hpp>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace lamkit;

namespace {

std::string join(const std::vector<Coord>& values) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
  out << "]";
  return out.str();
}

const char* side_name(LoopSide side) {
  switch (side) {
    case LoopSide::None: return "none";
    case LoopSide::Left: return "left";
    case LoopSide::Right: return "right";
  }
  return "?";  // unreachable
}

const char* kind_name(TransitKind kind) {
  switch (kind) {
    case TransitKind::Above: return "above";
    case TransitKind::Below: return "below";
    case TransitKind::LeftLoop: return "left_loop";
    case TransitKind::RightLoop: return "right_loop";
  }
  return "?";  // unreachable
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact coordinates, intersection numbers and drawings of integral laminations "
            "on the n-punctured disk";

  py::class_<TriangleCoords>(m, "TriangleCoords")
      .def(py::init([](int n, std::vector<Coord> alpha, std::vector<Coord> beta) {
             return TriangleCoords(PunctureCount(n), std::move(alpha), std::move(beta));
           }),
           "n"_a, "alpha"_a, "beta"_a)
      .def_property_readonly("n", [](const TriangleCoords& t) { return t.n.value(); })
      .def_readonly("alpha", &TriangleCoords::alpha)
      .def_readonly("beta", &TriangleCoords::beta)
      .def(py::self == py::self)
      .def("__repr__", [](const TriangleCoords& t) {
        return "TriangleCoords(n=" + std::to_string(t.n.value()) + ", alpha=" + join(t.alpha) +
               ", beta=" + join(t.beta) + ")";
      });

  py::class_<DynnikovCoords>(m, "DynnikovCoords")
      .def(py::init([](int n, std::vector<Coord> a, std::vector<Coord> b) {
             return DynnikovCoords(PunctureCount(n), std::move(a), std::move(b));
           }),
           "n"_a, "a"_a, "b"_a)
      .def_property_readonly("n", [](const DynnikovCoords& d) { return d.n.value(); })
      .def_readonly("a", &DynnikovCoords::a)
      .def_readonly("b", &DynnikovCoords::b)
      .def("is_zero", &DynnikovCoords::is_zero)
      .def(py::self == py::self)
      .def("__repr__", [](const DynnikovCoords& d) {
        return "DynnikovCoords(n=" + std::to_string(d.n.value()) + ", a=" + join(d.a) +
               ", b=" + join(d.b) + ")";
      });

  py::class_<RelaxedCurve>(m, "RelaxedCurve")
      .def(py::init([](int n, int i, int j) { return RelaxedCurve(PunctureCount(n), i, j); }),
           "n"_a, "i"_a, "j"_a)
      .def_property_readonly("n", [](const RelaxedCurve& c) { return c.n.value(); })
      .def_readonly("i", &RelaxedCurve::i)
      .def_readonly("j", &RelaxedCurve::j)
      .def(py::self == py::self)
      .def("__repr__", [](const RelaxedCurve& c) {
        return "RelaxedCurve(n=" + std::to_string(c.n.value()) + ", i=" + std::to_string(c.i) +
               ", j=" + std::to_string(c.j) + ")";
      });

  py::class_<IntervalFamily>(m, "IntervalFamily")
      .def(py::init([](int n, const std::vector<std::tuple<int, int, Coord>>& components) {
             std::vector<IntervalFamily::Component> cs;
             cs.reserve(components.size());
             for (const auto& [i, j, mult] : components) cs.push_back({i, j, mult});
             return IntervalFamily(PunctureCount(n), std::move(cs));
           }),
           "n"_a, "components"_a)
      .def_property_readonly("n", [](const IntervalFamily& f) { return f.n.value(); })
      .def_property_readonly("components",
                             [](const IntervalFamily& f) {
                               std::vector<std::tuple<int, int, Coord>> out;
                               for (const auto& c : f.components) out.emplace_back(c.i, c.j, c.mult);
                               return out;
                             })
      .def(py::self == py::self)
      .def("__repr__", [](const IntervalFamily& f) {
        std::ostringstream out;
        out << "IntervalFamily(n=" << f.n.value() << ", components=[";
        for (std::size_t i = 0; i < f.components.size(); ++i)
          out << (i ? ", " : "") << "(" << f.components[i].i << ", " << f.components[i].j << ", "
              << f.components[i].mult << ")";
        out << "])";
        return out.str();
      });

  py::class_<StripStats>(m, "StripStats")
      .def_readonly("index", &StripStats::index)
      .def_readonly("b", &StripStats::b)
      .def_property_readonly("side", [](const StripStats& s) { return side_name(s.side); })
      .def_readonly("above", &StripStats::above)
      .def_readonly("below", &StripStats::below)
      .def_readonly("m", &StripStats::m)
      .def_readonly("x", &StripStats::x)
      .def("__repr__", [](const StripStats& s) {
        std::ostringstream out;
        out << "StripStats(index=" << s.index << ", b=" << s.b << ", side='" << side_name(s.side)
            << "', above=" << s.above << ", below=" << s.below << ", m=" << s.m << ", x=" << s.x
            << ")";
        return out.str();
      });

  py::class_<Transit>(m, "Transit")
      .def_readonly("region", &Transit::region)
      .def_property_readonly("kind", [](const Transit& t) { return kind_name(t.kind); })
      .def_readonly("lane", &Transit::lane)
      .def(py::self == py::self)
      .def("__repr__", [](const Transit& t) {
        std::ostringstream out;
        out << "Transit(region=" << t.region << ", kind='" << kind_name(t.kind)
            << "', lane=" << t.lane << ")";
        return out.str();
      });

  py::class_<CurveDiagram>(m, "CurveDiagram")
      .def_property_readonly("n", [](const CurveDiagram& d) { return d.n.value(); })
      .def_readonly("components", &CurveDiagram::components)
      .def(py::self == py::self)
      .def("__repr__", [](const CurveDiagram& d) {
        return "CurveDiagram(n=" + std::to_string(d.n.value()) + ", " +
               std::to_string(d.components.size()) + " components)";
      });

  m.def("dynnikov_from_triangle", &dynnikov_from_triangle, "t"_a,
        "Reduced coordinates of a valid triangle vector.");
  m.def("triangle_from_dynnikov", &triangle_from_dynnikov, "d"_a,
        "Triangle coordinates of a nonzero reduced vector.");
  m.def(
      "validate_triangle",
      [](const TriangleCoords& t) {
        std::vector<std::tuple<std::string, int, std::string>> out;
        for (const Violation& v : validate_triangle(t))
          out.emplace_back(v.invariant, v.index, v.detail);
        return out;
      },
      "t"_a, "Violated invariants as (invariant, index, detail) tuples; empty when valid.");
  m.def("strip_stats", &strip_stats, "t"_a, "i"_a, "Strand census of one strip.");
  m.def("relaxed_curve_dynnikov", &relaxed_curve_dynnikov, "c"_a,
        "Reduced coordinates of a round curve.");
  m.def(
      "span_counts",
      [](const TriangleCoords& t, int i, int j) {
        const SpanCounts s = span_counts(t, i, j);
        return py::make_tuple(s.above, s.below, s.sum);
      },
      "t"_a, "i"_a, "j"_a,
      "Strands crossing strips i..j in one pass, as (above, below, total).");
  m.def("intersect_relaxed", &intersect_relaxed, "t"_a, "c"_a,
        "Geometric intersection number of a lamination with a round curve.");
  m.def("intersect_relaxed_family", &intersect_relaxed_family, "t"_a, "f"_a,
        "Sum of intersection numbers over a curve family, with multiplicity.");
  m.def("intersect_d3", &intersect_d3, "t1"_a, "t2"_a,
        "Geometric intersection number of two laminations on the 3-punctured disk.");
  m.def("reconstruct", &reconstruct, "t"_a, "Explicit curve diagram of a valid lamination.");
  m.def("diagram_triangle", &diagram_triangle, "d"_a, "Recounted coordinates of a diagram.");
  m.def("open_components_in_range", &open_components_in_range, "d"_a, "i"_a, "j"_a,
        "Open pieces of the diagram restricted to strips i..j.");
  m.def("family_triangle", &family_triangle, "f"_a, "Coordinates of a disjoint curve family.");
  m.def("linking_intersection", &linking_intersection, "f"_a, "c"_a,
        "First-principles intersection count from interval linking.");
  m.def("random_family", [](int n, int max_components, std::uint64_t seed) {
          return random_family(PunctureCount(n), max_components, seed);
        },
        "n"_a, "max_components"_a, "seed"_a, "Seed-reproducible random laminar family.");
  m.def(
      "render_svg",
      [](const CurveDiagram& d, int width, int height, bool show_arcs, bool show_labels,
         const std::string& strand_color) {
        RenderOptions o;
        o.width = width;
        o.height = height;
        o.show_arcs = show_arcs;
        o.show_labels = show_labels;
        o.strand_color = strand_color;
        return render_svg(d, o);
      },
      "d"_a, "width"_a = 900, "height"_a = 600, "show_arcs"_a = true, "show_labels"_a = true,
      "strand_color"_a = "#0b5394", "SVG 1.1 document text for a curve diagram.");
}

// Unit tests for the SVG renderer: component grouping, determinism, and
// option handling.  Well-formedness as XML is additionally checked by the
// Python smoke tests with a real parser.
#include <doctest.h>

#include <lamkit/intersection.hpp>
#include <lamkit/oracle.hpp>
#include <lamkit/render.hpp>

#include <stdexcept>
#include <string>

using namespace lamkit;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

CurveDiagram diagram_of_family(int n, std::vector<IntervalFamily::Component> components) {
    return reconstruct(family_triangle(IntervalFamily(PunctureCount(n), std::move(components))));
}

}  // namespace

TEST_CASE("one path group per component") {
    std::string one = render_svg(diagram_of_family(4, {{1, 2, 1}}));
    CHECK(count_occurrences(one, "class=\"component\"") == 1);
    CHECK(count_occurrences(one, "<path ") == 1);

    std::string two = render_svg(diagram_of_family(4, {{1, 2, 2}}));
    CHECK(count_occurrences(two, "class=\"component\"") == 2);

    TriangleCoords sample(PunctureCount(5), {2, 6, 3, 5, 4, 4}, {4, 8, 8, 4});
    std::string sample_svg = render_svg(reconstruct(sample));
    CHECK(count_occurrences(sample_svg, "class=\"component\"") ==
          reconstruct(sample).components.size());
}

TEST_CASE("rendering is deterministic") {
    CurveDiagram d = diagram_of_family(5, {{1, 2, 2}, {3, 5, 1}});
    RenderOptions o;
    CHECK(render_svg(d, o) == render_svg(d, o));
}

TEST_CASE("document frame and options") {
    CurveDiagram d = diagram_of_family(4, {{1, 2, 1}});
    RenderOptions o;
    o.width = 640;
    o.height = 480;
    std::string svg = render_svg(d, o);

    CHECK(svg.rfind("<?xml version=\"1.0\"", 0) == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" "
                   "height=\"480\"") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<ellipse ") != std::string::npos);
    CHECK(count_occurrences(svg, "class=\"arcs\"") == 1);
    CHECK(count_occurrences(svg, "class=\"labels\"") == 1);

    o.show_arcs = false;
    o.show_labels = false;
    std::string bare = render_svg(d, o);
    CHECK(count_occurrences(bare, "class=\"arcs\"") == 0);
    CHECK(count_occurrences(bare, "class=\"labels\"") == 0);
    CHECK(count_occurrences(bare, "class=\"component\"") == 1);
}

TEST_CASE("stroke options are applied and escaped") {
    CurveDiagram d = diagram_of_family(4, {{1, 2, 1}});
    RenderOptions o;
    o.strand_color = "#ff0000";
    std::string svg = render_svg(d, o);
    CHECK(svg.find("stroke=\"#ff0000\"") != std::string::npos);

    o.strand_color = "a\"b<c";
    std::string escaped = render_svg(d, o);
    CHECK(escaped.find("a\"b<c") == std::string::npos);
    CHECK(escaped.find("a&quot;b&lt;c") != std::string::npos);
}

TEST_CASE("invalid dimensions are rejected") {
    CurveDiagram d = diagram_of_family(4, {{1, 2, 1}});
    RenderOptions o;
    o.width = 0;
    CHECK_THROWS_AS(render_svg(d, o), std::invalid_argument);
    o.width = 900;
    o.height = -5;
    CHECK_THROWS_AS(render_svg(d, o), std::invalid_argument);
}

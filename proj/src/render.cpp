#include "lamkit/render.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

namespace lamkit {

namespace {

// Fixed two-decimal formatting through std::to_chars: locale-independent,
// so identical input yields byte-identical documents everywhere.
std::string fmt(double v) {
  if (v > -0.005 && v < 0) v = 0;  // avoid "-0.00"
  std::array<char, 32> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::fixed, 2);
  (void)ec;
  return std::string(buf.data(), end);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Layout {
  int n;
  double cx, cy, rx, ry;
  double spacing;              // horizontal distance between punctures
  double pitch;                // vertical distance between adjacent lanes
  std::vector<double> punc_x;  // 1-based
  std::vector<double> arc_x;   // 1-based, vertical arc k between punctures k, k+1
  std::vector<Coord> beta;     // 1-based crossing counts per vertical arc

  double chord_half(double x) const {
    const double u = (x - cx) / rx;
    return ry * std::sqrt(std::max(0.0, 1.0 - u * u));
  }
  double lane_y(int arc, Coord lane) const {
    return cy + (static_cast<double>(lane) - (static_cast<double>(beta[arc]) + 1) / 2.0) * pitch;
  }
};

Layout make_layout(const TriangleCoords& t, const RenderOptions& o) {
  Layout l;
  l.n = t.n.value();
  const double w = o.width, h = o.height;
  const double margin = std::max(4.0, 0.04 * std::min(w, h));
  l.cx = w / 2;
  l.cy = h / 2;
  l.rx = w / 2 - margin;
  l.ry = h / 2 - margin;
  l.spacing = 2 * l.rx / (l.n + 1);

  l.punc_x.assign(l.n + 1, 0.0);
  for (int p = 1; p <= l.n; ++p) l.punc_x[p] = l.cx - l.rx + l.spacing * p;
  l.arc_x.assign(l.n, 0.0);
  l.beta.assign(l.n, 0);
  Coord max_beta = 1;
  double min_half = l.ry;
  for (int k = 1; k <= l.n - 1; ++k) {
    l.arc_x[k] = (l.punc_x[k] + l.punc_x[k + 1]) / 2;
    l.beta[k] = t.beta[k - 1];
    max_beta = std::max(max_beta, l.beta[k]);
    min_half = std::min(min_half, l.chord_half(l.arc_x[k]));
  }
  l.pitch = 1.8 * min_half / (static_cast<double>(max_beta) + 1);
  return l;
}

// How far past its puncture a loop reaches, as a fraction of the puncture
// spacing: deeper (more nested) loops stay closer so apexes never collide.
double loop_extent(Coord pairs, Coord depth_from_outer) {
  const double L = static_cast<double>(std::max<Coord>(pairs, 1));
  const double inset = static_cast<double>(pairs - depth_from_outer);  // 0 = innermost
  return 0.15 + 0.25 * inset / L;
}

}  // namespace

std::string render_svg(const CurveDiagram& d, const RenderOptions& o) {
  if (o.width <= 0 || o.height <= 0)
    throw std::invalid_argument("render dimensions must be positive");

  // Recounting validates the diagram's structure and gives the per-arc and
  // per-strip strand census that drives the layout.
  const TriangleCoords t = diagram_triangle(d);
  const int n = t.n.value();
  const Layout l = make_layout(t, o);

  std::vector<Coord> strip_above(n, 0), strip_loops(n, 0);  // 1-based strips
  for (int k = 1; k <= n - 2; ++k) {
    const StripStats s = strip_stats(t, k);
    strip_above[k] = s.above;
    strip_loops[k] = checked_abs(s.b);
  }

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(o.width) + "\" height=\"" + std::to_string(o.height) + "\" viewBox=\"0 0 " +
         std::to_string(o.width) + " " + std::to_string(o.height) + "\">\n";
  svg += "<ellipse cx=\"" + fmt(l.cx) + "\" cy=\"" + fmt(l.cy) + "\" rx=\"" + fmt(l.rx) +
         "\" ry=\"" + fmt(l.ry) + "\" fill=\"none\" stroke=\"" + xml_escape(o.boundary_color) +
         "\" stroke-width=\"" + xml_escape(o.boundary_width) + "\"/>\n";

  if (o.show_arcs) {
    svg += "<g class=\"arcs\" fill=\"none\" stroke=\"" + xml_escape(o.arc_color) +
           "\" stroke-width=\"" + xml_escape(o.arc_width) + "\" stroke-dasharray=\"4 3\">\n";
    for (int k = 1; k <= n - 1; ++k) {
      const double x = l.arc_x[k];
      const double half = l.chord_half(x);
      svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(l.cy - half) + "\" x2=\"" + fmt(x) +
             "\" y2=\"" + fmt(l.cy + half) + "\"/>\n";
    }
    for (int p = 2; p <= n - 1; ++p) {  // the up/down arcs at each inner puncture
      const double x = l.punc_x[p];
      const double half = l.chord_half(x);
      svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(l.cy - half) + "\" x2=\"" + fmt(x) +
             "\" y2=\"" + fmt(l.cy) + "\"/>\n";
      svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(l.cy) + "\" x2=\"" + fmt(x) + "\" y2=\"" +
             fmt(l.cy + half) + "\"/>\n";
    }
    svg += "</g>\n";
  }

  if (o.show_labels) {
    svg += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#555555\">\n";
    for (int p = 1; p <= n; ++p)
      svg += "<text x=\"" + fmt(l.punc_x[p] - 3) + "\" y=\"" + fmt(l.cy + 16) + "\">" +
             std::to_string(p) + "</text>\n";
    if (o.show_arcs) {
      for (int k = 1; k <= n - 1; ++k)
        svg += "<text x=\"" + fmt(l.arc_x[k] - 5) + "\" y=\"" +
               fmt(l.cy - l.chord_half(l.arc_x[k]) - 4) + "\">b" + std::to_string(k) + "</text>\n";
      for (int p = 2; p <= n - 1; ++p) {
        const double x = l.punc_x[p];
        svg += "<text x=\"" + fmt(x + 3) + "\" y=\"" + fmt(l.cy - l.chord_half(x) + 12) + "\">a" +
               std::to_string(2 * (p - 1) - 1) + "</text>\n";
        svg += "<text x=\"" + fmt(x + 3) + "\" y=\"" + fmt(l.cy + l.chord_half(x) - 6) + "\">a" +
               std::to_string(2 * (p - 1)) + "</text>\n";
      }
    }
    svg += "</g>\n";
  }

  // Strands: one closed path per component, through its transit entry points.
  int component_id = 0;
  for (const std::vector<Transit>& component : d.components) {
    ++component_id;
    const std::size_t m = component.size();
    // Entry arc of each transit: the arc between it and the previous region.
    std::vector<int> entry_arc(m);
    std::vector<double> px(m), py(m);
    for (std::size_t idx = 0; idx < m; ++idx) {
      const Transit& prev = component[(idx + m - 1) % m];
      entry_arc[idx] = std::max(component[idx].region, prev.region);
      px[idx] = l.arc_x[entry_arc[idx]];
      py[idx] = l.lane_y(entry_arc[idx], component[idx].lane);
    }

    std::string path = "M " + fmt(px[0]) + " " + fmt(py[0]);
    for (std::size_t idx = 0; idx < m; ++idx) {
      const Transit& tr = component[idx];
      const std::size_t next = (idx + 1) % m;
      const double x1 = px[idx], y1 = py[idx];
      const double x2 = px[next], y2 = py[next];
      if (tr.kind == TransitKind::Above || tr.kind == TransitKind::Below) {
        const double mx = (x1 + x2) / 2;
        path += " C " + fmt(mx) + " " + fmt(y1) + ", " + fmt(mx) + " " + fmt(y2) + ", " + fmt(x2) +
                " " + fmt(y2);
      } else {
        // Loop around a puncture: the wrapped puncture is the strip's own for
        // strip regions, or the end puncture for the end regions.
        const int punc = tr.region == 0 ? 1 : tr.region == n - 1 ? n : tr.region + 1;
        Coord pairs, from_top;
        if (tr.region == 0 || tr.region == n - 1) {
          pairs = l.beta[entry_arc[idx]] / 2;
          from_top = tr.lane;
        } else {
          pairs = strip_loops[tr.region];
          from_top = tr.lane - strip_above[tr.region];
        }
        const Coord depth = std::min(from_top, 2 * pairs + 1 - from_top);
        const double extent = loop_extent(pairs, depth) * l.spacing;
        const double apex = tr.kind == TransitKind::RightLoop ? l.punc_x[punc] + extent
                                                              : l.punc_x[punc] - extent;
        const double c = x1 + (apex - x1) * 4.0 / 3.0;
        path += " C " + fmt(c) + " " + fmt(y1) + ", " + fmt(c) + " " + fmt(y2) + ", " + fmt(x2) +
                " " + fmt(y2);
      }
    }
    path += " Z";
    svg += "<g class=\"component\" id=\"component-" + std::to_string(component_id) +
           "\"><path d=\"" + path + "\" fill=\"none\" stroke=\"" + xml_escape(o.strand_color) +
           "\" stroke-width=\"" + xml_escape(o.strand_width) +
           "\" stroke-linecap=\"round\"/></g>\n";
  }

  // Punctures last so they sit on top of the strands.
  svg += "<g class=\"punctures\" fill=\"#000000\">\n";
  for (int p = 1; p <= n; ++p)
    svg += "<circle cx=\"" + fmt(l.punc_x[p]) + "\" cy=\"" + fmt(l.cy) + "\" r=\"3\"/>\n";
  svg += "</g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace lamkit

// Deterministic SVG drawings of curve diagrams in the standard disk model:
// punctures evenly spaced on a horizontal axis inside an ellipse, the
// reference arcs as vertical chords, and one smooth closed path per
// component of the lamination.  Lane indices map to vertical offsets (a
// fixed pitch derived from the busiest arc), so distinct strands never
// overlap; loops bulge horizontally past the puncture they wrap, nested by
// their depth.  Output is byte-identical for identical input and options.

#pragma once

#include <string>

#include "lamkit/oracle.hpp"

namespace lamkit {

struct RenderOptions {
  int width = 900;
  int height = 600;
  bool show_arcs = true;
  bool show_labels = true;
  std::string strand_color = "#0b5394";
  std::string strand_width = "1.6";
  std::string arc_color = "#b0b0b0";
  std::string arc_width = "1";
  std::string boundary_color = "#333333";
  std::string boundary_width = "1.5";
};

// SVG 1.1 document text for the diagram.  Throws std::invalid_argument for
// non-positive dimensions or an inconsistent diagram.
std::string render_svg(const CurveDiagram& d, const RenderOptions& o = {});

}  // namespace lamkit

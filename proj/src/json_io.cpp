#include "lamkit/json_io.hpp"

#include <cstdint>
#include <limits>
#include <utility>

namespace lamkit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

Coord coord_value(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) {
    const std::uint64_t u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<Coord>::max()))
      throw ParseError(where + " does not fit in a signed 64-bit integer");
    return static_cast<Coord>(u);
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  throw ParseError(where + " must be an integer");
}

int int_value(const json& j, const std::string& where) {
  const Coord v = coord_value(j, where);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(where + " is out of range");
  return static_cast<int>(v);
}

std::vector<Coord> coord_array(const json& j, const char* name) {
  const json& arr = field(j, name);
  if (!arr.is_array()) throw ParseError(std::string("field \"") + name + "\" must be an array");
  std::vector<Coord> out;
  out.reserve(arr.size());
  for (std::size_t idx = 0; idx < arr.size(); ++idx)
    out.push_back(coord_value(arr[idx], std::string(name) + "[" + std::to_string(idx) + "]"));
  return out;
}

// The puncture count and the vector lengths frame the format itself, so
// their failures count as malformed input rather than invalid coordinates.
PunctureCount puncture_count_field(const json& j) {
  const int n = int_value(field(j, "n"), "n");
  try {
    return PunctureCount(n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

const char* kind_name(TransitKind k) {
  switch (k) {
    case TransitKind::Above: return "above";
    case TransitKind::Below: return "below";
    case TransitKind::LeftLoop: return "left_loop";
    case TransitKind::RightLoop: return "right_loop";
  }
  return "?";  // unreachable
}

}  // namespace

ordered_json to_json(const TriangleCoords& t) {
  return ordered_json{{"n", t.n.value()}, {"alpha", t.alpha}, {"beta", t.beta}};
}

ordered_json to_json(const DynnikovCoords& d) {
  return ordered_json{{"n", d.n.value()}, {"a", d.a}, {"b", d.b}};
}

ordered_json to_json(const RelaxedCurve& c) {
  return ordered_json{{"n", c.n.value()}, {"i", c.i}, {"j", c.j}};
}

ordered_json to_json(const IntervalFamily& f) {
  ordered_json components = ordered_json::array();
  for (const IntervalFamily::Component& c : f.components)
    components.push_back(ordered_json{{"i", c.i}, {"j", c.j}, {"mult", c.mult}});
  return ordered_json{{"n", f.n.value()}, {"components", std::move(components)}};
}

ordered_json to_json(const CurveDiagram& d) {
  const int n = d.n.value();
  ordered_json components = ordered_json::array();
  for (const std::vector<Transit>& component : d.components) {
    ordered_json transits = ordered_json::array();
    for (const Transit& tr : component) {
      ordered_json strip;
      if (tr.region == 0)
        strip = "L";
      else if (tr.region == n - 1)
        strip = "R";
      else
        strip = tr.region;
      transits.push_back(
          ordered_json{{"strip", std::move(strip)}, {"kind", kind_name(tr.kind)}, {"lane", tr.lane}});
    }
    components.push_back(std::move(transits));
  }
  return ordered_json{{"n", n}, {"components", std::move(components)}};
}

TriangleCoords triangle_from_json(const json& j) {
  PunctureCount n = puncture_count_field(j);
  try {
    return TriangleCoords(n, coord_array(j, "alpha"), coord_array(j, "beta"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());  // wrong vector lengths
  }
}

DynnikovCoords dynnikov_from_json(const json& j) {
  PunctureCount n = puncture_count_field(j);
  try {
    return DynnikovCoords(n, coord_array(j, "a"), coord_array(j, "b"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

RelaxedCurve curve_from_json(const json& j) {
  PunctureCount n = puncture_count_field(j);
  // Index rules are domain rules: let the constructor's error through.
  return RelaxedCurve(n, int_value(field(j, "i"), "i"), int_value(field(j, "j"), "j"));
}

IntervalFamily family_from_json(const json& j) {
  PunctureCount n = puncture_count_field(j);
  const json& arr = field(j, "components");
  if (!arr.is_array()) throw ParseError("field \"components\" must be an array");
  std::vector<IntervalFamily::Component> components;
  components.reserve(arr.size());
  for (const json& c : arr) {
    components.push_back({int_value(field(c, "i"), "component i"),
                          int_value(field(c, "j"), "component j"),
                          coord_value(field(c, "mult"), "component mult")});
  }
  return IntervalFamily(n, std::move(components));
}

AnyCoords coords_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const bool triangle = j.contains("alpha") || j.contains("beta");
  const bool dynnikov = j.contains("a") || j.contains("b");
  if (triangle && !dynnikov) return triangle_from_json(j);
  if (dynnikov && !triangle) return dynnikov_from_json(j);
  throw ParseError(
      "cannot tell the coordinate form: expected fields alpha/beta or a/b, not both or neither");
}

json parse_line(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("not valid JSON: ") + e.what());
  }
}

}  // namespace lamkit

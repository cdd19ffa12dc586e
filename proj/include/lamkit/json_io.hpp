// JSON (de)serialization for every value the command-line tools exchange.
//
// All values travel as single-line JSON objects with a fixed field order:
//
//   triangle coordinates   {"n":5,"alpha":[2,6,3,5,4,4],"beta":[4,8,8,4]}
//   Dynnikov coordinates   {"n":5,"a":[2,1,0],"b":[-2,0,2]}
//   relaxed curve          {"n":5,"i":2,"j":4}
//   interval family        {"n":5,"components":[{"i":2,"j":4,"mult":1}]}
//   curve diagram          {"n":4,"components":[[{"strip":1,"kind":"right_loop","lane":1},
//                           {"strip":"L","kind":"left_loop","lane":2}]]}
//
// In diagrams, "strip" is the region the transit passes through: a strip
// index 1..n-2, or "L"/"R" for the end regions.  Unknown fields are ignored
// on input; entries must be integers (no floats, no values beyond 64 bits).
//
// Structural problems (bad JSON, missing fields, wrong types or lengths)
// raise ParseError; domain rules (curve index ranges, laminarity, coordinate
// validity) keep their own exceptions from the underlying constructors.

#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <variant>

#include "lamkit/coords.hpp"
#include "lamkit/intersection.hpp"
#include "lamkit/oracle.hpp"

namespace lamkit {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

nlohmann::ordered_json to_json(const TriangleCoords& t);
nlohmann::ordered_json to_json(const DynnikovCoords& d);
nlohmann::ordered_json to_json(const RelaxedCurve& c);
nlohmann::ordered_json to_json(const IntervalFamily& f);
nlohmann::ordered_json to_json(const CurveDiagram& d);

TriangleCoords triangle_from_json(const nlohmann::json& j);
DynnikovCoords dynnikov_from_json(const nlohmann::json& j);
RelaxedCurve curve_from_json(const nlohmann::json& j);
IntervalFamily family_from_json(const nlohmann::json& j);

// Either coordinate form, told apart by the field names present.
using AnyCoords = std::variant<TriangleCoords, DynnikovCoords>;
AnyCoords coords_from_json(const nlohmann::json& j);

// Parses one line of JSON text; wraps syntax errors in ParseError.
nlohmann::json parse_line(const std::string& text);

}  // namespace lamkit

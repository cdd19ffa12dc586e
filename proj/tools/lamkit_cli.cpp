// lamkit command line: coordinate conversion, validation, intersection
// numbers, random family generation, SVG rendering, and a self-checking
// fuzzer.  Data travels as single-line JSON on stdin/stdout.
//
// Exit codes: 0 success, 1 malformed input, 2 validation failure,
// 3 counterexample found by fuzz, 4 arithmetic overflow.

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <lamkit/coords.hpp>
#include <lamkit/intersection.hpp>
#include <lamkit/json_io.hpp>
#include <lamkit/oracle.hpp>
#include <lamkit/random.hpp>
#include <lamkit/render.hpp>

namespace {

using namespace lamkit;
using nlohmann::ordered_json;

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Next nonempty line, for the commands that take several JSON values.
std::string read_json_line(std::istream& in, const char* what) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  throw ParseError(std::string("expected ") + what + " on stdin");
}

TriangleCoords require_valid_triangle(const AnyCoords& coords) {
  if (std::holds_alternative<DynnikovCoords>(coords))
    return triangle_from_dynnikov(std::get<DynnikovCoords>(coords));
  const TriangleCoords& t = std::get<TriangleCoords>(coords);
  auto violations = validate_triangle(t);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return t;
}

std::uint64_t parse_seed_text(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(std::string(what) + " must be an unsigned integer, got \"" + text + "\"");
  return value;
}

// The environment variable wins over --seed so whole test runs can be
// repointed without touching every command line.
std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("LAMKIT_SEED")) return parse_seed_text(env, "LAMKIT_SEED");
  return flag_seed;
}

std::pair<int, int> parse_curve_flag(const std::string& text) {
  int i = 0, j = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto first = std::from_chars(begin, end, i);
  if (first.ec != std::errc() || first.ptr == end || *first.ptr != ',')
    throw ParseError("--curve expects two comma-separated indices, e.g. 2,4");
  auto second = std::from_chars(first.ptr + 1, end, j);
  if (second.ec != std::errc() || second.ptr != end)
    throw ParseError("--curve expects two comma-separated indices, e.g. 2,4");
  return {i, j};
}

int run_convert(const std::string& to) {
  const AnyCoords coords = coords_from_json(parse_line(read_all(std::cin)));
  const TriangleCoords t = require_valid_triangle(coords);
  if (to == "triangle")
    std::cout << to_json(t).dump() << "\n";
  else
    std::cout << to_json(dynnikov_from_triangle(t)).dump() << "\n";
  return 0;
}

int run_validate() {
  const AnyCoords coords = coords_from_json(parse_line(read_all(std::cin)));
  std::vector<Violation> violations;
  if (std::holds_alternative<TriangleCoords>(coords)) {
    violations = validate_triangle(std::get<TriangleCoords>(coords));
  } else if (std::get<DynnikovCoords>(coords).is_zero()) {
    violations.push_back({"zero_vector", 0, "all entries are zero"});
  }
  ordered_json out = ordered_json::array();
  for (const Violation& v : violations)
    out.push_back(ordered_json{{"invariant", v.invariant}, {"index", v.index}, {"detail", v.detail}});
  std::cout << out.dump() << "\n";
  return violations.empty() ? 0 : 2;
}

int run_intersect(const std::string& curve_flag, const std::string& family_path) {
  const TriangleCoords t = require_valid_triangle(coords_from_json(parse_line(read_all(std::cin))));
  Coord result = 0;
  if (!curve_flag.empty()) {
    auto [i, j] = parse_curve_flag(curve_flag);
    result = intersect_relaxed(t, RelaxedCurve(t.n, i, j));
  } else {
    std::ifstream file(family_path);
    if (!file) throw ParseError("cannot read family file: " + family_path);
    result = intersect_relaxed_family(t, family_from_json(parse_line(read_all(file))));
  }
  std::cout << result << "\n";
  return 0;
}

int run_d3_intersect(const std::string& format) {
  auto read_one = [&](const char* what) {
    const nlohmann::json j = parse_line(read_json_line(std::cin, what));
    if (format == "triangle") {
      TriangleCoords t = triangle_from_json(j);
      auto violations = validate_triangle(t);
      if (!violations.empty()) throw ValidationError(std::move(violations));
      return t;
    }
    return triangle_from_dynnikov(dynnikov_from_json(j));
  };
  const TriangleCoords t1 = read_one("a first lamination");
  const TriangleCoords t2 = read_one("a second lamination");
  std::cout << intersect_d3(t1, t2) << "\n";
  return 0;
}

int run_gen(int n, int components, std::uint64_t seed) {
  std::cout << to_json(random_family(PunctureCount(n), components, seed)).dump() << "\n";
  return 0;
}

int run_render(const std::string& out_path, const RenderOptions& options) {
  const nlohmann::json j = parse_line(read_all(std::cin));
  // A lamination in either coordinate form, or a whole curve family.
  const TriangleCoords t = j.is_object() && j.contains("components")
                               ? family_triangle(family_from_json(j))
                               : require_valid_triangle(coords_from_json(j));
  const std::string svg = render_svg(reconstruct(t), options);
  if (out_path.empty()) {
    std::cout << svg;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw ParseError("cannot write file: " + out_path);
    file << svg;
  }
  return 0;
}

// --- fuzz -----------------------------------------------------------------

bool round_trip_ok(const DynnikovCoords& d) {
  try {
    const TriangleCoords t = triangle_from_dynnikov(d);
    if (!validate_triangle(t).empty()) return false;
    const DynnikovCoords back = dynnikov_from_triangle(t);
    return back.a == d.a && back.b == d.b;
  } catch (const std::exception&) {
    return false;
  }
}

DynnikovCoords shrink_round_trip(DynnikovCoords d) {
  // Keep halving entries toward zero while the failure persists.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int part = 0; part < 2; ++part) {
      auto& values = part == 0 ? d.a : d.b;
      for (auto& v : values) {
        if (v == 0) continue;
        const Coord saved = v;
        v /= 2;
        if (!d.is_zero() && !round_trip_ok(d))
          changed = true;
        else
          v = saved;
      }
    }
  }
  return d;
}

std::optional<RelaxedCurve> oracle_mismatch(const IntervalFamily& f) {
  const TriangleCoords t = family_triangle(f);
  const int n = f.n.value();
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      const RelaxedCurve c(f.n, i, j);
      if (intersect_relaxed(t, c) != linking_intersection(f, c)) return c;
    }
  return std::nullopt;
}

IntervalFamily shrink_family(IntervalFamily f) {
  // Drop whole components, then halve multiplicities, while still failing.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t idx = 0; idx < f.components.size() && f.components.size() > 1; ++idx) {
      auto fewer = f.components;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(idx));
      IntervalFamily candidate(f.n, std::move(fewer));
      if (oracle_mismatch(candidate)) {
        f = std::move(candidate);
        changed = true;
        break;
      }
    }
    for (std::size_t idx = 0; idx < f.components.size(); ++idx) {
      if (f.components[idx].mult < 2) continue;
      auto halved = f.components;
      halved[idx].mult /= 2;
      IntervalFamily candidate(f.n, std::move(halved));
      if (oracle_mismatch(candidate)) {
        f = std::move(candidate);
        changed = true;
      }
    }
  }
  return f;
}

int run_fuzz(int trials, int n_max, std::uint64_t seed) {
  if (n_max < 3) throw ParseError("--n-max must be at least 3");
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial))));

    // Round trip through triangle coordinates and back.
    const int n1 = 3 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n_max - 2)));
    const DynnikovCoords d = random_dynnikov(rng, PunctureCount(n1), 1'000'000);
    if (!round_trip_ok(d)) {
      const DynnikovCoords witness = shrink_round_trip(d);
      std::cout << ordered_json{{"trial", trial},
                                {"check", "round_trip"},
                                {"witness", to_json(witness)}}
                       .dump()
                << "\n";
      return 3;
    }

    // Intersection formula versus the interval-linking oracle.
    const int n2 = 3 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n_max - 2)));
    const int max_components = 1 + static_cast<int>(bounded(rng, 8));
    const IntervalFamily f = random_family(PunctureCount(n2), max_components, rng());
    if (auto c = oracle_mismatch(f)) {
      const IntervalFamily witness = shrink_family(f);
      const RelaxedCurve curve = *oracle_mismatch(witness);
      std::cout << ordered_json{{"trial", trial},
                                {"check", "oracle_equivalence"},
                                {"witness", to_json(witness)},
                                {"curve", to_json(curve)},
                                {"intersect_relaxed",
                                 intersect_relaxed(family_triangle(witness), curve)},
                                {"linking_intersection", linking_intersection(witness, curve)}}
                       .dump()
                << "\n";
      return 3;
    }
  }
  std::cout << ordered_json{{"trials", trials}, {"failures", 0}}.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coordinates, intersection numbers and drawings of integral laminations "
               "on the n-punctured disk"};
  app.require_subcommand(1);

  auto* convert = app.add_subcommand("convert", "Convert coordinates (stdin JSON to stdout JSON)");
  std::string to;
  convert->add_option("--to", to, "target form")
      ->required()
      ->check(CLI::IsMember({"dynnikov", "triangle"}));

  auto* validate =
      app.add_subcommand("validate", "Check coordinate invariants; prints the violation list");

  auto* intersect =
      app.add_subcommand("intersect", "Intersection number of the stdin lamination with curves");
  std::string curve_flag, family_path;
  auto* curve_opt = intersect->add_option("--curve", curve_flag, "round curve as i,j");
  auto* family_opt =
      intersect->add_option("--family", family_path, "JSON file with a curve family");
  curve_opt->excludes(family_opt);
  family_opt->excludes(curve_opt);

  auto* d3 = app.add_subcommand(
      "d3-intersect", "Intersection number of two laminations on the 3-punctured disk");
  std::string format = "dynnikov";
  d3->add_option("--format", format, "input form of the two stdin lines")
      ->check(CLI::IsMember({"dynnikov", "triangle"}));

  auto* gen = app.add_subcommand("gen", "Generate a random laminar curve family");
  int gen_n = 0, gen_components = 4;
  std::uint64_t gen_seed = 0;
  gen->add_option("--n", gen_n, "number of punctures")->required();
  gen->add_option("--components", gen_components, "largest number of components");
  gen->add_option("--seed", gen_seed, "random seed");

  auto* render = app.add_subcommand("render", "Draw the stdin lamination as SVG");
  std::string out_path;
  RenderOptions options;
  render->add_option("--out", out_path, "output file (stdout if omitted)");
  render->add_option("--width", options.width, "image width in pixels");
  render->add_option("--height", options.height, "image height in pixels");
  bool no_arcs = false, no_labels = false;
  render->add_flag("--no-arcs", no_arcs, "hide the reference arcs");
  render->add_flag("--no-labels", no_labels, "hide labels");

  auto* fuzz = app.add_subcommand(
      "fuzz", "Self-check: random round trips and oracle comparisons; exit 3 on a counterexample");
  int trials = 200, n_max = 10;
  std::uint64_t fuzz_seed = 0;
  fuzz->add_option("--trials", trials, "number of random trials");
  fuzz->add_option("--n-max", n_max, "largest puncture count");
  fuzz->add_option("--seed", fuzz_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*convert) return run_convert(to);
    if (*validate) return run_validate();
    if (*intersect) {
      if (curve_flag.empty() && family_path.empty())
        throw ParseError("intersect needs --curve or --family");
      return run_intersect(curve_flag, family_path);
    }
    if (*d3) return run_d3_intersect(format);
    if (*gen) return run_gen(gen_n, gen_components, effective_seed(gen_seed));
    if (*render) {
      options.show_arcs = !no_arcs;
      options.show_labels = !no_labels;
      return run_render(out_path, options);
    }
    if (*fuzz) return run_fuzz(trials, n_max, effective_seed(fuzz_seed));
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::logic_error& e) {  // validation and domain rule failures
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;  // unreachable: a subcommand is required
}

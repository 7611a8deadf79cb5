#pragma once

/// Serialization: polygon text format, JSON interchange for solutions and
/// decompositions, SVG rendering, and the scaling benchmark.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pathguard/balanced.hpp"
#include "pathguard/decompose.hpp"
#include "pathguard/generator.hpp"
#include "pathguard/guard.hpp"

namespace pathguard {

/// Polygon text format: line 1 holds the vertex count n, lines 2..n+1 hold
/// "x y" (ASCII decimal integers, one space), vertices in boundary order,
/// UNIX newlines.  Lines starting with '#' are comments.
[[nodiscard]] OrthoPolygon parse_polygon_text(const std::string& text);
[[nodiscard]] std::string print_polygon_text(const OrthoPolygon& P);
[[nodiscard]] OrthoPolygon read_polygon_file(const std::string& path);

/// GuardSolution JSON:
/// { "guard_number": int,
///   "guards": [{"x2": int, "y2": int}],            (doubled coordinates)
///   "parts": [{"slabs": [first, last], "corridor": rect,
///              "positions": [rect...]}] }
/// with rect = {"x1","y1","x2","y2"}.
[[nodiscard]] std::string solution_to_json(const GuardSolution& sol);

/// Decomposition JSON: slabs, seams and (optionally) balanced parts and
/// cut reports.
[[nodiscard]] std::string decomposition_to_json(
    const VerticalDecomposition& vd,
    const std::vector<BalancedPart>* parts = nullptr,
    const std::vector<CutReport>* cuts = nullptr);

/// Guards from JSON: accepts the GuardSolution schema or a bare
/// {"guards": [{"x2","y2"}]} document.
[[nodiscard]] std::vector<Point> guards_from_json(const std::string& text);
[[nodiscard]] std::string guards_to_json(std::size_t count,
                                         const std::vector<Point>& guards_d);

struct RenderOptions {
    bool seams = false;                      // slab seam lines
    const std::vector<BalancedPart>* parts = nullptr;  // corridor fills
    const GuardSolution* solution = nullptr;           // positions + guards
    const std::vector<Point>* extra_guards_d = nullptr;
};

/// Deterministic SVG: polygon outline, optional seams, corridor fills,
/// position rectangles, guard dots.
[[nodiscard]] std::string render_svg(const OrthoPolygon& P,
                                     const RenderOptions& opts = {});

/// Per-instance record used by corpus runs and reports.
struct RunReport {
    std::string instance;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t part_count = 0;
    std::size_t guard_number = 0;
    std::optional<std::size_t> oracle_count;
    bool coverage_ok = false;
    std::int64_t decompose_ns = 0;
    std::int64_t guard_ns = 0;
    std::int64_t oracle_ns = 0;
};

struct BenchRow {
    std::size_t m = 0;
    std::size_t n = 0;
    std::int64_t median_ns = 0;
    double ns_per_vertex = 0.0;
};

/// Generates one polygon per size and times guard_path_polygon (parsing and
/// serialization excluded), `reps` repetitions, median reported.
[[nodiscard]] std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                              int reps = 5,
                                              std::uint64_t seed = 1);
[[nodiscard]] std::string bench_to_csv(const std::vector<BenchRow>& rows);

}  // namespace pathguard

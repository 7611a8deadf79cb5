// Python bindings for the main operations: validation, decomposition,
// balanced split, guard placement, the exact oracle, visibility checks,
// generation and rendering.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pathguard/balanced.hpp"
#include "pathguard/decompose.hpp"
#include "pathguard/generator.hpp"
#include "pathguard/guard.hpp"
#include "pathguard/io.hpp"
#include "pathguard/oracle.hpp"
#include "pathguard/visibility.hpp"

namespace py = pybind11;
using namespace pathguard;

namespace {

OrthoPolygon polygon_from_pairs(const std::vector<std::pair<Coord, Coord>>& pts) {
    std::vector<Point> v;
    v.reserve(pts.size());
    for (auto [x, y] : pts) v.push_back({x, y});
    return validate_polygon(v);
}

py::dict rect_dict(const AxisRect& r) {
    py::dict d;
    d["x1"] = r.lo.x;
    d["y1"] = r.lo.y;
    d["x2"] = r.hi.x;
    d["y2"] = r.hi.y;
    return d;
}

py::dict solution_dict(const GuardSolution& sol) {
    py::dict d;
    d["guard_number"] = sol.guard_number;
    py::list guards;
    for (const Point& g : sol.guards_d) guards.append(py::make_tuple(g.x, g.y));
    d["guards"] = guards;
    py::list parts;
    for (const PartSolution& ps : sol.parts) {
        py::dict p;
        p["slabs"] = py::make_tuple(ps.part.first, ps.part.last);
        p["corridor"] = rect_dict(ps.part.corridor);
        p["reversed"] = ps.part.reversed;
        py::list positions;
        for (const GuardPosition& gp : ps.positions)
            positions.append(rect_dict(gp.rect));
        p["positions"] = positions;
        parts.append(p);
    }
    d["parts"] = parts;
    return d;
}

std::vector<Point> points_from_pairs(const std::vector<std::pair<Coord, Coord>>& v) {
    std::vector<Point> out;
    out.reserve(v.size());
    for (auto [x, y] : v) out.push_back({x, y});
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Minimum r-visibility guard placement for orthogonal path polygons";

    py::register_exception<Error>(m, "GeometryError");

    py::class_<OrthoPolygon>(m, "Polygon")
        .def_property_readonly("n", &OrthoPolygon::size)
        .def_property_readonly("reflex_count", &OrthoPolygon::reflex_count)
        .def_property_readonly("convex_count", &OrthoPolygon::convex_count)
        .def_property_readonly("reversed_input", &OrthoPolygon::reversed_input)
        .def_property_readonly("vertices",
                               [](const OrthoPolygon& P) {
                                   py::list out;
                                   for (const Point& p : P.vertices())
                                       out.append(py::make_tuple(p.x, p.y));
                                   return out;
                               })
        .def("__repr__", [](const OrthoPolygon& P) {
            return "<Polygon n=" + std::to_string(P.size()) + ">";
        });

    m.def("validate", &polygon_from_pairs, py::arg("vertices"),
          "Validate a vertex ring and return a normalized Polygon.");

    m.def("is_path", &is_path, py::arg("polygon"));

    m.def(
        "decompose",
        [](const OrthoPolygon& P) {
            VerticalDecomposition vd = vertical_decompose(P);
            py::list slabs;
            for (const Slab& s : vd.slabs()) slabs.append(rect_dict(s.rect));
            py::list seams;
            for (std::size_t i = 0; i + 1 < vd.m(); ++i) {
                VSeg sm = vd.seam(i);
                py::dict sd;
                sd["x"] = sm.x;
                sd["y1"] = sm.y1;
                sd["y2"] = sm.y2;
                seams.append(sd);
            }
            py::dict d;
            d["m"] = vd.m();
            d["slabs"] = slabs;
            d["seams"] = seams;
            return d;
        },
        py::arg("polygon"), "Path-ordered vertical decomposition.");

    m.def(
        "split_balanced",
        [](const OrthoPolygon& P) {
            VerticalDecomposition vd = vertical_decompose(P);
            auto [parts, cuts] = split_balanced(vd);
            py::list out;
            for (const BalancedPart& p : parts) {
                py::dict d;
                d["slabs"] = py::make_tuple(p.first, p.last);
                d["corridor"] = rect_dict(p.corridor);
                d["reversed"] = p.reversed;
                out.append(d);
            }
            py::list cl;
            for (const CutReport& c : cuts) {
                py::dict d;
                d["cut_slab"] = c.cut_slab;
                d["violating_slab"] = c.violating_slab;
                d["prev_is_local_min"] = c.prev_is_local_min;
                d["assigned_to_next"] = c.assigned_to_next;
                cl.append(d);
            }
            return py::make_tuple(out, cl);
        },
        py::arg("polygon"), "Balanced parts and cut reports.");

    m.def(
        "guard",
        [](const OrthoPolygon& P) { return solution_dict(guard_path_polygon(P)); },
        py::arg("polygon"),
        "Minimum guard solution; guard points are doubled coordinates.");

    m.def(
        "oracle",
        [](const OrthoPolygon& P, std::size_t cap) {
            PixelGrid grid = pixel_decompose(P);
            OracleResult res = min_rguards_exact(P, grid, cap);
            py::list guards;
            for (const Point& g : res.guards_d)
                guards.append(py::make_tuple(g.x, g.y));
            py::dict d;
            d["count"] = res.count;
            d["guards"] = guards;
            return d;
        },
        py::arg("polygon"), py::arg("cap") = kDefaultPixelCap,
        "Exact minimum r-guard count with a witness (small instances).");

    m.def(
        "refine_and_recheck",
        [](const OrthoPolygon& P, int factor, std::size_t cap) {
            PixelGrid grid = pixel_decompose(P);
            return refine_and_recheck(P, grid, factor, cap);
        },
        py::arg("polygon"), py::arg("factor") = 2,
        py::arg("cap") = kDefaultPixelCap);

    m.def(
        "coverage_check",
        [](const OrthoPolygon& P, const std::vector<std::pair<Coord, Coord>>& g) {
            PixelGrid grid = pixel_decompose(P);
            CoverageResult res = coverage_check(grid, points_from_pairs(g));
            py::list unc;
            for (std::uint32_t p : res.uncovered) unc.append(rect_dict(grid.pixel(p)));
            return py::make_tuple(res.ok, unc);
        },
        py::arg("polygon"), py::arg("guards"),
        "Guards are (x2, y2) doubled-coordinate pairs.");

    m.def(
        "r_visible",
        [](const OrthoPolygon& P, std::pair<Coord, Coord> p,
           std::pair<Coord, Coord> q) {
            PixelGrid grid = pixel_decompose(P);
            return r_visible(grid, {p.first, p.second}, {q.first, q.second});
        },
        py::arg("polygon"), py::arg("p"), py::arg("q"));

    m.def(
        "is_rstar",
        [](const OrthoPolygon& P) { return is_rstar(pixel_decompose(P)); },
        py::arg("polygon"));

    m.def("pixel_count", [](const OrthoPolygon& P) {
        return pixel_decompose(P).pixel_count();
    });

    m.def(
        "generate",
        [](std::size_t slabs, std::uint64_t seed, Coord range, double wind,
           bool unbalanced) {
            GenConfig cfg;
            cfg.slab_count = slabs;
            cfg.seed = seed;
            cfg.range = range;
            cfg.wind_probability = wind;
            cfg.allow_unbalanced = unbalanced;
            return generate(cfg);
        },
        py::arg("slabs"), py::arg("seed") = 0, py::arg("range") = 1'000'000,
        py::arg("wind_probability") = 0.5, py::arg("unbalanced") = false);

    m.def("parse", &parse_polygon_text, py::arg("text"));
    m.def("dumps", &print_polygon_text, py::arg("polygon"));
    m.def(
        "render_svg",
        [](const OrthoPolygon& P, bool overlay) {
            RenderOptions opts;
            GuardSolution sol;
            std::vector<BalancedPart> parts;
            if (overlay) {
                sol = guard_path_polygon(P);
                for (const PartSolution& ps : sol.parts) parts.push_back(ps.part);
                opts.seams = true;
                opts.parts = &parts;
                opts.solution = &sol;
            }
            return render_svg(P, opts);
        },
        py::arg("polygon"), py::arg("overlay") = false);
}

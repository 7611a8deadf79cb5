#include "pathguard/io.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pathguard {

using nlohmann::json;

OrthoPolygon parse_polygon_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_content_line = [&]() -> std::optional<std::string> {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            if (line[0] == '#') continue;
            return line;
        }
        return std::nullopt;
    };

    auto first = next_content_line();
    if (!first) throw Error(ErrorCode::ParseError, "empty polygon file");
    std::size_t n = 0;
    {
        std::istringstream ls(*first);
        long long v;
        if (!(ls >> v) || v < 0 || !(ls >> std::ws).eof())
            throw Error(ErrorCode::ParseError, "bad vertex count line: " + *first);
        n = static_cast<std::size_t>(v);
    }
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto l = next_content_line();
        if (!l)
            throw Error(ErrorCode::ParseError,
                        "expected " + std::to_string(n) + " vertices, got " +
                            std::to_string(i));
        std::istringstream ls(*l);
        long long x, y;
        if (!(ls >> x >> y) || !(ls >> std::ws).eof())
            throw Error(ErrorCode::ParseError, "bad vertex line: " + *l);
        pts.push_back({x, y});
    }
    if (auto extra = next_content_line())
        throw Error(ErrorCode::ParseError, "trailing content: " + *extra);
    return validate_polygon(pts);
}

std::string print_polygon_text(const OrthoPolygon& P) {
    std::string out = std::to_string(P.size());
    out.push_back('\n');
    for (const Point& p : P.vertices()) {
        out += std::to_string(p.x);
        out.push_back(' ');
        out += std::to_string(p.y);
        out.push_back('\n');
    }
    return out;
}

OrthoPolygon read_polygon_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_polygon_text(ss.str());
}

namespace {

json rect_to_json(const AxisRect& r) {
    return json{{"x1", r.lo.x}, {"y1", r.lo.y}, {"x2", r.hi.x}, {"y2", r.hi.y}};
}

}  // namespace

std::string solution_to_json(const GuardSolution& sol) {
    json j;
    j["guard_number"] = sol.guard_number;
    j["guards"] = json::array();
    for (const Point& g : sol.guards_d)
        j["guards"].push_back(json{{"x2", g.x}, {"y2", g.y}});
    j["parts"] = json::array();
    for (const PartSolution& ps : sol.parts) {
        json part;
        part["slabs"] = json::array({ps.part.first, ps.part.last});
        part["corridor"] = rect_to_json(ps.part.corridor);
        part["positions"] = json::array();
        for (const GuardPosition& p : ps.positions)
            part["positions"].push_back(rect_to_json(p.rect));
        j["parts"].push_back(std::move(part));
    }
    return j.dump(2) + "\n";
}

std::string decomposition_to_json(const VerticalDecomposition& vd,
                                  const std::vector<BalancedPart>* parts,
                                  const std::vector<CutReport>* cuts) {
    json j;
    j["m"] = vd.m();
    j["slabs"] = json::array();
    for (const Slab& s : vd.slabs()) {
        json slab = rect_to_json(s.rect);
        slab["top_edge"] = s.top_edge;
        slab["bottom_edge"] = s.bottom_edge;
        j["slabs"].push_back(std::move(slab));
    }
    j["seams"] = json::array();
    for (std::size_t i = 0; i + 1 < vd.m(); ++i) {
        VSeg s = vd.seam(i);
        j["seams"].push_back(json{{"x", s.x}, {"y1", s.y1}, {"y2", s.y2}});
    }
    if (parts) {
        j["parts"] = json::array();
        for (const BalancedPart& p : *parts) {
            json part;
            part["slabs"] = json::array({p.first, p.last});
            part["corridor"] = rect_to_json(p.corridor);
            part["reversed"] = p.reversed;
            j["parts"].push_back(std::move(part));
        }
    }
    if (cuts) {
        j["cuts"] = json::array();
        for (const CutReport& c : *cuts) {
            j["cuts"].push_back(json{{"cut_slab", c.cut_slab},
                                     {"violating_slab", c.violating_slab},
                                     {"prev_in_part", c.prev_in_part},
                                     {"prev_is_local_min", c.prev_is_local_min},
                                     {"assigned_to_next", c.assigned_to_next}});
        }
    }
    return j.dump(2) + "\n";
}

std::vector<Point> guards_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad guards JSON: ") + e.what());
    }
    if (!j.contains("guards") || !j["guards"].is_array())
        throw Error(ErrorCode::ParseError, "guards JSON lacks a \"guards\" array");
    std::vector<Point> out;
    for (const json& g : j["guards"]) {
        if (!g.contains("x2") || !g.contains("y2"))
            throw Error(ErrorCode::ParseError, "guard entry lacks x2/y2");
        out.push_back({g["x2"].get<Coord>(), g["y2"].get<Coord>()});
    }
    return out;
}

std::string guards_to_json(std::size_t count, const std::vector<Point>& guards_d) {
    json j;
    j["count"] = count;
    j["guards"] = json::array();
    for (const Point& g : guards_d)
        j["guards"].push_back(json{{"x2", g.x}, {"y2", g.y}});
    return j.dump(2) + "\n";
}

namespace {

// SVG y axis points down; flip about the polygon's vertical center.
struct SvgMapper {
    Coord ymin, ymax;
    double flip_y(double y) const { return double(ymax) - (y - double(ymin)); }
};

void svg_rect(std::string& out, const SvgMapper& mp, const AxisRect& r,
              const std::string& cls, double inflate = 0.0) {
    double x = double(r.lo.x) - inflate;
    double y = mp.flip_y(double(r.hi.y)) - inflate;
    double w = double(r.width()) + 2 * inflate;
    double h = double(r.height()) + 2 * inflate;
    std::ostringstream ss;
    ss << "  <rect class=\"" << cls << "\" x=\"" << x << "\" y=\"" << y
       << "\" width=\"" << w << "\" height=\"" << h << "\"/>\n";
    out += ss.str();
}

}  // namespace

std::string render_svg(const OrthoPolygon& P, const RenderOptions& opts) {
    AxisRect b = P.bounds();
    double margin = std::max<double>(1.0, double(std::max(b.width(), b.height())) * 0.04);
    SvgMapper mp{b.lo.y, b.hi.y};
    double stroke = std::max(0.5, double(std::max(b.width(), b.height())) / 400.0);
    double dot = std::max(1.5 * stroke, double(std::max(b.width(), b.height())) / 120.0);

    std::ostringstream head;
    head << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
         << double(b.lo.x) - margin << " " << mp.flip_y(double(b.hi.y)) - margin
         << " " << double(b.width()) + 2 * margin << " "
         << double(b.height()) + 2 * margin << "\">\n"
         << "  <style>\n"
         << "    .outline{fill:#f4f4f4;stroke:#222;stroke-width:" << stroke << "}\n"
         << "    .seam{stroke:#999;stroke-width:" << stroke * 0.6
         << ";stroke-dasharray:" << stroke * 2 << "}\n"
         << "    .corridor{fill:#ffd54d;fill-opacity:0.45;stroke:none}\n"
         << "    .position{fill:none;stroke:#c62828;stroke-width:" << stroke * 1.6
         << "}\n"
         << "    .guard{fill:#1565c0;stroke:none}\n"
         << "  </style>\n";
    std::string out = head.str();

    {
        std::ostringstream path;
        path << "  <path class=\"outline\" d=\"";
        for (std::size_t i = 0; i < P.size(); ++i) {
            const Point& p = P.vertex(i);
            path << (i == 0 ? "M" : "L") << p.x << " " << mp.flip_y(double(p.y)) << " ";
        }
        path << "Z\"/>\n";
        out += path.str();
    }

    if (opts.seams || opts.parts || opts.solution) {
        // All overlays need the decomposition.
        VerticalDecomposition vd = vertical_decompose(P);
        if (opts.seams) {
            for (std::size_t i = 0; i + 1 < vd.m(); ++i) {
                VSeg s = vd.seam(i);
                std::ostringstream ss;
                ss << "  <line class=\"seam\" x1=\"" << s.x << "\" y1=\""
                   << mp.flip_y(double(s.y1)) << "\" x2=\"" << s.x << "\" y2=\""
                   << mp.flip_y(double(s.y2)) << "\"/>\n";
                out += ss.str();
            }
        }
    }
    if (opts.parts)
        for (const BalancedPart& p : *opts.parts)
            svg_rect(out, mp, p.corridor, "corridor");
    if (opts.solution) {
        for (const PartSolution& ps : opts.solution->parts)
            for (const GuardPosition& gp : ps.positions)
                svg_rect(out, mp, gp.rect, "position");
        for (const Point& g : opts.solution->guards_d) {
            std::ostringstream ss;
            ss << "  <circle class=\"guard\" cx=\"" << double(g.x) / 2.0
               << "\" cy=\"" << mp.flip_y(double(g.y) / 2.0) << "\" r=\"" << dot
               << "\"/>\n";
            out += ss.str();
        }
    }
    if (opts.extra_guards_d) {
        for (const Point& g : *opts.extra_guards_d) {
            std::ostringstream ss;
            ss << "  <circle class=\"guard\" cx=\"" << double(g.x) / 2.0
               << "\" cy=\"" << mp.flip_y(double(g.y) / 2.0) << "\" r=\"" << dot
               << "\"/>\n";
            out += ss.str();
        }
    }
    out += "</svg>\n";
    return out;
}

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, int reps,
                                std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    reps = std::max(reps, 5);
    for (std::size_t m : sizes) {
        GenConfig cfg;
        cfg.slab_count = m;
        cfg.range = std::max<Coord>(static_cast<Coord>(m), 1'000'000);
        cfg.seed = seed + m;
        OrthoPolygon P = generate(cfg);
        std::vector<std::int64_t> times;
        times.reserve(reps);
        std::size_t sink = 0;
        for (int r = 0; r < reps; ++r) {
            auto t0 = clock::now();
            GuardSolution sol = guard_path_polygon(P);
            auto t1 = clock::now();
            sink += sol.guard_number;
            times.push_back(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        }
        if (sink == 0) throw Error(ErrorCode::Internal, "benchmark produced no guards");
        std::sort(times.begin(), times.end());
        BenchRow row;
        row.m = m;
        row.n = P.size();
        row.median_ns = times[times.size() / 2];
        row.ns_per_vertex = double(row.median_ns) / double(row.n);
        rows.push_back(row);
    }
    return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream ss;
    ss << "m,n,median_ns,ns_per_vertex\n";
    for (const BenchRow& r : rows)
        ss << r.m << "," << r.n << "," << r.median_ns << "," << r.ns_per_vertex
           << "\n";
    return ss.str();
}

}  // namespace pathguard

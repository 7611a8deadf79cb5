// pathguard: minimum r-guard placement for orthogonal path polygons.
//
// Exit codes: 0 ok, 1 check failed, 2 invalid input.

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pathguard/io.hpp"
#include "pathguard/oracle.hpp"
#include "pathguard/visibility.hpp"

namespace pg = pathguard;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;

pg::OrthoPolygon load(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return pg::parse_polygon_text(ss.str());
    }
    return pg::read_polygon_file(path);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pg::Error(pg::ErrorCode::ParseError, "cannot write " + path);
    out << content;
}

// Runs fn per input file, optionally fanned across worker threads; each
// instance is fully isolated.  Returns the max exit code observed.
int for_each_instance(const std::vector<std::string>& files, unsigned jobs,
                      const std::function<int(const std::string&)>& fn) {
    if (files.size() <= 1 || jobs <= 1) {
        int rc = 0;
        for (const auto& f : files) rc = std::max(rc, fn(f));
        return rc;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<int> rc{0};
    std::vector<std::thread> pool;
    unsigned nthreads = std::min<unsigned>(jobs, files.size());
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= files.size()) break;
                int r = fn(files[i]);
                int cur = rc.load();
                while (r > cur && !rc.compare_exchange_weak(cur, r)) {
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    return rc.load();
}

std::mutex out_mutex;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum r-visibility guard placement for orthogonal path polygons"};
    app.require_subcommand(1);

    std::string in_path, out_path, guards_path;
    bool balanced = false, overlay = false, unbalanced = false;
    std::vector<std::string> in_paths;
    unsigned jobs = 1;
    std::size_t gen_m = 1;
    std::uint64_t gen_seed = 0;
    pg::Coord gen_range = 1'000'000;
    double wind = 0.5;
    std::vector<std::size_t> bench_sizes;
    int bench_reps = 5;
    int refine_factor = 0;

    auto* validate = app.add_subcommand("validate", "validate a polygon file");
    validate->add_option("file", in_path, "polygon file ('-' for stdin)")->required();

    auto* decompose = app.add_subcommand("decompose", "vertical decomposition as JSON");
    decompose->add_option("file", in_path)->required();
    decompose->add_flag("--balanced", balanced, "include balanced parts and cut reports");

    auto* guard = app.add_subcommand("guard", "minimum guard solution as JSON");
    guard->add_option("file", in_path)->required();

    auto* oracle = app.add_subcommand("oracle", "exact minimum guard count (small instances)");
    oracle->add_option("files", in_paths, "polygon file(s)")->required();
    oracle->add_option("--jobs", jobs, "worker threads for multiple files");
    oracle->add_option("--refine", refine_factor,
                       "also re-check with each pixel subdivided NxN");

    auto* check = app.add_subcommand("check", "verify full coverage of a guard set");
    check->add_option("files", in_paths, "polygon file(s)")->required();
    check->add_option("--guards", guards_path, "guards JSON file")->required();
    check->add_option("--jobs", jobs, "worker threads for multiple files");

    auto* gen = app.add_subcommand("gen", "generate a random path polygon");
    gen->add_option("--slabs", gen_m, "slab count m")->required();
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--range", gen_range, "coordinate range");
    gen->add_option("--wind", wind, "probability a step changes the top boundary");
    gen->add_flag("--unbalanced", unbalanced, "force at least one corridor break");

    auto* render = app.add_subcommand("render", "render polygon (and solution) as SVG");
    render->add_option("file", in_path)->required();
    render->add_option("--guards", guards_path, "draw guards from JSON file");
    render->add_flag("--overlay", overlay, "draw seams, corridors and positions");
    render->add_option("--out", out_path, "output SVG path")->required();

    auto* bench = app.add_subcommand("bench", "scaling benchmark, CSV to stdout");
    bench->add_option("--sizes", bench_sizes, "slab counts m")->required();
    bench->add_option("--reps", bench_reps, "repetitions per size (>= 5)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            pg::OrthoPolygon P = load(in_path);
            if (P.reversed_input())
                std::cerr << "warning: ClockwiseFixed: input ring was clockwise, "
                             "reversed to counterclockwise\n";
            std::cout << "ok: n=" << P.size() << " reflex=" << P.reflex_count()
                      << " convex=" << P.convex_count()
                      << (pg::is_path(P) ? " path=yes" : " path=no") << "\n";
            return 0;
        }
        if (*decompose) {
            pg::OrthoPolygon P = load(in_path);
            pg::VerticalDecomposition vd = pg::vertical_decompose(P);
            if (balanced) {
                auto [parts, cuts] = pg::split_balanced(vd);
                std::cout << pg::decomposition_to_json(vd, &parts, &cuts);
            } else {
                std::cout << pg::decomposition_to_json(vd);
            }
            return 0;
        }
        if (*guard) {
            pg::OrthoPolygon P = load(in_path);
            pg::GuardSolution sol = pg::guard_path_polygon(P);
            std::cout << pg::solution_to_json(sol);
            return 0;
        }
        if (*oracle) {
            std::size_t cap = pg::pixel_cap_from_env();
            return for_each_instance(in_paths, jobs, [&](const std::string& f) {
                try {
                    pg::OrthoPolygon P = pg::read_polygon_file(f);
                    pg::PixelGrid grid = pg::pixel_decompose(P);
                    pg::OracleResult res = pg::min_rguards_exact(P, grid, cap);
                    if (refine_factor > 1) {
                        std::size_t again =
                            pg::refine_and_recheck(P, grid, refine_factor, cap);
                        if (again != res.count) {
                            std::lock_guard<std::mutex> lk(out_mutex);
                            std::cerr << f << ": refine mismatch: " << res.count
                                      << " vs " << again << "\n";
                            return kExitCheckFailed;
                        }
                    }
                    std::lock_guard<std::mutex> lk(out_mutex);
                    if (in_paths.size() > 1) std::cout << "# " << f << "\n";
                    std::cout << pg::guards_to_json(res.count, res.guards_d);
                    return 0;
                } catch (const pg::Error& e) {
                    std::lock_guard<std::mutex> lk(out_mutex);
                    std::cerr << f << ": " << e.what() << "\n";
                    return kExitInvalid;
                }
            });
        }
        if (*check) {
            std::ifstream gf(guards_path, std::ios::binary);
            if (!gf) {
                std::cerr << "cannot open " << guards_path << "\n";
                return kExitInvalid;
            }
            std::ostringstream gs;
            gs << gf.rdbuf();
            std::vector<pg::Point> guards = pg::guards_from_json(gs.str());
            return for_each_instance(in_paths, jobs, [&](const std::string& f) {
                try {
                    pg::OrthoPolygon P = pg::read_polygon_file(f);
                    pg::PixelGrid grid = pg::pixel_decompose(P);
                    pg::CoverageResult res = pg::coverage_check(grid, guards);
                    std::lock_guard<std::mutex> lk(out_mutex);
                    if (res.ok) {
                        std::cout << f << ": covered\n";
                        return 0;
                    }
                    std::cout << f << ": NOT covered, " << res.uncovered.size()
                              << " uncovered pixel(s):\n";
                    for (std::uint32_t p : res.uncovered) {
                        const pg::AxisRect& r = grid.pixel(p);
                        std::cout << "  pixel " << p << " [" << r.lo.x << ","
                                  << r.hi.x << "]x[" << r.lo.y << "," << r.hi.y
                                  << "]\n";
                    }
                    return kExitCheckFailed;
                } catch (const pg::Error& e) {
                    std::lock_guard<std::mutex> lk(out_mutex);
                    std::cerr << f << ": " << e.what() << "\n";
                    return kExitInvalid;
                }
            });
        }
        if (*gen) {
            pg::GenConfig cfg;
            cfg.slab_count = gen_m;
            cfg.seed = gen_seed;
            cfg.range = gen_range;
            cfg.wind_probability = wind;
            cfg.allow_unbalanced = unbalanced;
            std::cout << pg::print_polygon_text(pg::generate(cfg));
            return 0;
        }
        if (*render) {
            pg::OrthoPolygon P = load(in_path);
            pg::RenderOptions opts;
            pg::GuardSolution sol;
            std::vector<pg::BalancedPart> parts;
            std::vector<pg::Point> extra;
            if (overlay) {
                sol = pg::guard_path_polygon(P);
                for (const pg::PartSolution& ps : sol.parts) parts.push_back(ps.part);
                opts.seams = true;
                opts.parts = &parts;
                opts.solution = &sol;
            }
            if (!guards_path.empty()) {
                std::ifstream gf(guards_path, std::ios::binary);
                if (!gf) {
                    std::cerr << "cannot open " << guards_path << "\n";
                    return kExitInvalid;
                }
                std::ostringstream gs;
                gs << gf.rdbuf();
                extra = pg::guards_from_json(gs.str());
                opts.extra_guards_d = &extra;
            }
            write_file(out_path, pg::render_svg(P, opts));
            return 0;
        }
        if (*bench) {
            std::cout << pg::bench_to_csv(pg::run_bench(bench_sizes, bench_reps));
            return 0;
        }
    } catch (const pg::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return 0;
}

#include <doctest.h>

#include "fixtures.hpp"
#include "pathguard/generator.hpp"
#include "pathguard/io.hpp"

using namespace pathguard;

TEST_CASE("polygon text: exact round trip") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GenConfig cfg;
        cfg.slab_count = 1 + seed;
        cfg.range = 100;
        cfg.seed = seed;
        OrthoPolygon P = generate(cfg);
        std::string text = print_polygon_text(P);
        OrthoPolygon Q = parse_polygon_text(text);
        CHECK(print_polygon_text(Q) == text);
        CHECK(std::vector<Point>(Q.vertices().begin(), Q.vertices().end()) ==
              std::vector<Point>(P.vertices().begin(), P.vertices().end()));
    }
}

TEST_CASE("polygon text: comments and parse errors") {
    CHECK_NOTHROW((void)parse_polygon_text("# rect\n4\n0 0\n4 0\n# mid\n4 2\n0 2\n"));
    CHECK_THROWS_AS((void)parse_polygon_text(""), Error);
    CHECK_THROWS_AS((void)parse_polygon_text("4\n0 0\n4 0\n4 2\n"), Error);
    CHECK_THROWS_AS((void)parse_polygon_text("4\n0 0\n4 0\n4 2\n0 2\n9 9\n"), Error);
    CHECK_THROWS_AS((void)parse_polygon_text("x\n"), Error);
    CHECK_THROWS_AS((void)parse_polygon_text("4\n0 0\n4 zero\n4 2\n0 2\n"), Error);
}

TEST_CASE("solution JSON: golden file for the comb") {
    GuardSolution sol = guard_path_polygon(fixtures::comb());
    std::string got = solution_to_json(sol);
    // Pinned schema: doubled-coordinate guards, slab index ranges, corridor
    // and position rectangles.
    const char* want = R"({
  "guard_number": 3,
  "guards": [
    {
      "x2": 2,
      "y2": 2
    },
    {
      "x2": 10,
      "y2": 2
    },
    {
      "x2": 18,
      "y2": 2
    }
  ],
  "parts": [
    {
      "corridor": {
        "x1": 0,
        "x2": 10,
        "y1": 0,
        "y2": 2
      },
      "positions": [
        {
          "x1": 0,
          "x2": 2,
          "y1": 0,
          "y2": 2
        },
        {
          "x1": 4,
          "x2": 6,
          "y1": 0,
          "y2": 2
        },
        {
          "x1": 8,
          "x2": 10,
          "y1": 0,
          "y2": 2
        }
      ],
      "slabs": [
        0,
        4
      ]
    }
  ]
}
)";
    CHECK(got == want);
}

TEST_CASE("guards JSON round trip") {
    std::vector<Point> guards{{2, 2}, {10, 2}};
    std::string json = guards_to_json(guards.size(), guards);
    CHECK(guards_from_json(json) == guards);
    CHECK_THROWS_AS((void)guards_from_json("{}"), Error);
    CHECK_THROWS_AS((void)guards_from_json("not json"), Error);
}

TEST_CASE("svg: deterministic and structured") {
    OrthoPolygon P = fixtures::comb();
    GuardSolution sol = guard_path_polygon(P);
    std::vector<BalancedPart> parts;
    for (const PartSolution& ps : sol.parts) parts.push_back(ps.part);
    RenderOptions opts;
    opts.seams = true;
    opts.parts = &parts;
    opts.solution = &sol;
    std::string a = render_svg(P, opts);
    std::string b = render_svg(P, opts);
    CHECK(a == b);

    auto count = [&](const std::string& hay, const std::string& needle) {
        std::size_t c = 0, pos = 0;
        while ((pos = hay.find(needle, pos)) != std::string::npos) {
            ++c;
            pos += needle.size();
        }
        return c;
    };
    CHECK(count(a, "class=\"guard\"") == 3);
    CHECK(count(a, "class=\"corridor\"") == 1);
    CHECK(count(a, "class=\"position\"") == 3);
    CHECK(count(a, "class=\"seam\"") == 4);

    // Plain rendering: one polygon path element, nothing else.
    std::string plain = render_svg(fixtures::rectangle());
    CHECK(count(plain, "<path") == 1);
    CHECK(count(plain, "class=\"guard\"") == 0);

    // Zigzag overlay: two corridor fills.
    GuardSolution zsol = guard_path_polygon(fixtures::zigzag());
    std::vector<BalancedPart> zparts;
    for (const PartSolution& ps : zsol.parts) zparts.push_back(ps.part);
    RenderOptions zopts;
    zopts.parts = &zparts;
    std::string z = render_svg(fixtures::zigzag(), zopts);
    CHECK(count(z, "class=\"corridor\"") == 2);
}

TEST_CASE("bench: small sizes produce rows") {
    auto rows = run_bench({1, 8}, 5, 99);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].m == 1);
    CHECK(rows[0].n == 4);
    CHECK(rows[1].m == 8);
    CHECK(rows[1].n == 18);
    CHECK(rows[0].median_ns > 0);
    std::string csv = bench_to_csv(rows);
    CHECK(csv.find("m,n,median_ns,ns_per_vertex\n") == 0);
}

#include <doctest.h>

#include "pathguard/balanced.hpp"
#include "pathguard/generator.hpp"
#include "pathguard/io.hpp"

using namespace pathguard;

TEST_CASE("generate: m=1 yields a rectangle") {
    GenConfig cfg;
    cfg.slab_count = 1;
    cfg.range = 100;
    cfg.seed = 9;
    OrthoPolygon P = generate(cfg);
    CHECK(P.size() == 4);
    CHECK(P.reflex_count() == 0);
}

TEST_CASE("generate: m=5 yields 12 vertices and 5 slabs") {
    GenConfig cfg;
    cfg.slab_count = 5;
    cfg.range = 50;
    cfg.seed = 42;
    OrthoPolygon P = generate(cfg);
    CHECK(P.size() == 12);
    CHECK(vertical_decompose(P).m() == 5);
}

TEST_CASE("generate: unbalanced config forces at least two parts") {
    GenConfig cfg;
    cfg.slab_count = 3;
    cfg.range = 40;
    cfg.seed = 7;
    cfg.allow_unbalanced = true;
    OrthoPolygon P = generate(cfg);
    auto [parts, cuts] = split_balanced(vertical_decompose(P));
    CHECK(parts.size() >= 2);
    CHECK(!cuts.empty());
}

TEST_CASE("generate: structural invariants across seeds and sizes") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GenConfig cfg;
        cfg.slab_count = 1 + seed % 12;
        cfg.range = 64;
        cfg.seed = seed * 13;
        cfg.allow_unbalanced = (seed % 2 == 0) && cfg.slab_count >= 3;
        OrthoPolygon P = generate(cfg);  // already passed validate_polygon
        CHECK(is_path(P));
        CHECK(P.size() == 2 * cfg.slab_count + 2);
        CHECK(P.reflex_count() == cfg.slab_count - 1);
        CHECK(vertical_decompose(P).m() == cfg.slab_count);
        CHECK(P.bounds().hi.x <= cfg.range);
        CHECK(P.bounds().hi.y <= cfg.range);
        CHECK(P.bounds().lo.x >= 0);
        CHECK(P.bounds().lo.y >= 0);
    }
}

TEST_CASE("generate: deterministic per seed") {
    GenConfig cfg;
    cfg.slab_count = 9;
    cfg.range = 1000;
    cfg.seed = 123;
    cfg.allow_unbalanced = true;
    std::string a = print_polygon_text(generate(cfg));
    std::string b = print_polygon_text(generate(cfg));
    CHECK(a == b);
    cfg.seed = 124;
    CHECK(a != print_polygon_text(generate(cfg)));
}

TEST_CASE("generate: ConfigInvalid") {
    GenConfig cfg;
    cfg.slab_count = 0;
    CHECK_THROWS_AS((void)generate(cfg), Error);
    cfg.slab_count = 100;
    cfg.range = 10;
    CHECK_THROWS_AS((void)generate(cfg), Error);
    cfg.range = 1000;
    cfg.wind_probability = 1.5;
    CHECK_THROWS_AS((void)generate(cfg), Error);
}

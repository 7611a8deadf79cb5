#pragma once

// Shared hand-built polygons.  Coordinates are small so expected slab,
// pixel and guard structures can be checked by hand.

#include <vector>

#include "pathguard/geom.hpp"

namespace fixtures {

using pathguard::OrthoPolygon;
using pathguard::Point;
using pathguard::validate_polygon;

inline OrthoPolygon rectangle() {
    return validate_polygon(
        std::vector<Point>{{0, 0}, {4, 0}, {4, 2}, {0, 2}});
}

inline OrthoPolygon lshape() {
    return validate_polygon(
        std::vector<Point>{{0, 0}, {4, 0}, {4, 4}, {2, 4}, {2, 2}, {0, 2}});
}

// Five-slab comb: teeth up at columns 1, 3, 5.
inline OrthoPolygon comb() {
    return validate_polygon(std::vector<Point>{{0, 0},
                                               {10, 0},
                                               {10, 4},
                                               {8, 4},
                                               {8, 2},
                                               {6, 2},
                                               {6, 4},
                                               {4, 4},
                                               {4, 2},
                                               {2, 2},
                                               {2, 4},
                                               {0, 4}});
}

// Three slabs R1=[0,2]x[4,6], R2=[2,4]x[0,6], R3=[4,6]x[0,2]; the band
// collapses at R3, so it splits into {R1,R2} and {R3}.
inline OrthoPolygon zigzag() {
    return validate_polygon(std::vector<Point>{
        {0, 4}, {2, 4}, {2, 0}, {6, 0}, {6, 2}, {4, 2}, {4, 6}, {0, 6}});
}

// Winding path polygon: slabs [2,6]x[0,2], [0,2]x[0,6], [2,5]x[4,6]; path
// order is not x order.
inline OrthoPolygon staggered_c() {
    return validate_polygon(std::vector<Point>{
        {0, 0}, {6, 0}, {6, 2}, {2, 2}, {2, 4}, {5, 4}, {5, 6}, {0, 6}});
}

// Central slab touches three others: not a path polygon.
inline OrthoPolygon three_armed() {
    return validate_polygon(std::vector<Point>{{0, 0},
                                               {6, 0},
                                               {6, 2},
                                               {2, 2},
                                               {2, 4},
                                               {7, 4},
                                               {7, 6},
                                               {3, 6},
                                               {3, 8},
                                               {8, 8},
                                               {8, 10},
                                               {0, 10}});
}

// Lemma-2 case fixtures.  Slab heights are engineered so the cut decision
// at the single part boundary exercises one case each; see the balanced
// and acceptance tests.

// Case (a): R_{cut-1} is a local minimum and R_{cut+1} is not; moving the
// cut right saves one guard.
inline OrthoPolygon fig4a() {
    return validate_polygon(std::vector<Point>{{0, 0},
                                               {6, 0},
                                               {6, 7},
                                               {10, 7},
                                               {10, 9},
                                               {8, 9},
                                               {8, 10},
                                               {4, 10},
                                               {4, 3},
                                               {2, 3},
                                               {2, 10},
                                               {0, 10}});
}

// Case (b): both R_{cut-1} and R_{cut+1} are local minima; the rule still
// moves the cut right.
inline OrthoPolygon fig4b() {
    return validate_polygon(std::vector<Point>{{0, 0},
                                               {6, 0},
                                               {6, 7},
                                               {10, 7},
                                               {10, 12},
                                               {8, 12},
                                               {8, 10},
                                               {4, 10},
                                               {4, 3},
                                               {2, 3},
                                               {2, 10},
                                               {0, 10}});
}

// Case (c): R_{cut+1} is a local minimum, R_{cut-1} is not; the cut stays.
inline OrthoPolygon fig4c() {
    return validate_polygon(std::vector<Point>{{0, 0},
                                               {6, 0},
                                               {6, 8},
                                               {10, 8},
                                               {10, 12},
                                               {8, 12},
                                               {8, 10},
                                               {4, 10},
                                               {4, 8},
                                               {2, 8},
                                               {2, 7},
                                               {0, 7}});
}

// Case (d): neither neighbor is a local minimum; the cut stays.
inline OrthoPolygon fig4d() {
    return validate_polygon(std::vector<Point>{{0, 0},
                                               {6, 0},
                                               {6, 8},
                                               {10, 8},
                                               {10, 9},
                                               {8, 9},
                                               {8, 10},
                                               {4, 10},
                                               {4, 8},
                                               {2, 8},
                                               {2, 7},
                                               {0, 7}});
}

// Same-side variants: both neighbors of the cut slab attach to its left
// side (the path winds through the tall right bar).

// R_{cut-1} is a local minimum; moving the cut right saves one guard.
inline OrthoPolygon fig5_local_min() {
    return validate_polygon(std::vector<Point>{{0, 0},
                                               {9, 0},
                                               {9, 6},
                                               {4, 6},
                                               {4, 4},
                                               {7, 4},
                                               {7, 2},
                                               {3, 2},
                                               {3, 3},
                                               {0, 3}});
}

// R_{cut-1} is not a local minimum; the cut stays.
inline OrthoPolygon fig5_no_min() {
    return validate_polygon(std::vector<Point>{{0, 0},
                                               {9, 0},
                                               {9, 6},
                                               {4, 6},
                                               {4, 4},
                                               {7, 4},
                                               {7, 2},
                                               {3, 2},
                                               {3, 1},
                                               {0, 1}});
}

}  // namespace fixtures

#pragma once

#include "points/configuration.hpp"

namespace fixtures {

using toric::geom::IntVec;
using toric::points::PointConfiguration;

// Lattice points of the segment [0, 2] in Z.
inline PointConfiguration segment02() {
    return PointConfiguration::load({{0}, {1}, {2}}, "segment02");
}

// Coefficient configuration of a plane conic: the 6 lattice points of the
// doubled unit triangle, ordered lexicographically.
inline PointConfiguration conic() {
    return PointConfiguration::load(
        {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}, "conic");
}

inline PointConfiguration unit_triangle() {
    return PointConfiguration::load({{0, 0}, {0, 1}, {1, 0}}, "unit_triangle");
}

inline PointConfiguration unit_square() {
    return PointConfiguration::load({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, "unit_square");
}

// [-1,1]^2 with all 9 lattice points.
inline PointConfiguration symmetric_square() {
    std::vector<IntVec> pts;
    for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y) pts.push_back({x, y});
    return PointConfiguration::load(pts, "symmetric_square");
}

} // namespace fixtures

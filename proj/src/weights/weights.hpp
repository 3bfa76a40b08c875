#pragma once

#include "tri/triangulation.hpp"

namespace toric::weights {

using geom::Rat;
using geom::RatVec;
using points::PointConfiguration;
using tri::Triangulation;

enum class WeightKind { gkz, massive_level, massive_full, hurwitz };

struct WeightVector {
    RatVec entries; // integer-valued for all the constructions here
    WeightKind kind;
    int level = -1; // massive_level only
};

// A j-simplex of T contained in a j-face of P, with its lattice volume
// relative to that face and the (unique) containing face.
struct MassiveSimplex {
    std::vector<int> verts;
    int face_index;
    Rat vol_z;
};

// All massive j-simplices of T, deduplicated across the cells they bound.
std::vector<MassiveSimplex> massive_simplices(const PointConfiguration& config,
                                              const Triangulation& t, int level);

// Per-point sums of lattice cell volumes: entry j adds vol_Z over maximal
// cells having a_j as a vertex.
WeightVector gkz_vector(const PointConfiguration& config, const Triangulation& t);

// Entry i sums vol_Z over massive `level`-simplices incident to a_i. The top
// level coincides with the GKZ vector.
WeightVector massive_level(const PointConfiguration& config, const Triangulation& t,
                           int level);

// Alternating sum over the levels, sign (-1)^(n-j) on level j.
WeightVector massive_gkz_vector(const PointConfiguration& config, const Triangulation& t);

// n * (top level) - (level n-1).
WeightVector hurwitz_vector(const PointConfiguration& config, const Triangulation& t);

// Exact scalar product <phi, v>.
Rat pair(const RatVec& heights, const WeightVector& v);

// Exact integral of the T-interpolant of `heights` over the union of
// codimension-j faces, via the vertex-average rule on massive simplices.
// j = 0 integrates over P itself, j = 1 over the boundary.
Rat integrate_pl(const PointConfiguration& config, const Triangulation& t,
                 const RatVec& heights, int codim);

// Vector-valued companion: integral of x over the same region through the
// same simplex decomposition (cross-checkable against the face moments).
RatVec integrate_position(const PointConfiguration& config, const Triangulation& t,
                          int codim);

} // namespace toric::weights

#pragma once

#include "points/configuration.hpp"

namespace toric::tri {

using geom::AffineFunctional;
using geom::Rat;
using geom::RatVec;
using points::PointConfiguration;

struct Simplex {
    std::vector<int> verts; // sorted labels into J = {0..N}
    Rat vol_z;              // lattice volume, a positive integer
};

enum class Regularity { undecided, regular, non_regular };

// A triangulation of (P, A): maximal cells only, canonically sorted. Points
// of A may be omitted (they are then vertices of no cell).
struct Triangulation {
    std::vector<Simplex> cells;
    std::vector<int> used_vertices;
    Regularity regularity = Regularity::undecided;
    RatVec witness; // inducing heights when regular
    RatVec gordan;  // Gordan multipliers over the strict system when not
};

// The subdivision induced by a height function: per-cell point sets and the
// affine roof pieces; the concave function g is the pointwise minimum of the
// pieces.
struct RegularSubdivision {
    std::vector<geom::LiftedCell> cells;
    RatVec heights;

    Rat evaluate(const RatVec& x) const; // g_phi(x)
};

// A T-piecewise linear interpolant of heights (not necessarily concave).
struct PLFunction {
    std::vector<std::vector<int>> cells;
    std::vector<AffineFunctional> pieces;
    const PointConfiguration* config;

    Rat evaluate(const RatVec& x) const; // x must lie in P
};

// Builds a Triangulation from cell vertex lists: computes lattice volumes,
// canonicalizes and (optionally) validates the complex exactly.
Triangulation make_triangulation(const PointConfiguration& config,
                                 std::vector<std::vector<int>> cell_verts,
                                 bool validate = true);

// Exact proper-intersection test: do the two simplices meet in a common
// face (possibly empty)?
bool proper_intersection(const PointConfiguration& config, const std::vector<int>& a,
                         const std::vector<int>& b);

// Throws internal_error when T is not a valid triangulation of (P, A).
void validate_triangulation(const PointConfiguration& config, const Triangulation& t);

// All triangulations of (P, A), canonically ordered, found by exhaustive
// wall-extension backtracking. Throws scale_error beyond `max_count`.
std::vector<Triangulation> enumerate_triangulations(const PointConfiguration& config,
                                                    long max_count = 100000);

struct RegularityResult {
    Regularity status;
    RatVec witness;
    RatVec gordan;
};

// Decides regularity via the strict system "every non-member point lies
// strictly below every cell's affine lift", solved by exact LP.
RegularityResult is_regular(const PointConfiguration& config, const Triangulation& t);

RegularSubdivision subdivision_from_heights(const PointConfiguration& config,
                                            const RatVec& heights);

// Refines a subdivision to a triangulation by the canonical per-cell pulling
// rule (the symbolic analogue of a lexicographic perturbation). The refined
// complex interpolates the same function on every cell.
Triangulation refine_to_triangulation(const PointConfiguration& config,
                                      const RegularSubdivision& s);

PLFunction pl_function(const PointConfiguration& config, const Triangulation& t,
                       const RatVec& heights);

struct Concavified {
    RegularSubdivision subdivision;
    Triangulation triangulation; // g_phi = g_{phi, T} for this T
};

Concavified concavify(const PointConfiguration& config, const RatVec& heights);

} // namespace toric::tri

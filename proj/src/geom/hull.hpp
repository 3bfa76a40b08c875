#pragma once

#include <vector>

#include "geom/lp.hpp"

namespace toric::geom {

struct Face {
    int dim = 0;
    std::vector<int> points;   // indices of all input points on the face, sorted
    std::vector<int> vertices; // the subset that are hull vertices
    RatMat basis;              // basis of the face's direction space
    // Facets additionally carry their supporting halfspace
    //   normal . x >= offset (inward), with a primitive integer normal.
    RatVec normal;
    Rat offset;
};

// Complete face lattice of a full-dimensional polytope, built once and then
// immutable. Faces are sorted by (dim, point set); containment is point-set
// inclusion.
struct FaceLattice {
    int ambient_dim = 0;
    std::vector<Face> faces;
    std::vector<int> facets; // indices into `faces`
    int top = -1;            // index of the hull itself

    const Face& top_face() const { return faces[top]; }
    std::vector<int> faces_of_dim(int d) const;
    std::vector<int> faces_of_codim(int j) const { return faces_of_dim(ambient_dim - j); }

    // Index of the smallest face whose point set contains all of `pts`
    // (intersection of all facets containing them; `top` when none does).
    int smallest_face_containing(const std::vector<int>& pts) const;
};

// Exact hull with full face enumeration. Throws input_error on dimension
// mismatches and on hulls of lower dimension than the ambient space (the
// degenerate case is rejected by design). Points must be pairwise distinct.
FaceLattice convex_hull(const RatMat& points);

// Canonical ("pulling") triangulation of a point set labelled by `ids`:
// recursively cones the smallest label of each face over its opposite
// facets. Cells are returned as sorted id sets; the result only depends on
// the points and their labels, and restricting to any face of the hull
// yields that face's own pulling triangulation (so per-cell refinements of
// a subdivision glue into a global triangulation).
std::vector<std::vector<int>> pulling_triangulation(const RatMat& points,
                                                    const std::vector<int>& ids);

// One cell of the subdivision induced by lifting points to heights and
// taking the upper hull: `points` lists every input point on the cell's
// supporting hyperplane, and `lift` is that hyperplane as a function of the
// base coordinates (lift(a_i) >= h_i everywhere, with equality on the cell).
struct LiftedCell {
    std::vector<int> points;
    AffineFunctional lift;
};

// Upper-hull subdivision of a full-dimensional point set under heights `h`.
// A globally affine lift yields the single trivial cell.
std::vector<LiftedCell> upper_hull_subdivision(const RatMat& points, const RatVec& h);

} // namespace toric::geom

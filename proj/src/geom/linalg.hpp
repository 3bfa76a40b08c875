#pragma once

#include <optional>
#include <vector>

#include "geom/rational.hpp"

namespace toric::geom {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row-major
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rat& s);
bool is_zero(const RatVec& a);

RatVec to_rat(const IntVec& v);
// Fails (nullopt) when an entry is not an integer.
std::optional<IntVec> to_int(const RatVec& v);

// An affine map x -> <gradient, x> + constant.
struct AffineFunctional {
    RatVec gradient;
    Rat constant;

    Rat eval(const RatVec& x) const { return dot(gradient, x) + constant; }
};

// Gaussian elimination over Q. All inputs are copied; none of these mutate.
int rank(RatMat m);
Rat det(RatMat m);

// Unique solution of a square nonsingular system; nullopt when singular or
// inconsistent dimensions.
std::optional<RatVec> solve_square(RatMat a, RatVec b);

// One solution of a (possibly rectangular) consistent system A x = b;
// nullopt when inconsistent.
std::optional<RatVec> solve_any(RatMat a, RatVec b);

// Basis of {x : A x = 0} where the rows of `a` are the constraints.
RatMat nullspace(RatMat a, int ncols);

// Indices of a maximal linearly independent subset of rows, echelon order.
std::vector<int> independent_rows(const RatMat& m);

// Scales a nonzero rational vector to a primitive integer vector with the
// same direction (gcd of entries 1, sign preserved).
IntVec make_primitive(const RatVec& v);

// Column-style Hermite reduction: basis of the lattice generated by the
// given integer vectors. Returned basis has size equal to the lattice rank.
IntMat lattice_basis(IntMat generators);

// |det| of the coordinates of `vec` in `basis` — the lattice "length" data.
// Requires vec in the span; entries of the coordinate vector must be
// integers when vec lies in the lattice.
RatVec coords_in_basis(const IntMat& basis, const RatVec& vec);

} // namespace toric::geom

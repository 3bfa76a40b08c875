#pragma once

#include <vector>

#include "geom/linalg.hpp"

namespace toric::geom {

enum class Rel { le, ge, eq };

struct LpRow {
    RatVec a;
    Rel rel;
    Rat b;
};

// max/min c.x subject to the rows; variables are free unless flagged
// nonnegative. Exact rational simplex with Bland's rule, so termination is
// guaranteed and every reported value is exact.
struct Lp {
    int nvars = 0;
    std::vector<LpRow> rows;
    RatVec c;
    bool maximize = true;
    std::vector<bool> nonneg; // size nvars
};

struct LpResult {
    enum class Status { optimal, infeasible, unbounded };
    Status status;
    RatVec x;   // primal solution (optimal)
    Rat value;  // objective at x
    // Infeasibility certificate: per-row multipliers mu with
    //   mu_i >= 0 on `le` rows, mu_i <= 0 on `ge` rows, free on `eq` rows,
    //   sum_i mu_i a_i >= 0 on nonnegative vars and = 0 on free vars,
    //   sum_i mu_i b_i < 0.
    RatVec farkas;
};

LpResult solve_lp(const Lp& lp);

// --- Derived feasibility interfaces -----------------------------------

// A constraint f(x) > 0 (strict) or f(x) >= 0.
struct SignConstraint {
    AffineFunctional f;
    bool strict;
};

struct StrictFeasibility {
    bool feasible;
    RatVec witness; // satisfies every constraint, strict ones strictly
    Rat slack;      // optimum of the slack maximization
    // For an infeasible homogeneous all-strict system: Gordan multipliers
    // y >= 0, sum y = 1, sum_c y_c grad_c = 0. Empty otherwise.
    RatVec gordan;
};

// Decides strict feasibility by maximizing a slack s with every strict
// constraint relaxed to f(x) >= s, under the gauge |x_i| <= 1, s <= 1.
// Feasible iff the optimum slack is positive.
StrictFeasibility lp_feasible_strict(const std::vector<SignConstraint>& cons, int dim);

struct Membership {
    bool inside;
    RatVec coefficients;       // convex combination reproducing the point
    AffineFunctional separator; // <= 0 on every vertex, > 0 at the point
};

// Exact convex-hull membership with a certificate either way. `vertices`
// are the rows of V.
Membership point_in_hull(const RatVec& p, const RatMat& vertices);

} // namespace toric::geom

#include "geom/lp.hpp"

#include <algorithm>

namespace toric::geom {

namespace {

// Dictionary simplex on the computational standard form
//   min c.x  s.t.  T x = rhs,  x >= 0,
// where the artificial columns (one per row) occupy the tail of the tableau
// and double as a running copy of B^{-1}.
struct Tableau {
    RatMat t;              // m x ncols
    RatVec rhs;            // m, kept >= 0
    std::vector<int> basis; // m, column index of the basic variable per row
    RatVec cost;           // ncols
    int ncols;
    int first_artificial;

    void pivot(int row, int col) {
        Rat inv = 1 / t[row][col];
        for (int c = 0; c < ncols; ++c) t[row][c] *= inv;
        rhs[row] *= inv;
        for (size_t i = 0; i < t.size(); ++i) {
            if (static_cast<int>(i) == row || sgn(t[i][col]) == 0) continue;
            Rat f = t[i][col];
            for (int c = 0; c < ncols; ++c) t[i][c] -= f * t[row][c];
            rhs[i] -= f * rhs[row];
        }
        basis[row] = col;
    }

    // Dantzig's rule while progress is made, with a permanent switch to
    // Bland's rule after a degenerate streak so termination stays
    // guaranteed. `barred` columns never enter. Returns false on
    // unboundedness.
    bool run(const std::vector<bool>& barred) {
        const int m = static_cast<int>(t.size());
        int stalled = 0;
        bool bland = false;
        while (true) {
            // reduced cost: c_j - sum_i cost[basis[i]] * t[i][j]
            int enter = -1;
            Rat most_negative;
            for (int j = 0; j < ncols; ++j) {
                if (barred[j]) continue;
                Rat r = cost[j];
                for (int i = 0; i < m; ++i)
                    if (sgn(cost[basis[i]]) != 0 && sgn(t[i][j]) != 0)
                        r -= cost[basis[i]] * t[i][j];
                if (sgn(r) >= 0) continue;
                if (bland) { enter = j; break; } // smallest index
                if (enter < 0 || r < most_negative) {
                    enter = j;
                    most_negative = r;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m; ++i) {
                if (sgn(t[i][enter]) <= 0) continue;
                Rat ratio = rhs[i] / t[i][enter];
                if (leave < 0 || cmp(ratio, best) < 0 ||
                    (cmp(ratio, best) == 0 && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            if (!bland) {
                stalled = (sgn(best) == 0) ? stalled + 1 : 0;
                if (stalled > 40) bland = true;
            }
            pivot(leave, enter);
        }
    }

    Rat objective() const {
        Rat v = 0;
        for (size_t i = 0; i < t.size(); ++i) v += cost[basis[i]] * rhs[i];
        return v;
    }
};

void verify_farkas(const Lp& lp, const RatVec& mu) {
    const int d = lp.nvars;
    RatVec f(d, Rat(0));
    Rat rhs = 0;
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        switch (lp.rows[i].rel) {
            case Rel::le: check_internal(sgn(mu[i]) >= 0, "farkas sign le"); break;
            case Rel::ge: check_internal(sgn(mu[i]) <= 0, "farkas sign ge"); break;
            case Rel::eq: break;
        }
        for (int j = 0; j < d; ++j) f[j] += mu[i] * lp.rows[i].a[j];
        rhs += mu[i] * lp.rows[i].b;
    }
    for (int j = 0; j < d; ++j)
        check_internal(lp.nonneg[j] ? sgn(f[j]) >= 0 : sgn(f[j]) == 0,
                       "farkas combination sign");
    check_internal(sgn(rhs) < 0, "farkas rhs sign");
}

} // namespace

LpResult solve_lp(const Lp& lp) {
    const int m = static_cast<int>(lp.rows.size());
    const int d = lp.nvars;
    check_internal(static_cast<int>(lp.c.size()) == d, "lp: objective size");
    check_internal(static_cast<int>(lp.nonneg.size()) == d, "lp: nonneg size");

    // Column layout: for each var one column, plus a negative part for free
    // vars; then slack/surplus columns; then artificials.
    std::vector<int> pos_col(d), neg_col(d, -1);
    int ncols = 0;
    for (int j = 0; j < d; ++j) {
        pos_col[j] = ncols++;
        if (!lp.nonneg[j]) neg_col[j] = ncols++;
    }
    std::vector<int> slack_col(m, -1);
    for (int i = 0; i < m; ++i)
        if (lp.rows[i].rel != Rel::eq) slack_col[i] = ncols++;
    const int first_art = ncols;
    ncols += m;

    Tableau tb;
    tb.ncols = ncols;
    tb.first_artificial = first_art;
    tb.t.assign(m, RatVec(ncols, Rat(0)));
    tb.rhs.assign(m, Rat(0));
    tb.basis.resize(m);
    std::vector<int> row_sign(m, 1);
    for (int i = 0; i < m; ++i) {
        const LpRow& row = lp.rows[i];
        check_internal(static_cast<int>(row.a.size()) == d, "lp: row size");
        int s = (sgn(row.b) < 0) ? -1 : 1;
        row_sign[i] = s;
        for (int j = 0; j < d; ++j) {
            tb.t[i][pos_col[j]] = row.a[j] * s;
            if (neg_col[j] >= 0) tb.t[i][neg_col[j]] = -row.a[j] * s;
        }
        if (row.rel == Rel::le) tb.t[i][slack_col[i]] = Rat(s);
        if (row.rel == Rel::ge) tb.t[i][slack_col[i]] = Rat(-s);
        tb.t[i][first_art + i] = 1;
        tb.rhs[i] = row.b * s;
        tb.basis[i] = first_art + i;
    }

    // Phase 1: minimize the artificial sum.
    tb.cost.assign(ncols, Rat(0));
    for (int i = 0; i < m; ++i) tb.cost[first_art + i] = 1;
    std::vector<bool> barred(ncols, false);
    bool ok = tb.run(barred);
    check_internal(ok, "lp: phase 1 unbounded");

    LpResult res;
    if (sgn(tb.objective()) > 0) {
        res.status = LpResult::Status::infeasible;
        // y = c_B B^{-1}, read off the artificial columns.
        res.farkas.assign(m, Rat(0));
        for (int i = 0; i < m; ++i) {
            Rat y = 0;
            for (int k = 0; k < m; ++k)
                if (tb.basis[k] >= first_art) y += tb.t[k][first_art + i];
            res.farkas[i] = -y * row_sign[i];
        }
        verify_farkas(lp, res.farkas);
        return res;
    }

    // Drive leftover artificials out of the basis (their values are 0).
    for (int i = 0; i < m; ++i) {
        if (tb.basis[i] < first_art) continue;
        int col = -1;
        for (int j = 0; j < first_art; ++j)
            if (sgn(tb.t[i][j]) != 0) { col = j; break; }
        if (col >= 0) tb.pivot(i, col);
        // else: redundant row; the artificial stays basic at zero and is
        // barred below, which keeps it at zero for the rest of the solve.
    }

    // Phase 2.
    tb.cost.assign(ncols, Rat(0));
    for (int j = 0; j < d; ++j) {
        Rat cj = lp.maximize ? -lp.c[j] : lp.c[j];
        tb.cost[pos_col[j]] = cj;
        if (neg_col[j] >= 0) tb.cost[neg_col[j]] = -cj;
    }
    for (int i = 0; i < m; ++i) barred[first_art + i] = true;
    ok = tb.run(barred);
    if (!ok) {
        res.status = LpResult::Status::unbounded;
        return res;
    }

    res.status = LpResult::Status::optimal;
    res.x.assign(d, Rat(0));
    RatVec colval(ncols, Rat(0));
    for (int i = 0; i < m; ++i) colval[tb.basis[i]] = tb.rhs[i];
    for (int j = 0; j < d; ++j) {
        res.x[j] = colval[pos_col[j]];
        if (neg_col[j] >= 0) res.x[j] -= colval[neg_col[j]];
    }
    res.value = dot(lp.c, res.x);
    return res;
}

StrictFeasibility lp_feasible_strict(const std::vector<SignConstraint>& cons, int dim) {
    StrictFeasibility out;
    if (cons.empty()) {
        out.feasible = true;
        out.witness.assign(dim, Rat(0));
        out.slack = 1;
        return out;
    }

    // Variables (x_0..x_{dim-1}, s); maximize s.
    Lp lp;
    lp.nvars = dim + 1;
    lp.nonneg.assign(dim + 1, false);
    lp.c.assign(dim + 1, Rat(0));
    lp.c[dim] = 1;
    for (const auto& c : cons) {
        check_internal(static_cast<int>(c.f.gradient.size()) == dim,
                       "lp_feasible_strict: constraint dimension");
        LpRow row;
        row.a = c.f.gradient;
        row.a.push_back(c.strict ? Rat(-1) : Rat(0));
        row.rel = Rel::ge;
        row.b = -c.f.constant;
        lp.rows.push_back(std::move(row));
    }
    for (int j = 0; j < dim; ++j) { // gauge box |x_j| <= 1
        LpRow hi{RatVec(dim + 1, Rat(0)), Rel::le, Rat(1)};
        hi.a[j] = 1;
        lp.rows.push_back(hi);
        LpRow lo{RatVec(dim + 1, Rat(0)), Rel::ge, Rat(-1)};
        lo.a[j] = 1;
        lp.rows.push_back(lo);
    }
    {
        LpRow cap{RatVec(dim + 1, Rat(0)), Rel::le, Rat(1)};
        cap.a[dim] = 1;
        lp.rows.push_back(cap);
    }

    LpResult r = solve_lp(lp);
    if (r.status == LpResult::Status::optimal && sgn(r.value) > 0) {
        out.feasible = true;
        out.witness.assign(r.x.begin(), r.x.begin() + dim);
        out.slack = r.value;
        for (const auto& c : cons) {
            Rat v = c.f.eval(out.witness);
            check_internal(c.strict ? sgn(v) > 0 : sgn(v) >= 0,
                           "strict feasibility witness check");
        }
        return out;
    }

    out.feasible = false;
    out.slack = (r.status == LpResult::Status::optimal) ? r.value : Rat(0);

    // Gordan certificate for homogeneous all-strict systems: y >= 0,
    // sum y = 1, sum_c y_c grad_c = 0.
    bool homogeneous = std::all_of(cons.begin(), cons.end(), [](const SignConstraint& c) {
        return c.strict && sgn(c.f.constant) == 0;
    });
    if (homogeneous) {
        Lp g;
        g.nvars = static_cast<int>(cons.size());
        g.nonneg.assign(g.nvars, true);
        g.c.assign(g.nvars, Rat(0));
        for (int coord = 0; coord < dim; ++coord) {
            LpRow row{RatVec(g.nvars), Rel::eq, Rat(0)};
            for (int c = 0; c < g.nvars; ++c) row.a[c] = cons[c].f.gradient[coord];
            g.rows.push_back(std::move(row));
        }
        g.rows.push_back(LpRow{RatVec(g.nvars, Rat(1)), Rel::eq, Rat(1)});
        LpResult gr = solve_lp(g);
        check_internal(gr.status == LpResult::Status::optimal,
                       "gordan certificate must exist for infeasible strict system");
        out.gordan = gr.x;
        RatVec combo(dim, Rat(0));
        for (int c = 0; c < g.nvars; ++c) {
            check_internal(sgn(out.gordan[c]) >= 0, "gordan sign");
            combo = add(combo, scale(cons[c].f.gradient, out.gordan[c]));
        }
        check_internal(is_zero(combo), "gordan combination");
    }
    return out;
}

Membership point_in_hull(const RatVec& p, const RatMat& vertices) {
    check_internal(!vertices.empty(), "point_in_hull: empty vertex list");
    const int n = static_cast<int>(p.size());
    for (const auto& v : vertices)
        if (static_cast<int>(v.size()) != n)
            throw input_error("point_in_hull: dimension mismatch");

    const int m = static_cast<int>(vertices.size());
    Lp lp;
    lp.nvars = m;
    lp.nonneg.assign(m, true);
    lp.c.assign(m, Rat(0));
    for (int coord = 0; coord < n; ++coord) {
        LpRow row{RatVec(m), Rel::eq, p[coord]};
        for (int j = 0; j < m; ++j) row.a[j] = vertices[j][coord];
        lp.rows.push_back(std::move(row));
    }
    lp.rows.push_back(LpRow{RatVec(m, Rat(1)), Rel::eq, Rat(1)});

    LpResult r = solve_lp(lp);
    Membership out;
    if (r.status == LpResult::Status::optimal) {
        out.inside = true;
        out.coefficients = r.x;
        // The certificate is the product; re-check it before returning.
        RatVec combo(n, Rat(0));
        Rat total = 0;
        for (int j = 0; j < m; ++j) {
            check_internal(sgn(r.x[j]) >= 0, "membership coefficient sign");
            combo = add(combo, scale(vertices[j], r.x[j]));
            total += r.x[j];
        }
        check_internal(total == 1 && combo == p, "membership combination");
        return out;
    }

    check_internal(r.status == LpResult::Status::infeasible, "membership lp status");
    // farkas = (w, t): w.v_j + t >= 0 for all j and w.p + t < 0.
    // Separator h(x) = -w.x - t, scaled to a primitive integer gradient.
    RatVec wt(r.farkas.begin(), r.farkas.end());
    RatVec h(n + 1);
    for (int i = 0; i <= n; ++i) h[i] = -wt[i];
    IntVec prim = make_primitive(h);
    out.inside = false;
    out.separator.gradient.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) out.separator.gradient[i] = Rat(prim[i]);
    out.separator.constant = Rat(prim[n]);
    for (const auto& v : vertices)
        check_internal(sgn(out.separator.eval(v)) <= 0, "separator on hull");
    check_internal(sgn(out.separator.eval(p)) > 0, "separator at point");
    return out;
}

} // namespace toric::geom

#include "tri/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric::tri {

using geom::Rel;
using geom::SignConstraint;
using toric::check_internal;
using toric::input_error;
using toric::internal_error;
using toric::scale_error;

namespace {

// Barycentric coordinates of point x with respect to the simplex spanned by
// the given configuration points.
RatVec barycentric(const PointConfiguration& config, const std::vector<int>& simplex,
                   const RatVec& x) {
    const int n = config.dim();
    geom::RatMat m(n + 1, RatVec(simplex.size()));
    for (size_t k = 0; k < simplex.size(); ++k) {
        for (int c = 0; c < n; ++c) m[c][k] = config.rational_points()[simplex[k]][c];
        m[n][k] = 1;
    }
    RatVec rhs = x;
    rhs.push_back(Rat(1));
    auto coords = geom::solve_any(m, rhs);
    check_internal(coords.has_value(), "barycentric: point outside affine hull");
    return *coords;
}

} // namespace

Rat RegularSubdivision::evaluate(const RatVec& x) const {
    check_internal(!cells.empty(), "empty subdivision");
    Rat best = cells[0].lift.eval(x);
    for (size_t i = 1; i < cells.size(); ++i) {
        Rat v = cells[i].lift.eval(x);
        if (v < best) best = v; // concave roof = min of its affine pieces
    }
    return best;
}

Rat PLFunction::evaluate(const RatVec& x) const {
    for (size_t i = 0; i < cells.size(); ++i) {
        RatVec b = barycentric(*config, cells[i], x);
        if (std::all_of(b.begin(), b.end(), [](const Rat& q) { return sgn(q) >= 0; }))
            return pieces[i].eval(x);
    }
    throw input_error("PL evaluation outside the union of cells");
}

Triangulation make_triangulation(const PointConfiguration& config,
                                 std::vector<std::vector<int>> cell_verts, bool validate) {
    Triangulation t;
    std::set<int> used;
    for (auto& verts : cell_verts) {
        std::sort(verts.begin(), verts.end());
        if (static_cast<int>(verts.size()) != config.dim() + 1)
            throw input_error("cell with wrong vertex count");
        Simplex s;
        s.vol_z = config.simplex_vol_z(verts, config.hull().top);
        if (sgn(s.vol_z) == 0) throw input_error("degenerate cell in triangulation");
        used.insert(verts.begin(), verts.end());
        s.verts = std::move(verts);
        t.cells.push_back(std::move(s));
    }
    std::sort(t.cells.begin(), t.cells.end(),
              [](const Simplex& a, const Simplex& b) { return a.verts < b.verts; });
    t.used_vertices.assign(used.begin(), used.end());
    if (validate) validate_triangulation(config, t);
    return t;
}

namespace {

// Facet hyperplanes of a full-dimensional simplex, oriented inward, plus the
// vertex coordinates; enough for the exact separation fast paths below.
struct SimplexShape {
    std::vector<int> verts;
    std::vector<AffineFunctional> facets; // facet i omits verts[i]
    geom::RatMat coords;

    static SimplexShape build(const PointConfiguration& config, const std::vector<int>& v) {
        SimplexShape s;
        s.verts = v;
        for (int p : v) s.coords.push_back(config.rational_points()[p]);
        const int n = config.dim();
        for (size_t drop = 0; drop < v.size(); ++drop) {
            geom::RatMat d;
            int base = (drop == 0) ? 1 : 0;
            for (size_t k = 0; k < v.size(); ++k) {
                if (static_cast<int>(k) == static_cast<int>(drop) ||
                    static_cast<int>(k) == base)
                    continue;
                d.push_back(geom::sub(s.coords[k], s.coords[base]));
            }
            auto ns = geom::nullspace(d, n);
            check_internal(ns.size() == 1, "simplex facet normal");
            AffineFunctional f;
            f.gradient = ns[0];
            f.constant = -geom::dot(f.gradient, s.coords[base]);
            if (sgn(f.eval(s.coords[drop])) < 0) {
                f.gradient = geom::scale(f.gradient, Rat(-1));
                f.constant = -f.constant;
            }
            s.facets.push_back(std::move(f));
        }
        return s;
    }
};

// Conclusive-only fast test: 1 = proper, 0 = improper, -1 = unknown.
int classify_intersection_fast(const SimplexShape& a, const SimplexShape& b) {
    std::vector<int> common;
    std::set_intersection(a.verts.begin(), a.verts.end(), b.verts.begin(),
                          b.verts.end(), std::back_inserter(common));
    // A vertex of one strictly inside the other means overlap.
    auto strictly_inside = [](const SimplexShape& s, const geom::RatVec& x) {
        for (const auto& f : s.facets)
            if (sgn(f.eval(x)) <= 0) return false;
        return true;
    };
    for (const auto& x : a.coords)
        if (strictly_inside(b, x)) return 0;
    for (const auto& x : b.coords)
        if (strictly_inside(a, x)) return 0;
    // A facet hyperplane of either simplex that weakly separates them, with
    // exactly the common vertices on it, pins the intersection to conv(common).
    auto separated_by = [&](const SimplexShape& s, const SimplexShape& o) {
        for (const auto& f : s.facets) {
            bool ok = true;
            std::vector<int> on;
            for (size_t k = 0; k < s.coords.size() && ok; ++k) {
                int sg = sgn(f.eval(s.coords[k]));
                if (sg < 0) ok = false;
                if (sg == 0) on.push_back(s.verts[k]);
            }
            for (size_t k = 0; k < o.coords.size() && ok; ++k) {
                int sg = sgn(f.eval(o.coords[k]));
                if (sg > 0) ok = false;
                if (sg == 0) on.push_back(o.verts[k]);
            }
            if (!ok) continue;
            std::sort(on.begin(), on.end());
            on.erase(std::unique(on.begin(), on.end()), on.end());
            if (on == common) return true;
        }
        return false;
    };
    if (separated_by(a, b) || separated_by(b, a)) return 1;
    return -1;
}

} // namespace

bool proper_intersection(const PointConfiguration& config, const std::vector<int>& a,
                         const std::vector<int>& b) {
    const int n = config.dim();
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    // conv(a) and conv(b) meet properly iff their intersection is exactly
    // conv(common). It sticks out iff some point common to both carries a
    // positive barycentric weight on a vertex of `a` outside `common`; over
    // the joint coefficients (lambda, mu) that is a tiny LP per vertex.
    const int va = static_cast<int>(a.size());
    const int vb = static_cast<int>(b.size());
    geom::Lp lp;
    lp.nvars = va + vb;
    lp.nonneg.assign(lp.nvars, true);
    lp.c.assign(lp.nvars, Rat(0));
    for (int c = 0; c < n; ++c) { // sum lambda_i a_i = sum mu_j b_j
        geom::LpRow row{RatVec(lp.nvars, Rat(0)), Rel::eq, Rat(0)};
        for (int i = 0; i < va; ++i) row.a[i] = config.rational_points()[a[i]][c];
        for (int j = 0; j < vb; ++j) row.a[va + j] = -config.rational_points()[b[j]][c];
        lp.rows.push_back(std::move(row));
    }
    for (int side = 0; side < 2; ++side) { // sum lambda = 1 = sum mu
        geom::LpRow row{RatVec(lp.nvars, Rat(0)), Rel::eq, Rat(1)};
        for (int i = 0; i < (side == 0 ? va : vb); ++i)
            row.a[(side == 0 ? 0 : va) + i] = 1;
        lp.rows.push_back(std::move(row));
    }
    for (int i = 0; i < va; ++i) {
        if (std::binary_search(common.begin(), common.end(), a[i])) continue;
        lp.c[i] = 1;
        auto r = geom::solve_lp(lp);
        lp.c[i] = 0;
        if (r.status == geom::LpResult::Status::infeasible) return true; // disjoint
        check_internal(r.status == geom::LpResult::Status::optimal,
                       "bounded intersection LP");
        if (sgn(r.value) > 0) return false;
    }
    return true;
}

void validate_triangulation(const PointConfiguration& config, const Triangulation& t) {
    Rat total = 0;
    for (const auto& cell : t.cells) total += cell.vol_z;
    check_internal(total == config.face_data(config.hull().top).vol_z,
                   "triangulation volumes do not partition P");
    for (size_t i = 0; i < t.cells.size(); ++i)
        for (size_t j = i + 1; j < t.cells.size(); ++j)
            check_internal(proper_intersection(config, t.cells[i].verts, t.cells[j].verts),
                           "triangulation cells intersect improperly");
}

std::vector<Triangulation> enumerate_triangulations(const PointConfiguration& config,
                                                    long max_count) {
    const int n = config.dim();
    const int N = config.count();
    if (N > 16)
        throw scale_error("too large: enumeration supports at most 16 points, got " +
                          std::to_string(N));

    // Candidate maximal cells: every affinely independent (n+1)-subset.
    std::vector<Simplex> cand;
    {
        std::vector<int> idx(n + 1);
        for (int i = 0; i <= n; ++i) idx[i] = i;
        while (true) {
            geom::RatMat d;
            for (int k = 1; k <= n; ++k)
                d.push_back(geom::sub(config.rational_points()[idx[k]],
                                      config.rational_points()[idx[0]]));
            if (geom::rank(d) == n) {
                Simplex s;
                s.verts = idx;
                s.vol_z = config.simplex_vol_z(idx, config.hull().top);
                cand.push_back(std::move(s));
            }
            int i = n;
            while (i >= 0 && idx[i] == N - (n + 1) + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int k = i + 1; k <= n; ++k) idx[k] = idx[k - 1] + 1;
        }
    }
    const int C = static_cast<int>(cand.size());

    // Walls: (n-1)-faces of candidates; a wall inside a proper face of P is
    // a boundary wall and admits exactly one incident cell.
    std::map<std::vector<int>, int> wall_id;
    std::vector<std::vector<int>> wall_verts;
    std::vector<bool> wall_boundary;
    std::vector<std::vector<int>> wall_cands;
    std::vector<std::vector<int>> cand_walls(C);
    for (int ci = 0; ci < C; ++ci) {
        const auto& verts = cand[ci].verts;
        for (int drop = 0; drop <= n; ++drop) {
            std::vector<int> w;
            for (int k = 0; k <= n; ++k)
                if (k != drop) w.push_back(verts[k]);
            auto it = wall_id.find(w);
            int id;
            if (it == wall_id.end()) {
                id = static_cast<int>(wall_verts.size());
                wall_id.emplace(w, id);
                wall_verts.push_back(w);
                int sf = config.hull().smallest_face_containing(w);
                wall_boundary.push_back(config.hull().faces[sf].dim < n);
                wall_cands.emplace_back();
            } else {
                id = it->second;
            }
            wall_cands[id].push_back(ci);
            cand_walls[ci].push_back(id);
        }
    }

    // Pairwise compatibility, computed once; the exact LP only decides the
    // pairs the hyperplane fast paths leave open.
    std::vector<SimplexShape> shapes;
    shapes.reserve(C);
    for (int i = 0; i < C; ++i) shapes.push_back(SimplexShape::build(config, cand[i].verts));
    std::vector<std::vector<bool>> compat(C, std::vector<bool>(C, false));
    for (int i = 0; i < C; ++i)
        for (int j = i + 1; j < C; ++j) {
            int fast = classify_intersection_fast(shapes[i], shapes[j]);
            compat[i][j] = compat[j][i] =
                (fast >= 0) ? (fast == 1)
                            : proper_intersection(config, cand[i].verts, cand[j].verts);
        }

    std::vector<Triangulation> found;
    std::set<std::vector<std::vector<int>>> seen;
    std::vector<int> wall_count(wall_verts.size(), 0);
    std::vector<int> chosen;

    auto open_wall = [&]() -> int {
        int best = -1;
        for (int ci : chosen)
            for (int w : cand_walls[ci])
                if (wall_count[w] == 1 && !wall_boundary[w])
                    if (best < 0 || wall_verts[w] < wall_verts[best]) best = w;
        return best;
    };

    // Each triangulation is produced exactly once: from its minimal cell as
    // the seed, always extending across the smallest open wall.
    auto dfs = [&](auto&& self, int seed) -> void {
        int w = open_wall();
        if (w < 0) {
            std::vector<std::vector<int>> cells;
            for (int ci : chosen) cells.push_back(cand[ci].verts);
            std::sort(cells.begin(), cells.end());
            check_internal(seen.insert(cells).second, "duplicate triangulation found");
            found.push_back(make_triangulation(config, cells, false));
            // Pairwise compatibility is guaranteed by the matrix; covering P
            // reduces to the volume partition.
            Rat total = 0;
            for (const auto& cell : found.back().cells) total += cell.vol_z;
            check_internal(total == config.face_data(config.hull().top).vol_z,
                           "completed complex does not cover P");
            if (static_cast<long>(found.size()) > max_count)
                throw scale_error("too large: more than " + std::to_string(max_count) +
                                  " triangulations");
            return;
        }
        for (int c : wall_cands[w]) {
            if (c <= seed) continue;
            if (std::binary_search(chosen.begin(), chosen.end(), c)) continue;
            bool ok = true;
            for (int o : chosen)
                if (!compat[o][c]) { ok = false; break; }
            if (!ok) continue;
            chosen.insert(std::lower_bound(chosen.begin(), chosen.end(), c), c);
            for (int cw : cand_walls[c]) ++wall_count[cw];
            self(self, seed);
            chosen.erase(std::find(chosen.begin(), chosen.end(), c));
            for (int cw : cand_walls[c]) --wall_count[cw];
        }
    };

    for (int seed = 0; seed < C; ++seed) {
        chosen = {seed};
        std::fill(wall_count.begin(), wall_count.end(), 0);
        for (int cw : cand_walls[seed]) ++wall_count[cw];
        dfs(dfs, seed);
    }

    std::sort(found.begin(), found.end(), [](const Triangulation& a, const Triangulation& b) {
        std::vector<std::vector<int>> av, bv;
        for (const auto& c : a.cells) av.push_back(c.verts);
        for (const auto& c : b.cells) bv.push_back(c.verts);
        return av < bv;
    });
    return found;
}

RegularityResult is_regular(const PointConfiguration& config, const Triangulation& t) {
    const int N1 = config.count();
    // The local criterion: a strict fold across every interior wall, and
    // every unused point strictly below the cells covering it. Each
    // constraint says "the affine lift of one cell strictly dominates the
    // height at one outside point".
    std::vector<SignConstraint> cons;
    auto dominates = [&](const std::vector<int>& cell, int j) {
        RatVec bary = barycentric(config, cell, config.rational_points()[j]);
        AffineFunctional f{RatVec(N1, Rat(0)), Rat(0)};
        for (size_t k = 0; k < cell.size(); ++k) f.gradient[cell[k]] += bary[k];
        f.gradient[j] -= 1;
        cons.push_back({f, true});
    };
    std::map<std::vector<int>, std::vector<int>> wall_cells;
    for (int ci = 0; ci < static_cast<int>(t.cells.size()); ++ci) {
        const auto& v = t.cells[ci].verts;
        for (size_t drop = 0; drop < v.size(); ++drop) {
            std::vector<int> w;
            for (size_t k = 0; k < v.size(); ++k)
                if (k != drop) w.push_back(v[k]);
            wall_cells[w].push_back(ci);
        }
    }
    for (const auto& [wall, cells] : wall_cells) {
        if (cells.size() < 2) continue;
        check_internal(cells.size() == 2, "wall shared by more than two cells");
        int opposite = -1;
        for (int v : t.cells[cells[1]].verts)
            if (!std::binary_search(wall.begin(), wall.end(), v)) opposite = v;
        dominates(t.cells[cells[0]].verts, opposite);
    }
    for (int j = 0; j < N1; ++j) {
        if (std::binary_search(t.used_vertices.begin(), t.used_vertices.end(), j))
            continue;
        for (const auto& cell : t.cells) {
            RatVec bary = barycentric(config, cell.verts, config.rational_points()[j]);
            bool inside = std::all_of(bary.begin(), bary.end(),
                                      [](const Rat& q) { return sgn(q) >= 0; });
            if (inside) dominates(cell.verts, j);
        }
    }
    auto r = geom::lp_feasible_strict(cons, N1);
    RegularityResult out;
    if (r.feasible) {
        out.status = Regularity::regular;
        out.witness = r.witness;
    } else {
        out.status = Regularity::non_regular;
        out.gordan = r.gordan;
    }
    return out;
}

RegularSubdivision subdivision_from_heights(const PointConfiguration& config,
                                            const RatVec& heights) {
    if (static_cast<int>(heights.size()) != config.count())
        throw input_error("height function length mismatch");
    RegularSubdivision s;
    s.heights = heights;
    s.cells = geom::upper_hull_subdivision(config.rational_points(), heights);
    return s;
}

Triangulation refine_to_triangulation(const PointConfiguration& config,
                                      const RegularSubdivision& s) {
    std::vector<std::vector<int>> cells;
    for (const auto& cell : s.cells) {
        geom::RatMat pts;
        for (int p : cell.points) pts.push_back(config.rational_points()[p]);
        for (auto& simplex : geom::pulling_triangulation(pts, cell.points))
            cells.push_back(std::move(simplex));
    }
    return make_triangulation(config, std::move(cells), true);
}

PLFunction pl_function(const PointConfiguration& config, const Triangulation& t,
                       const RatVec& heights) {
    if (static_cast<int>(heights.size()) != config.count())
        throw input_error("height function length mismatch");
    const int n = config.dim();
    PLFunction g;
    g.config = &config;
    for (const auto& cell : t.cells) {
        geom::RatMat sys;
        RatVec rhs;
        for (int v : cell.verts) {
            RatVec row = config.rational_points()[v];
            row.push_back(Rat(1));
            sys.push_back(std::move(row));
            rhs.push_back(heights[v]);
        }
        auto sol = geom::solve_square(sys, rhs);
        check_internal(sol.has_value(), "degenerate simplex in pl_function");
        AffineFunctional f;
        f.gradient.assign(sol->begin(), sol->begin() + n);
        f.constant = (*sol)[n];
        g.cells.push_back(cell.verts);
        g.pieces.push_back(std::move(f));
    }
    return g;
}

Concavified concavify(const PointConfiguration& config, const RatVec& heights) {
    Concavified c;
    c.subdivision = subdivision_from_heights(config, heights);
    c.triangulation = refine_to_triangulation(config, c.subdivision);
    return c;
}

} // namespace toric::tri

#include "geom/hull.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric::geom {

namespace {

RatMat diffs(const RatMat& points, const std::vector<int>& subset) {
    RatMat d;
    for (size_t k = 1; k < subset.size(); ++k)
        d.push_back(sub(points[subset[k]], points[subset[0]]));
    return d;
}

int affine_rank(const RatMat& points, const std::vector<int>& subset) {
    return rank(diffs(points, subset));
}

struct Hyperplane {
    IntVec normal; // primitive, oriented inward
    Rat offset;

    bool operator<(const Hyperplane& o) const {
        if (normal != o.normal) return normal < o.normal;
        return cmp(offset, o.offset) < 0;
    }
};

struct RawFacet {
    Hyperplane h;
    std::vector<int> points;
};

// Every supporting hyperplane of a facet passes through an affinely
// independent d-subset of the input, so scanning those subsets finds all
// facets. Quadratic-ish in the input size, which is fine at the scales the
// guards allow, and every step is an exact predicate.
std::vector<RawFacet> enumerate_facets(const RatMat& points) {
    const int n = static_cast<int>(points[0].size());
    const int N = static_cast<int>(points.size());
    std::map<Hyperplane, std::vector<int>> found;

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    auto next_combination = [&]() -> bool {
        int i = n - 1;
        while (i >= 0 && idx[i] == N - n + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int k = i + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
        return true;
    };

    do {
        RatMat d = diffs(points, idx);
        if (rank(d) != n - 1) continue;
        RatMat ns = nullspace(d, n);
        if (ns.size() != 1) continue;
        IntVec w = make_primitive(ns[0]);
        RatVec wr = to_rat(w);
        Rat b = dot(wr, points[idx[0]]);
        int above = 0, below = 0;
        for (int i = 0; i < N; ++i) {
            int s = sgn(dot(wr, points[i]) - b);
            if (s > 0) ++above;
            if (s < 0) ++below;
        }
        if (above > 0 && below > 0) continue; // not supporting
        if (above == 0 && below == 0) continue; // all points on it: degenerate
        if (above == 0) { // flip so the hull is on the >= side
            for (auto& e : w) e = -e;
            b = -b;
            wr = to_rat(w);
        }
        Hyperplane h{w, b};
        if (found.count(h)) continue;
        std::vector<int> on;
        for (int i = 0; i < N; ++i)
            if (dot(wr, points[i]) == b) on.push_back(i);
        found.emplace(std::move(h), std::move(on));
    } while (next_combination());

    std::vector<RawFacet> out;
    for (auto& [h, pts] : found) out.push_back(RawFacet{h, pts});
    return out;
}

} // namespace

std::vector<int> FaceLattice::faces_of_dim(int d) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (faces[i].dim == d) out.push_back(i);
    return out;
}

int FaceLattice::smallest_face_containing(const std::vector<int>& pts) const {
    std::vector<int> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> current;
    bool any = false;
    for (int fi : facets) {
        const auto& fp = faces[fi].points;
        if (!std::includes(fp.begin(), fp.end(), sorted.begin(), sorted.end())) continue;
        if (!any) {
            current = fp;
            any = true;
        } else {
            std::vector<int> inter;
            std::set_intersection(current.begin(), current.end(), fp.begin(), fp.end(),
                                  std::back_inserter(inter));
            current = std::move(inter);
        }
    }
    if (!any) return top;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (faces[i].points == current) return i;
    throw internal_error("face lattice not closed under intersection");
}

FaceLattice convex_hull(const RatMat& points) {
    if (points.empty()) throw input_error("convex hull of an empty point set");
    const int n = static_cast<int>(points[0].size());
    if (n == 0) throw input_error("convex hull needs ambient dimension >= 1");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != n)
            throw input_error("convex hull: dimension mismatch among points");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw input_error("convex hull: duplicate point");

    std::vector<int> all(points.size());
    for (size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);
    if (affine_rank(points, all) != n)
        throw input_error("configuration is not full-dimensional");

    auto raw = enumerate_facets(points);
    check_internal(!raw.empty(), "full-dimensional hull without facets");

    // Faces are exactly the intersections of facet point sets (plus the hull
    // itself); close the facet sets under pairwise intersection.
    std::set<std::vector<int>> sets;
    for (const auto& f : raw) sets.insert(f.points);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(sets.begin(), sets.end());
        for (size_t i = 0; i < snapshot.size(); ++i)
            for (size_t j = i + 1; j < snapshot.size(); ++j) {
                std::vector<int> inter;
                std::set_intersection(snapshot[i].begin(), snapshot[i].end(),
                                      snapshot[j].begin(), snapshot[j].end(),
                                      std::back_inserter(inter));
                if (!inter.empty() && sets.insert(inter).second) grew = true;
            }
    }

    FaceLattice lat;
    lat.ambient_dim = n;
    std::map<std::vector<int>, const RawFacet*> facet_of;
    for (const auto& f : raw) facet_of[f.points] = &f;

    std::vector<std::vector<int>> ordered(sets.begin(), sets.end());
    ordered.push_back(all);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [&](const std::vector<int>& a, const std::vector<int>& b) {
                         int da = affine_rank(points, a), db = affine_rank(points, b);
                         if (da != db) return da < db;
                         return a < b;
                     });

    for (const auto& s : ordered) {
        Face face;
        face.points = s;
        face.dim = affine_rank(points, s);
        RatMat d = diffs(points, s);
        for (int r : independent_rows(d)) face.basis.push_back(d[r]);
        if (auto it = facet_of.find(s); it != facet_of.end()) {
            face.normal = to_rat(it->second->h.normal);
            face.offset = it->second->h.offset;
        }
        lat.faces.push_back(std::move(face));
    }
    for (int i = 0; i < static_cast<int>(lat.faces.size()); ++i) {
        if (lat.faces[i].dim == n) lat.top = i;
        if (lat.faces[i].dim == n - 1 && !lat.faces[i].normal.empty())
            lat.facets.push_back(i);
    }
    check_internal(lat.top >= 0, "missing top face");

    std::set<int> vertex_ids;
    for (const auto& f : lat.faces)
        if (f.dim == 0) vertex_ids.insert(f.points[0]);
    for (auto& f : lat.faces)
        for (int p : f.points)
            if (vertex_ids.count(p)) f.vertices.push_back(p);
    return lat;
}

std::vector<std::vector<int>> pulling_triangulation(const RatMat& points,
                                                    const std::vector<int>& ids) {
    check_internal(points.size() == ids.size(), "pulling: ids size");
    std::vector<int> all(points.size());
    for (size_t i = 0; i < points.size(); ++i) all[i] = static_cast<int>(i);
    const int r = affine_rank(points, all);
    if (static_cast<int>(points.size()) == r + 1) {
        std::vector<int> cell = ids;
        std::sort(cell.begin(), cell.end());
        return {cell};
    }

    // Project onto the face's own coordinates so the recursive hulls are
    // full-dimensional.
    RatMat basis;
    {
        RatMat d = diffs(points, all);
        for (int row : independent_rows(d)) basis.push_back(d[row]);
    }
    RatMat bt(points[0].size(), RatVec(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < points[0].size(); ++i) bt[i][j] = basis[j][i];
    RatMat local;
    for (const auto& p : points) {
        auto c = solve_any(bt, sub(p, points[0]));
        check_internal(c.has_value(), "pulling: projection failed");
        local.push_back(*c);
    }

    int v = 0;
    for (size_t i = 1; i < ids.size(); ++i)
        if (ids[i] < ids[v]) v = static_cast<int>(i);

    auto raw = enumerate_facets(local);
    std::vector<std::vector<int>> cells;
    for (const auto& facet : raw) {
        if (std::find(facet.points.begin(), facet.points.end(), v) != facet.points.end())
            continue;
        RatMat sub_pts;
        std::vector<int> sub_ids;
        for (int k : facet.points) {
            sub_pts.push_back(points[k]);
            sub_ids.push_back(ids[k]);
        }
        for (auto cell : pulling_triangulation(sub_pts, sub_ids)) {
            cell.push_back(ids[v]);
            std::sort(cell.begin(), cell.end());
            cells.push_back(std::move(cell));
        }
    }
    std::sort(cells.begin(), cells.end());
    check_internal(!cells.empty(), "pulling produced no cells");
    return cells;
}

std::vector<LiftedCell> upper_hull_subdivision(const RatMat& points, const RatVec& h) {
    check_internal(points.size() == h.size(), "upper hull: height count");
    const int n = static_cast<int>(points[0].size());
    const int N = static_cast<int>(points.size());

    RatMat lifted(N, RatVec(n + 1));
    for (int i = 0; i < N; ++i) {
        for (int k = 0; k < n; ++k) lifted[i][k] = points[i][k];
        lifted[i][n] = h[i];
    }

    std::vector<int> all(N);
    for (int i = 0; i < N; ++i) all[i] = i;
    check_internal(affine_rank(points, all) == n, "upper hull: base not full-dimensional");

    std::vector<LiftedCell> cells;
    if (affine_rank(lifted, all) == n) {
        // Affine heights: one trivial cell carrying the exact affine lift.
        RatMat sys;
        RatVec rhs;
        for (int i = 0; i < N; ++i) {
            RatVec row = points[i];
            row.push_back(Rat(1));
            sys.push_back(std::move(row));
            rhs.push_back(h[i]);
        }
        auto sol = solve_any(sys, rhs);
        check_internal(sol.has_value(), "upper hull: affine fit failed");
        LiftedCell cell;
        cell.points = all;
        cell.lift.gradient.assign(sol->begin(), sol->begin() + n);
        cell.lift.constant = (*sol)[n];
        cells.push_back(std::move(cell));
        return cells;
    }

    for (const auto& facet : enumerate_facets(lifted)) {
        RatVec w = to_rat(facet.h.normal);
        if (sgn(w[n]) >= 0) continue; // keep only the roof
        LiftedCell cell;
        cell.points = facet.points;
        cell.lift.gradient.resize(n);
        for (int k = 0; k < n; ++k) cell.lift.gradient[k] = -w[k] / w[n];
        cell.lift.constant = facet.h.offset / w[n];
        for (int i = 0; i < N; ++i) {
            Rat gap = cell.lift.eval(points[i]) - h[i];
            bool on = std::find(cell.points.begin(), cell.points.end(), i) != cell.points.end();
            check_internal(on ? sgn(gap) == 0 : sgn(gap) > 0, "upper hull: cell incidence");
        }
        cells.push_back(std::move(cell));
    }
    std::sort(cells.begin(), cells.end(),
              [](const LiftedCell& a, const LiftedCell& b) { return a.points < b.points; });
    check_internal(!cells.empty(), "upper hull produced no cells");
    return cells;
}

} // namespace toric::geom

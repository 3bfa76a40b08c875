#include "weights/weights.hpp"

#include <algorithm>
#include <set>

namespace toric::weights {

using toric::check_internal;
using toric::input_error;

std::vector<MassiveSimplex> massive_simplices(const PointConfiguration& config,
                                              const Triangulation& t, int level) {
    const int n = config.dim();
    check_internal(level >= 0 && level <= n, "massive level out of range");
    std::set<std::vector<int>> faces;
    for (const auto& cell : t.cells) {
        // All (level+1)-subsets of the cell's vertices.
        const auto& v = cell.verts;
        std::vector<int> idx(level + 1);
        for (int i = 0; i <= level; ++i) idx[i] = i;
        while (true) {
            std::vector<int> f(level + 1);
            for (int i = 0; i <= level; ++i) f[i] = v[idx[i]];
            faces.insert(std::move(f));
            int i = level;
            while (i >= 0 && idx[i] == static_cast<int>(v.size()) - (level + 1) + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int k = i + 1; k <= level; ++k) idx[k] = idx[k - 1] + 1;
        }
    }
    std::vector<MassiveSimplex> out;
    for (const auto& f : faces) {
        int face_index = config.hull().smallest_face_containing(f);
        if (config.hull().faces[face_index].dim != level) continue;
        MassiveSimplex m;
        m.verts = f;
        m.face_index = face_index;
        m.vol_z = config.simplex_vol_z(f, face_index);
        out.push_back(std::move(m));
    }
    return out;
}

WeightVector gkz_vector(const PointConfiguration& config, const Triangulation& t) {
    WeightVector w{RatVec(config.count(), Rat(0)), WeightKind::gkz, -1};
    for (const auto& cell : t.cells)
        for (int v : cell.verts) w.entries[v] += cell.vol_z;
    return w;
}

WeightVector massive_level(const PointConfiguration& config, const Triangulation& t,
                           int level) {
    WeightVector w{RatVec(config.count(), Rat(0)), WeightKind::massive_level, level};
    for (const auto& m : massive_simplices(config, t, level))
        for (int v : m.verts) w.entries[v] += m.vol_z;
    if (level == config.dim()) {
        // Every maximal cell is massive, so the top level is the GKZ vector.
        check_internal(w.entries == gkz_vector(config, t).entries,
                       "top massive level must equal the GKZ vector");
    }
    return w;
}

WeightVector massive_gkz_vector(const PointConfiguration& config, const Triangulation& t) {
    const int n = config.dim();
    WeightVector w{RatVec(config.count(), Rat(0)), WeightKind::massive_full, -1};
    for (int j = 0; j <= n; ++j) {
        WeightVector lvl = massive_level(config, t, j);
        int sign = ((n - j) % 2 == 0) ? 1 : -1;
        for (int i = 0; i < config.count(); ++i)
            w.entries[i] += Rat(sign) * lvl.entries[i];
    }
    return w;
}

WeightVector hurwitz_vector(const PointConfiguration& config, const Triangulation& t) {
    const int n = config.dim();
    WeightVector top = massive_level(config, t, n);
    WeightVector below = massive_level(config, t, n - 1);
    WeightVector w{RatVec(config.count(), Rat(0)), WeightKind::hurwitz, -1};
    for (int i = 0; i < config.count(); ++i)
        w.entries[i] = Rat(n) * top.entries[i] - below.entries[i];
    return w;
}

Rat pair(const RatVec& heights, const WeightVector& v) {
    if (heights.size() != v.entries.size())
        throw input_error("pairing length mismatch");
    return geom::dot(heights, v.entries);
}

Rat integrate_pl(const PointConfiguration& config, const Triangulation& t,
                 const RatVec& heights, int codim) {
    if (static_cast<int>(heights.size()) != config.count())
        throw input_error("height function length mismatch");
    const int d = config.dim() - codim;
    check_internal(d >= 0, "codimension out of range");
    const Rat dfact = Rat(geom::factorial(d));
    Rat total = 0;
    // The massive d-simplices triangulate the codim-j skeleton, and the
    // interpolant is affine on each, so each contributes
    // relvol * (mean of vertex heights).
    for (const auto& m : massive_simplices(config, t, d)) {
        Rat mean = 0;
        for (int v : m.verts) mean += heights[v];
        mean /= Rat(static_cast<long>(m.verts.size()));
        total += (m.vol_z / dfact) * mean;
    }
    return total;
}

RatVec integrate_position(const PointConfiguration& config, const Triangulation& t,
                          int codim) {
    const int d = config.dim() - codim;
    check_internal(d >= 0, "codimension out of range");
    const Rat dfact = Rat(geom::factorial(d));
    RatVec total(config.dim(), Rat(0));
    for (const auto& m : massive_simplices(config, t, d)) {
        RatVec centroid(config.dim(), Rat(0));
        for (int v : m.verts)
            centroid = geom::add(centroid, config.rational_points()[v]);
        centroid = geom::scale(centroid, Rat(1) / Rat(static_cast<long>(m.verts.size())));
        total = geom::add(total, geom::scale(centroid, m.vol_z / dfact));
    }
    return total;
}

} // namespace toric::weights

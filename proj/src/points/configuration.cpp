#include "points/configuration.hpp"

#include <algorithm>
#include <map>

namespace toric::points {

using geom::AffineFunctional;
using toric::check_internal;
using toric::input_error;

namespace {

FaceData build_face_data(const RatMat& rpoints, const std::vector<IntVec>& ipoints,
                         const geom::Face& face) {
    FaceData fd;
    const int d = face.dim;
    if (d == 0) {
        fd.vol = 1;
        fd.vol_z = 1;
        fd.moment = rpoints[face.points[0]];
        fd.triangulation = {face.points};
        return fd;
    }
    IntMat gens;
    for (size_t k = 1; k < face.points.size(); ++k) {
        IntVec diff(ipoints[face.points[0]].size());
        for (size_t c = 0; c < diff.size(); ++c)
            diff[c] = ipoints[face.points[k]][c] - ipoints[face.points[0]][c];
        gens.push_back(std::move(diff));
    }
    fd.lattice = geom::lattice_basis(gens);
    check_internal(static_cast<int>(fd.lattice.size()) == d, "face lattice rank");

    RatMat face_pts;
    for (int p : face.points) face_pts.push_back(rpoints[p]);
    fd.triangulation = geom::pulling_triangulation(face_pts, face.points);

    fd.vol = 0;
    fd.vol_z = 0;
    fd.moment.assign(rpoints[0].size(), Rat(0));
    const Rat dfact = Rat(geom::factorial(d));
    for (const auto& cell : fd.triangulation) {
        RatMat coeff;
        for (size_t k = 1; k < cell.size(); ++k) {
            RatVec edge = geom::sub(rpoints[cell[k]], rpoints[cell[0]]);
            RatVec c = geom::coords_in_basis(fd.lattice, edge);
            coeff.push_back(std::move(c));
        }
        Rat svol = abs(geom::det(coeff));
        check_internal(sgn(svol) > 0, "degenerate cell in face triangulation");
        check_internal(geom::is_integer(svol), "simplex volume not integral");
        fd.vol_z += svol;
        RatVec centroid(rpoints[0].size(), Rat(0));
        for (int v : cell) centroid = geom::add(centroid, rpoints[v]);
        centroid = geom::scale(centroid, Rat(1) / Rat(static_cast<long>(cell.size())));
        fd.moment = geom::add(fd.moment, geom::scale(centroid, svol / dfact));
    }
    fd.vol = fd.vol_z / dfact;
    return fd;
}

bool check_delzant(const geom::FaceLattice& hull, const RatMat& rpoints) {
    const int n = hull.ambient_dim;
    for (int vi : hull.faces_of_dim(0)) {
        const int v = hull.faces[vi].points[0];
        RatMat dirs;
        for (int ei : hull.faces_of_dim(1)) {
            const auto& verts = hull.faces[ei].vertices;
            if (verts.size() != 2) return false;
            int other = -1;
            if (verts[0] == v) other = verts[1];
            else if (verts[1] == v) other = verts[0];
            else continue;
            RatVec dir = geom::sub(rpoints[other], rpoints[v]);
            dirs.push_back(geom::to_rat(geom::make_primitive(dir)));
        }
        if (static_cast<int>(dirs.size()) != n) return false;
        if (cmp(abs(geom::det(dirs)), 1) != 0) return false;
    }
    return true;
}

} // namespace

PointConfiguration PointConfiguration::load(std::vector<IntVec> raw, std::string name) {
    if (raw.empty()) throw input_error("configuration has no points");
    const size_t n = raw[0].size();
    if (n == 0) throw input_error("configuration points need dimension >= 1");
    for (const auto& p : raw)
        if (p.size() != n) throw input_error("configuration points of mixed dimension");
    for (size_t i = 0; i < raw.size(); ++i)
        for (size_t j = i + 1; j < raw.size(); ++j)
            if (raw[i] == raw[j]) throw input_error("duplicate point in configuration");

    PointConfiguration pc;
    pc.name_ = std::move(name);
    pc.dim_ = static_cast<int>(n);
    pc.points_ = std::move(raw);
    for (const auto& p : pc.points_) pc.rpoints_.push_back(geom::to_rat(p));
    pc.hull_ = geom::convex_hull(pc.rpoints_); // rejects lower-dimensional hulls

    for (const auto& face : pc.hull_.faces)
        pc.face_data_.push_back(build_face_data(pc.rpoints_, pc.points_, face));

    // Condition (*)(i): A = P ∩ Z^n.
    auto lattice_pts = pc.dilation_points(1);
    auto sorted_a = pc.points_;
    std::sort(sorted_a.begin(), sorted_a.end());
    pc.saturated_ = (lattice_pts == sorted_a);

    // Condition (*)(ii): the differences a_i - a_0 generate Z^n.
    IntMat gens;
    for (size_t i = 1; i < pc.points_.size(); ++i) {
        IntVec d(n);
        for (size_t c = 0; c < n; ++c) d[c] = pc.points_[i][c] - pc.points_[0][c];
        gens.push_back(std::move(d));
    }
    IntMat basis = geom::lattice_basis(gens);
    if (static_cast<int>(basis.size()) == pc.dim_) {
        RatMat b;
        for (const auto& v : basis) b.push_back(geom::to_rat(v));
        pc.generates_ = (cmp(abs(geom::det(b)), 1) == 0);
    }

    pc.delzant_ = check_delzant(pc.hull_, pc.rpoints_);
    return pc;
}

Rat PointConfiguration::volume() const { return face_data_[hull_.top].vol; }

Rat PointConfiguration::boundary_volume() const { return codim_volume(1); }

RatVec PointConfiguration::moment() const { return face_data_[hull_.top].moment; }

RatVec PointConfiguration::boundary_moment() const { return codim_moment(1); }

Rat PointConfiguration::codim_volume(int j) const {
    Rat total = 0;
    for (int fi : hull_.faces_of_codim(j)) total += face_data_[fi].vol;
    return total;
}

RatVec PointConfiguration::codim_moment(int j) const {
    RatVec total(dim_, Rat(0));
    for (int fi : hull_.faces_of_codim(j)) total = geom::add(total, face_data_[fi].moment);
    return total;
}

Rat PointConfiguration::simplex_vol_z(const std::vector<int>& vertex_ids,
                                      int face_index) const {
    const auto& fd = face_data_[face_index];
    if (vertex_ids.size() == 1) return Rat(1);
    RatMat coeff;
    for (size_t k = 1; k < vertex_ids.size(); ++k) {
        RatVec edge = geom::sub(rpoints_[vertex_ids[k]], rpoints_[vertex_ids[0]]);
        coeff.push_back(geom::coords_in_basis(fd.lattice, edge));
    }
    Rat v = abs(geom::det(coeff));
    check_internal(geom::is_integer(v), "simplex lattice volume not integral");
    return v;
}

std::pair<Rat, Rat> PointConfiguration::ehrhart_coefficients() const {
    return {volume(), boundary_volume() / 2};
}

std::vector<IntVec> PointConfiguration::dilation_points(int factor) const {
    if (factor <= 0) throw input_error("dilation factor must be >= 1");
    const int n = dim_;
    IntVec lo(n), hi(n);
    for (int c = 0; c < n; ++c) {
        lo[c] = points_[0][c];
        hi[c] = points_[0][c];
        for (const auto& p : points_) {
            lo[c] = std::min(lo[c], p[c]);
            hi[c] = std::max(hi[c], p[c]);
        }
        lo[c] *= factor;
        hi[c] *= factor;
    }
    // Facet inequalities of iP: normal . x >= factor * offset.
    std::vector<std::pair<RatVec, Rat>> ineqs;
    for (int fi : hull_.facets)
        ineqs.emplace_back(hull_.faces[fi].normal, hull_.faces[fi].offset * factor);

    std::vector<IntVec> result;
    IntVec cur = lo;
    while (true) {
        RatVec x = geom::to_rat(cur);
        bool inside = true;
        for (const auto& [w, b] : ineqs)
            if (cmp(geom::dot(w, x), b) < 0) { inside = false; break; }
        if (inside) result.push_back(cur);
        int c = n - 1;
        while (c >= 0 && cur[c] == hi[c]) { cur[c] = lo[c]; --c; }
        if (c < 0) break;
        cur[c] += 1;
    }
    std::sort(result.begin(), result.end());
    return result;
}

DilatedConfiguration dilate(const PointConfiguration& config, int factor) {
    if (!config.saturated())
        throw input_error("dilation requires a saturated configuration");
    auto pts = config.dilation_points(factor);
    DilatedConfiguration out;
    out.factor = factor;
    out.config = PointConfiguration::load(pts, config.name());
    std::map<IntVec, int> index;
    for (size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
    for (const auto& p : config.points()) {
        IntVec scaled(p.size());
        for (size_t c = 0; c < p.size(); ++c) scaled[c] = p[c] * factor;
        auto it = index.find(scaled);
        check_internal(it != index.end(), "dilate: original point missing from iP");
        out.embedding.push_back(it->second);
    }
    return out;
}

long ehrhart_count(const PointConfiguration& config, int factor) {
    return static_cast<long>(config.dilation_points(factor).size());
}

RatVec ehrhart_interpolated(const PointConfiguration& config) {
    const int n = config.dim();
    RatMat vandermonde;
    RatVec counts;
    for (int t = 0; t <= n; ++t) {
        RatVec row(n + 1);
        Rat power = 1;
        for (int k = 0; k <= n; ++k) {
            row[k] = power;
            power *= t;
        }
        vandermonde.push_back(std::move(row));
        counts.push_back(t == 0 ? Rat(1) : Rat(ehrhart_count(config, t)));
    }
    auto coeffs = geom::solve_square(vandermonde, counts);
    check_internal(coeffs.has_value(), "ehrhart interpolation failed");
    return *coeffs;
}

PointConfiguration product_with_simplex(const PointConfiguration& config, int k) {
    if (k < 1) throw input_error("product with simplex requires k >= 1");
    const int n = config.dim();
    std::vector<IntVec> pts;
    for (int vertex = 0; vertex <= k; ++vertex) {
        for (const auto& a : config.points()) {
            IntVec q(n + k, Int(0));
            for (int c = 0; c < n; ++c) q[c] = a[c];
            if (vertex > 0) q[n + vertex - 1] = 1;
            pts.push_back(std::move(q));
        }
    }
    std::sort(pts.begin(), pts.end());
    return PointConfiguration::load(std::move(pts),
                                    config.name().empty() ? "" : config.name() + "_x_simplex");
}

} // namespace toric::points

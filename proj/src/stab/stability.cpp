#include "stab/stability.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace toric::stab {

using toric::check_internal;
using toric::input_error;
using toric::scale_error;

namespace {

void parallel_for(int jobs, int count, const std::function<void(int)>& body) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int workers = std::min(jobs, count);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                body(i);
            }
        });
    for (auto& th : pool) th.join();
}

Rat require_integer(const Rat& q, const char* what) {
    check_internal(geom::is_integer(q), std::string(what) + " is not an integer");
    return q;
}

} // namespace

Rat discriminant_degree(const PointConfiguration& config) {
    const int n = config.dim();
    Rat total = 0;
    for (size_t fi = 0; fi < config.hull().faces.size(); ++fi) {
        const auto& face = config.hull().faces[fi];
        int sign = ((n - face.dim) % 2 == 0) ? 1 : -1;
        total += Rat(sign) * Rat(geom::factorial(face.dim + 1)) *
                 config.face_data(static_cast<int>(fi)).vol;
    }
    return require_integer(total, "discriminant degree");
}

RatVec discriminant_moment_sum(const PointConfiguration& config) {
    const int n = config.dim();
    RatVec total(n, Rat(0));
    for (size_t fi = 0; fi < config.hull().faces.size(); ++fi) {
        const auto& face = config.hull().faces[fi];
        int sign = ((n - face.dim) % 2 == 0) ? 1 : -1;
        Rat w = Rat(sign) * Rat(geom::factorial(face.dim + 1));
        total = geom::add(total,
                          geom::scale(config.face_data(static_cast<int>(fi)).moment, w));
    }
    return total;
}

Degrees compute_degrees(const PointConfiguration& config) {
    const int n = config.dim();
    Degrees d;
    d.chow = require_integer(Rat(geom::factorial(n + 1)) * config.volume(), "deg R");
    d.hurwitz = require_integer(Rat(n) * Rat(geom::factorial(n + 1)) * config.volume() -
                                    Rat(geom::factorial(n)) * config.boundary_volume(),
                                "deg Hu");
    d.discriminant = discriminant_degree(config);
    return d;
}

StabilityContext::StabilityContext(PointConfiguration config, long max_triangulations,
                                   int jobs)
    : config_(std::move(config)) {
    tris_ = tri::enumerate_triangulations(config_, max_triangulations);
    const int count = static_cast<int>(tris_.size());
    gkz_.resize(count);
    eta_.resize(count);
    xi_.resize(count);
    parallel_for(jobs, count, [&](int i) {
        auto reg = tri::is_regular(config_, tris_[i]);
        tris_[i].regularity = reg.status;
        tris_[i].witness = std::move(reg.witness);
        tris_[i].gordan = std::move(reg.gordan);
        gkz_[i] = weights::gkz_vector(config_, tris_[i]).entries;
        eta_[i] = weights::massive_gkz_vector(config_, tris_[i]).entries;
        xi_[i] = weights::hurwitz_vector(config_, tris_[i]).entries;
        for (const auto& e : gkz_[i])
            check_internal(geom::is_integer(e) && sgn(e) >= 0, "GKZ entries");
        for (const auto& e : eta_[i]) check_internal(geom::is_integer(e), "eta entries");
        for (const auto& e : xi_[i]) check_internal(geom::is_integer(e), "xi entries");
    });
    for (const auto& t : tris_)
        if (t.regularity == tri::Regularity::regular) ++regular_count_;

    std::map<RatVec, int> classes;
    d_class_of_.resize(count);
    for (int i = 0; i < count; ++i) {
        auto [it, fresh] = classes.emplace(eta_[i], static_cast<int>(classes.size()));
        d_class_of_[i] = it->second;
        (void)fresh;
    }
    d_class_count_ = static_cast<int>(classes.size());
    degrees_ = compute_degrees(config_);

    std::set<RatVec> dg(gkz_.begin(), gkz_.end());
    distinct_gkz_.assign(dg.begin(), dg.end());
    std::set<RatVec> dx(xi_.begin(), xi_.end());
    distinct_xi_.assign(dx.begin(), dx.end());
}

namespace {

// Output-sensitive extreme-point classification (Clarkson): grow a confirmed
// vertex set; a point inside its hull is interior, and each failed
// membership test surfaces a new confirmed vertex via its separator.
std::vector<int> extreme_points(const std::vector<RatVec>& pts) {
    const int m = static_cast<int>(pts.size());
    if (m == 1) return {0};
    std::vector<bool> is_vertex(m, false), decided(m, false);
    std::vector<int> vlist;
    auto confirm = [&](int idx) {
        if (is_vertex[idx]) return;
        is_vertex[idx] = true;
        decided[idx] = true;
        vlist.push_back(idx);
    };
    // Lexicographic extremes are vertices; they seed the confirmed set.
    confirm(static_cast<int>(std::min_element(pts.begin(), pts.end()) - pts.begin()));
    confirm(static_cast<int>(std::max_element(pts.begin(), pts.end()) - pts.begin()));
    for (int i = 0; i < m; ++i) {
        while (!decided[i]) {
            geom::RatMat columns;
            for (int v : vlist)
                if (v != i) columns.push_back(pts[v]);
            auto member = geom::point_in_hull(pts[i], columns);
            if (member.inside) {
                decided[i] = true;
                break;
            }
            // The separator's maximizer over all points is attained on a
            // face; that face's lexicographic maximum is a vertex.
            Rat best;
            int arg = -1;
            for (int j = 0; j < m; ++j) {
                Rat v = member.separator.eval(pts[j]);
                if (arg < 0 || v > best || (v == best && pts[j] > pts[arg])) {
                    if (arg < 0 || v > best) best = v;
                    arg = j;
                }
            }
            confirm(arg);
        }
    }
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
        if (is_vertex[i]) out.push_back(i);
    return out;
}

} // namespace

WeightPolytope StabilityContext::polytope(PolytopeKind kind) const {
    const auto& config = config_;
    const int n = config.dim();
    WeightPolytope p;
    p.kind = kind;
    switch (kind) {
        case PolytopeKind::chow:
            p.generators = gkz_;
            p.entry_sum = degrees_.chow;
            p.weighted_sum = geom::scale(config.moment(), Rat(geom::factorial(n + 1)));
            break;
        case PolytopeKind::discriminant:
            p.generators = eta_;
            p.entry_sum = degrees_.discriminant;
            p.weighted_sum = discriminant_moment_sum(config);
            break;
        case PolytopeKind::hurwitz:
            p.generators = xi_;
            p.entry_sum = degrees_.hurwitz;
            p.weighted_sum = geom::sub(
                geom::scale(config.moment(), Rat(n) * Rat(geom::factorial(n + 1))),
                geom::scale(config.boundary_moment(), Rat(geom::factorial(n))));
            break;
    }

    // Affine-hull rows hold exactly on every generator.
    for (const auto& g : p.generators) {
        Rat sum = 0;
        RatVec wsum(n, Rat(0));
        for (int i = 0; i < config.count(); ++i) {
            sum += g[i];
            wsum = geom::add(wsum, geom::scale(config.rational_points()[i], g[i]));
        }
        check_internal(sum == p.entry_sum, "affine hull row 1 violated");
        check_internal(wsum == p.weighted_sum, "affine hull row 2 violated");
    }

    std::set<RatVec> dedup(p.generators.begin(), p.generators.end());
    p.distinct.assign(dedup.begin(), dedup.end());
    p.vertex_ids = extreme_points(p.distinct);

    geom::RatMat diffs;
    for (size_t i = 1; i < p.distinct.size(); ++i)
        diffs.push_back(geom::sub(p.distinct[i], p.distinct[0]));
    p.affine_dim = geom::rank(diffs);

    if (kind == PolytopeKind::chow) {
        check_internal(p.affine_dim == config.count() - 1 - n,
                       "secondary polytope dimension must be N - n");
        // Vertices correspond exactly to the regular triangulations, and a
        // regular triangulation shares its GKZ vector with no other one.
        std::map<RatVec, int> multiplicity;
        for (const auto& g : gkz_) ++multiplicity[g];
        std::set<RatVec> regular_values;
        for (size_t i = 0; i < tris_.size(); ++i) {
            if (tris_[i].regularity != tri::Regularity::regular) continue;
            check_internal(multiplicity[gkz_[i]] == 1,
                           "regular triangulation with a shared GKZ vector");
            regular_values.insert(gkz_[i]);
        }
        std::set<RatVec> vertex_values;
        for (int vid : p.vertex_ids) vertex_values.insert(p.distinct[vid]);
        check_internal(vertex_values == regular_values,
                       "chow vertices must biject with regular triangulations");
    }
    return p;
}

FutakiPaulResult futaki_paul(const StabilityContext& ctx, const RatVec& heights) {
    const auto& config = ctx.config();
    const int n = config.dim();
    if (static_cast<int>(heights.size()) != config.count())
        throw input_error("height function length mismatch");

    auto conc = tri::concavify(config, heights);
    FutakiPaulResult r;
    r.integral_p = weights::integrate_pl(config, conc.triangulation, heights, 0);
    r.integral_dp = weights::integrate_pl(config, conc.triangulation, heights, 1);
    r.value = config.boundary_volume() * r.integral_p - config.volume() * r.integral_dp;

    Rat max_chow, max_hurwitz;
    bool first = true;
    for (size_t i = 0; i < ctx.triangulations().size(); ++i) {
        Rat pc = geom::dot(heights, ctx.gkz()[i]);
        Rat ph = geom::dot(heights, ctx.xi()[i]);
        if (first || pc > max_chow) max_chow = pc;
        if (first || ph > max_hurwitz) max_hurwitz = ph;
        first = false;
    }
    r.raw_weight_form = ctx.degrees().hurwitz * max_chow - ctx.degrees().chow * max_hurwitz;

    // The weight form and the integral form agree up to the factorial factor
    // -(n+1)! n!; this ties the polytope route to the integration route.
    Rat factor = Rat(geom::factorial(n + 1)) * Rat(geom::factorial(n));
    check_internal(r.raw_weight_form == -factor * r.value,
                   "Futaki-Paul weight form mismatch");
    return r;
}

NumericalSsResult check_numerical_ss(const StabilityContext& ctx) {
    const auto& config = ctx.config();
    NumericalSsResult out;
    if (!config.satisfies_star())
        throw input_error("numerical semistability requires a configuration satisfying (*)");
    if (sgn(ctx.degrees().hurwitz) <= 0) {
        out.status = VerdictStatus::skipped;
        out.reason = "Hurwitz degree " + geom::to_string(ctx.degrees().hurwitz) +
                     " is nonpositive; the criterion assumes degree >= 2";
        return out;
    }

    auto chow = ctx.polytope(PolytopeKind::chow);
    geom::RatMat scaled_hurwitz;
    for (const auto& g : ctx.distinct_xi())
        scaled_hurwitz.push_back(geom::scale(g, ctx.degrees().chow));

    for (int vid : chow.vertex_ids) {
        RatVec scaled = geom::scale(chow.distinct[vid], ctx.degrees().hurwitz);
        auto member = geom::point_in_hull(scaled, scaled_hurwitz);
        if (member.inside) {
            out.certificates.push_back({scaled, member.coefficients});
            continue;
        }
        out.status = VerdictStatus::fail;
        out.violating_vertex = chow.distinct[vid];
        out.separator = member.separator;
        out.destabilizing_heights = member.separator.gradient;
        auto fp = futaki_paul(ctx, out.destabilizing_heights);
        check_internal(sgn(fp.value) < 0,
                       "separator must witness a negative Futaki-Paul value");
        out.futaki_paul_value = fp.value;
        return out;
    }
    out.status = VerdictStatus::pass;
    return out;
}

ChowSsResult check_chow_ss(const StabilityContext& ctx) {
    const auto& config = ctx.config();
    if (!config.satisfies_star())
        throw input_error("Chow semistability requires a configuration satisfying (*)");
    ChowSsResult out;
    out.constant = ctx.degrees().chow / Rat(config.count());
    RatVec target(config.count(), out.constant);
    geom::RatMat gens(ctx.distinct_gkz().begin(), ctx.distinct_gkz().end());
    auto member = geom::point_in_hull(target, gens);
    if (member.inside) {
        out.status = VerdictStatus::pass;
        out.coefficients = member.coefficients;
        return out;
    }
    out.status = VerdictStatus::fail;
    out.separator = member.separator;
    out.destabilizing_heights = member.separator.gradient;
    // Cross-certificate: the Ono gap N Int_P g - vol(P) sum_a g(a) < 0.
    auto conc = tri::concavify(config, out.destabilizing_heights);
    Rat integral = weights::integrate_pl(config, conc.triangulation,
                                         out.destabilizing_heights, 0);
    Rat lattice_sum = 0;
    for (int i = 0; i < config.count(); ++i)
        lattice_sum += conc.subdivision.evaluate(config.rational_points()[i]);
    out.chow_gap = Rat(config.count()) * integral - config.volume() * lattice_sum;
    check_internal(sgn(out.chow_gap) < 0, "Chow separator must witness a negative gap");
    return out;
}

BarycenterResult check_barycenter_condition(const PointConfiguration& config) {
    BarycenterResult out;
    out.difference = geom::sub(geom::scale(config.moment(), config.boundary_volume()),
                               geom::scale(config.boundary_moment(), config.volume()));
    if (geom::is_zero(out.difference)) {
        out.status = VerdictStatus::pass;
        return out;
    }
    out.status = VerdictStatus::fail;
    int bad = 0;
    while (sgn(out.difference[bad]) == 0) ++bad;
    // The linear height x -> -sign * x_bad has a strictly negative invariant.
    Rat dir = Rat(-sgn(out.difference[bad]));
    out.destabilizing_heights.resize(config.count());
    for (int i = 0; i < config.count(); ++i)
        out.destabilizing_heights[i] = dir * config.rational_points()[i][bad];
    out.futaki_paul_value = dir * out.difference[bad];
    return out;
}

std::vector<FutakiPaulResult> check_k_ss_functions(const StabilityContext& ctx,
                                                   const std::vector<RatVec>& heights) {
    std::vector<FutakiPaulResult> out;
    out.reserve(heights.size());
    for (const auto& h : heights) out.push_back(futaki_paul(ctx, h));
    return out;
}

ProductDegreeCheck verify_product_degree(const PointConfiguration& config) {
    const int n = config.dim();
    if (n > 2)
        throw scale_error("product degree check supports n <= 2, got n = " +
                          std::to_string(n));
    ProductDegreeCheck out;
    out.closed_form = compute_degrees(config).hurwitz;
    if (n == 1) {
        // The simplex factor is a point; the face sum is evaluated on P.
        out.face_sum = discriminant_degree(config);
    } else {
        auto q = points::product_with_simplex(config, n - 1);
        out.face_sum = discriminant_degree(q);
    }
    out.ok = (out.face_sum == out.closed_form);
    return out;
}

} // namespace toric::stab

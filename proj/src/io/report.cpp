#include "io/report.hpp"

#include <algorithm>
#include <sstream>

#include "io/svg.hpp"
#include "weights/weights.hpp"

namespace toric::io {

using geom::Rat;
using geom::RatVec;
using nlohmann::ordered_json;
using points::PointConfiguration;
using stab::StabilityContext;
using stab::VerdictStatus;
using toric::check_internal;
using toric::input_error;

namespace {

ordered_json rstr(const Rat& q) { return geom::to_string(q); }

ordered_json rvec(const RatVec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& q : v) a.push_back(rstr(q));
    return a;
}

ordered_json ipoint(const geom::IntVec& p) {
    ordered_json a = ordered_json::array();
    for (const auto& c : p) {
        check_internal(c.fits_slong_p(), "coordinate too large to serialize");
        a.push_back(c.get_si());
    }
    return a;
}

ordered_json ipoints(const std::vector<geom::IntVec>& pts) {
    ordered_json a = ordered_json::array();
    for (const auto& p : pts) a.push_back(ipoint(p));
    return a;
}

const char* status_str(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::pass: return "pass";
        case VerdictStatus::fail: return "fail";
        case VerdictStatus::skipped: return "skipped";
    }
    return "?";
}

ordered_json functional_json(const geom::AffineFunctional& f) {
    return ordered_json{{"gradient", rvec(f.gradient)}, {"constant", rstr(f.constant)}};
}

ordered_json geometry_json(const PointConfiguration& config) {
    ordered_json g;
    g["volume"] = rstr(config.volume());
    g["boundary_volume"] = rstr(config.boundary_volume());
    g["moment"] = rvec(config.moment());
    g["boundary_moment"] = rvec(config.boundary_moment());
    g["vertex_sum"] = rvec(config.codim_moment(config.dim()));
    return g;
}

ordered_json degrees_json(const stab::Degrees& d) {
    return ordered_json{{"chow", rstr(d.chow)},
                        {"hurwitz", rstr(d.hurwitz)},
                        {"discriminant", rstr(d.discriminant)}};
}

ordered_json counts_json(const StabilityContext& ctx) {
    return ordered_json{{"points", ctx.config().count()},
                        {"triangulations", static_cast<long>(ctx.triangulations().size())},
                        {"regular", ctx.regular_count()},
                        {"d_classes", ctx.d_class_count()}};
}

ordered_json numerical_json(const stab::NumericalSsResult& r, bool emit_certificates) {
    ordered_json v;
    v["status"] = status_str(r.status);
    if (r.status == VerdictStatus::skipped) v["reason"] = r.reason;
    if (r.status == VerdictStatus::pass && emit_certificates) {
        ordered_json certs = ordered_json::array();
        for (const auto& c : r.certificates)
            certs.push_back(ordered_json{{"scaled_vertex", rvec(c.point)},
                                         {"coefficients", rvec(c.coefficients)}});
        v["certificates"] = std::move(certs);
    }
    if (r.status == VerdictStatus::fail) {
        v["violating_vertex"] = rvec(r.violating_vertex);
        v["separator"] = functional_json(r.separator);
        v["destabilizing_heights"] = rvec(r.destabilizing_heights);
        v["futaki_paul"] = rstr(r.futaki_paul_value);
    }
    return v;
}

ordered_json chow_json(const stab::ChowSsResult& r, bool emit_certificates) {
    ordered_json v;
    v["status"] = status_str(r.status);
    v["constant"] = rstr(r.constant);
    if (r.status == VerdictStatus::pass && emit_certificates)
        v["coefficients"] = rvec(r.coefficients);
    if (r.status == VerdictStatus::fail) {
        v["separator"] = functional_json(r.separator);
        v["destabilizing_heights"] = rvec(r.destabilizing_heights);
        v["chow_gap"] = rstr(r.chow_gap);
    }
    return v;
}

ordered_json barycenter_json(const stab::BarycenterResult& r) {
    ordered_json v;
    v["status"] = status_str(r.status);
    v["difference"] = rvec(r.difference);
    if (r.status == VerdictStatus::fail) {
        v["destabilizing_heights"] = rvec(r.destabilizing_heights);
        v["futaki_paul"] = rstr(r.futaki_paul_value);
    }
    return v;
}

ordered_json polytope_json(const stab::WeightPolytope& p) {
    ordered_json v;
    ordered_json gens = ordered_json::array();
    for (const auto& g : p.distinct) gens.push_back(rvec(g));
    v["generators_distinct"] = std::move(gens);
    v["vertices"] = p.vertex_ids;
    std::vector<int> gen_index;
    for (const auto& g : p.generators) {
        auto it = std::lower_bound(p.distinct.begin(), p.distinct.end(), g);
        gen_index.push_back(static_cast<int>(it - p.distinct.begin()));
    }
    v["generator_of_triangulation"] = gen_index;
    v["entry_sum"] = rstr(p.entry_sum);
    v["weighted_sum"] = rvec(p.weighted_sum);
    v["affine_dim"] = p.affine_dim;
    return v;
}

ordered_json triangulation_json(const StabilityContext& ctx, int i) {
    const auto& t = ctx.triangulations()[i];
    ordered_json v;
    ordered_json cells = ordered_json::array();
    for (const auto& c : t.cells)
        cells.push_back(ordered_json{{"vertices", c.verts}, {"vol_z", rstr(c.vol_z)}});
    v["cells"] = std::move(cells);
    v["regular"] = (t.regularity == tri::Regularity::regular);
    if (t.regularity == tri::Regularity::regular)
        v["witness"] = rvec(t.witness);
    else
        v["non_regularity_multipliers"] = rvec(t.gordan);
    v["gkz"] = rvec(ctx.gkz()[i]);
    v["massive_gkz"] = rvec(ctx.eta()[i]);
    v["hurwitz"] = rvec(ctx.xi()[i]);
    v["d_class"] = ctx.d_class_of()[i];
    return v;
}

PointConfiguration config_for_dilation(const PointConfiguration& base, int factor) {
    if (factor == 1 && !base.saturated()) return base; // exploration mode
    return points::dilate(base, factor).config;
}

} // namespace

RunResult run_job(const InputDocument& input, const JobOptions& opts) {
    RunResult out;
    auto base = PointConfiguration::load(input.points, input.name);

    ordered_json& rep = out.report;
    rep["schema"] = kSchema;
    rep["generator"] = ordered_json{{"tool", kToolName}, {"version", kToolVersion}};
    rep["command"] = opts.command;
    rep["input"] = ordered_json{{"name", base.name()},
                                {"dim", base.dim()},
                                {"points", ipoints(base.points())},
                                {"saturated", base.saturated()},
                                {"generates", base.generates()},
                                {"delzant", base.delzant()}};

    std::vector<int> dilations = opts.dilations.empty() ? input.dilations : opts.dilations;
    if (dilations.empty()) dilations.push_back(1);
    for (int i : dilations)
        if (i < 1) throw input_error("dilations must be >= 1");

    bool any_fail = false;
    const std::string& cmd = opts.command;

    if (cmd == "analyze") {
        auto bc = stab::check_barycenter_condition(base);
        rep["barycenter_condition"] = barycenter_json(bc);
        if (bc.status == VerdictStatus::fail) any_fail = true;
    }

    ordered_json blocks = ordered_json::array();
    for (int factor : dilations) {
        auto config = config_for_dilation(base, factor);
        ordered_json block;
        block["factor"] = factor;
        block["points"] = ipoints(config.points());

        if (cmd == "degrees") {
            block["degrees"] = degrees_json(stab::compute_degrees(config));
            block["geometry"] = geometry_json(config);
            block["ehrhart"] = ordered_json{
                {"leading", rstr(config.ehrhart_coefficients().first)},
                {"subleading", rstr(config.ehrhart_coefficients().second)}};
            blocks.push_back(std::move(block));
            continue;
        }

        StabilityContext ctx(config, opts.max_triangulations, opts.jobs);
        block["counts"] = counts_json(ctx);
        block["degrees"] = degrees_json(ctx.degrees());
        block["geometry"] = geometry_json(ctx.config());

        if (cmd == "analyze" || cmd == "chow-check") {
            if (!config.satisfies_star()) {
                ordered_json skipped{{"status", "skipped"},
                                     {"reason", "configuration does not satisfy (*)"}};
                if (cmd == "analyze") block["numerical_ss"] = skipped;
                block["chow_ss"] = skipped;
            } else {
                if (cmd == "analyze") {
                    auto ns = stab::check_numerical_ss(ctx);
                    block["numerical_ss"] = numerical_json(ns, opts.emit_certificates);
                    if (ns.status == VerdictStatus::fail) any_fail = true;
                }
                auto cs = stab::check_chow_ss(ctx);
                block["chow_ss"] = chow_json(cs, opts.emit_certificates);
                if (cs.status == VerdictStatus::fail) any_fail = true;
            }
            if (opts.emit_certificates) {
                ordered_json hu = ordered_json::array();
                for (const auto& g : ctx.distinct_xi()) hu.push_back(rvec(g));
                ordered_json ch = ordered_json::array();
                for (const auto& g : ctx.distinct_gkz()) ch.push_back(rvec(g));
                block["hurwitz_generators"] = std::move(hu);
                block["chow_generators"] = std::move(ch);
            }
        } else if (cmd == "triangulations") {
            ordered_json list = ordered_json::array();
            for (int i = 0; i < static_cast<int>(ctx.triangulations().size()); ++i)
                list.push_back(triangulation_json(ctx, i));
            block["triangulations"] = std::move(list);
        } else if (cmd == "polytopes") {
            block["polytopes"] =
                ordered_json{{"chow", polytope_json(ctx.polytope(stab::PolytopeKind::chow))},
                             {"discriminant",
                              polytope_json(ctx.polytope(stab::PolytopeKind::discriminant))},
                             {"hurwitz", polytope_json(ctx.polytope(stab::PolytopeKind::hurwitz))}};
        } else if (cmd == "k-check") {
            std::vector<RatVec> heights = opts.heights;
            bool swept = heights.empty();
            if (swept) {
                // Default: the regular-triangulation witness sweep, the
                // finite set of degenerations that decides the verdict.
                for (const auto& t : ctx.triangulations())
                    if (t.regularity == tri::Regularity::regular)
                        heights.push_back(t.witness);
            }
            ordered_json results = ordered_json::array();
            bool all_nonneg = true;
            for (const auto& h : heights) {
                if (static_cast<int>(h.size()) != config.count())
                    throw input_error("height vector length " + std::to_string(h.size()) +
                                      " does not match the " +
                                      std::to_string(config.count()) +
                                      " lattice points of this dilation");
                auto fp = stab::futaki_paul(ctx, h);
                if (sgn(fp.value) < 0) all_nonneg = false;
                results.push_back(ordered_json{{"heights", rvec(h)},
                                               {"futaki_paul", rstr(fp.value)},
                                               {"raw_weight_form", rstr(fp.raw_weight_form)},
                                               {"integral_p", rstr(fp.integral_p)},
                                               {"integral_boundary", rstr(fp.integral_dp)}});
            }
            block["swept_regular_witnesses"] = swept;
            block["results"] = std::move(results);
            block["all_nonnegative"] = all_nonneg;
            if (!all_nonneg) any_fail = true;
        } else if (cmd == "svg") {
            auto files = render_svgs(ctx);
            ordered_json names = ordered_json::array();
            for (const auto& [name, bytes] : files) {
                names.push_back(name);
                out.artifacts.emplace_back(name, bytes);
            }
            block["figures"] = std::move(names);
        } else {
            throw input_error("unknown command '" + cmd + "'");
        }
        blocks.push_back(std::move(block));
    }
    rep["dilations"] = std::move(blocks);
    out.exit_code = any_fail ? 1 : 0;
    return out;
}

std::string render_machine(const ordered_json& report) { return report.dump(1) + "\n"; }

namespace {

double approx(const std::string& s) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return 0.0;
    q.canonicalize();
    return q.get_d();
}

std::string human_rat(const ordered_json& j) {
    std::string s = j.get<std::string>();
    if (s.find('/') == std::string::npos) return s;
    std::ostringstream out;
    out << s << " (~" << approx(s) << ")";
    return out.str();
}

std::string human_vec(const ordered_json& a) {
    std::string out = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += ", ";
        out += a[i].get<std::string>();
    }
    return out + ")";
}

void human_verdict(std::ostringstream& out, const char* title, const ordered_json& v) {
    out << "  " << title << ": " << v["status"].get<std::string>();
    if (v.contains("reason")) out << " (" << v["reason"].get<std::string>() << ")";
    out << "\n";
}

} // namespace

std::string render_human(const ordered_json& rep) {
    std::ostringstream out;
    const auto& in = rep["input"];
    out << kToolName << " " << rep["generator"]["version"].get<std::string>() << " — "
        << rep["command"].get<std::string>() << "\n";
    out << "configuration: " << in["name"].get<std::string>() << "  dim "
        << in["dim"].get<int>() << ", " << in["points"].size() << " points"
        << (in["saturated"].get<bool>() ? ", saturated" : ", NOT saturated")
        << (in["generates"].get<bool>() ? ", generating" : ", NOT generating")
        << (in["delzant"].get<bool>() ? ", Delzant" : ", not Delzant") << "\n";
    if (rep.contains("barycenter_condition")) {
        const auto& bc = rep["barycenter_condition"];
        out << "barycenter condition: " << bc["status"].get<std::string>()
            << "  difference " << human_vec(bc["difference"]) << "\n";
    }
    for (const auto& block : rep["dilations"]) {
        out << "\ndilation i = " << block["factor"].get<int>() << " ("
            << block["points"].size() << " lattice points)\n";
        if (block.contains("counts")) {
            const auto& c = block["counts"];
            out << "  triangulations: " << c["triangulations"].get<long>() << " ("
                << c["regular"].get<int>() << " regular, " << c["d_classes"].get<int>()
                << " D-classes)\n";
        }
        if (block.contains("degrees")) {
            const auto& d = block["degrees"];
            out << "  degrees: R " << d["chow"].get<std::string>() << ", Hu "
                << d["hurwitz"].get<std::string>() << ", Delta "
                << d["discriminant"].get<std::string>() << "\n";
        }
        if (block.contains("geometry")) {
            const auto& g = block["geometry"];
            out << "  vol " << human_rat(g["volume"]) << ", vol(boundary) "
                << human_rat(g["boundary_volume"]) << ", moment "
                << human_vec(g["moment"]) << ", boundary moment "
                << human_vec(g["boundary_moment"]) << "\n";
        }
        if (block.contains("numerical_ss"))
            human_verdict(out, "numerical semistability", block["numerical_ss"]);
        if (block.contains("chow_ss")) {
            human_verdict(out, "Chow semistability", block["chow_ss"]);
            out << "    constant vector entry: " << human_rat(block["chow_ss"]["constant"])
                << "\n";
        }
        if (block.contains("triangulations")) {
            int idx = 0;
            for (const auto& t : block["triangulations"]) {
                out << "  T" << idx++ << (t["regular"].get<bool>() ? "  regular " : "  NON-regular ")
                    << " cells";
                for (const auto& c : t["cells"]) {
                    out << " {";
                    for (size_t k = 0; k < c["vertices"].size(); ++k)
                        out << (k ? " " : "") << c["vertices"][k].get<int>();
                    out << "}";
                }
                out << "  gkz " << human_vec(t["gkz"]) << "  eta "
                    << human_vec(t["massive_gkz"]) << "  xi " << human_vec(t["hurwitz"])
                    << "  D-class " << t["d_class"].get<int>() << "\n";
            }
        }
        if (block.contains("polytopes")) {
            for (const char* kind : {"chow", "discriminant", "hurwitz"}) {
                const auto& p = block["polytopes"][kind];
                out << "  " << kind << " polytope: " << p["generators_distinct"].size()
                    << " distinct generators, " << p["vertices"].size()
                    << " vertices, affine dim " << p["affine_dim"].get<int>()
                    << ", entry sum " << p["entry_sum"].get<std::string>() << "\n";
            }
        }
        if (block.contains("results")) {
            out << "  Futaki-Paul values"
                << (block["swept_regular_witnesses"].get<bool>()
                        ? " (regular-triangulation sweep)"
                        : "")
                << ":\n";
            for (const auto& r : block["results"])
                out << "    F = " << human_rat(r["futaki_paul"]) << "\n";
            out << "  all nonnegative: "
                << (block["all_nonnegative"].get<bool>() ? "yes" : "NO") << "\n";
        }
        if (block.contains("figures")) {
            out << "  figures:\n";
            for (const auto& f : block["figures"])
                out << "    " << f.get<std::string>() << "\n";
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------
// Report verification
// ---------------------------------------------------------------------

namespace {

Rat read_rat(const ordered_json& j) {
    auto q = geom::parse_rat(j.get<std::string>());
    if (!q) throw input_error("invalid rational in report: " + j.dump());
    return *q;
}

RatVec read_rvec(const ordered_json& a) {
    RatVec v;
    for (const auto& e : a) v.push_back(read_rat(e));
    return v;
}

struct Verifier {
    std::ostringstream log;
    bool ok = true;
    int checks = 0;

    void require(bool cond, const std::string& what) {
        ++checks;
        if (!cond) {
            ok = false;
            log << "FAIL: " << what << "\n";
        }
    }
};

void verify_membership(Verifier& v, const RatVec& target,
                       const std::vector<RatVec>& columns, const RatVec& coeffs,
                       const std::string& what) {
    v.require(coeffs.size() == columns.size(), what + ": coefficient count");
    if (coeffs.size() != columns.size()) return;
    Rat total = 0;
    RatVec combo(target.size(), Rat(0));
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (sgn(coeffs[k]) < 0) {
            v.require(false, what + ": negative coefficient");
            return;
        }
        total += coeffs[k];
        combo = geom::add(combo, geom::scale(columns[k], coeffs[k]));
    }
    v.require(total == Rat(1), what + ": coefficients must sum to 1");
    v.require(combo == target, what + ": combination must reproduce the point");
}

bool gkz_vector_matches(const PointConfiguration& config, const tri::Triangulation& t,
                        const RatVec& expected) {
    return weights::gkz_vector(config, t).entries == expected;
}

void verify_separator(Verifier& v, const geom::AffineFunctional& h, const RatVec& point,
                      const std::vector<RatVec>& columns, const std::string& what) {
    v.require(sgn(h.eval(point)) > 0, what + ": separator must be positive at the point");
    for (const auto& c : columns)
        if (sgn(h.eval(c)) > 0) {
            v.require(false, what + ": separator must be nonpositive on the hull");
            return;
        }
    ++v.checks;
}

} // namespace

VerifyResult verify_report(const std::string& report_json) {
    ordered_json rep;
    try {
        rep = ordered_json::parse(report_json);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("report parse error: ") + e.what());
    }
    if (!rep.contains("schema") || rep["schema"].get<std::string>() != kSchema)
        throw input_error("unrecognized report schema");

    Verifier v;
    std::vector<geom::IntVec> pts;
    for (const auto& row : rep["input"]["points"]) {
        geom::IntVec p;
        for (const auto& c : row) p.push_back(geom::Int(c.get<long long>()));
        pts.push_back(std::move(p));
    }
    auto base = PointConfiguration::load(pts, rep["input"]["name"].get<std::string>());
    v.require(base.saturated() == rep["input"]["saturated"].get<bool>(),
              "saturation flag echo");
    v.require(base.generates() == rep["input"]["generates"].get<bool>(),
              "generation flag echo");

    if (rep.contains("barycenter_condition")) {
        auto bc = stab::check_barycenter_condition(base);
        const auto& echoed = rep["barycenter_condition"];
        v.require(read_rvec(echoed["difference"]) == bc.difference,
                  "barycenter difference echo");
        v.require(echoed["status"].get<std::string>() ==
                      (geom::is_zero(bc.difference) ? "pass" : "fail"),
                  "barycenter status consistent with difference");
    }

    for (const auto& block : rep["dilations"]) {
        int factor = block["factor"].get<int>();
        auto config = config_for_dilation(base, factor);
        std::string tag = "i=" + std::to_string(factor);

        v.require(ipoints(config.points()) == block["points"], tag + ": lattice points echo");
        const int n = config.dim();
        auto degrees = stab::compute_degrees(config);
        if (block.contains("degrees")) {
            v.require(read_rat(block["degrees"]["chow"]) == degrees.chow,
                      tag + ": deg R echo");
            v.require(read_rat(block["degrees"]["hurwitz"]) == degrees.hurwitz,
                      tag + ": deg Hu echo");
            v.require(read_rat(block["degrees"]["discriminant"]) == degrees.discriminant,
                      tag + ": deg Delta echo");
        }
        if (block.contains("geometry")) {
            v.require(read_rat(block["geometry"]["volume"]) == config.volume(),
                      tag + ": volume echo");
            v.require(read_rvec(block["geometry"]["moment"]) == config.moment(),
                      tag + ": moment echo");
        }

        std::vector<RatVec> hurwitz_gens, chow_gens;
        if (block.contains("hurwitz_generators"))
            for (const auto& g : block["hurwitz_generators"])
                hurwitz_gens.push_back(read_rvec(g));
        if (block.contains("chow_generators"))
            for (const auto& g : block["chow_generators"]) chow_gens.push_back(read_rvec(g));
        // Generator lists must satisfy the affine-hull entry sums.
        for (const auto& g : hurwitz_gens) {
            Rat s = 0;
            for (const auto& e : g) s += e;
            v.require(s == degrees.hurwitz, tag + ": hurwitz generator entry sum");
        }
        for (const auto& g : chow_gens) {
            Rat s = 0;
            for (const auto& e : g) s += e;
            v.require(s == degrees.chow, tag + ": chow generator entry sum");
        }

        if (block.contains("numerical_ss")) {
            const auto& ns = block["numerical_ss"];
            std::string status = ns["status"].get<std::string>();
            if (status == "pass" && ns.contains("certificates")) {
                std::vector<RatVec> scaled;
                for (const auto& g : hurwitz_gens)
                    scaled.push_back(geom::scale(g, degrees.chow));
                for (const auto& cert : ns["certificates"])
                    verify_membership(v, read_rvec(cert["scaled_vertex"]), scaled,
                                      read_rvec(cert["coefficients"]),
                                      tag + ": numerical_ss certificate");
            } else if (status == "fail") {
                geom::AffineFunctional h{read_rvec(ns["separator"]["gradient"]),
                                         read_rat(ns["separator"]["constant"])};
                std::vector<RatVec> scaled;
                for (const auto& g : hurwitz_gens)
                    scaled.push_back(geom::scale(g, degrees.chow));
                verify_separator(v, h,
                                 geom::scale(read_rvec(ns["violating_vertex"]),
                                             degrees.hurwitz),
                                 scaled, tag + ": numerical_ss separator");
                v.require(sgn(read_rat(ns["futaki_paul"])) < 0,
                          tag + ": failing numerical_ss must report F < 0");
            } else if (status == "skipped") {
                v.require(sgn(degrees.hurwitz) <= 0 || !config.satisfies_star(),
                          tag + ": numerical_ss skip must be justified");
            }
        }
        if (block.contains("chow_ss")) {
            const auto& cs = block["chow_ss"];
            std::string status = cs["status"].get<std::string>();
            if (status != "skipped") {
                Rat constant = read_rat(cs["constant"]);
                v.require(constant == degrees.chow / Rat(config.count()),
                          tag + ": chow constant");
                RatVec target(config.count(), constant);
                if (status == "pass" && cs.contains("coefficients"))
                    verify_membership(v, target, chow_gens, read_rvec(cs["coefficients"]),
                                      tag + ": chow_ss certificate");
                if (status == "fail") {
                    geom::AffineFunctional h{read_rvec(cs["separator"]["gradient"]),
                                             read_rat(cs["separator"]["constant"])};
                    verify_separator(v, h, target, chow_gens, tag + ": chow_ss separator");
                    v.require(sgn(read_rat(cs["chow_gap"])) < 0,
                              tag + ": failing chow_ss must report a negative gap");
                }
            }
        }
        if (block.contains("triangulations")) {
            Rat volz = config.face_data(config.hull().top).vol_z;
            for (const auto& tj : block["triangulations"]) {
                std::vector<std::vector<int>> cells;
                Rat total = 0;
                for (const auto& c : tj["cells"]) {
                    cells.push_back(c["vertices"].get<std::vector<int>>());
                    total += read_rat(c["vol_z"]);
                }
                v.require(total == volz, tag + ": triangulation volume partition");
                auto t = tri::make_triangulation(config, cells, false);
                v.require(gkz_vector_matches(config, t, read_rvec(tj["gkz"])),
                          tag + ": gkz echo");
                if (tj["regular"].get<bool>()) {
                    // The witness must induce exactly this triangulation.
                    auto refined = tri::refine_to_triangulation(
                        config, tri::subdivision_from_heights(config, read_rvec(tj["witness"])));
                    std::vector<std::vector<int>> got;
                    for (const auto& c : refined.cells) got.push_back(c.verts);
                    std::sort(cells.begin(), cells.end());
                    v.require(got == cells, tag + ": regularity witness reproduces T");
                }
            }
        }
        if (block.contains("results")) {
            // k-check: recompute each Futaki-Paul value from the heights.
            for (const auto& r : block["results"]) {
                RatVec h = read_rvec(r["heights"]);
                auto conc = tri::concavify(config, h);
                Rat ip = weights::integrate_pl(config, conc.triangulation, h, 0);
                Rat ib = weights::integrate_pl(config, conc.triangulation, h, 1);
                Rat val = config.boundary_volume() * ip - config.volume() * ib;
                v.require(val == read_rat(r["futaki_paul"]), tag + ": futaki-paul echo");
            }
        }
    }

    VerifyResult out;
    out.ok = v.ok;
    std::ostringstream summary;
    summary << (v.ok ? "report verified: " : "report verification FAILED: ") << v.checks
            << " checks\n"
            << v.log.str();
    out.summary = summary.str();
    return out;
}

} // namespace toric::io

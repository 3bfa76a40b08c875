#include "io/svg.hpp"

#include <algorithm>
#include <sstream>

#include "weights/weights.hpp"

namespace toric::io {

using geom::Int;
using geom::Rat;
using points::PointConfiguration;
using toric::input_error;

namespace {

constexpr long kScale = 60;
constexpr long kMargin = 40;

struct Frame {
    Int min_x, min_y, max_y;
    long width, height;

    static Frame from(const PointConfiguration& config) {
        Frame f;
        Int max_x;
        const auto& pts = config.points();
        f.min_x = max_x = pts[0][0];
        f.min_y = f.max_y = pts[0][1];
        for (const auto& p : pts) {
            f.min_x = std::min(f.min_x, p[0]);
            max_x = std::max(max_x, p[0]);
            f.min_y = std::min(f.min_y, p[1]);
            f.max_y = std::max(f.max_y, p[1]);
        }
        f.width = 2 * kMargin + kScale * (max_x - f.min_x).get_si();
        f.height = 2 * kMargin + kScale * (f.max_y - f.min_y).get_si();
        return f;
    }

    std::pair<long, long> map(const geom::IntVec& p) const {
        long x = kMargin + kScale * (p[0] - min_x).get_si();
        long y = kMargin + kScale * (max_y - p[1]).get_si();
        return {x, y};
    }
};

void open_svg(std::ostringstream& out, const Frame& f, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width << "\" height=\""
        << f.height << "\" viewBox=\"0 0 " << f.width << " " << f.height << "\">\n";
    out << "<title>" << title << "</title>\n";
    out << "<rect width=\"" << f.width << "\" height=\"" << f.height
        << "\" fill=\"white\"/>\n";
}

void draw_hull_outline(std::ostringstream& out, const PointConfiguration& config,
                       const Frame& f) {
    for (int fi : config.hull().facets) {
        const auto& verts = config.hull().faces[fi].vertices;
        auto [x1, y1] = f.map(config.points()[verts.front()]);
        auto [x2, y2] = f.map(config.points()[verts.back()]);
        out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
            << y2 << "\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
    }
}

void draw_points(std::ostringstream& out, const PointConfiguration& config, const Frame& f,
                 const std::vector<int>& used) {
    for (int i = 0; i < config.count(); ++i) {
        auto [x, y] = f.map(config.points()[i]);
        bool on = used.empty() || std::binary_search(used.begin(), used.end(), i);
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\""
            << (on ? "#1f4e9c" : "#bbbbbb") << "\"/>\n";
        out << "<text x=\"" << x + 8 << "\" y=\"" << y - 8
            << "\" font-family=\"monospace\" font-size=\"14\">a" << i << "</text>\n";
    }
}

std::string polytope_figure(const PointConfiguration& config) {
    Frame f = Frame::from(config);
    std::ostringstream out;
    open_svg(out, f, config.name().empty() ? "polytope" : config.name());
    draw_hull_outline(out, config, f);
    draw_points(out, config, f, {});
    out << "</svg>\n";
    return out.str();
}

std::string triangulation_figure(const PointConfiguration& config,
                                 const tri::Triangulation& t, int index) {
    Frame f = Frame::from(config);
    std::ostringstream out;
    open_svg(out, f, "triangulation " + std::to_string(index));
    for (const auto& cell : t.cells) {
        out << "<polygon points=\"";
        for (size_t k = 0; k < cell.verts.size(); ++k) {
            auto [x, y] = f.map(config.points()[cell.verts[k]]);
            out << (k ? " " : "") << x << "," << y;
        }
        out << "\" fill=\"#dce7f7\" stroke=\"#5b7db1\" stroke-width=\"1\"/>\n";
    }
    // Massive boundary edges carry the eta/xi data; highlight them.
    for (const auto& m : weights::massive_simplices(config, t, 1)) {
        auto [x1, y1] = f.map(config.points()[m.verts[0]]);
        auto [x2, y2] = f.map(config.points()[m.verts[1]]);
        out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
            << y2 << "\" stroke=\"#c23b22\" stroke-width=\"4\"/>\n";
    }
    draw_points(out, config, f, t.used_vertices);
    out << "</svg>\n";
    return out.str();
}

} // namespace

std::vector<std::pair<std::string, std::string>> render_svgs(
    const stab::StabilityContext& ctx) {
    const auto& config = ctx.config();
    if (config.dim() != 2)
        throw input_error("svg output is only supported for 2-dimensional configurations");
    std::string base = config.name().empty() ? "config" : config.name();
    std::vector<std::pair<std::string, std::string>> files;
    files.emplace_back(base + "_polytope.svg", polytope_figure(config));
    char buf[16];
    for (size_t i = 0; i < ctx.triangulations().size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%03zu", i);
        files.emplace_back(base + "_triangulation_" + buf + ".svg",
                           triangulation_figure(config, ctx.triangulations()[i],
                                                static_cast<int>(i)));
    }
    return files;
}

} // namespace toric::io

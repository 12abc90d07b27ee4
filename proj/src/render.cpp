#include "ptorus/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace ptorus {

namespace {

struct D3 {
    double x = 0, y = 0, z = 0;
};

D3 unit(const D3& v) {
    double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    return {v.x / n, v.y / n, v.z / n};
}

D3 to_double(const Vec3& v) {
    auto f = [](const Rat& q) {
        return static_cast<double>(rat_num(q)) / static_cast<double>(rat_den(q));
    };
    return {f(v[0]), f(v[1]), f(v[2])};
}

double dot(const D3& a, const D3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

D3 slerp(const D3& a, const D3& b, double t) {
    double c = std::clamp(dot(a, b), -1.0, 1.0);
    double omega = std::acos(c);
    if (omega < 1e-12) return a;
    double s = std::sin(omega);
    double wa = std::sin((1 - t) * omega) / s, wb = std::sin(t * omega) / s;
    return unit({wa * a.x + wb * b.x, wa * a.y + wb * b.y, wa * a.z + wb * b.z});
}

struct Projector {
    D3 pole;
    D3 axis;  // -pole: tangent point of the image plane
    D3 eu, ev;
    double scale, cx, cy;

    explicit Projector(const ProjectionConfig& cfg) {
        pole = unit({cfg.pole[0], cfg.pole[1], cfg.pole[2]});
        axis = {-pole.x, -pole.y, -pole.z};
        // in-plane frame; for the default pole this puts e1 to the left and
        // e2/e3 to the lower/upper right
        D3 seed{-2, 1, 1};
        if (std::abs(dot(seed, axis)) > 0.99) seed = {1, -1, 0};
        D3 proj{seed.x - dot(seed, axis) * axis.x, seed.y - dot(seed, axis) * axis.y,
                seed.z - dot(seed, axis) * axis.z};
        eu = unit(proj);
        ev = {axis.y * eu.z - axis.z * eu.y, axis.z * eu.x - axis.x * eu.z,
              axis.x * eu.y - axis.y * eu.x};
        scale = cfg.scale;
        cx = 320;
        cy = 320;
    }

    // stereographic projection of a unit vector onto screen coordinates
    std::pair<double, double> operator()(const D3& u) const {
        double denom = dot(u, axis) + 1;
        if (denom < 1e-9) denom = 1e-9;  // direction at the pole: pushed to infinity
        double t = 2 / denom;
        D3 p{pole.x + t * (u.x - pole.x), pole.y + t * (u.y - pole.y), pole.z + t * (u.z - pole.z)};
        return {cx + scale * dot(p, eu), cy - scale * dot(p, ev)};
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void append_arc_points(std::string& path, const Projector& proj, const D3& a, const D3& b,
                       int samples, bool move_first) {
    for (int i = 0; i <= samples; ++i) {
        double t = static_cast<double>(i) / samples;
        auto [x, y] = proj(slerp(a, b, t));
        if (i == 0 && move_first)
            path += "M" + fmt(x) + " " + fmt(y);
        else if (i > 0)
            path += " L" + fmt(x) + " " + fmt(y);
    }
}

bool contains_direction(const Cone& cone, const D3& d) {
    if (cone.generators.size() != 3) return false;
    auto g = [&](int i) { return to_double(cone.generators[static_cast<size_t>(i)]); };
    D3 a = g(0), b = g(1), c = g(2);
    auto det = [](const D3& u, const D3& v, const D3& w) {
        return u.x * (v.y * w.z - v.z * w.y) - u.y * (v.x * w.z - v.z * w.x) +
               u.z * (v.x * w.y - v.y * w.x);
    };
    double D = det(a, b, c);
    double l1 = det(d, b, c) / D, l2 = det(a, d, c) / D, l3 = det(a, b, d) / D;
    return l1 > 1e-9 && l2 > 1e-9 && l3 > 1e-9;
}

}  // namespace

std::string render_fan_svg(const ProjectionConfig& cfg, RenderStats* stats) {
    if (cfg.max_height < 1) throw std::invalid_argument("render: max_height must be >= 1");

    FanCensus census = census_by_depth(cfg.max_height);
    Projector proj(cfg);
    RenderStats st;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n"
        << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";

    // plane x+y+z=0: a great circle through neither pole
    {
        std::string path;
        D3 u1 = unit({1, -1, 0}), u2 = unit({1, 1, -2});
        int n = 4 * cfg.arc_samples;
        for (int i = 0; i <= n; ++i) {
            double th = 2 * M_PI * i / n;
            D3 d{std::cos(th) * u1.x + std::sin(th) * u2.x, std::cos(th) * u1.y + std::sin(th) * u2.y,
                 std::cos(th) * u1.z + std::sin(th) * u2.z};
            auto [x, y] = proj(d);
            path += (i == 0 ? "M" : " L") + fmt(x) + " " + fmt(y);
        }
        svg << "<path class=\"plane-circle\" d=\"" << path
            << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"" << fmt(cfg.stroke)
            << "\" stroke-dasharray=\"4 3\"/>\n";
    }

    // 3-dimensional cones: spherical triangles (the cone containing the
    // pole direction would wrap around infinity, draw its boundary only)
    for (const Cone& cone : census.maximal3) {
        D3 a = unit(to_double(cone.generators[0]));
        D3 b = unit(to_double(cone.generators[1]));
        D3 c = unit(to_double(cone.generators[2]));
        std::string path;
        append_arc_points(path, proj, a, b, cfg.arc_samples, true);
        append_arc_points(path, proj, b, c, cfg.arc_samples, false);
        append_arc_points(path, proj, c, a, cfg.arc_samples, false);
        path += " Z";
        bool wraps = contains_direction(cone, proj.pole);
        const char* fill = wraps                                            ? "none"
                           : cone.kind == Cone::Kind::PositiveOrthant       ? "#cfe3f7"
                           : cone.kind == Cone::Kind::NegativeOrthant       ? "#f7d9cf"
                                                                            : "#e8f0e3";
        svg << "<path class=\"cell3\" d=\"" << path << "\" fill=\"" << fill
            << "\" fill-opacity=\"0.85\" stroke=\"#334455\" stroke-width=\"" << fmt(cfg.stroke)
            << "\"/>\n";
        ++st.cells3;
    }

    // 2-dimensional cones: arcs
    for (const Cone& cone : census.maximal2) {
        D3 a = unit(to_double(cone.generators[0]));
        D3 b = unit(to_double(cone.generators[1]));
        std::string path;
        append_arc_points(path, proj, a, b, cfg.arc_samples, true);
        svg << "<path class=\"cell2\" d=\"" << path
            << "\" fill=\"none\" stroke=\"#aa3333\" stroke-width=\"" << fmt(cfg.stroke) << "\"/>\n";
        ++st.cells2;
    }

    // rays: one dot per extreme ray (two spiral rays and one plane ray per slope)
    {
        std::set<std::array<std::string, 3>> seen;
        std::vector<Vec3> dirs;
        for (const Cone& cone : census.maximal2) {
            for (const Vec3& g : cone.generators) {
                Vec3 p = primitive_direction(g);
                if (seen.insert({format_rat(p[0]), format_rat(p[1]), format_rat(p[2])}).second)
                    dirs.push_back(p);
            }
        }
        for (const Vec3& d : dirs) {
            auto [x, y] = proj(unit(to_double(d)));
            svg << "<circle class=\"ray\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
                << "\" r=\"2.2\" fill=\"#222222\"/>\n";
            ++st.ray_points;
        }
    }

    if (cfg.labels) {
        const char* names[3] = {"e1", "e2", "e3"};
        for (int i = 0; i < 3; ++i) {
            D3 e{i == 0 ? 1.0 : 0.0, i == 1 ? 1.0 : 0.0, i == 2 ? 1.0 : 0.0};
            auto [x, y] = proj(e);
            svg << "<text class=\"axis-label\" x=\"" << fmt(x + 6) << "\" y=\"" << fmt(y - 6)
                << "\" font-family=\"sans-serif\" font-size=\"14\">" << names[i] << "</text>\n";
            ++st.labels;
        }
    }

    svg << "</svg>\n";
    if (stats) *stats = st;
    return svg.str();
}

}  // namespace ptorus

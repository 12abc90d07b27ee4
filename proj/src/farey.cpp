#include "ptorus/farey.hpp"

#include <algorithm>

namespace ptorus {

namespace {

Int abs_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(abs(a), abs(b)); }

// x^{-1} mod m for m > 1, gcd(x,m)=1, result in [1,m).
Int mod_inverse(Int x, const Int& m) {
    x %= m;
    if (x < 0) x += m;
    Int r0 = m, r1 = x, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t0 < 0) t0 += m;
    return t0;
}

}  // namespace

bool is_farey_point(const Int& a, const Int& b) {
    return !(a == 0 && b == 0) && abs_gcd(a, b) == 1;
}

FareyPoint farey_point(Int a, Int b) {
    if (!is_farey_point(a, b))
        throw std::invalid_argument("not a Farey point: [" + a.str() + "," + b.str() + "]");
    return {std::move(a), std::move(b)};
}

FareyPoint standard(FareyPoint p) {
    if (p.a < 0 || (p.a == 0 && p.b < 0)) return p.antipode();
    return p;
}

bool is_standard(const FareyPoint& p) {
    return is_farey_point(p.a, p.b) && (p.a > 0 || (p.a == 0 && p.b == 1));
}

bool slope_less(const Slope& s, const Slope& t) {
    if (s.infinite) return false;
    if (t.infinite) return true;
    return s.value < t.value;
}

Slope slope_of(const FareyPoint& p) {
    FareyPoint s = standard(p);
    if (s.a == 0) return Slope::inf();
    return Slope::of(Rat(s.b, s.a));
}

bool slope_less(const FareyPoint& p, const FareyPoint& q) {
    return slope_less(slope_of(p), slope_of(q));
}

FareyPoint standard_form(const Slope& s) {
    if (s.infinite) return {0, 1};
    return {rat_den(s.value), rat_num(s.value)};
}

std::string format_slope(const Slope& s) { return s.infinite ? "inf" : format_rat(s.value); }

Slope parse_slope(const std::string& text) {
    if (text == "inf" || text == "-inf") return Slope::inf();
    return Slope::of(parse_rat(text));
}

bool are_farey_neighbors(const FareyPoint& p, const FareyPoint& q) {
    if (p.a * q.a < 0 || p.b * q.b < 0) return false;
    Int d = p.a * q.b - p.b * q.a;
    return d == 1 || d == -1;
}

FareyPoint farey_neighbor_family(const FareyPoint& p, const Int& n) {
    if (!is_standard(p)) throw std::invalid_argument("farey_neighbor_family: point must be standard");
    if (p.a == 0) {
        if (n < 0) throw std::invalid_argument("farey_neighbor_family: n must be >= 0");
        return {1, n};
    }
    if (p.a == 1) {
        if (n < 1) throw std::invalid_argument("farey_neighbor_family: n must be >= 1 when a = 1");
        return {n, p.b * n - 1};
    }
    if (n < 0) throw std::invalid_argument("farey_neighbor_family: n must be >= 0");
    Int c0 = mod_inverse(p.b, p.a);
    Int c = c0 + p.a * n;
    Int d = (p.b * c - 1) / p.a;
    return {c, d};
}

bool is_farey_triangle(const FareyPoint& p, const FareyPoint& q, const FareyPoint& r) {
    return are_farey_neighbors(p, q) && are_farey_neighbors(q, r) && are_farey_neighbors(p, r);
}

// ---------------------------------------------------------------------------
// Point location

namespace {

// 2x2 integer matrix acting on column vectors.
struct Mat2 {
    Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;

    Vec2 apply(const Vec2& v) const { return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y}; }
    FareyPoint apply(const FareyPoint& p) const {
        return {m00 * p.a + m01 * p.b, m10 * p.a + m11 * p.b};
    }
    Mat2 times(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
};

// Minimal cell for points in the base strip {0 <= x <= 1, y >= 1}. The
// strip is covered by the ray at [0,1] and the fan of triangles
// {[0,1],[1,n],[1,n+1]}, n >= 0.
FareyCell locate_strip(const Vec2& pt) {
    if (pt.x == 0) {
        if (pt.y == 1) return {FareyCell::Kind::Vertex, {FareyPoint{0, 1}}};
        return {FareyCell::Kind::Ray, {FareyPoint{0, 1}}};
    }
    Rat q = (pt.y - 1) / pt.x;
    Int n = rat_floor(q) + 1;
    Rat alpha = 1 - pt.x;                 // coefficient of [0,1]
    Rat beta = pt.x * n - (pt.y - 1);     // coefficient of [1,n]
    Rat gamma = (pt.y - 1) - pt.x * (n - 1);  // coefficient of [1,n+1]
    if (alpha < 0 || beta < 0 || gamma < 0)
        throw std::logic_error("locate_strip: barycentric solve failed");
    std::vector<FareyPoint> verts;
    if (alpha > 0) verts.push_back({0, 1});
    if (beta > 0) verts.push_back({1, n});
    if (gamma > 0) verts.push_back({1, n + 1});
    FareyCell::Kind kind = verts.size() == 3   ? FareyCell::Kind::Triangle
                           : verts.size() == 2 ? FareyCell::Kind::Edge
                                               : FareyCell::Kind::Vertex;
    return {kind, std::move(verts)};
}

}  // namespace

FareyCell locate_upper(const Vec2& pt) {
    if (pt.y < 1) throw std::invalid_argument("locate_upper: point must have y >= 1");

    // Piecewise-linear reductions toward the base strip; back maps
    // accumulate so cell vertices can be carried back through. The jump
    // count m compresses runs of the shearing step.
    Vec2 p = pt;
    Mat2 back;
    while (p.x > 1 || p.x < -1) {
        Mat2 step, inv;
        if (p.x > 1) {
            if (p.x >= p.y) {
                Int m = rat_floor((p.x - 1) / p.y);
                if (m < 1) m = 1;
                step = {1, -m, 0, 1};
                inv = {1, m, 0, 1};
            } else {
                step = {-1, 1, 1, 0};  // (x,y) -> (y-x, x)
                inv = {0, 1, 1, 1};
            }
        } else {
            if (-p.x >= p.y) {
                Int m = rat_floor((-p.x - 1) / p.y);
                if (m < 1) m = 1;
                step = {1, m, 0, 1};
                inv = {1, -m, 0, 1};
            } else {
                step = {-1, -1, -1, 0};  // (x,y) -> (-x-y, -x)
                inv = {0, -1, -1, 1};
            }
        }
        p = step.apply(p);
        back = back.times(inv);
    }

    bool mirrored = p.x < 0;
    FareyCell cell = locate_strip(mirrored ? Vec2{-p.x, p.y} : p);
    for (FareyPoint& v : cell.verts) {
        if (mirrored) v.a = -v.a;
        v = back.apply(v);
    }
    return cell;
}

bool cell_contains(const FareyCell& cell, const Vec2& pt) {
    auto vec = [](const FareyPoint& p) { return Vec2{Rat(p.a), Rat(p.b)}; };
    switch (cell.kind) {
        case FareyCell::Kind::Vertex:
            return pt == vec(cell.verts[0]);
        case FareyCell::Kind::Ray: {
            Vec2 base = vec(cell.verts[0]);
            if (cross(pt, base) != 0) return false;
            Rat c = base.x != 0 ? pt.x / base.x : pt.y / base.y;
            return c >= 1 && base * c == pt;
        }
        case FareyCell::Kind::Edge: {
            Vec2 u = vec(cell.verts[0]), v = vec(cell.verts[1]);
            Vec2 d = u - v;
            if (cross(pt - v, d) != 0) return false;
            Rat alpha = d.x != 0 ? (pt.x - v.x) / d.x : (pt.y - v.y) / d.y;
            return alpha >= 0 && alpha <= 1;
        }
        case FareyCell::Kind::Triangle: {
            Vec2 u = vec(cell.verts[0]), v = vec(cell.verts[1]), w = vec(cell.verts[2]);
            Rat d = cross(u - w, v - w);
            if (d == 0) throw std::logic_error("degenerate Farey triangle");
            Rat alpha = cross(pt - w, v - w) / d;
            Rat beta = cross(u - w, pt - w) / d;
            return alpha >= 0 && beta >= 0 && alpha + beta <= 1;
        }
    }
    return false;
}

bool cell_interior_contains(const FareyCell& cell, const Vec2& pt) {
    auto vec = [](const FareyPoint& p) { return Vec2{Rat(p.a), Rat(p.b)}; };
    switch (cell.kind) {
        case FareyCell::Kind::Vertex:
            return pt == vec(cell.verts[0]);
        case FareyCell::Kind::Ray: {
            Vec2 base = vec(cell.verts[0]);
            if (cross(pt, base) != 0) return false;
            Rat c = base.x != 0 ? pt.x / base.x : pt.y / base.y;
            return c > 1 && base * c == pt;
        }
        case FareyCell::Kind::Edge: {
            Vec2 u = vec(cell.verts[0]), v = vec(cell.verts[1]);
            Vec2 d = u - v;
            if (cross(pt - v, d) != 0) return false;
            Rat alpha = d.x != 0 ? (pt.x - v.x) / d.x : (pt.y - v.y) / d.y;
            return alpha > 0 && alpha < 1;
        }
        case FareyCell::Kind::Triangle: {
            Vec2 u = vec(cell.verts[0]), v = vec(cell.verts[1]), w = vec(cell.verts[2]);
            Rat d = cross(u - w, v - w);
            Rat alpha = cross(pt - w, v - w) / d;
            Rat beta = cross(u - w, pt - w) / d;
            return alpha > 0 && beta > 0 && alpha + beta < 1;
        }
    }
    return false;
}

std::string format_cell(const FareyCell& cell) {
    std::string name;
    switch (cell.kind) {
        case FareyCell::Kind::Vertex: name = "Vertex"; break;
        case FareyCell::Kind::Edge: name = "Edge"; break;
        case FareyCell::Kind::Ray: name = "Ray"; break;
        case FareyCell::Kind::Triangle: name = "Triangle"; break;
    }
    name += '{';
    for (size_t i = 0; i < cell.verts.size(); ++i) {
        if (i) name += ',';
        name += '[' + cell.verts[i].a.str() + ',' + cell.verts[i].b.str() + ']';
    }
    name += '}';
    return name;
}

}  // namespace ptorus

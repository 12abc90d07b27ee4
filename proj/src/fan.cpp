#include "ptorus/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace ptorus {

Vec3 family_point(int family, const Vec2& p) {
    const Rat &a = p.x, &b = p.y;
    switch (family) {
        case 1: return {1 - b, a + 1, b - a - 1};
        case 2: return {a + 1, b - a - 1, 1 - b};
        case 3: return {b - a - 1, 1 - b, a + 1};
        case 4: return {-1 - b, a - 1, b - a + 1};
        case 5: return {a - 1, b - a + 1, -1 - b};
        case 6: return {b - a + 1, -1 - b, a - 1};
        default: throw std::invalid_argument("family must be in 1..6");
    }
}

Vec3 family_limit(int family, const Vec2& p) {
    const Rat &a = p.x, &b = p.y;
    switch (family) {
        case 1: case 4: return {-b, a, b - a};
        case 2: case 5: return {a, b - a, -b};
        case 3: case 6: return {b - a, -b, a};
        default: throw std::invalid_argument("family must be in 1..6");
    }
}

Vec2 family_invert(int family, const Vec3& v) {
    const Rat &x = v[0], &y = v[1], &z = v[2];
    switch (family) {
        case 1: return {y - 1, 1 - x};
        case 2: return {x - 1, 1 - z};
        case 3: return {z - 1, 1 - y};
        case 4: return {y + 1, -1 - x};
        case 5: return {x + 1, -1 - z};
        case 6: return {z + 1, -1 - y};
        default: throw std::invalid_argument("family must be in 1..6");
    }
}

namespace {

Vec2 point_vec(const FareyPoint& p) { return {Rat(p.a), Rat(p.b)}; }

bool ray_vertex_admissible(int family, const FareyPoint& v) {
    if (family <= 3) return v.a >= 0 && v.b >= 1;
    return v.a >= 1 && v.b >= 0;
}

}  // namespace

std::pair<Vec3, Vec3> ray_image_generators(int family, const FareyPoint& vertex) {
    if (family < 1 || family > 6) throw std::invalid_argument("family must be in 1..6");
    if (!ray_vertex_admissible(family, vertex))
        throw std::invalid_argument("ray_image_generators: vertex outside the family's region");
    return {family_point(family, point_vec(vertex)), family_limit(family, point_vec(vertex))};
}

// ---------------------------------------------------------------------------
// Provenance

namespace {

Vec3 unrotate(const Vec3& v, int r) {
    if (r == 0) return v;
    return r == 1 ? cycle3(v) : cycle2(v);
}

FareyPoint chart_preimage_point(const FareyPoint& region1, int r) {
    // Rotation r of a region-1 row is the row of the curve obtained by the
    // inverse reduction map: [a,b] -> [a+b,-a] for one cyclic step,
    // [a,b] -> [b,-a-b] for the other.
    switch (r) {
        case 0: return region1;
        case 1: return standard({region1.a + region1.b, -region1.a});
        default: return standard({region1.b, -region1.a - region1.b});
    }
}

}  // namespace

Curve spiral_provenance(const Vec3& target) {
    Rat s = target.sum();
    if (s == -1) {
        Curve mirror = spiral_provenance(-swap12(target));
        Curve c = spiral_cw(standard({mirror.point.b, mirror.point.a}));
        if (shear_T0(c) == target) return c;
        throw std::invalid_argument("spiral_provenance: not a clockwise-spiral shear vector");
    }
    if (s != 1) throw std::invalid_argument("spiral_provenance: coordinate sum must be +-1");
    for (int r = 0; r < 3; ++r) {
        Vec3 t = unrotate(target, r);
        Rat a = t[1] - 1, b = 1 - t[0];
        if (!is_integer(a) || !is_integer(b)) continue;
        if (a < 0 || b < 1) continue;
        if (!is_farey_point(rat_num(a), rat_num(b))) continue;
        Curve c = spiral_ccw(chart_preimage_point({rat_num(a), rat_num(b)}, r));
        if (shear_T0(c) == target) return c;
    }
    throw std::invalid_argument("spiral_provenance: not a spiral shear vector");
}

Curve closed_provenance(const Vec3& target) {
    if (target.sum() != 0 || !target.is_integral() || target.is_zero())
        throw std::invalid_argument("closed_provenance: need a nonzero integer vector with sum 0");
    for (int r = 0; r < 3; ++r) {
        Vec3 t = unrotate(target, r);
        Rat b = -t[0], a = t[1];
        if (a < 0 || b < 1) continue;
        if (!is_farey_point(rat_num(a), rat_num(b))) continue;
        Curve c = closed_curve(chart_preimage_point({rat_num(a), rat_num(b)}, r));
        if (shear_T0(c) == target) return c;
    }
    throw std::invalid_argument("closed_provenance: not a closed-curve shear vector");
}

// ---------------------------------------------------------------------------
// Location

namespace {

FareyPoint swap_point(const FareyPoint& p) { return {p.b, p.a}; }

Cone lift_cell(int family, const FareyCell& cell) {
    Cone cone;
    cone.family = family;
    switch (cell.kind) {
        case FareyCell::Kind::Triangle: {
            cone.kind = Cone::Kind::TriangleImage;
            cone.base = cell.verts;
            cone.dim = 3;
            for (const FareyPoint& v : cell.verts) {
                Vec3 g = family_point(family, point_vec(v));
                cone.provenance.push_back(spiral_provenance(g));
                cone.generators.push_back(std::move(g));
            }
            return cone;
        }
        case FareyCell::Kind::Ray: {
            cone.kind = Cone::Kind::RayImage;
            cone.base = cell.verts;
            cone.dim = 2;
            auto [g1, g2] = ray_image_generators(family, cell.verts[0]);
            cone.provenance.push_back(spiral_provenance(g1));
            cone.provenance.push_back(closed_provenance(g2));
            cone.generators = {std::move(g1), std::move(g2)};
            return cone;
        }
        case FareyCell::Kind::Edge:
        case FareyCell::Kind::Vertex: {
            cone.kind = Cone::Kind::Face;
            cone.parent = Cone::Kind::TriangleImage;
            cone.base = cell.verts;
            cone.dim = static_cast<int>(cell.verts.size());
            for (const FareyPoint& v : cell.verts) {
                Vec3 g = family_point(family, point_vec(v));
                cone.provenance.push_back(spiral_provenance(g));
                cone.generators.push_back(std::move(g));
            }
            return cone;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Cone locate_in_fan(const Vec3& v) {
    Cone cone;
    if (v.is_zero()) {
        cone.kind = Cone::Kind::Face;
        cone.parent = Cone::Kind::PositiveOrthant;
        cone.dim = 0;
        return cone;
    }

    Rat s = v.sum();
    if (s == 0) {
        cone.kind = Cone::Kind::PlaneRay;
        cone.dim = 1;
        Vec3 dir = primitive_direction(v);
        cone.provenance.push_back(closed_provenance(dir));
        cone.generators.push_back(std::move(dir));
        return cone;
    }

    int plane = sgn(s);
    Vec3 w = v * (Rat(1) / (plane > 0 ? s : -s));

    bool in_orthant = true;
    for (int i = 0; i < 3; ++i)
        if ((plane > 0 && w[i] < 0) || (plane < 0 && w[i] > 0)) in_orthant = false;
    if (in_orthant) {
        std::vector<Vec3> gens;
        for (int i = 0; i < 3; ++i) {
            if (w[i] == 0) continue;
            Vec3 e;
            e[i] = plane;
            gens.push_back(e);
        }
        if (gens.size() == 3) {
            cone.kind = plane > 0 ? Cone::Kind::PositiveOrthant : Cone::Kind::NegativeOrthant;
        } else {
            cone.kind = Cone::Kind::Face;
            cone.parent = plane > 0 ? Cone::Kind::PositiveOrthant : Cone::Kind::NegativeOrthant;
        }
        cone.dim = static_cast<int>(gens.size());
        for (const Vec3& g : gens) cone.provenance.push_back(spiral_provenance(g));
        cone.generators = gens;
        return cone;
    }

    // Chart selection by sign pattern; ties land on shared faces, so the
    // first matching family is canonical.
    int family;
    if (w[0] <= 0 && w[1] >= 0)
        family = plane > 0 ? 1 : 4;
    else if (w[0] >= 0 && w[2] <= 0)
        family = plane > 0 ? 2 : 5;
    else if (w[1] <= 0 && w[2] >= 0)
        family = plane > 0 ? 3 : 6;
    else
        throw std::logic_error("locate_in_fan: sign patterns do not cover the point");

    Vec2 pre = family_invert(family, w);
    FareyCell cell;
    if (family <= 3) {
        cell = locate_upper(pre);
    } else {
        cell = locate_upper({pre.y, pre.x});
        for (FareyPoint& p : cell.verts) p = swap_point(p);
    }
    return lift_cell(family, cell);
}

// ---------------------------------------------------------------------------
// Expansion

Expansion basis_expand(const Vec3& v) {
    Expansion ex;
    ex.cone = locate_in_fan(v);
    const auto& gens = ex.cone.generators;

    std::vector<Rat> coeffs;
    switch (gens.size()) {
        case 0: break;
        case 1: {
            const Vec3& g = gens[0];
            int i = g[0] != 0 ? 0 : (g[1] != 0 ? 1 : 2);
            Rat c = v[i] / g[i];
            if (g * c != v) throw std::logic_error("basis_expand: ray solve failed");
            coeffs = {c};
            break;
        }
        case 2: {
            auto sol = solve2(gens[0], gens[1], v);
            if (!sol) throw std::logic_error("basis_expand: planar solve failed");
            coeffs = {sol->first, sol->second};
            break;
        }
        default: {
            auto sol = solve3(gens[0], gens[1], gens[2], v);
            if (!sol) throw std::logic_error("basis_expand: cone generators are degenerate");
            coeffs = {(*sol)[0], (*sol)[1], (*sol)[2]};
            break;
        }
    }
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 0) throw std::logic_error("basis_expand: negative coefficient");
        ex.terms.push_back({BasisElement{gens[i], ex.cone.provenance[i]}, coeffs[i]});
    }
    return ex;
}

// ---------------------------------------------------------------------------
// Enumerations

std::vector<BasisElement> enumerate_universal_coeffs(int max_height, Ring ring) {
    (void)ring;  // the rational rows coincide over Z, Q and R
    if (max_height < 1) throw std::invalid_argument("enumerate_universal_coeffs: max_height >= 1");
    std::vector<BasisElement> out;
    Int h(max_height);

    auto push_rotations = [&out](const Vec3& base) {
        for (const Vec3& row : {base, cycle2(base), cycle3(base)})
            out.push_back({row, spiral_provenance(row)});
    };

    // Spiral rows for positive and infinite slopes.
    for (Int a = 0; a <= h; ++a)
        for (Int b = 1; b <= h; ++b) {
            if (!is_farey_point(a, b) || (a == 0 && b != 1)) continue;
            push_rotations({Rat(1 - b), Rat(a + 1), Rat(b - a - 1)});
        }
    // Spiral rows for finite nonnegative slopes.
    for (Int a = 1; a <= h; ++a)
        for (Int b = 0; b <= h; ++b) {
            if (!is_farey_point(a, b)) continue;
            push_rotations({Rat(-1 - b), Rat(a - 1), Rat(b - a + 1)});
        }
    // Primitive integer vectors of the plane x+y+z=0.
    for (Int x = -h; x <= h; ++x)
        for (Int y = -h; y <= h; ++y) {
            Int z = -x - y;
            if (abs(z) > h || (x == 0 && y == 0)) continue;
            using boost::multiprecision::gcd;
            if (gcd(gcd(abs(x), abs(y)), abs(z)) != 1) continue;
            Vec3 row{Rat(x), Rat(y), Rat(z)};
            out.push_back({row, closed_provenance(row)});
        }
    return out;
}

std::vector<std::pair<Slope, Vec3>> g_vectors(int max_height) {
    if (max_height < 1) throw std::invalid_argument("g_vectors: max_height >= 1");
    std::vector<std::pair<Slope, Vec3>> out;
    Int h(max_height);
    for (Int a = 0; a <= h; ++a)
        for (Int b = 1; b <= h; ++b) {
            if (!is_farey_point(a, b) || (a == 0 && b != 1)) continue;
            Slope s = slope_of({a, b});
            Vec3 base{Rat(1 - b), Rat(a + 1), Rat(b - a - 1)};
            out.push_back({s, base});
            out.push_back({s, cycle2(base)});
            out.push_back({s, cycle3(base)});
        }
    return out;
}

// ---------------------------------------------------------------------------
// Rescaling

bool rescale_is_valid(const RescaleMap& m) {
    for (const Rat& d : m.diag)
        if (d <= 0) return false;
    ExchangeMatrix3 b = ExchangeMatrix3::base();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat entry = Rat(b.at(i, j)) * m.diag[static_cast<size_t>(j)] / m.diag[static_cast<size_t>(i)];
            if (!is_integer(entry)) return false;
        }
    return true;
}

Cone rescale_cone(const RescaleMap& m, Cone c) {
    if (!rescale_is_valid(m))
        throw std::invalid_argument("rescale_cone: map must be positive with integral conjugate");
    for (Vec3& g : c.generators)
        for (int i = 0; i < 3; ++i) g[i] = g[i] * m.diag[static_cast<size_t>(i)];
    return c;
}

std::vector<Cone> rescale_cones(const RescaleMap& m, const std::vector<Cone>& cones) {
    std::vector<Cone> out;
    out.reserve(cones.size());
    for (const Cone& c : cones) out.push_back(rescale_cone(m, c));
    return out;
}

// ---------------------------------------------------------------------------
// Census

namespace {

struct PointLess {
    bool operator()(const FareyPoint& p, const FareyPoint& q) const {
        return p.a < q.a || (p.a == q.a && p.b < q.b);
    }
};

Cone cone_of_triple_side(const std::array<FareyPoint, 3>& arcs, bool ccw_side) {
    Vec3 interior;
    for (const FareyPoint& p : arcs)
        interior = interior + shear_T0(ccw_side ? spiral_ccw(p) : spiral_cw(p));
    Cone cone = locate_in_fan(interior);
    if (cone.dim != 3) throw std::logic_error("census: spiral cone is not full-dimensional");
    return cone;
}

Cone ray_cone_of_slope(const FareyPoint& p, bool ccw_side) {
    Vec3 interior = shear_T0(ccw_side ? spiral_ccw(p) : spiral_cw(p)) + shear_T0(closed_curve(p));
    Cone cone = locate_in_fan(interior);
    if (cone.kind != Cone::Kind::RayImage) throw std::logic_error("census: expected a ray image");
    return cone;
}

FanCensus census_of_triples(const std::vector<std::array<FareyPoint, 3>>& triples) {
    FanCensus census;
    census.triangulations = static_cast<long>(triples.size());

    std::set<FareyPoint, PointLess> slopes;
    for (const auto& t : triples)
        for (const FareyPoint& p : t) slopes.insert(standard(p));
    census.slopes = static_cast<long>(slopes.size());

    for (const auto& t : triples) {
        census.maximal3.push_back(cone_of_triple_side(t, true));
        census.maximal3.push_back(cone_of_triple_side(t, false));
    }
    for (const FareyPoint& p : slopes) {
        census.maximal2.push_back(ray_cone_of_slope(p, true));
        census.maximal2.push_back(ray_cone_of_slope(p, false));
        census.plane_rays.push_back(shear_T0(closed_curve(p)));
    }
    census.cones3 = static_cast<long>(census.maximal3.size());
    census.cones2 = static_cast<long>(census.maximal2.size());
    census.rays_spiral = 2 * census.slopes;
    census.rays_plane = census.slopes;
    return census;
}

}  // namespace

FanCensus census_by_depth(int flip_depth) {
    std::vector<std::array<FareyPoint, 3>> triples;
    std::set<std::array<FareyPoint, 3>> seen;
    for (const Triangulation& t : enumerate_triangulations(flip_depth)) {
        std::array<FareyPoint, 3> key = t.arcs;
        std::sort(key.begin(), key.end(), PointLess{});
        if (seen.insert(key).second) triples.push_back(t.arcs);
    }
    return census_of_triples(triples);
}

FanCensus census_by_height(const Int& max_height) {
    std::vector<FareyPoint> points;
    for (Int a = 0; a <= max_height; ++a)
        for (Int b = -max_height; b <= max_height; ++b)
            if (is_farey_point(a, b) && is_standard({a, b})) points.push_back({a, b});

    std::vector<std::array<FareyPoint, 3>> triples;
    std::set<std::array<FareyPoint, 3>> seen;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j) {
            if (!arcs_compatible(points[i], points[j])) continue;
            const FareyPoint &p = points[i], &q = points[j];
            for (const FareyPoint& cand :
                 {standard({p.a + q.a, p.b + q.b}), standard({p.a - q.a, p.b - q.b})}) {
                if (cand.height() > max_height) continue;
                if (!arcs_compatible(cand, p) || !arcs_compatible(cand, q)) continue;
                std::array<FareyPoint, 3> key{p, q, cand};
                std::sort(key.begin(), key.end(), PointLess{});
                if (seen.insert(key).second) triples.push_back(key);
            }
        }
    return census_of_triples(triples);
}

// ---------------------------------------------------------------------------
// Exact common-face checks

namespace {

Vec3 cross3(const Vec3& u, const Vec3& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Rat dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

struct ConeSystem {
    std::vector<Vec3> equalities;
    std::vector<Vec3> inequalities;  // f(v) >= 0
};

ConeSystem cone_system(const Cone& c) {
    ConeSystem sys;
    const auto& g = c.generators;
    switch (g.size()) {
        case 0:
            sys.equalities = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
            return sys;
        case 1: {
            // span constraint: two independent normals; direction constraint
            Vec3 n1 = cross3(g[0], Vec3{1, 0, 0});
            if (n1.is_zero()) n1 = cross3(g[0], Vec3{0, 1, 0});
            Vec3 n2 = cross3(g[0], n1);
            sys.equalities = {n1, n2};
            sys.inequalities = {g[0]};  // <g0, v> >= 0 selects the half-line
            return sys;
        }
        case 2: {
            Vec3 n = cross3(g[0], g[1]);
            if (n.is_zero()) throw std::logic_error("cone_system: dependent generators");
            sys.equalities = {n};
            for (int i = 0; i < 2; ++i) {
                Vec3 m = cross3(n, g[1 - i]);
                if (dot(m, g[i]) < 0) m = -m;
                sys.inequalities.push_back(m);
            }
            return sys;
        }
        case 3: {
            Rat d = det3(g[0], g[1], g[2]);
            if (d == 0) throw std::logic_error("cone_system: dependent generators");
            for (int i = 0; i < 3; ++i) {
                Vec3 m = cross3(g[(i + 1) % 3], g[(i + 2) % 3]);
                if (dot(m, g[i]) < 0) m = -m;
                sys.inequalities.push_back(m);
            }
            return sys;
        }
        default: throw std::logic_error("cone_system: too many generators");
    }
}

bool satisfies(const ConeSystem& sys, const Vec3& v) {
    for (const Vec3& e : sys.equalities)
        if (dot(e, v) != 0) return false;
    for (const Vec3& f : sys.inequalities)
        if (dot(f, v) < 0) return false;
    return true;
}

}  // namespace

bool cones_meet_in_common_face(const Cone& c1, const Cone& c2) {
    ConeSystem s1 = cone_system(c1), s2 = cone_system(c2);
    ConeSystem all;
    all.equalities = s1.equalities;
    all.equalities.insert(all.equalities.end(), s2.equalities.begin(), s2.equalities.end());
    all.inequalities = s1.inequalities;
    all.inequalities.insert(all.inequalities.end(), s2.inequalities.begin(), s2.inequalities.end());

    // Extreme rays of the intersection: both cones are pointed, so every
    // extreme ray is the null direction of two independent active rows.
    std::vector<Vec3> rows = all.equalities;
    rows.insert(rows.end(), all.inequalities.begin(), all.inequalities.end());
    std::set<std::array<std::string, 3>> ray_keys;
    std::vector<Vec3> rays;
    auto consider = [&](Vec3 d) {
        if (d.is_zero()) return;
        for (const Vec3& cand : {d, -d}) {
            if (!satisfies(all, cand)) continue;
            Vec3 p = primitive_direction(cand);
            std::array<std::string, 3> key{format_rat(p[0]), format_rat(p[1]), format_rat(p[2])};
            if (ray_keys.insert(key).second) rays.push_back(p);
        }
    };
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j) consider(cross3(rows[i], rows[j]));

    // Common generators up to positive scaling.
    std::set<std::array<std::string, 3>> gens1;
    for (const Vec3& g : c1.generators) {
        Vec3 p = primitive_direction(g);
        gens1.insert({format_rat(p[0]), format_rat(p[1]), format_rat(p[2])});
    }
    std::set<std::array<std::string, 3>> common;
    for (const Vec3& g : c2.generators) {
        Vec3 p = primitive_direction(g);
        std::array<std::string, 3> key{format_rat(p[0]), format_rat(p[1]), format_rat(p[2])};
        if (gens1.count(key)) common.insert(key);
    }

    if (rays.size() != common.size()) return false;
    for (const Vec3& r : rays) {
        std::array<std::string, 3> key{format_rat(r[0]), format_rat(r[1]), format_rat(r[2])};
        if (!common.count(key)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Sanity sweep

SanityReport fan_sanity(int sample_size, int max_height, unsigned seed) {
    SanityReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-100, 100);
    std::uniform_int_distribution<long> den(1, 100);

    for (int i = 0; i < sample_size; ++i) {
        Vec3 v{Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        Cone cone = locate_in_fan(v);
        ++report.samples;
        ++report.located;

        // simpliciality: generators are linearly independent
        const auto& g = cone.generators;
        bool simplicial = true;
        if (g.size() == 1) simplicial = !g[0].is_zero();
        if (g.size() == 2) simplicial = !cross3(g[0], g[1]).is_zero();
        if (g.size() == 3) simplicial = det3(g[0], g[1], g[2]) != 0;
        if (!simplicial) ++report.simplicial_failures;

        // exact membership in the relative interior of the located cone
        try {
            Expansion ex = basis_expand(v);
            bool strict = true;
            Vec3 rebuilt;
            for (const auto& [elem, c] : ex.terms) {
                if (c <= 0) strict = false;
                rebuilt = rebuilt + elem.vector * c;
            }
            if (!(rebuilt == v) || (!v.is_zero() && !strict)) ++report.membership_failures;
        } catch (const std::exception&) {
            ++report.membership_failures;
        }
    }

    FanCensus census = census_by_height(max_height);
    std::vector<const Cone*> maximal;
    for (const Cone& c : census.maximal3) maximal.push_back(&c);
    for (const Cone& c : census.maximal2) maximal.push_back(&c);
    if (maximal.size() >= 2) {
        std::uniform_int_distribution<size_t> pick(0, maximal.size() - 1);
        for (int i = 0; i < 500; ++i) {
            size_t a = pick(rng), b = pick(rng);
            if (a == b) continue;
            ++report.pairs_checked;
            if (!cones_meet_in_common_face(*maximal[a], *maximal[b])) ++report.pair_failures;
        }
    }

    for (const Cone& c : census.maximal3) {
        ++report.unimodular_checked;
        Rat d = det3(c.generators[0], c.generators[1], c.generators[2]);
        if (!(d == 1 || d == -1)) ++report.unimodular_failures;
    }
    return report;
}

std::string format_cone(const Cone& c) {
    auto kind_name = [](Cone::Kind k) {
        switch (k) {
            case Cone::Kind::PositiveOrthant: return std::string("PositiveOrthant");
            case Cone::Kind::NegativeOrthant: return std::string("NegativeOrthant");
            case Cone::Kind::TriangleImage: return std::string("TriangleImage");
            case Cone::Kind::RayImage: return std::string("RayImage");
            case Cone::Kind::PlaneRay: return std::string("PlaneRay");
            case Cone::Kind::Face: return std::string("Face");
        }
        return std::string("?");
    };
    std::string s = kind_name(c.kind);
    if (c.kind == Cone::Kind::Face) s += "(of " + kind_name(c.parent) + ")";
    if (c.family) s += " family " + std::to_string(c.family);
    if (!c.base.empty()) {
        s += " base";
        for (const FareyPoint& p : c.base) s += " [" + p.a.str() + "," + p.b.str() + "]";
    }
    s += " dim " + std::to_string(c.dim);
    return s;
}

}  // namespace ptorus

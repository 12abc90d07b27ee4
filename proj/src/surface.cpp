#include "ptorus/surface.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ptorus {

bool Curve::operator==(const Curve& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Line) return line_slope == o.line_slope;
    return point == o.point;
}

Curve closed_curve(FareyPoint p) { return {Curve::Kind::Closed, standard(std::move(p)), {}}; }
Curve spiral_cw(FareyPoint p) { return {Curve::Kind::CW, standard(std::move(p)), {}}; }
Curve spiral_ccw(FareyPoint p) { return {Curve::Kind::CCW, standard(std::move(p)), {}}; }

Curve projected_line(Slope s) {
    Curve c;
    c.kind = Curve::Kind::Line;
    c.line_slope = std::move(s);
    return c;
}

Curve as_closed_if_line(const Curve& c) {
    if (c.kind != Curve::Kind::Line) return c;
    return closed_curve(standard_form(c.line_slope));
}

std::string format_curve(const Curve& c) {
    switch (c.kind) {
        case Curve::Kind::Closed: return "cl:" + c.point.a.str() + "/" + c.point.b.str();
        case Curve::Kind::CW: return "cw:" + c.point.a.str() + "/" + c.point.b.str();
        case Curve::Kind::CCW: return "ccw:" + c.point.a.str() + "/" + c.point.b.str();
        case Curve::Kind::Line: return "line:" + format_slope(c.line_slope);
    }
    return {};
}

Curve parse_curve(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("malformed curve '" + text + "'"); };
    size_t colon = text.find(':');
    if (colon == std::string::npos) throw bad();
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    if (kind == "line") return projected_line(parse_slope(rest));
    FareyPoint p{0, 1};
    if (rest == "inf") {
        p = {0, 1};
    } else {
        size_t slash = rest.find('/');
        if (slash == std::string::npos) throw bad();
        Rat a = parse_rat(rest.substr(0, slash));
        Rat b = parse_rat(rest.substr(slash + 1));
        if (!is_integer(a) || !is_integer(b)) throw bad();
        if (!is_farey_point(rat_num(a), rat_num(b))) throw bad();
        p = farey_point(rat_num(a), rat_num(b));
    }
    if (kind == "cl") return closed_curve(p);
    if (kind == "cw") return spiral_cw(p);
    if (kind == "ccw") return spiral_ccw(p);
    throw bad();
}

bool arcs_compatible(const FareyPoint& p, const FareyPoint& q) {
    FareyPoint u = standard(p), v = standard(q);
    if (u == v) throw std::invalid_argument("arcs_compatible: arcs must be distinct");
    if (slope_less(v, u)) std::swap(u, v);
    return u.a * v.b - u.b * v.a == 1;
}

bool curves_compatible(const Curve& a, const Curve& b) {
    Curve c1 = as_closed_if_line(a), c2 = as_closed_if_line(b);
    if (c1 == c2) return true;
    using K = Curve::Kind;
    if (c1.kind == K::Closed || c2.kind == K::Closed) {
        // A closed curve is compatible exactly with the spirals of its slope.
        const Curve& cl = c1.kind == K::Closed ? c1 : c2;
        const Curve& other = c1.kind == K::Closed ? c2 : c1;
        return other.kind != K::Closed && other.point == cl.point;
    }
    if (c1.kind != c2.kind) return false;  // cw vs ccw never match
    return arcs_compatible(c1.point, c2.point);
}

// ---------------------------------------------------------------------------
// Shear coordinates

namespace {

// CCW spiral / closed curve shear at T0 for any standard point, by the
// region formulas and the two cyclic reductions.
Vec3 shear_base(const FareyPoint& p, bool closed) {
    const Int &a = p.a, &b = p.b;
    if (a >= 0 && b > 0) {
        if (closed) return {Rat(-b), Rat(a), Rat(b - a)};
        return {Rat(1 - b), Rat(a + 1), Rat(b - a - 1)};
    }
    if (b <= 0 && b > -a)  // maps into {a>=0, b>0} via [a,b] -> [-b, a+b]
        return cycle2(shear_base(standard({-b, a + b}), closed));
    // 0 < a <= -b, via [a,b] -> [-a-b, a]
    return cycle3(shear_base(standard({-a - b, a}), closed));
}

}  // namespace

Vec3 shear_T0(const Curve& c) {
    Curve cc = as_closed_if_line(c);
    switch (cc.kind) {
        case Curve::Kind::Closed: return shear_base(cc.point, true);
        case Curve::Kind::CCW: return shear_base(cc.point, false);
        case Curve::Kind::CW:
            // Reflection through the line a=b: swap the indexing point,
            // swap the first two coordinates, negate.
            return -swap12(shear_base(standard({cc.point.b, cc.point.a}), false));
        default: throw std::logic_error("unreachable");
    }
}

std::string shear_word(const Curve& c) {
    Curve cc = as_closed_if_line(c);
    const FareyPoint& p = cc.point;
    if (cc.kind == Curve::Kind::CW || !(p.a >= 0 && p.b > 0))
        throw std::invalid_argument("shear_word: need a CCW or closed curve with a>=0, b>0");
    const Int &a = p.a, &b = p.b;

    // Crossing events of the lifted segment with vertical (r) and
    // horizontal (t) lattice lines, ordered by segment parameter.
    std::vector<std::pair<Rat, char>> events;
    std::string word;
    if (cc.kind == Curve::Kind::CCW) {
        // Open segment (0,0) -> (a,b); the spiral contributes a leading
        // "tr" and a trailing "r" (no trailing letter for the vertical arc).
        for (Int i = 1; i < a; ++i) events.push_back({Rat(i, a), 'r'});
        for (Int j = 1; j < b; ++j) events.push_back({Rat(j, b), 't'});
        std::sort(events.begin(), events.end());
        word = "tr";
        for (auto& [s, ch] : events) word += ch;
        if (a > 0) word += 'r';
    } else {
        // Segment (x0,0) -> (x0+a,b) with x0 = 1/(2(a+b)): exact, clears
        // every lattice point, and reproduces the reference words.
        Rat x0(1, 2 * (a + b));
        for (Int i = 1; i <= a; ++i) events.push_back({(Rat(i) - x0) / a, 'r'});
        for (Int j = 1; j < b; ++j) events.push_back({Rat(j, b), 't'});
        std::sort(events.begin(), events.end());
        word = "t";
        for (auto& [s, ch] : events) word += ch;
        word += 't';
    }
    return word;
}

Vec3 shear_word_oracle(const Curve& c) {
    std::string word = shear_word(c);
    Vec3 total;
    for (size_t i = 0; i + 1 < word.size(); ++i) {
        char x = word[i], y = word[i + 1];
        if (x == 'r' && y == 'r') total = total + Vec3{0, 1, -1};
        else if (x == 'r' && y == 't') total = total + Vec3{-1, 0, 0};
        else if (x == 't' && y == 'r') total = total + Vec3{0, 1, 0};
        else total = total + Vec3{-1, 0, 1};
    }
    return total;
}

// ---------------------------------------------------------------------------
// Triangulations

Triangulation base_triangulation() {
    Triangulation t;
    t.arcs = {FareyPoint{1, 0}, FareyPoint{0, 1}, FareyPoint{1, -1}};
    return t;
}

Triangulation flip(const Triangulation& t, int pos) {
    if (pos < 1 || pos > 3) throw std::invalid_argument("flip: position must be in {1,2,3}");
    const FareyPoint& p = t.arcs[pos % 3];
    const FareyPoint& q = t.arcs[(pos + 1) % 3];
    const FareyPoint& cur = t.arcs[pos - 1];

    FareyPoint sum = standard({p.a + q.a, p.b + q.b});
    FareyPoint diff = standard({p.a - q.a, p.b - q.b});
    FareyPoint next;
    if (cur == sum)
        next = diff;
    else if (cur == diff)
        next = sum;
    else
        throw std::logic_error("flip: arc is not a diagonal of the other two");
    if (!arcs_compatible(next, p) || !arcs_compatible(next, q))
        throw std::logic_error("flip: replacement arc is not compatible");

    Triangulation out = t;
    out.arcs[pos - 1] = next;
    out.parity ^= 1;
    out.path.push_back(pos);
    return out;
}

ExchangeMatrix3 signed_adjacency(const Triangulation& t) {
    ExchangeMatrix3 b = ExchangeMatrix3::base();
    return t.parity == 0 ? b : -b;
}

Vec3 shear_wrt(const Triangulation& t, const Curve& c) {
    Vec3 v = shear_T0(c);
    ExchangeMatrix3 m = ExchangeMatrix3::base();
    for (int k : t.path) {
        v = mutation_map_step(m, k, v);
        m = m.mutated(k);
    }
    return v;
}

std::vector<Triangulation> enumerate_triangulations(int max_depth) {
    std::vector<Triangulation> out{base_triangulation()};
    size_t level_begin = 0;
    for (int d = 0; d < max_depth; ++d) {
        size_t level_end = out.size();
        for (size_t i = level_begin; i < level_end; ++i) {
            for (int k = 1; k <= 3; ++k) {
                if (!out[i].path.empty() && out[i].path.back() == k) continue;
                out.push_back(flip(out[i], k));
            }
        }
        level_begin = level_end;
    }
    return out;
}

namespace {

Int arc_complexity(const FareyPoint& p) { return p.a + abs(p.b); }  // standard points

std::array<FareyPoint, 3> sorted_arcs(std::array<FareyPoint, 3> a) {
    std::sort(a.begin(), a.end(), [](const FareyPoint& p, const FareyPoint& q) {
        return p.a < q.a || (p.a == q.a && p.b < q.b);
    });
    return a;
}

// The new arc created by flipping position i of an arc triple.
FareyPoint flipped_arc(const std::array<FareyPoint, 3>& arcs, int i) {
    const FareyPoint& p = arcs[static_cast<size_t>((i + 1) % 3)];
    const FareyPoint& q = arcs[static_cast<size_t>((i + 2) % 3)];
    FareyPoint sum = standard({p.a + q.a, p.b + q.b});
    FareyPoint diff = standard({p.a - q.a, p.b - q.b});
    return arcs[static_cast<size_t>(i)] == sum ? diff : sum;
}

}  // namespace

Triangulation triangulation_from_arcs(const std::array<FareyPoint, 3>& arcs_in) {
    std::array<FareyPoint, 3> cur;
    for (size_t i = 0; i < 3; ++i) cur[i] = standard(arcs_in[i]);
    for (int i = 0; i < 3; ++i)
        if (!arcs_compatible(cur[static_cast<size_t>(i)], cur[static_cast<size_t>((i + 1) % 3)]))
            throw std::invalid_argument("triangulation_from_arcs: arcs are not pairwise compatible");

    const std::array<FareyPoint, 3> base = sorted_arcs(base_triangulation().arcs);

    // Walk down the flip tree by greedily shrinking total arc complexity;
    // record the removed arcs so the path replays forward from the base.
    std::vector<FareyPoint> created;
    int guard = 0;
    while (sorted_arcs(cur) != base) {
        if (++guard > 100000) throw std::logic_error("triangulation_from_arcs: descent did not reach the base");
        Int cur_total = arc_complexity(cur[0]) + arc_complexity(cur[1]) + arc_complexity(cur[2]);
        int best = -1;
        bool best_is_base = false;
        Int best_total = 0;
        for (int i = 0; i < 3; ++i) {
            std::array<FareyPoint, 3> cand = cur;
            cand[static_cast<size_t>(i)] = flipped_arc(cur, i);
            Int total = arc_complexity(cand[0]) + arc_complexity(cand[1]) + arc_complexity(cand[2]);
            bool is_base = sorted_arcs(cand) == base;
            if (is_base || total < cur_total) {
                if (best == -1 || is_base || (!best_is_base && total < best_total)) {
                    best = i;
                    best_is_base = is_base;
                    best_total = total;
                }
                if (is_base) break;
            }
        }
        if (best == -1) throw std::logic_error("triangulation_from_arcs: no reducing flip");
        created.push_back(cur[static_cast<size_t>(best)]);
        cur[static_cast<size_t>(best)] = flipped_arc(cur, best);
    }

    Triangulation t = base_triangulation();
    for (auto it = created.rbegin(); it != created.rend(); ++it) {
        int pos = -1;
        for (int i = 0; i < 3; ++i) {
            std::array<FareyPoint, 3> cand = t.arcs;
            cand[static_cast<size_t>(i)] = flipped_arc(t.arcs, i);
            if (cand[static_cast<size_t>(i)] == *it) pos = i;
        }
        if (pos == -1) throw std::logic_error("triangulation_from_arcs: replay failed");
        t = flip(t, pos + 1);
    }
    return t;
}

std::array<FareyPoint, 3> farey_triangle_representatives(const std::array<FareyPoint, 3>& arcs) {
    for (int s2 : {1, -1}) {
        for (int s3 : {1, -1}) {
            std::array<FareyPoint, 3> reps = {standard(arcs[0]),
                                              FareyPoint{s2 * standard(arcs[1]).a, s2 * standard(arcs[1]).b},
                                              FareyPoint{s3 * standard(arcs[2]).a, s3 * standard(arcs[2]).b}};
            if (is_farey_triangle(reps[0], reps[1], reps[2])) return reps;
        }
    }
    throw std::logic_error("farey_triangle_representatives: no sign-consistent choice");
}

// ---------------------------------------------------------------------------
// Tangles

Vec3 tangle_shear(const Tangle& tangle, const Triangulation& t) {
    Vec3 total;
    for (const auto& [curve, w] : tangle.terms) total = total + shear_wrt(t, curve) * w;
    return total;
}

Tangle parse_tangle(const std::string& text) {
    Tangle tangle;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // accept "<curve>=<weight>" or "<curve> <weight>"
        std::replace(line.begin(), line.end(), '=', ' ');
        std::istringstream ls(line);
        std::string curve_text, weight_text;
        if (!(ls >> curve_text)) continue;
        if (!(ls >> weight_text))
            throw std::invalid_argument("malformed tangle line '" + line + "'");
        tangle.terms.push_back({parse_curve(curve_text), parse_rat(weight_text)});
    }
    return tangle;
}

FalsifyResult falsify_null_tangle(const Tangle& tangle, int max_depth) {
    if (max_depth < 0) throw std::invalid_argument("falsify_null_tangle: max_depth must be >= 0");

    struct Node {
        Triangulation t;
        ExchangeMatrix3 m;
        std::vector<Vec3> shears;
    };
    Node root;
    root.t = base_triangulation();
    root.m = ExchangeMatrix3::base();
    for (const auto& [curve, w] : tangle.terms) root.shears.push_back(shear_T0(curve));

    FalsifyResult res;
    std::deque<Node> queue{std::move(root)};
    while (!queue.empty()) {
        Node n = std::move(queue.front());
        queue.pop_front();
        ++res.explored;

        Vec3 total;
        for (size_t i = 0; i < n.shears.size(); ++i) total = total + n.shears[i] * tangle.terms[i].second;
        if (!total.is_zero()) {
            res.found = true;
            res.witness = n.t;
            res.shear = total;
            res.depth = static_cast<int>(n.t.path.size());
            return res;
        }
        if (static_cast<int>(n.t.path.size()) == max_depth) continue;
        for (int k = 1; k <= 3; ++k) {
            if (!n.t.path.empty() && n.t.path.back() == k) continue;
            Node child;
            child.t = flip(n.t, k);
            child.m = n.m.mutated(k);
            child.shears.reserve(n.shears.size());
            for (const Vec3& v : n.shears) child.shears.push_back(mutation_map_step(n.m, k, v));
            queue.push_back(std::move(child));
        }
    }
    res.depth = max_depth;
    return res;
}

// ---------------------------------------------------------------------------
// Projected lines

Vec3 normalized_direction(const Slope& sigma) {
    if (sigma.infinite) return {-1, 0, 1};
    const Rat& q = sigma.value;
    if (q > 0) return {-q, 1, q - 1};
    if (q > -1) {
        // [1,q] -> [-q, q+1]: slope (q+1)/(-q), infinite at q=0
        Slope next = q == 0 ? Slope::inf() : Slope::of((q + 1) / -q);
        return cycle2(normalized_direction(next));
    }
    // q <= -1: [1,q] -> [-1-q, 1]: slope 1/(-1-q), infinite at q=-1
    Slope next = q == -1 ? Slope::inf() : Slope::of(Rat(-1) / (1 + q));
    return cycle3(normalized_direction(next));
}

Vec3 shear_wrt_direction(const Triangulation& t, const Slope& sigma) {
    Vec3 v = normalized_direction(sigma);
    ExchangeMatrix3 m = ExchangeMatrix3::base();
    for (int k : t.path) {
        v = mutation_map_step(m, k, v);
        m = m.mutated(k);
    }
    return v;
}

bool line_shear_positive(const Triangulation& t, const Slope& sigma) {
    std::array<FareyPoint, 3> a = t.arcs;
    std::sort(a.begin(), a.end(), [](const FareyPoint& p, const FareyPoint& q) { return slope_less(p, q); });
    FareyPoint p0 = standard(a[0]), p1 = standard(a[1]), p2 = standard(a[2]);
    // two smallest slopes are finite, so the mediant is a genuine rational
    Rat mediant(p0.b + p1.b, p0.a + p1.a);
    return slope_less(Slope::of(mediant), sigma) && slope_less(sigma, slope_of(p2));
}

// ---------------------------------------------------------------------------
// Separating triangulations

namespace {

Vec2 to_vec(const FareyPoint& p) { return {Rat(p.a), Rat(p.b)}; }

// Third vertices completing the Farey edge {u,v}; exactly one lies on each
// side of the edge's line.
std::vector<FareyPoint> edge_completions(const FareyPoint& u, const FareyPoint& v) {
    std::vector<FareyPoint> out;
    for (auto [sa, sb] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
        FareyPoint cand{sa * u.a + sb * v.a, sa * u.b + sb * v.b};
        if (!is_farey_point(cand.a, cand.b)) continue;
        if (are_farey_neighbors(cand, u) && are_farey_neighbors(cand, v)) out.push_back(cand);
    }
    return out;
}

int orient_sign(const FareyPoint& u, const FareyPoint& v, const Vec2& w) {
    return sgn(cross(to_vec(v) - to_vec(u), w - to_vec(u)));
}

}  // namespace

Separation find_separating_triangulation(const Rat& x, const Rat& y) {
    if (!(x < y)) throw std::invalid_argument("find_separating_triangulation: need x < y");
    auto degenerate = [] {
        return std::domain_error("find_separating_triangulation: the ray passes through a Farey point");
    };

    // Walk in the swapped picture: the ray s[1,y] corresponds to the upper
    // half plane ray s[y,1], whose cells swap back at the end.
    const Vec2 dir{y, 1};
    Rat s(3, 2);
    Vec2 start{s * y, s};

    FareyCell cell = locate_upper(start);
    std::array<FareyPoint, 3> tri;
    if (cell.kind == FareyCell::Kind::Vertex || cell.kind == FareyCell::Kind::Ray) throw degenerate();
    if (cell.kind == FareyCell::Kind::Edge) {
        const FareyPoint &u = cell.verts[0], &v = cell.verts[1];
        int side = sgn(cross(to_vec(v) - to_vec(u), dir));
        if (side == 0) throw degenerate();
        FareyPoint w{0, 0};
        bool found = false;
        for (const FareyPoint& cand : edge_completions(u, v)) {
            if (orient_sign(u, v, to_vec(cand)) == side) {
                w = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("find_separating_triangulation: open edge");
        tri = {u, v, w};
    } else {
        tri = {cell.verts[0], cell.verts[1], cell.verts[2]};
    }

    for (int step = 0; step < 100000; ++step) {
        // Exit the current triangle: smallest crossing parameter s' > s.
        Rat best_s;
        int best_edge = -1;
        for (int e = 0; e < 3; ++e) {
            const FareyPoint& u = tri[static_cast<size_t>(e)];
            const FareyPoint& v = tri[static_cast<size_t>((e + 1) % 3)];
            Vec2 uu = to_vec(u), d = to_vec(v) - uu;
            Rat denom = y * d.y - d.x;
            if (denom == 0) continue;  // ray parallel to this edge
            Rat tpar = (uu.x - y * uu.y) / denom;
            if (tpar < 0 || tpar > 1) continue;
            Rat s_cross = uu.y + tpar * d.y;
            if (s_cross <= s) continue;
            if (tpar == 0 || tpar == 1) throw degenerate();
            if (best_edge == -1 || s_cross < best_s) {
                best_s = s_cross;
                best_edge = e;
            }
        }
        if (best_edge == -1) throw std::logic_error("find_separating_triangulation: ray failed to exit");

        // Accept when the ray leaves through the edge joining the two
        // largest-slope vertices (the next triangle keeps them) and the
        // inequality chain holds.
        const FareyPoint u = tri[static_cast<size_t>(best_edge)];
        const FareyPoint v = tri[static_cast<size_t>((best_edge + 1) % 3)];
        const FareyPoint old = tri[static_cast<size_t>((best_edge + 2) % 3)];
        Slope third = slope_of(standard({old.b, old.a}));
        bool exit_keeps_top = slope_less(third, slope_of(standard({u.b, u.a}))) &&
                              slope_less(third, slope_of(standard({v.b, v.a})));
        if (exit_keeps_top) {
            std::array<FareyPoint, 3> arcs;
            for (size_t i = 0; i < 3; ++i) arcs[i] = standard({tri[i].b, tri[i].a});
            std::sort(arcs.begin(), arcs.end(),
                      [](const FareyPoint& p, const FareyPoint& q) { return slope_less(p, q); });
            Rat mediant(arcs[0].b + arcs[1].b, arcs[0].a + arcs[1].a);
            Slope top = slope_of(arcs[2]);
            if (x < mediant && mediant < y && slope_less(Slope::of(y), top)) {
                Separation sep;
                for (size_t i = 0; i < 3; ++i) sep.triangle[i] = FareyPoint{tri[i].b, tri[i].a};
                if (!is_farey_triangle(sep.triangle[0], sep.triangle[1], sep.triangle[2]))
                    throw std::logic_error("find_separating_triangulation: bad triangle");
                sep.tri = triangulation_from_arcs(arcs);
                return sep;
            }
        }

        int old_side = orient_sign(u, v, to_vec(old));
        FareyPoint next{0, 0};
        bool found = false;
        for (const FareyPoint& cand : edge_completions(u, v)) {
            if (orient_sign(u, v, to_vec(cand)) == -old_side) {
                next = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("find_separating_triangulation: no neighbor triangle");
        tri = {u, v, next};
        s = best_s;
    }
    throw std::logic_error("find_separating_triangulation: walk did not terminate");
}

}  // namespace ptorus

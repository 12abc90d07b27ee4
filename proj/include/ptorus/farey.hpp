#pragma once

#include "ptorus/rational.hpp"

#include <vector>

namespace ptorus {

// ---------------------------------------------------------------------------
// Farey points and slopes

// Primitive integer vector [a,b]: the closest nonzero integer point to the
// origin on its line. No sign convention; see standard().
struct FareyPoint {
    Int a, b;

    bool operator==(const FareyPoint&) const = default;
    bool operator<(const FareyPoint& o) const { return a < o.a || (a == o.a && b < o.b); }

    FareyPoint antipode() const { return {-a, -b}; }
    Int height() const { return std::max(abs(a), abs(b)); }
};

// Validates gcd(a,b)=1 (absolute-value gcd, not both zero).
FareyPoint farey_point(Int a, Int b);

bool is_farey_point(const Int& a, const Int& b);

// Standard representative: a >= 0, and b = 1 when a = 0.
FareyPoint standard(FareyPoint p);
bool is_standard(const FareyPoint& p);

// A rational or infinite slope. Standard Farey points [a,b] are in
// bijection with slopes via b/a (with [0,1] <-> infinity).
struct Slope {
    bool infinite = false;
    Rat value;  // meaningful only when finite

    static Slope inf() { return {true, Rat(0)}; }
    static Slope of(Rat q) { return {false, std::move(q)}; }

    bool operator==(const Slope& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

// The infinite slope compares greater than every finite slope.
bool slope_less(const Slope& s, const Slope& t);

Slope slope_of(const FareyPoint& p);
bool slope_less(const FareyPoint& p, const FareyPoint& q);  // compares b/a on standard forms

// The unique standard Farey point with the given slope.
FareyPoint standard_form(const Slope& s);

std::string format_slope(const Slope& s);
Slope parse_slope(const std::string& text);  // "p/q", "p", or "inf"

// ---------------------------------------------------------------------------
// Neighbors, triangles, rays

// Farey neighbors: first coordinates weakly agree in sign, second
// coordinates weakly agree in sign, and ad-bc = +-1.
bool are_farey_neighbors(const FareyPoint& p, const FareyPoint& q);

// For a standard point p, a Farey neighbor indexed by n:
//   a=0: [1,n] (n>=0);  a=1: [n, bn-1] (n>=1);
//   a>1: [c0+an, (b(c0+an)-1)/a] with 1 <= c0 < a, b*c0 = 1 (mod a).
FareyPoint farey_neighbor_family(const FareyPoint& p, const Int& n);

bool is_farey_triangle(const FareyPoint& p, const FareyPoint& q, const FareyPoint& r);

// ---------------------------------------------------------------------------
// Cells of the Farey decomposition
//
// The upper half plane {y >= 1} is tiled by Farey triangles (convex hulls
// of pairwise-neighbor triples) and Farey rays {c[a,b] : c >= 1}, together
// with their faces. A point lies in the interior of a triangle, in the
// interior of a ray (which no triangle covers), on a shared edge, or on a
// Farey point itself.

struct FareyCell {
    enum class Kind { Vertex, Edge, Ray, Triangle };
    Kind kind;
    std::vector<FareyPoint> verts;  // 1 / 2 / 1 (ray base) / 3 points
};

// Minimal cell of the decomposition containing pt; requires pt.y >= 1.
FareyCell locate_upper(const Vec2& pt);

// Exact containment of pt in a cell (interiors for minimality checks are
// separate; this is closed-cell membership).
bool cell_contains(const FareyCell& cell, const Vec2& pt);
// True when pt lies in the relative interior of the cell.
bool cell_interior_contains(const FareyCell& cell, const Vec2& pt);

std::string format_cell(const FareyCell& cell);

}  // namespace ptorus

#pragma once

#include "ptorus/farey.hpp"
#include "ptorus/mutation.hpp"

#include <string>
#include <vector>

namespace ptorus {

// ---------------------------------------------------------------------------
// Allowable curves
//
// Arcs in the once-punctured torus are indexed by standard Farey points
// (slopes); the allowable curves are the closed curve of a slope and the
// two spiraling curves obtained from the arc of that slope, plus projected
// lines of arbitrary slope (represented here by exact rational surrogates).

struct Curve {
    enum class Kind { Closed, CW, CCW, Line };
    Kind kind = Kind::Closed;
    FareyPoint point{1, 0};  // standard; used by Closed/CW/CCW
    Slope line_slope;        // used by Line

    bool operator==(const Curve& o) const;
};

Curve closed_curve(FareyPoint p);
Curve spiral_cw(FareyPoint p);
Curve spiral_ccw(FareyPoint p);
Curve projected_line(Slope s);

// Rational-slope lines are isotopic to closed curves.
Curve as_closed_if_line(const Curve& c);

std::string format_curve(const Curve& c);
Curve parse_curve(const std::string& text);  // cl:a/b, cw:a/b, ccw:a/b, cl:inf, line:p/q, line:inf

// Two distinct arcs with slopes b/a < d/c are compatible iff ad-bc = 1.
bool arcs_compatible(const FareyPoint& p, const FareyPoint& q);

bool curves_compatible(const Curve& c1, const Curve& c2);

// ---------------------------------------------------------------------------
// Shear coordinates with respect to the base triangulation

// Closed formulas: on {a>=0, b>0} a counterclockwise spiral contributes
// [1-b, a+1, b-a-1] and a closed curve [-b, a, b-a]; the remaining standard
// points reduce by cyclic symmetry, and clockwise spirals are obtained by
// swapping a,b, swapping the first two entries and negating.
Vec3 shear_T0(const Curve& c);

// Independent crossing-word construction for CCW/Closed curves with
// standard point in {a>=0, b>0}: the letter word itself and the vector
// accumulated from consecutive-pair contributions.
std::string shear_word(const Curve& c);
Vec3 shear_word_oracle(const Curve& c);

// ---------------------------------------------------------------------------
// Triangulations and flips

// Ordered triple of pairwise-compatible arcs plus the flip path that
// produced it from the base triangulation (slopes 0, infinity, -1).
struct Triangulation {
    std::array<FareyPoint, 3> arcs;
    int parity = 0;
    std::vector<int> path;  // 1-based flip positions

    bool same_arcs(const Triangulation& o) const { return arcs == o.arcs; }
};

Triangulation base_triangulation();

// Replaces the arc at position pos (1..3) by the other diagonal of the
// surrounding quadrilateral; toggles parity and extends the path.
Triangulation flip(const Triangulation& t, int pos);

// B when parity is even, -B when odd.
ExchangeMatrix3 signed_adjacency(const Triangulation& t);

// Transports shear_T0 along the triangulation's flip path, one mutation
// map step per flip at the then-current signed adjacency matrix.
Vec3 shear_wrt(const Triangulation& t, const Curve& c);

// All triangulations within the given flip depth of the base (the flip
// graph is a tree, so non-backtracking paths enumerate each once).
std::vector<Triangulation> enumerate_triangulations(int max_depth);

// Reconstructs a flip path to the given pairwise-compatible arc triple.
// The returned triangulation carries the discovered path; its arc order is
// the one induced by that path.
Triangulation triangulation_from_arcs(const std::array<FareyPoint, 3>& arcs);

// Sign-consistent vertex representatives forming a genuine Farey triangle
// for a pairwise-compatible arc triple.
std::array<FareyPoint, 3> farey_triangle_representatives(const std::array<FareyPoint, 3>& arcs);

// ---------------------------------------------------------------------------
// Tangles

// Finitely many curves with exact weights; no compatibility is required.
struct Tangle {
    std::vector<std::pair<Curve, Rat>> terms;
};

Vec3 tangle_shear(const Tangle& tangle, const Triangulation& t);

Tangle parse_tangle(const std::string& text);  // one "<curve>=<weight>" per line, '#' comments

struct FalsifyResult {
    bool found = false;
    Triangulation witness;
    Vec3 shear;
    int depth = 0;
    long explored = 0;
};

// Breadth-first search over flip paths for a triangulation with nonzero
// tangle shear. Exhaustion is inconclusive: no depth bound is known in
// general, the search only certifies the tangle is not obviously null.
FalsifyResult falsify_null_tangle(const Tangle& tangle, int max_depth);

// ---------------------------------------------------------------------------
// Projected lines of arbitrary slope

// Direction of the normalized shear coordinates of the projected line of
// slope sigma, unnormalized: [-sigma, 1, sigma-1] for positive slopes,
// [-1,0,1] for the infinite slope, cyclic reductions otherwise. The result
// is parallel to shear_T0 of the closed curve when sigma is rational.
Vec3 normalized_direction(const Slope& sigma);

// Direction of the line's normalized shear coordinates with respect to t:
// the base direction pushed along the flip path. Mutation maps are
// positively homogeneous, so the signs are those of the normalized values.
Vec3 shear_wrt_direction(const Triangulation& t, const Slope& sigma);

// With the triangulation's arcs sorted by slope as b/a < d/c < f/e, the
// projected line of slope sigma has positive normalized shear coordinate
// at the largest-slope arc iff (b+d)/(a+c) < sigma < f/e.
bool line_shear_positive(const Triangulation& t, const Slope& sigma);

struct Separation {
    std::array<FareyPoint, 3> triangle;  // pairwise Farey neighbors
    Triangulation tri;
};

// Walks the Farey triangles crossed by s*[1,y] for increasing s until one
// satisfies x < (b+d)/(a+c) < y < f/e (slopes sorted increasingly). Fails
// with std::domain_error when the walk hits a Farey point, which happens
// for rational y whose triangle is never reached.
Separation find_separating_triangulation(const Rat& x, const Rat& y);

}  // namespace ptorus

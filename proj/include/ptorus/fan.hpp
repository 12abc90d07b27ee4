#pragma once

#include "ptorus/surface.hpp"

#include <vector>

namespace ptorus {

// ---------------------------------------------------------------------------
// Cones of the mutation fan
//
// The fan consists of the two orthants, six families of images of Farey
// triangles and rays under affine charts onto the planes x+y+z = +-1, all
// rays inside the plane x+y+z = 0, and the faces of all of these. Families
// 1..3 carry counterclockwise-spiral data in the plane x+y+z = 1, families
// 4..6 are their clockwise mirrors in x+y+z = -1.

struct Cone {
    enum class Kind { PositiveOrthant, NegativeOrthant, TriangleImage, RayImage, PlaneRay, Face };

    Kind kind = Kind::Face;
    Kind parent = Kind::PositiveOrthant;   // meaningful for Face
    int family = 0;                        // 1..6 for chart images and their faces
    std::vector<FareyPoint> base;          // chart-plane data: triangle vertices or ray vertex
    std::vector<Vec3> generators;          // exact, linearly independent
    std::vector<Curve> provenance;         // curve whose shear spans each generator
    int dim = 0;
};

std::string format_cone(const Cone& c);

// The six affine charts: family_point is the chart map, family_limit its
// linear part (the image direction of the recession ray of a Farey ray),
// family_invert the inverse on the target plane x+y+z = +-1.
Vec3 family_point(int family, const Vec2& p);
Vec3 family_limit(int family, const Vec2& p);
Vec2 family_invert(int family, const Vec3& v);

// Generators of the image of a Farey ray: the chart image of the vertex
// and the limit direction. Vertices must lie in the family's admissible
// region ({a>=0, b>=1} for families 1..3, {a>=1, b>=0} for 4..6).
std::pair<Vec3, Vec3> ray_image_generators(int family, const FareyPoint& vertex);

// Minimal cone of the fan containing v, with canonical resolution at
// chart-pattern boundaries.
Cone locate_in_fan(const Vec3& v);

// ---------------------------------------------------------------------------
// Universal coefficients

struct BasisElement {
    Vec3 vector;
    Curve provenance;
};

struct Expansion {
    Cone cone;
    std::vector<std::pair<BasisElement, Rat>> terms;  // at most 3, coefficients >= 0
};

// Exact expansion of v in the generators of its minimal cone. Integer
// input yields integer coefficients.
Expansion basis_expand(const Vec3& v);

enum class Ring { Z, Q, R };

// The universal coefficient rows up to the height bound: the spiral rows
// for positive/infinite and finite nonnegative slopes (three cyclic
// permutations each) and the primitive integer vectors of the plane
// x+y+z=0. Over R the rational plane rays are emitted the same way;
// irrational rays exist but only as caller-supplied directions.
std::vector<BasisElement> enumerate_universal_coeffs(int max_height, Ring ring);

// g-vectors of cluster variables for the transposed exchange matrix; as a
// set this equals the first family of enumerate_universal_coeffs.
std::vector<std::pair<Slope, Vec3>> g_vectors(int max_height);

// ---------------------------------------------------------------------------
// Rescaling

struct RescaleMap {
    std::array<Rat, 3> diag{Rat(1), Rat(1), Rat(1)};
};

// Valid when entries are positive and the conjugated exchange matrix stays
// integral.
bool rescale_is_valid(const RescaleMap& m);
Cone rescale_cone(const RescaleMap& m, Cone c);
std::vector<Cone> rescale_cones(const RescaleMap& m, const std::vector<Cone>& cones);

// ---------------------------------------------------------------------------
// Provenance lookups (exact inverses of the shear formulas)

Curve spiral_provenance(const Vec3& target);  // coordinate sum +-1
Curve closed_provenance(const Vec3& target);  // primitive integer, sum 0

// ---------------------------------------------------------------------------
// Census and sanity sweeps

struct FanCensus {
    long triangulations = 0;
    long slopes = 0;
    long cones3 = 0;        // two per triangulation (spiral sides)
    long cones2 = 0;        // two ray images per slope
    long rays_spiral = 0;   // two per slope
    long rays_plane = 0;    // one per slope
    std::vector<Cone> maximal3;
    std::vector<Cone> maximal2;
    std::vector<Vec3> plane_rays;
};

// Census over all triangulations within the given flip depth of the base.
FanCensus census_by_depth(int flip_depth);
// Census over all compatible slope triples with arc heights <= max_height.
FanCensus census_by_height(const Int& max_height);

struct SanityReport {
    long samples = 0;
    long located = 0;
    long membership_failures = 0;
    long simplicial_failures = 0;
    long pairs_checked = 0;
    long pair_failures = 0;
    long unimodular_checked = 0;
    long unimodular_failures = 0;

    bool ok() const {
        return membership_failures == 0 && simplicial_failures == 0 && pair_failures == 0 &&
               unimodular_failures == 0;
    }
};

// Random location/membership sweep plus pairwise common-face checks on the
// maximal cones of the height census.
SanityReport fan_sanity(int sample_size, int max_height, unsigned seed = 20240915);

// Exact check that two pointed cones intersect exactly in the face spanned
// by their common generators (extreme-ray computation in dimension 3).
bool cones_meet_in_common_face(const Cone& c1, const Cone& c2);

}  // namespace ptorus

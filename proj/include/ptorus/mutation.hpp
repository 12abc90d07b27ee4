#pragma once

#include "ptorus/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ptorus {

// ---------------------------------------------------------------------------
// Exchange matrices and mutation

// 3x3 skew-symmetric integer exchange matrix. Everything in this project
// is driven by the base matrix with rows [0,2,-2], [-2,0,2], [2,-2,0];
// mutation at any index negates it, so the reachable set is {B, -B}.
struct ExchangeMatrix3 {
    std::array<std::array<Int, 3>, 3> b{};

    static ExchangeMatrix3 base();

    const Int& at(int i, int j) const { return b[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    Int& at(int i, int j) { return b[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    bool operator==(const ExchangeMatrix3&) const = default;
    ExchangeMatrix3 operator-() const;

    bool is_skew_symmetric() const;

    // Matrix mutation at index k (1-based): entries in row/column k flip
    // sign, the rest pick up sgn(b_kj)*[b_ik*b_kj]_+.
    ExchangeMatrix3 mutated(int k) const;
};

// Exchange matrix extended by coefficient rows; mutation acts on both parts.
struct ExtendedMatrix3 {
    ExchangeMatrix3 exchange;
    std::vector<Vec3> rows;

    bool operator==(const ExtendedMatrix3&) const = default;
    ExtendedMatrix3 mutated(int k) const;
};

// A mutation sequence is a list of indices in {1,2,3}, applied left to
// right (the first entry mutates first).
using MutationSequence = std::vector<int>;

void check_index(int k);

// Cancels adjacent equal indices (each single mutation is an involution).
MutationSequence normalized_sequence(MutationSequence seq);

// One step of the piecewise-linear mutation map on a coefficient row.
Vec3 mutation_map_step(const ExchangeMatrix3& m, int k, const Vec3& a);

// The composed mutation map: successive steps use the successively mutated
// matrices, starting from b0. The empty sequence is the identity.
Vec3 mutation_map(const ExchangeMatrix3& b0, const MutationSequence& seq, Vec3 a);

// The inverse of mutation_map(b0, seq, .) is
// mutation_map(mutate_all(b0, seq), inverse_sequence(seq), .).
MutationSequence inverse_sequence(MutationSequence seq);
ExchangeMatrix3 mutate_all(ExchangeMatrix3 m, const MutationSequence& seq);

// ---------------------------------------------------------------------------
// Coherent linear relations

// A formal sum  sum_i coeff_i * vector_i.
struct LinearRelation {
    std::vector<std::pair<Vec3, Rat>> terms;
};

struct CoherenceResult {
    bool coherent = false;
    // Shortest failing sequence when not coherent.
    std::optional<MutationSequence> witness;
    long sequences_checked = 0;
    int depth = 0;
};

// Checks the linear condition and the componentwise-minimum condition for
// every normalized sequence of length <= depth (3 * 2^(d-1) sequences of
// each length d, plus the empty sequence). This is a semi-decision: a
// coherent verdict certifies the relation only up to the stated depth.
CoherenceResult is_b_coherent(const LinearRelation& rel, int depth,
                              const ExchangeMatrix3& b0 = ExchangeMatrix3::base());

// ---------------------------------------------------------------------------
// Sectors of the plane x+y+z=0
//
// The closures of the linearity domains of the composed map below sweep the
// plane; consecutive sectors share a boundary ray and the fence of rays
// accumulates on the direction [1,-1,0] from both sides.

std::pair<Vec3, Vec3> sector_generators(long j);

// All sector indices whose closed cone contains v (0, 1 or 2 of them; a
// shared boundary ray lies in two sectors, and [1,-1,0] lies in none).
// Requires x+y+z = 0 and v != 0.
std::vector<long> sector_membership(const Vec3& v);

// Closed form of mutation_map(B, {1,2}, v) restricted to the plane
// x+y+z=0. Sends each sector onto the sector two steps over.
Vec3 plane_shift_closed_form(const Vec3& v);

}  // namespace ptorus

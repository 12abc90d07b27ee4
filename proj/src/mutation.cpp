#include "ptorus/mutation.hpp"

#include <algorithm>
#include <deque>

namespace ptorus {

ExchangeMatrix3 ExchangeMatrix3::base() {
    ExchangeMatrix3 m;
    m.b = {{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}};
    return m;
}

ExchangeMatrix3 ExchangeMatrix3::operator-() const {
    ExchangeMatrix3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = -at(i, j);
    return m;
}

bool ExchangeMatrix3::is_skew_symmetric() const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

void check_index(int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("mutation index must be in {1,2,3}");
}

ExchangeMatrix3 ExchangeMatrix3::mutated(int k) const {
    check_index(k);
    int kk = k - 1;
    ExchangeMatrix3 m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == kk || j == kk) {
                m.at(i, j) = -at(i, j);
            } else {
                Int p = at(i, kk) * at(kk, j);
                if (p < 0) p = 0;
                m.at(i, j) = at(i, j) + sgn(at(kk, j)) * p;
            }
        }
    }
    return m;
}

ExtendedMatrix3 ExtendedMatrix3::mutated(int k) const {
    ExtendedMatrix3 m;
    m.exchange = exchange.mutated(k);
    m.rows.reserve(rows.size());
    for (const Vec3& r : rows) m.rows.push_back(mutation_map_step(exchange, k, r));
    return m;
}

MutationSequence normalized_sequence(MutationSequence seq) {
    MutationSequence out;
    for (int k : seq) {
        check_index(k);
        if (!out.empty() && out.back() == k)
            out.pop_back();
        else
            out.push_back(k);
    }
    return out;
}

Vec3 mutation_map_step(const ExchangeMatrix3& m, int k, const Vec3& a) {
    check_index(k);
    int kk = k - 1;
    const Rat& ak = a[kk];
    Vec3 r;
    for (int j = 0; j < 3; ++j) {
        if (j == kk) {
            r[j] = -ak;
        } else {
            Rat bkj(m.at(kk, j));
            if (ak >= 0 && bkj >= 0)
                r[j] = a[j] + ak * bkj;
            else if (ak <= 0 && bkj <= 0)
                r[j] = a[j] - ak * bkj;
            else
                r[j] = a[j];
        }
    }
    return r;
}

Vec3 mutation_map(const ExchangeMatrix3& b0, const MutationSequence& seq, Vec3 a) {
    ExchangeMatrix3 m = b0;
    for (int k : seq) {
        a = mutation_map_step(m, k, a);
        m = m.mutated(k);
    }
    return a;
}

MutationSequence inverse_sequence(MutationSequence seq) {
    std::reverse(seq.begin(), seq.end());
    return seq;
}

ExchangeMatrix3 mutate_all(ExchangeMatrix3 m, const MutationSequence& seq) {
    for (int k : seq) m = m.mutated(k);
    return m;
}

namespace {

bool relation_holds(const std::vector<Vec3>& images, const std::vector<Rat>& coeffs) {
    Vec3 lin, mn;
    for (size_t i = 0; i < images.size(); ++i) {
        lin = lin + images[i] * coeffs[i];
        mn = mn + cmin0(images[i]) * coeffs[i];
    }
    return lin.is_zero() && mn.is_zero();
}

struct Node {
    ExchangeMatrix3 matrix;
    std::vector<Vec3> images;
    MutationSequence seq;
};

}  // namespace

CoherenceResult is_b_coherent(const LinearRelation& rel, int depth, const ExchangeMatrix3& b0) {
    if (depth < 0) throw std::invalid_argument("is_b_coherent: depth must be nonnegative");

    std::vector<Rat> coeffs;
    Node root;
    root.matrix = b0;
    for (const auto& [v, c] : rel.terms) {
        root.images.push_back(v);
        coeffs.push_back(c);
    }

    CoherenceResult res;
    res.depth = depth;

    // Breadth-first over normalized sequences so a reported witness is
    // shortest. Sequences with adjacent repeats are redundant (involution).
    std::deque<Node> queue{std::move(root)};
    while (!queue.empty()) {
        Node n = std::move(queue.front());
        queue.pop_front();
        ++res.sequences_checked;
        if (!relation_holds(n.images, coeffs)) {
            res.coherent = false;
            res.witness = n.seq;
            return res;
        }
        if (static_cast<int>(n.seq.size()) == depth) continue;
        for (int k = 1; k <= 3; ++k) {
            if (!n.seq.empty() && n.seq.back() == k) continue;
            Node child;
            child.matrix = n.matrix.mutated(k);
            child.images.reserve(n.images.size());
            for (const Vec3& v : n.images) child.images.push_back(mutation_map_step(n.matrix, k, v));
            child.seq = n.seq;
            child.seq.push_back(k);
            queue.push_back(std::move(child));
        }
    }
    res.coherent = true;
    return res;
}

std::pair<Vec3, Vec3> sector_generators(long j) {
    if (j == 0) return {Vec3{-1, 0, 1}, Vec3{0, 1, -1}};
    if (j > 0) return {Vec3{j - 1, -j + 2, -1}, Vec3{j, -j + 1, -1}};
    return {Vec3{-j - 2, j + 1, 1}, Vec3{-j - 1, j, 1}};
}

namespace {

bool in_sector(const Vec3& v, long j) {
    auto [g1, g2] = sector_generators(j);
    auto sol = solve2(g1, g2, v);
    return sol && sol->first >= 0 && sol->second >= 0;
}

}  // namespace

std::vector<long> sector_membership(const Vec3& v) {
    if (v.sum() != 0) throw std::invalid_argument("sector_membership: vector must satisfy x+y+z=0");
    if (v.is_zero()) throw std::invalid_argument("sector_membership: vector must be nonzero");

    // A member sector index is pinned by the third coordinate: sectors with
    // j>0 have z<0 on their interior (z = -(alpha+beta)), sectors with j<0
    // have z>0, and only finitely many j are possible for a given v.
    std::vector<long> candidates{0};
    const Rat& z = v[2];
    if (z < 0) {
        Rat q = v[0] / -z;  // alpha >= 0 needs j >= q, beta >= 0 needs j <= q+1
        long base = static_cast<long>(rat_floor(q));
        for (long j = base - 1; j <= base + 2; ++j)
            if (j >= 1) candidates.push_back(j);
    } else if (z > 0) {
        Rat q = v[1] / z;  // j in [q-1, q]
        long base = static_cast<long>(rat_floor(q));
        for (long j = base - 1; j <= base + 2; ++j)
            if (j <= -1) candidates.push_back(j);
    }

    std::vector<long> out;
    for (long j : candidates)
        if (in_sector(v, j)) out.push_back(j);
    std::sort(out.begin(), out.end());
    return out;
}

Vec3 plane_shift_closed_form(const Vec3& v) {
    if (v.sum() != 0)
        throw std::invalid_argument("plane_shift_closed_form: vector must satisfy x+y+z=0");
    const Rat &x = v[0], &y = v[1], &z = v[2];
    if (x <= 0 && y <= 0) return {-x, -y, 2 * x + 2 * y + z};
    if (x <= 0 && y >= 0) return {-x + 2 * y, -y, 2 * x + z};
    if (x >= 0 && 2 * x + y <= 0) return {-x, -2 * x - y, 4 * x + 2 * y + z};
    return {3 * x + 2 * y, -2 * x - y, z};
}

}  // namespace ptorus

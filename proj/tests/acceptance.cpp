// Acceptance suite: runs every criterion exactly as stated, one line each.

#include "ptorus/fan.hpp"
#include "ptorus/render.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace ptorus;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

FareyPoint random_standard_point(std::mt19937_64& rng, long h) {
    std::uniform_int_distribution<long> da(0, h), db(-h, h);
    for (;;) {
        FareyPoint p{da(rng), db(rng)};
        if (is_farey_point(p.a, p.b) && is_standard(p)) return p;
    }
}

Vec3 random_rat_vec(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
    return {Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
}

// 1. Figure values via both the closed formulas and the crossing-word oracle.
void criterion_figure_values() {
    require(shear_T0(spiral_ccw({2, 3})) == Vec3{-2, 3, 0}, "ccw(2,3) formula");
    require(shear_word_oracle(spiral_ccw({2, 3})) == Vec3{-2, 3, 0}, "ccw(2,3) oracle");
    require(shear_T0(closed_curve({2, 3})) == Vec3{-3, 2, 1}, "cl(2,3) formula");
    require(shear_word_oracle(closed_curve({2, 3})) == Vec3{-3, 2, 1}, "cl(2,3) oracle");
}

// 2. Formula/oracle equivalence on every curve with a>=0, b>0, a+b <= 60.
void criterion_oracle_sweep() {
    long checked = 0;
    for (long a = 0; a <= 60; ++a)
        for (long b = 1; a + b <= 60; ++b) {
            if (!is_farey_point(a, b)) continue;
            FareyPoint p{a, b};
            require(shear_T0(spiral_ccw(p)) == shear_word_oracle(spiral_ccw(p)),
                    "ccw mismatch at [" + std::to_string(a) + "," + std::to_string(b) + "]");
            require(shear_T0(closed_curve(p)) == shear_word_oracle(closed_curve(p)),
                    "cl mismatch at [" + std::to_string(a) + "," + std::to_string(b) + "]");
            ++checked;
        }
    require(checked > 1000, "sweep too small");
}

// 3. Closed form of the 1,2 composite on the plane; fixed vector; sector shift.
void criterion_plane_shift() {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long> d(-1000, 1000);
    ExchangeMatrix3 b = ExchangeMatrix3::base();
    for (int i = 0; i < 10000; ++i) {
        long x = d(rng), y = d(rng);
        Vec3 v{Rat(x), Rat(y), Rat(-x - y)};
        require(plane_shift_closed_form(v) == mutation_map(b, {1, 2}, v), "closed form mismatch");
    }
    require(plane_shift_closed_form(Vec3{1, -1, 0}) == Vec3{1, -1, 0}, "fixed vector moved");
    for (long j = -12; j <= 12; ++j) {
        auto [g1, g2] = sector_generators(j);
        auto [h1, h2] = sector_generators(j + 2);
        Vec3 i1 = plane_shift_closed_form(g1), i2 = plane_shift_closed_form(g2);
        require((i1 == h1 && i2 == h2) || (i1 == h2 && i2 == h1),
                "sector " + std::to_string(j) + " not mapped onto " + std::to_string(j + 2));
    }
}

// 4. Matrix mutation and mutation map basics.
void criterion_mutation_basics() {
    ExchangeMatrix3 b = ExchangeMatrix3::base();
    require(b.mutated(1) == -b, "mu_1(B) != -B");

    std::mt19937_64 rng(103);
    std::uniform_int_distribution<long> entry(-9, 9), num(-50, 50), den(1, 50);
    for (int i = 0; i < 1000; ++i) {
        ExtendedMatrix3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = r + 1; c < 3; ++c) {
                long v = entry(rng);
                m.exchange.at(r, c) = v;
                m.exchange.at(c, r) = -v;
            }
        m.rows = {Vec3{Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(num(rng), den(rng))}};
        for (int k = 1; k <= 3; ++k)
            require(m.mutated(k).mutated(k) == m, "mutation not an involution");
    }
    std::uniform_int_distribution<int> idx(1, 3), len(0, 5);
    for (int i = 0; i < 1000; ++i) {
        Vec3 v = random_rat_vec(rng);
        MutationSequence seq;
        for (int t = len(rng); t > 0; --t) seq.push_back(idx(rng));
        Vec3 w = mutation_map(b, seq, v);
        require(mutation_map(mutate_all(b, seq), inverse_sequence(seq), w) == v,
                "inverse sequence failed");
    }
}

// 5. Fan completeness and pairwise consistency.
void criterion_fan_location() {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 10000; ++i) {
        Vec3 v = random_rat_vec(rng);
        Expansion ex = basis_expand(v);
        Vec3 rebuilt;
        for (const auto& [elem, c] : ex.terms) {
            require(c > 0 || v.is_zero(), "located cone is not minimal");
            rebuilt = rebuilt + elem.vector * c;
        }
        require(rebuilt == v, "membership solve failed");
        require(static_cast<int>(ex.terms.size()) == ex.cone.dim, "non-simplicial located cone");
    }

    FanCensus census = census_by_height(6);
    std::vector<const Cone*> maximal;
    for (const Cone& c : census.maximal3) maximal.push_back(&c);
    for (const Cone& c : census.maximal2) maximal.push_back(&c);
    std::uniform_int_distribution<size_t> pick(0, maximal.size() - 1);
    long pairs = 0;
    while (pairs < 500) {
        size_t a = pick(rng), b = pick(rng);
        if (a == b) continue;
        require(cones_meet_in_common_face(*maximal[a], *maximal[b]),
                "maximal cones do not meet in a common face");
        ++pairs;
    }
}

// 6. Integer basis behavior and coherent residuals.
void criterion_integer_basis() {
    std::mt19937_64 rng(109);
    std::uniform_int_distribution<long> d(-100, 100);
    std::vector<Vec3> vecs;
    for (int i = 0; i < 1000; ++i) {
        Vec3 v{Rat(d(rng)), Rat(d(rng)), Rat(d(rng))};
        vecs.push_back(v);
        Expansion ex = basis_expand(v);
        require(ex.terms.size() <= 3, "more than three terms");
        for (const auto& [elem, c] : ex.terms) {
            require(c >= 0, "negative coefficient");
            require(is_integer(c), "non-integer coefficient for integer input");
        }
    }
    for (int i = 0; i < 200; ++i) {
        const Vec3& v = vecs[static_cast<size_t>(i)];
        Expansion ex = basis_expand(v);
        LinearRelation rel;
        rel.terms.push_back({v, Rat(1)});
        for (const auto& [elem, c] : ex.terms) rel.terms.push_back({elem.vector, -c});
        CoherenceResult res = is_b_coherent(rel, 6);
        require(res.coherent, "expansion residual not coherent to depth 6");
        require(res.sequences_checked == 190, "unexpected sequence census");  // 96 of length 6
    }
}

// 7. Universal coefficient census at height 5 against the stated formulas.
void criterion_coefficient_census() {
    auto rows = enumerate_universal_coeffs(5, Ring::Z);
    std::set<std::string> item1, item2, item3;
    for (const auto& r : rows) {
        Rat s = r.vector.sum();
        (s == 1 ? item1 : s == -1 ? item2 : item3).insert(format_vec3(r.vector));
    }

    std::set<std::string> want1, want2, want3;
    for (long a = 0; a <= 5; ++a)
        for (long b = 1; b <= 5; ++b) {
            if (!is_farey_point(a, b) || (a == 0 && b != 1)) continue;
            Vec3 base{Rat(1 - b), Rat(a + 1), Rat(b - a - 1)};
            want1.insert(format_vec3(base));
            want1.insert(format_vec3(cycle2(base)));
            want1.insert(format_vec3(cycle3(base)));
        }
    for (long a = 1; a <= 5; ++a)
        for (long b = 0; b <= 5; ++b) {
            if (!is_farey_point(a, b)) continue;
            Vec3 base{Rat(-1 - b), Rat(a - 1), Rat(b - a + 1)};
            want2.insert(format_vec3(base));
            want2.insert(format_vec3(cycle2(base)));
            want2.insert(format_vec3(cycle3(base)));
        }
    for (long x = -5; x <= 5; ++x)
        for (long y = -5; y <= 5; ++y) {
            long z = -x - y;
            if (std::abs(z) > 5 || (x == 0 && y == 0)) continue;
            if (std::gcd(std::gcd(std::abs(x), std::abs(y)), std::abs(z)) != 1) continue;
            want3.insert(format_vec3(Vec3{Rat(x), Rat(y), Rat(z)}));
        }
    require(item1 == want1, "spiral rows (ccw) disagree with the formula");
    require(item2 == want2, "spiral rows (cw) disagree with the formula");
    require(item3 == want3, "plane rows disagree with the primitive census");

    std::set<std::string> gset;
    for (const auto& [s, v] : g_vectors(5)) gset.insert(format_vec3(v));
    require(gset == item1, "g-vectors differ from the first family");
}

// 8. Null Tangle Property at desk scale.
void criterion_null_tangles() {
    std::mt19937_64 rng(113);
    std::uniform_int_distribution<int> nc(1, 4), kind(0, 2), wd(0, 5);
    for (int iter = 0; iter < 100; ++iter) {
        Tangle tangle;
        std::set<std::string> seen;
        int n = nc(rng);
        while (static_cast<int>(tangle.terms.size()) < n) {
            FareyPoint p = random_standard_point(rng, 10);
            int k = kind(rng);
            Curve c = k == 0 ? closed_curve(p) : k == 1 ? spiral_ccw(p) : spiral_cw(p);
            if (!seen.insert(format_curve(c)).second) continue;
            long w = wd(rng) - 3;
            if (w >= 0) ++w;
            tangle.terms.push_back({c, Rat(w)});
        }
        FalsifyResult res = falsify_null_tangle(tangle, 10);
        require(res.found, "tangle " + std::to_string(iter) + " not falsified within depth 10");
        require(tangle_shear(tangle, res.witness) == res.shear, "witness shear mismatch");
    }

    Tangle tri{{{closed_curve({1, 0}), Rat(1)},
                {closed_curve({0, 1}), Rat(1)},
                {closed_curve({1, -1}), Rat(1)}}};
    require(tangle_shear(tri, base_triangulation()).is_zero(), "reference tangle nonzero at base");
    FalsifyResult res = falsify_null_tangle(tri, 10);
    require(res.found && res.depth == 1, "reference tangle not falsified at depth 1");
    require(tangle_shear(tri, flip(base_triangulation(), 3)) == Vec3{2, -2, 0},
            "reference tangle shear at the flipped triangulation");
}

// 9. Rescaling by diag(1,2,1) moves every plane ray into 2x+y+2z=0.
void criterion_rescale() {
    RescaleMap m{{Rat(1), Rat(2), Rat(1)}};
    require(rescale_is_valid(m), "diag(1,2,1) rejected");
    long checked = 0;
    for (const auto& r : enumerate_universal_coeffs(10, Ring::Z)) {
        if (r.vector.sum() != 0) continue;
        Cone ray = locate_in_fan(r.vector);
        Cone mapped = rescale_cone(m, ray);
        const Vec3& g = mapped.generators[0];
        require(2 * g[0] + g[1] + 2 * g[2] == 0, "rescaled ray off the stated plane");
        ++checked;
    }
    require(checked > 100, "ray census too small");
}

// 10. Separation walk and the positivity criterion against direction signs.
void criterion_separation() {
    Separation sep = find_separating_triangulation(Rat(0), Rat(7, 5));
    require(is_farey_triangle(sep.triangle[0], sep.triangle[1], sep.triangle[2]),
            "separating triple is not a Farey triangle");
    std::array<FareyPoint, 3> arcs = sep.tri.arcs;
    std::sort(arcs.begin(), arcs.end(),
              [](const FareyPoint& p, const FareyPoint& q) { return slope_less(p, q); });
    Rat mediant(arcs[0].b + arcs[1].b, arcs[0].a + arcs[1].a);
    require(Rat(0) < mediant && mediant < Rat(7, 5), "mediant outside (x, y)");
    require(slope_less(Slope::of(Rat(7, 5)), slope_of(arcs[2])), "largest slope not beyond y");

    std::mt19937_64 rng(127);
    std::uniform_int_distribution<int> len(0, 6), idx(1, 3);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 30);
    for (int t = 0; t < 20; ++t) {
        Triangulation tri = base_triangulation();
        for (int i = len(rng); i > 0; --i) {
            int k = idx(rng);
            if (!tri.path.empty() && tri.path.back() == k) k = k % 3 + 1;
            tri = flip(tri, k);
        }
        int pos = 0;
        for (int i = 1; i < 3; ++i)
            if (slope_less(tri.arcs[size_t(pos)], tri.arcs[size_t(i)])) pos = i;
        for (int s = 0; s < 100; ++s) {
            Slope sigma = Slope::of(Rat(num(rng), den(rng)));
            bool criterion = line_shear_positive(tri, sigma);
            Vec3 dir = shear_wrt_direction(tri, sigma);
            require(criterion == (dir[pos] > 0), "criterion disagrees with the direction sign");
        }
    }
}

// 11. Renderer smoke test.
void criterion_renderer() {
    ProjectionConfig cfg;
    RenderStats stats;
    std::string svg1 = render_fan_svg(cfg, &stats);
    std::string svg2 = render_fan_svg(cfg);
    require(svg1 == svg2, "SVG output is not byte-identical across runs");

    auto count = [&svg1](const std::string& needle) {
        long n = 0;
        for (size_t pos = svg1.find(needle); pos != std::string::npos;
             pos = svg1.find(needle, pos + 1))
            ++n;
        return n;
    };
    require(count("class=\"axis-label\"") == 3, "expected exactly three basis labels");
    FanCensus census = census_by_depth(cfg.max_height);
    require(count("class=\"cell3\"") == census.cones3, "filled cell count mismatch");
    require(count("class=\"cell2\"") == census.cones2, "arc cell count mismatch");
    require(count("class=\"ray\"") == census.rays_spiral + census.rays_plane,
            "ray point count mismatch");
    require(stats.cells3 == census.cones3, "renderer stats disagree with census");
}

struct Criterion {
    int id;
    const char* name;
    std::function<void()> fn;
    double limit_ms;  // 0 = no stated bound
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "figure shear values via formulas and word oracle", criterion_figure_values, 1.0},
        {2, "formula vs oracle sweep to height 60", criterion_oracle_sweep, 1000.0},
        {3, "plane closed form, fixed vector, sector shift", criterion_plane_shift, 1000.0},
        {4, "matrix mutation and mutation map basics", criterion_mutation_basics, 0.0},
        {5, "fan completeness and common faces", criterion_fan_location, 30000.0},
        {6, "integer expansion and coherent residuals", criterion_integer_basis, 60000.0},
        {7, "universal coefficient census at height 5", criterion_coefficient_census, 0.0},
        {8, "null tangle falsification at desk scale", criterion_null_tangles, 60000.0},
        {9, "rescaled plane rays satisfy 2x+y+2z=0", criterion_rescale, 0.0},
        {10, "separation walk and positivity criterion", criterion_separation, 0.0},
        {11, "renderer determinism, labels and cell counts", criterion_renderer, 0.0},
    };

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            c.fn();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && c.limit_ms > 0 && ms > c.limit_ms) {
            std::ostringstream ss;
            ss << "exceeded " << c.limit_ms << " ms (took " << ms << " ms)";
            failure = ss.str();
        }
        std::ostringstream line;
        line << (failure.empty() ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.name
             << "  [" << static_cast<long>(ms * 1000) / 1000.0 << " ms]";
        if (!failure.empty()) {
            line << "  -- " << failure;
            all_ok = false;
        }
        std::cout << line.str() << "\n";
    }
    return all_ok ? 0 : 1;
}

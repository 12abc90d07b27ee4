#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace ptorus {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sgn(const Rat& x) { return x.sign(); }
inline int sgn(const Int& x) { return x.sign(); }

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// floor/ceil for exact rationals (denominator is always positive).
inline Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n % d != 0 && n < 0) --t;
    return t;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

// ---------------------------------------------------------------------------
// Small exact vectors

struct Vec2 {
    Rat x, y;

    bool operator==(const Vec2&) const = default;
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(const Rat& s) const { return {x * s, y * s}; }
};

inline Rat cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

struct Vec3 {
    std::array<Rat, 3> c{};

    Vec3() = default;
    Vec3(Rat a, Rat b, Rat d) : c{std::move(a), std::move(b), std::move(d)} {}

    Rat& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const Rat& operator[](int i) const { return c[static_cast<size_t>(i)]; }

    bool operator==(const Vec3&) const = default;

    Vec3 operator+(const Vec3& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}; }
    Vec3 operator-(const Vec3& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}; }
    Vec3 operator-() const { return {-c[0], -c[1], -c[2]}; }
    Vec3 operator*(const Rat& s) const { return {c[0] * s, c[1] * s, c[2] * s}; }

    Rat sum() const { return c[0] + c[1] + c[2]; }
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
    bool is_integral() const { return is_integer(c[0]) && is_integer(c[1]) && is_integer(c[2]); }

    std::array<int, 3> signs() const { return {sgn(c[0]), sgn(c[1]), sgn(c[2])}; }
};

inline Vec3 cmin0(const Vec3& v) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = v[i] < 0 ? v[i] : Rat(0);
    return r;
}

// cycle2([x,y,z]) = [y,z,x]; cycle3([x,y,z]) = [z,x,y].
inline Vec3 cycle2(const Vec3& v) { return {v[1], v[2], v[0]}; }
inline Vec3 cycle3(const Vec3& v) { return {v[2], v[0], v[1]}; }
inline Vec3 swap12(const Vec3& v) { return {v[1], v[0], v[2]}; }

inline Rat det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Solves v = x*g1 + y*g2 + z*g3 when the generators are independent.
inline std::optional<Vec3> solve3(const Vec3& g1, const Vec3& g2, const Vec3& g3, const Vec3& v) {
    Rat d = det3(g1, g2, g3);
    if (d == 0) return std::nullopt;
    return Vec3{det3(v, g2, g3) / d, det3(g1, v, g3) / d, det3(g1, g2, v) / d};
}

// Solves v = a*g1 + b*g2 exactly; fails when g1, g2 are dependent or v is
// outside their span.
inline std::optional<std::pair<Rat, Rat>> solve2(const Vec3& g1, const Vec3& g2, const Vec3& v) {
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        Rat d = g1[i] * g2[j] - g1[j] * g2[i];
        if (d == 0) continue;
        Rat a = (v[i] * g2[j] - v[j] * g2[i]) / d;
        Rat b = (g1[i] * v[j] - g1[j] * v[i]) / d;
        if (g1 * a + g2 * b == v) return std::make_pair(a, b);
        return std::nullopt;
    }
    return std::nullopt;
}

// Primitive integer vector spanning the same ray (positive multiple).
inline Vec3 primitive_direction(const Vec3& v) {
    if (v.is_zero()) throw std::invalid_argument("primitive_direction: zero vector");
    Int l = 1;
    for (int i = 0; i < 3; ++i) l = boost::multiprecision::lcm(l, rat_den(v[i]));
    Int g = 0;
    std::array<Int, 3> w;
    for (int i = 0; i < 3; ++i) {
        w[static_cast<size_t>(i)] = rat_num(v[i]) * (l / rat_den(v[i]));
        g = boost::multiprecision::gcd(g, w[static_cast<size_t>(i)]);
    }
    return {Rat(w[0] / g), Rat(w[1] / g), Rat(w[2] / g)};
}

// ---------------------------------------------------------------------------
// Text form: exact rationals print as "p/q" (or plain "p"), never as floats.

std::string format_rat(const Rat& q);
std::string format_vec3(const Vec3& v);
Rat parse_rat(const std::string& text);
Vec3 parse_vec3(const std::string& text);

}  // namespace ptorus

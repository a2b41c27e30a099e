#pragma once

// Test-only reference computations. Nothing here calls into the routing or
// intersection code under test.

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

namespace oracle {

/// Minimal exact fraction over int64 -- ample for the small inputs used here.
struct Frac {
    std::int64_t n = 0, d = 1;
    Frac(std::int64_t num = 0, std::int64_t den = 1) : n(num), d(den) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) n = -n, d = -d;
        const auto g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) n /= g, d /= g;
    }
    friend Frac operator+(Frac a, Frac b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
    friend Frac operator-(Frac a, Frac b) { return {a.n * b.d - b.n * a.d, a.d * b.d}; }
    friend Frac operator*(Frac a, Frac b) { return {a.n * b.n, a.d * b.d}; }
    friend Frac operator/(Frac a, Frac b) { return {a.n * b.d, a.d * b.n}; }
    friend bool operator==(Frac a, Frac b) { return a.n == b.n && a.d == b.d; }
    friend bool operator<(Frac a, Frac b) { return a.n * b.d < b.n * a.d; }
    friend bool operator<=(Frac a, Frac b) { return !(b < a); }
    bool integral() const { return d == 1; }
};

struct FPoint {
    Frac x, y;
    friend bool operator==(const FPoint&, const FPoint&) = default;
};

/// Perpendicularity from slopes: vertical/horizontal pair, or m1 * m2 = -1.
inline bool perpendicular_by_slope(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
    if (ax == 0) return by == 0;
    if (bx == 0) return ay == 0;
    return Frac(ay, ax) * Frac(by, bx) == Frac(-1);
}

/// Builds an edge from the written construction: each bend follows from the
/// previous one by a stated slope and a stated vertical or horizontal
/// distance. Returns a, b, c, d, e, f.
inline std::array<FPoint, 6> route_by_slopes(std::int64_t l, std::int64_t i, std::int64_t j, std::int64_t u,
                                             std::int64_t w, FPoint src, FPoint dst) {
    const std::int64_t s = l * l, N = s * s, l3 = l * l * l;
    const Frac alpha(1, l3);
    const Frac steep = Frac(-1) / alpha;
    // first bend index among the targets: level u, from the right
    const std::int64_t k = (u - 1) * s + (s - w + 1);
    const std::int64_t p = (k + s - 1) / s;
    const std::int64_t q = (k - 1) % s;
    std::array<FPoint, 6> out;
    FPoint a{src.x + Frac(k), src.y + Frac(1)};
    Frac rise = Frac((s - j + i) * l + 1);
    FPoint b{a.x + rise / alpha, a.y + rise};
    Frac fall = Frac((8 * p - 8 * i + 7) * l3);
    FPoint c{b.x + (Frac(0) - fall) / steep, b.y - fall};
    Frac run = Frac((i + q) * N + l3);
    FPoint d{c.x - run, c.y - run * alpha};
    Frac up = Frac(3 * l3);
    FPoint e{d.x + up / steep, d.y + up};
    FPoint f{e.x, dst.y - Frac(1)};
    out = {a, b, c, d, e, f};
    return out;
}

enum class Rel { Disjoint, Shared, Proper, Touch, Overlap };

struct Hit {
    Rel rel = Rel::Disjoint;
    FPoint at{};
};

/// Parametric intersection: p0 + t dp = q0 + s dq solved by Cramer's rule.
inline Hit intersect(std::int64_t p0x, std::int64_t p0y, std::int64_t p1x, std::int64_t p1y, std::int64_t q0x,
                     std::int64_t q0y, std::int64_t q1x, std::int64_t q1y) {
    const std::int64_t dpx = p1x - p0x, dpy = p1y - p0y, dqx = q1x - q0x, dqy = q1y - q0y;
    const std::int64_t rx = q0x - p0x, ry = q0y - p0y;
    const std::int64_t den = dpx * dqy - dpy * dqx;
    if (den != 0) {
        const Frac t(rx * dqy - ry * dqx, den);
        const Frac s(rx * dpy - ry * dpx, den);
        if (t < Frac(0) || Frac(1) < t || s < Frac(0) || Frac(1) < s) return {};
        const FPoint at{Frac(p0x) + t * Frac(dpx), Frac(p0y) + t * Frac(dpy)};
        const bool t_end = t == Frac(0) || t == Frac(1);
        const bool s_end = s == Frac(0) || s == Frac(1);
        if (t_end && s_end) return {Rel::Shared, at};
        if (t_end || s_end) return {Rel::Touch, at};
        return {Rel::Proper, at};
    }
    if (rx * dpy - ry * dpx != 0) return {}; // parallel, distinct lines
    // Collinear: parameters of q0, q1 along p.
    const std::int64_t len2 = dpx * dpx + dpy * dpy;
    Frac t0(rx * dpx + ry * dpy, len2);
    Frac t1((q1x - p0x) * dpx + (q1y - p0y) * dpy, len2);
    if (t1 < t0) std::swap(t0, t1);
    const Frac lo = t0 < Frac(0) ? Frac(0) : t0;
    const Frac hi = Frac(1) < t1 ? Frac(1) : t1;
    if (hi < lo) return {};
    const FPoint at{Frac(p0x) + lo * Frac(dpx), Frac(p0y) + lo * Frac(dpy)};
    if (lo == hi) return {Rel::Shared, at};
    return {Rel::Overlap, at};
}

} // namespace oracle

#pragma once

// Exact integer geometry and the domain types shared by layout, validation
// and serialization. Coordinates are 64-bit; every product of two coordinate
// differences is formed in 128 bits.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "racdraw/error.hpp"

namespace racdraw {

using coord_t = std::int64_t;
__extension__ typedef __int128 wide_t;
__extension__ typedef unsigned __int128 uwide_t;
using VertexId = std::uint32_t;

// ---------------------------------------------------------------------------
// 128-bit helpers

inline std::string to_string(wide_t value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    // Work on the unsigned magnitude so the minimum value is representable.
    uwide_t mag = negative ? static_cast<uwide_t>(-(value + 1)) + 1 : static_cast<uwide_t>(value);
    std::string digits;
    while (mag != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

inline wide_t wide_abs(wide_t v) { return v < 0 ? -v : v; }

inline wide_t wide_gcd(wide_t a, wide_t b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        wide_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline int sign(wide_t v) { return (v > 0) - (v < 0); }

inline wide_t checked_mul(wide_t a, wide_t b) {
    wide_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(ErrorKind::ArithmeticOverflow, "128-bit multiplication overflow");
    return out;
}

inline wide_t checked_add(wide_t a, wide_t b) {
    wide_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(ErrorKind::ArithmeticOverflow, "128-bit addition overflow");
    return out;
}

/// Reduced fraction with positive denominator. Equality is structural, which
/// is exact because the representation is canonical.
struct Rational {
    wide_t num = 0;
    wide_t den = 1;

    static Rational make(wide_t num, wide_t den) {
        if (den == 0) throw Error(ErrorKind::ArithmeticOverflow, "zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const wide_t g = wide_gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        return {num, den};
    }
    static Rational integer(wide_t v) { return {v, 1}; }

    bool is_integer() const { return den == 1; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
    // Representation order: deterministic, not numeric.
    friend auto operator<=>(const Rational& a, const Rational& b) {
        if (auto c = a.num <=> b.num; c != 0) return c;
        return a.den <=> b.den;
    }
};

inline std::string to_string(const Rational& r) {
    if (r.den == 1) return to_string(r.num);
    return to_string(r.num) + "/" + to_string(r.den);
}

// ---------------------------------------------------------------------------
// Points and vectors

struct Point {
    coord_t x = 0;
    coord_t y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

struct Vec {
    coord_t dx = 0;
    coord_t dy = 0;
    bool is_zero() const { return dx == 0 && dy == 0; }
    friend bool operator==(const Vec&, const Vec&) = default;
    friend auto operator<=>(const Vec&, const Vec&) = default;
};

inline Vec operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

inline wide_t dot(const Vec& u, const Vec& v) {
    return static_cast<wide_t>(u.dx) * v.dx + static_cast<wide_t>(u.dy) * v.dy;
}

inline wide_t cross(const Vec& u, const Vec& v) {
    return static_cast<wide_t>(u.dx) * v.dy - static_cast<wide_t>(u.dy) * v.dx;
}

/// Sign of the turn a -> b -> c: positive for counter-clockwise.
inline int orientation(const Point& a, const Point& b, const Point& c) {
    return sign(cross(b - a, c - a));
}

/// Exact orthogonality test on integer directions.
inline bool perpendicular(const Vec& d1, const Vec& d2) {
    if (d1.is_zero() || d2.is_zero()) throw Error(ErrorKind::DegenerateDirection, "degenerate direction");
    return dot(d1, d2) == 0;
}

/// Primitive direction of a nonzero vector, sign-normalised so that parallel
/// vectors (either orientation) map to the same value.
inline Vec primitive_direction(const Vec& v) {
    if (v.is_zero()) throw Error(ErrorKind::DegenerateDirection, "degenerate direction");
    coord_t a = v.dx < 0 ? -v.dx : v.dx;
    coord_t b = v.dy < 0 ? -v.dy : v.dy;
    while (b != 0) {
        coord_t t = a % b;
        a = b;
        b = t;
    }
    Vec d{v.dx / a, v.dy / a};
    if (d.dx < 0 || (d.dx == 0 && d.dy < 0)) d = {-d.dx, -d.dy};
    return d;
}

struct RationalPoint {
    Rational x;
    Rational y;
    static RationalPoint from(const Point& p) { return {Rational::integer(p.x), Rational::integer(p.y)}; }
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
    friend auto operator<=>(const RationalPoint&, const RationalPoint&) = default;
};

// ---------------------------------------------------------------------------
// Domain types

/// Every constant of the construction, derived from the requested vertex count.
/// Vertices live on `levels` rows of `per_level` slots; l = ceil(n^(1/4)).
struct GridParams {
    std::int64_t n_input = 0;
    std::int64_t l = 0;
    std::int64_t capacity = 0;  // l^4
    std::int64_t levels = 0;    // l^2
    std::int64_t per_level = 0; // l^2
    std::int64_t slope_num = 1;
    std::int64_t slope_den = 0; // l^3: the shallow slope is 1 / l^3
    std::int64_t level_gap = 0; // 8 l^3 + l + 1
    std::int64_t col_gap = 0;   // l^4 + 1
    std::int64_t level_shift = 0; // l^2 + 8

    friend bool operator==(const GridParams&, const GridParams&) = default;
};

struct LevelPos {
    std::int64_t level = 0; // 1 = highest
    std::int64_t pos = 0;   // 1 = leftmost
    friend bool operator==(const LevelPos&, const LevelPos&) = default;
    friend auto operator<=>(const LevelPos&, const LevelPos&) = default;
};

enum class SegmentClass : std::uint8_t { S1 = 1, S2, S3, S4, S5, S6, S7 };

inline constexpr int index_of(SegmentClass c) { return static_cast<int>(c); }
inline constexpr SegmentClass class_at(int r) { return static_cast<SegmentClass>(r); }

inline std::string to_string(SegmentClass c) { return "S" + std::to_string(index_of(c)); }

struct Segment {
    Point from;
    Point to;
    SegmentClass cls = SegmentClass::S1;
    Vec direction() const { return to - from; }
    bool is_degenerate() const { return from == to; }
};

inline constexpr std::size_t kBendsPerEdge = 6;
inline constexpr std::size_t kSegmentsPerEdge = 7;

/// One routed edge: source vertex, bends a..f, target vertex.
struct EdgePolyline {
    VertexId source = 0;
    VertexId target = 0;
    LevelPos source_pos;
    LevelPos target_pos;
    std::int64_t k = 0;
    Point source_point;
    Point target_point;
    std::array<Point, kBendsPerEdge> bends{};

    std::array<Point, kBendsPerEdge + 2> chain() const {
        std::array<Point, kBendsPerEdge + 2> out;
        out[0] = source_point;
        std::copy(bends.begin(), bends.end(), out.begin() + 1);
        out[kBendsPerEdge + 1] = target_point;
        return out;
    }

    Segment segment(SegmentClass c) const {
        const auto pts = chain();
        const int r = index_of(c);
        return {pts[r - 1], pts[r], c};
    }

    std::array<Segment, kSegmentsPerEdge> segments() const {
        std::array<Segment, kSegmentsPerEdge> out;
        const auto pts = chain();
        for (std::size_t r = 0; r < kSegmentsPerEdge; ++r) out[r] = {pts[r], pts[r + 1], class_at(static_cast<int>(r) + 1)};
        return out;
    }

    friend bool operator==(const EdgePolyline&, const EdgePolyline&) = default;
};

struct VertexPlacement {
    LevelPos pos;
    Point point;
    friend bool operator==(const VertexPlacement&, const VertexPlacement&) = default;
};

/// Vertex placements (indexed by id) plus one polyline per edge in input order.
struct Drawing {
    GridParams params;
    std::vector<VertexPlacement> vertices;
    std::vector<EdgePolyline> edges;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return edges.size(); }

    friend bool operator==(const Drawing&, const Drawing&) = default;
};

} // namespace racdraw

#pragma once

#include <algorithm>

#include "racdraw/core.hpp"

namespace racdraw {

enum class PairRelation { Disjoint, SharedEndpointOnly, ProperCrossing, Touch, Overlap };

inline const char* to_string(PairRelation r) {
    switch (r) {
        case PairRelation::Disjoint: return "Disjoint";
        case PairRelation::SharedEndpointOnly: return "SharedEndpointOnly";
        case PairRelation::ProperCrossing: return "ProperCrossing";
        case PairRelation::Touch: return "Touch";
        case PairRelation::Overlap: return "Overlap";
    }
    return "?";
}

/// `point` is meaningful for SharedEndpointOnly, ProperCrossing and Touch;
/// Overlap reports the common range [point, range_end] with point <= range_end.
struct PairResult {
    PairRelation relation = PairRelation::Disjoint;
    RationalPoint point;
    RationalPoint range_end;
};

namespace detail {

// p is collinear with [a, b]; true iff p lies on the closed segment.
inline bool within_box(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

inline PairResult collinear_pair(Point p0, Point p1, Point q0, Point q1) {
    // Points on a common line order identically under lexicographic (x, y).
    if (p1 < p0) std::swap(p0, p1);
    if (q1 < q0) std::swap(q0, q1);
    const Point lo = std::max(p0, q0);
    const Point hi = std::min(p1, q1);
    if (hi < lo) return {};
    if (lo == hi) return {PairRelation::SharedEndpointOnly, RationalPoint::from(lo), RationalPoint::from(lo)};
    return {PairRelation::Overlap, RationalPoint::from(lo), RationalPoint::from(hi)};
}

} // namespace detail

/// Exact classification of two closed integer segments.
inline PairResult segment_pair(const Point& p0, const Point& p1, const Point& q0, const Point& q1) {
    if (p0 == p1 || q0 == q1) throw Error(ErrorKind::ZeroLengthSegment, "zero-length segment");

    const int o1 = orientation(q0, q1, p0);
    const int o2 = orientation(q0, q1, p1);
    const int o3 = orientation(p0, p1, q0);
    const int o4 = orientation(p0, p1, q1);

    if (o1 == 0 && o2 == 0) return detail::collinear_pair(p0, p1, q0, q1);

    if (o1 * o2 < 0 && o3 * o4 < 0) {
        // p0 + t (p1 - p0), t = cross(q0 - p0, dq) / cross(dp, dq)
        const Vec dp = p1 - p0;
        const Vec dq = q1 - q0;
        const wide_t den = cross(dp, dq);
        const wide_t num = cross(q0 - p0, dq);
        const wide_t x = checked_add(checked_mul(p0.x, den), checked_mul(num, dp.dx));
        const wide_t y = checked_add(checked_mul(p0.y, den), checked_mul(num, dp.dy));
        return {PairRelation::ProperCrossing, {Rational::make(x, den), Rational::make(y, den)}, {}};
    }

    // Remaining contacts involve at least one endpoint lying on the other segment.
    const Point* contact = nullptr;
    if (o1 == 0 && detail::within_box(q0, q1, p0)) contact = &p0;
    else if (o2 == 0 && detail::within_box(q0, q1, p1)) contact = &p1;
    else if (o3 == 0 && detail::within_box(p0, p1, q0)) contact = &q0;
    else if (o4 == 0 && detail::within_box(p0, p1, q1)) contact = &q1;
    if (!contact) return {};

    const Point c = *contact;
    const bool end_of_p = c == p0 || c == p1;
    const bool end_of_q = c == q0 || c == q1;
    const auto at = RationalPoint::from(c);
    if (end_of_p && end_of_q) return {PairRelation::SharedEndpointOnly, at, at};
    return {PairRelation::Touch, at, at};
}

inline PairResult segment_pair(const Segment& a, const Segment& b) { return segment_pair(a.from, a.to, b.from, b.to); }

} // namespace racdraw

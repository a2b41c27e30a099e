#pragma once

// Certification of right-angle-crossing drawings.
//
// Every segment pair that can meet is classified exactly. A drawing is
// certified when all proper crossings are perpendicular, involve only the
// class pairs (S2,S3), (S3,S4), (S4,S5), and there are no overlaps, touches,
// vertex pass-throughs, zero-length segments or coincident points.
//
// BruteForce checks all O(P^2) pairs. Filtered enumerates a superset of the
// pairs that can meet: parallel segments are only compared when they lie on
// a common line, and the rest go through an x-sorted sweep with a y-range
// test. Both paths feed the same examiner and both reports are sorted
// canonically, so they compare equal.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "racdraw/core.hpp"
#include "racdraw/segment_pair.hpp"

namespace racdraw {

enum class ValidationMode { BruteForce, Filtered };

enum class DefectKind {
    NonPerpendicularCrossing,
    DisallowedClassPair,
    SelfCrossing,
    CollinearOverlap,
    EndpointTouchesInterior,
    SegmentThroughVertex,
    ZeroLengthSegment,
    CoincidentPoints,
};

inline const char* to_string(DefectKind k) {
    switch (k) {
        case DefectKind::NonPerpendicularCrossing: return "NonPerpendicularCrossing";
        case DefectKind::DisallowedClassPair: return "DisallowedClassPair";
        case DefectKind::SelfCrossing: return "SelfCrossing";
        case DefectKind::CollinearOverlap: return "CollinearOverlap";
        case DefectKind::EndpointTouchesInterior: return "EndpointTouchesInterior";
        case DefectKind::SegmentThroughVertex: return "SegmentThroughVertex";
        case DefectKind::ZeroLengthSegment: return "ZeroLengthSegment";
        case DefectKind::CoincidentPoints: return "CoincidentPoints";
    }
    return "?";
}

/// A drawing element named by a defect. `index` is the segment class (1..7)
/// for segments, the bend number (1..6, a..f) for bends, and 0 for vertices.
struct Element {
    enum class Kind { Vertex, Bend, Segment };
    Kind kind = Kind::Vertex;
    std::size_t id = 0;
    int index = 0;

    static Element vertex(std::size_t v) { return {Kind::Vertex, v, 0}; }
    static Element bend(std::size_t edge, int b) { return {Kind::Bend, edge, b}; }
    static Element segment(std::size_t edge, SegmentClass c) { return {Kind::Segment, edge, index_of(c)}; }

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

struct Defect {
    DefectKind kind{};
    std::vector<Element> participants;
    RationalPoint from; // location; from == to for point defects
    RationalPoint to;

    friend bool operator==(const Defect&, const Defect&) = default;
    friend auto operator<=>(const Defect&, const Defect&) = default;
};

struct Crossing {
    std::size_t edge_a = 0;
    SegmentClass class_a{};
    std::size_t edge_b = 0;
    SegmentClass class_b{};
    RationalPoint at;
    bool perpendicular = false;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct BoundingBox {
    coord_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    coord_t width() const { return xmax - xmin; }
    coord_t height() const { return ymax - ymin; }
    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

using ClassPair = std::pair<int, int>; // unordered, first <= second

struct CrossingReport {
    std::vector<Crossing> crossings;
    std::vector<Defect> violations;
    BoundingBox bbox;
    std::map<ClassPair, std::size_t> class_pair_counts;

    bool certified() const { return violations.empty(); }
    friend bool operator==(const CrossingReport&, const CrossingReport&) = default;
};

inline bool allowed_crossing_classes(ClassPair cp) {
    return cp == ClassPair{2, 3} || cp == ClassPair{3, 4} || cp == ClassPair{4, 5};
}

inline BoundingBox bounding_box(const Drawing& d) {
    if (d.vertices.empty()) throw Error(ErrorKind::EmptyDrawing, "empty drawing");
    BoundingBox box{d.vertices[0].point.x, d.vertices[0].point.x, d.vertices[0].point.y, d.vertices[0].point.y};
    auto grow = [&](const Point& p) {
        box.xmin = std::min(box.xmin, p.x);
        box.xmax = std::max(box.xmax, p.x);
        box.ymin = std::min(box.ymin, p.y);
        box.ymax = std::max(box.ymax, p.y);
    };
    for (const auto& v : d.vertices) grow(v.point);
    for (const auto& e : d.edges)
        for (const auto& b : e.bends) grow(b);
    return box;
}

// ---------------------------------------------------------------------------
// Segment table and candidate enumeration

struct IndexedSegment {
    std::size_t edge = 0;
    Segment seg;
};

/// All segments in (edge, class) order; a table index therefore orders pairs
/// canonically.
inline std::vector<IndexedSegment> segment_table(const Drawing& d) {
    std::vector<IndexedSegment> out;
    out.reserve(d.edges.size() * kSegmentsPerEdge);
    for (std::size_t e = 0; e < d.edges.size(); ++e)
        for (const Segment& s : d.edges[e].segments()) out.push_back({e, s});
    return out;
}

enum class CandidateKind { Crossing, Collinear };

namespace detail {

struct SweepItem {
    coord_t xmin, xmax, ymin, ymax;
    std::uint32_t dir;
    std::uint32_t index;
};

inline std::vector<std::uint32_t> direction_ids(const std::vector<IndexedSegment>& segs, std::vector<Vec>& dirs) {
    std::map<Vec, std::uint32_t> ids;
    std::vector<std::uint32_t> out(segs.size(), 0);
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (segs[i].seg.is_degenerate()) continue;
        const Vec d = primitive_direction(segs[i].seg.direction());
        auto [it, fresh] = ids.try_emplace(d, static_cast<std::uint32_t>(dirs.size()));
        if (fresh) dirs.push_back(d);
        out[i] = it->second;
    }
    return out;
}

} // namespace detail

/// Visits (kind, i, j), i < j, for a superset of the index pairs of `segs`
/// that can share a point. Degenerate segments are never emitted.
template <class Visitor>
void filtered_pair_stream(const std::vector<IndexedSegment>& segs, Visitor&& visit) {
    std::vector<Vec> dirs;
    const auto dir_of = detail::direction_ids(segs, dirs);

    // Parallel segments: bucket by (direction, line), sweep along the line.
    struct LineItem {
        std::uint32_t dir;
        wide_t offset;
        wide_t tmin, tmax;
        std::uint32_t index;
    };
    std::vector<LineItem> on_lines;
    std::vector<detail::SweepItem> sweep;
    on_lines.reserve(segs.size());
    sweep.reserve(segs.size());
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Segment& s = segs[i].seg;
        if (s.is_degenerate()) continue;
        const Vec dv = dirs[dir_of[i]];
        const wide_t offset = static_cast<wide_t>(dv.dy) * s.from.x - static_cast<wide_t>(dv.dx) * s.from.y;
        const wide_t t0 = static_cast<wide_t>(dv.dx) * s.from.x + static_cast<wide_t>(dv.dy) * s.from.y;
        const wide_t t1 = static_cast<wide_t>(dv.dx) * s.to.x + static_cast<wide_t>(dv.dy) * s.to.y;
        on_lines.push_back({dir_of[i], offset, std::min(t0, t1), std::max(t0, t1), static_cast<std::uint32_t>(i)});
        sweep.push_back({std::min(s.from.x, s.to.x), std::max(s.from.x, s.to.x), std::min(s.from.y, s.to.y),
                         std::max(s.from.y, s.to.y), dir_of[i], static_cast<std::uint32_t>(i)});
    }

    auto emit = [&](CandidateKind kind, std::uint32_t a, std::uint32_t b) {
        if (a < b) visit(kind, std::size_t{a}, std::size_t{b});
        else visit(kind, std::size_t{b}, std::size_t{a});
    };

    std::sort(on_lines.begin(), on_lines.end(), [](const LineItem& a, const LineItem& b) {
        if (a.dir != b.dir) return a.dir < b.dir;
        if (a.offset != b.offset) return a.offset < b.offset;
        if (a.tmin != b.tmin) return a.tmin < b.tmin;
        return a.index < b.index;
    });
    for (std::size_t g = 0; g < on_lines.size();) {
        std::size_t end = g;
        while (end < on_lines.size() && on_lines[end].dir == on_lines[g].dir && on_lines[end].offset == on_lines[g].offset)
            ++end;
        for (std::size_t a = g; a < end; ++a)
            for (std::size_t b = a + 1; b < end && on_lines[b].tmin <= on_lines[a].tmax; ++b)
                emit(CandidateKind::Collinear, on_lines[a].index, on_lines[b].index);
        g = end;
    }

    // Non-parallel segments: sweep in x, keep segments whose x-span is still open.
    std::sort(sweep.begin(), sweep.end(), [](const detail::SweepItem& a, const detail::SweepItem& b) {
        if (a.xmin != b.xmin) return a.xmin < b.xmin;
        return a.index < b.index;
    });
    std::vector<detail::SweepItem> active;
    for (const auto& cur : sweep) {
        std::size_t keep = 0;
        for (std::size_t t = 0; t < active.size(); ++t) {
            const auto& other = active[t];
            if (other.xmax < cur.xmin) continue;
            active[keep++] = other;
            if (other.dir != cur.dir && other.ymin <= cur.ymax && cur.ymin <= other.ymax)
                emit(CandidateKind::Crossing, other.index, cur.index);
        }
        active.resize(keep);
        active.push_back(cur);
    }
}

template <class Visitor>
void filtered_pair_stream(const Drawing& d, Visitor&& visit) {
    filtered_pair_stream(segment_table(d), std::forward<Visitor>(visit));
}

// ---------------------------------------------------------------------------
// Validation

namespace detail {

class Examiner {
public:
    Examiner(const Drawing& d, const std::vector<IndexedSegment>& segs) : drawing_(d), segs_(segs) {
        vertex_points_.reserve(d.vertices.size());
        for (const auto& v : d.vertices) vertex_points_.push_back(v.point);
        std::sort(vertex_points_.begin(), vertex_points_.end());
    }

    // i < j, both non-degenerate.
    void pair(std::size_t i, std::size_t j) {
        const IndexedSegment& a = segs_[i];
        const IndexedSegment& b = segs_[j];
        const int ca = index_of(a.seg.cls), cb = index_of(b.seg.cls);
        if (a.edge == b.edge && (ca - cb == 1 || cb - ca == 1)) return;

        const PairResult r = segment_pair(a.seg, b.seg);
        switch (r.relation) {
            case PairRelation::Disjoint:
            case PairRelation::SharedEndpointOnly:
                // Coincident bends are reported by the point pass.
                return;
            case PairRelation::ProperCrossing: {
                const bool perp = dot(a.seg.direction(), b.seg.direction()) == 0;
                report_.crossings.push_back({a.edge, a.seg.cls, b.edge, b.seg.cls, r.point, perp});
                const ClassPair cp{std::min(ca, cb), std::max(ca, cb)};
                ++report_.class_pair_counts[cp];
                const std::vector<Element> who{Element::segment(a.edge, a.seg.cls), Element::segment(b.edge, b.seg.cls)};
                if (a.edge == b.edge) defect(DefectKind::SelfCrossing, who, r.point, r.point);
                if (!perp) defect(DefectKind::NonPerpendicularCrossing, who, r.point, r.point);
                if (!allowed_crossing_classes(cp)) defect(DefectKind::DisallowedClassPair, who, r.point, r.point);
                return;
            }
            case PairRelation::Touch: {
                const Point p{static_cast<coord_t>(r.point.x.num), static_cast<coord_t>(r.point.y.num)};
                // A vertex inside a segment is reported by the vertex pass.
                if (std::binary_search(vertex_points_.begin(), vertex_points_.end(), p)) return;
                defect(DefectKind::EndpointTouchesInterior,
                       {Element::segment(a.edge, a.seg.cls), Element::segment(b.edge, b.seg.cls)}, r.point, r.point);
                return;
            }
            case PairRelation::Overlap:
                defect(DefectKind::CollinearOverlap,
                       {Element::segment(a.edge, a.seg.cls), Element::segment(b.edge, b.seg.cls)}, r.point,
                       r.range_end);
                return;
        }
    }

    void vertex_on_segment(std::size_t v, std::size_t i) {
        const Segment& s = segs_[i].seg;
        const Point& p = drawing_.vertices[v].point;
        if (p == s.from || p == s.to) return;
        if (orientation(s.from, s.to, p) != 0) return;
        if (!detail::within_box(s.from, s.to, p)) return;
        const auto at = RationalPoint::from(p);
        defect(DefectKind::SegmentThroughVertex, {Element::vertex(v), Element::segment(segs_[i].edge, s.cls)}, at, at);
    }

    void single_element_passes() {
        for (const auto& s : segs_)
            if (s.seg.is_degenerate()) {
                const auto at = RationalPoint::from(s.seg.from);
                defect(DefectKind::ZeroLengthSegment, {Element::segment(s.edge, s.seg.cls)}, at, at);
            }

        std::vector<std::pair<Point, Element>> pts;
        pts.reserve(drawing_.vertices.size() + drawing_.edges.size() * kBendsPerEdge);
        for (std::size_t v = 0; v < drawing_.vertices.size(); ++v) pts.push_back({drawing_.vertices[v].point, Element::vertex(v)});
        for (std::size_t e = 0; e < drawing_.edges.size(); ++e)
            for (std::size_t b = 0; b < kBendsPerEdge; ++b)
                pts.push_back({drawing_.edges[e].bends[b], Element::bend(e, static_cast<int>(b) + 1)});
        std::sort(pts.begin(), pts.end());
        for (std::size_t g = 0; g < pts.size();) {
            std::size_t end = g + 1;
            while (end < pts.size() && pts[end].first == pts[g].first) ++end;
            if (end - g > 1) {
                std::vector<Element> who;
                for (std::size_t t = g; t < end; ++t) who.push_back(pts[t].second);
                const auto at = RationalPoint::from(pts[g].first);
                defect(DefectKind::CoincidentPoints, std::move(who), at, at);
            }
            g = end;
        }
    }

    CrossingReport finish() {
        report_.bbox = bounding_box(drawing_);
        std::sort(report_.crossings.begin(), report_.crossings.end(), [](const Crossing& x, const Crossing& y) {
            return std::tie(x.edge_a, x.edge_b, x.class_a, x.class_b, x.at) <
                   std::tie(y.edge_a, y.edge_b, y.class_a, y.class_b, y.at);
        });
        std::sort(report_.violations.begin(), report_.violations.end());
        return std::move(report_);
    }

private:
    void defect(DefectKind kind, std::vector<Element> who, const RationalPoint& from, const RationalPoint& to) {
        report_.violations.push_back({kind, std::move(who), from, to});
    }

    const Drawing& drawing_;
    const std::vector<IndexedSegment>& segs_;
    std::vector<Point> vertex_points_;
    CrossingReport report_;
};

} // namespace detail

inline CrossingReport validate(const Drawing& d, ValidationMode mode = ValidationMode::Filtered) {
    const auto segs = segment_table(d);
    detail::Examiner ex(d, segs);
    ex.single_element_passes();

    if (mode == ValidationMode::BruteForce) {
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (segs[i].seg.is_degenerate()) continue;
            for (std::size_t j = i + 1; j < segs.size(); ++j)
                if (!segs[j].seg.is_degenerate()) ex.pair(i, j);
        }
        for (std::size_t v = 0; v < d.vertices.size(); ++v)
            for (std::size_t i = 0; i < segs.size(); ++i)
                if (!segs[i].seg.is_degenerate()) ex.vertex_on_segment(v, i);
        return ex.finish();
    }

    filtered_pair_stream(segs, [&](CandidateKind, std::size_t i, std::size_t j) { ex.pair(i, j); });

    std::vector<std::pair<Point, std::size_t>> by_x;
    by_x.reserve(d.vertices.size());
    for (std::size_t v = 0; v < d.vertices.size(); ++v) by_x.push_back({d.vertices[v].point, v});
    std::sort(by_x.begin(), by_x.end());
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Segment& s = segs[i].seg;
        if (s.is_degenerate()) continue;
        const coord_t lo = std::min(s.from.x, s.to.x), hi = std::max(s.from.x, s.to.x);
        auto it = std::lower_bound(by_x.begin(), by_x.end(), lo, [](const auto& e, coord_t x) { return e.first.x < x; });
        for (; it != by_x.end() && it->first.x <= hi; ++it) ex.vertex_on_segment(it->second, i);
    }
    return ex.finish();
}

// ---------------------------------------------------------------------------
// Summary statistics

struct DrawingStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t bends_min = 0;
    std::size_t bends_max = 0;
    std::size_t straight_bends = 0; // bend points with zero turn
    coord_t width = 0;
    coord_t height = 0;
    wide_t area = 0;
    double area_ratio = 0; // area / n^(11/4)
    std::size_t crossings = 0;
    std::size_t violations = 0;
    std::map<ClassPair, std::size_t> class_pair_counts;
};

inline DrawingStats stats(const Drawing& d, const CrossingReport& report) {
    DrawingStats s;
    s.n = d.vertices.size();
    s.m = d.edges.size();
    s.bends_min = d.edges.empty() ? 0 : kBendsPerEdge;
    s.bends_max = s.bends_min;
    for (const auto& e : d.edges) {
        const auto pts = e.chain();
        for (std::size_t t = 1; t + 1 < pts.size(); ++t)
            if (pts[t - 1] != pts[t] && pts[t] != pts[t + 1] && orientation(pts[t - 1], pts[t], pts[t + 1]) == 0)
                ++s.straight_bends;
    }
    s.width = report.bbox.width();
    s.height = report.bbox.height();
    s.area = static_cast<wide_t>(s.width) * s.height;
    s.area_ratio = static_cast<double>(s.area) / std::pow(static_cast<double>(s.n), 2.75);
    s.crossings = report.crossings.size();
    s.violations = report.violations.size();
    s.class_pair_counts = report.class_pair_counts;
    return s;
}

inline DrawingStats stats(const Drawing& d) { return stats(d, validate(d, ValidationMode::Filtered)); }

} // namespace racdraw

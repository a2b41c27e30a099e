#pragma once

// Six-bend right-angle-crossing layout on the integer grid.
//
// Vertices are split into l^2 levels of l^2 slots (l = ceil(n^(1/4))). Every
// edge leaves its source upwards, climbs along slope 1/l^3, drops along
// slope -l^3 towards the target level, runs back along 1/l^3, drops again
// along -l^3 and finishes with a vertical segment into the target. Segments
// from the two slope families are the only ones that cross, and those
// families are perpendicular by construction.

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "racdraw/core.hpp"

namespace racdraw {

/// l beyond which 128-bit intersection arithmetic is no longer guaranteed.
inline constexpr std::int64_t kMaxSupportedL = 64;

struct GraphInput {
    std::size_t n = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
};

/// Smallest l with l^4 >= n, by integer search.
inline std::int64_t ceil_fourth_root(std::int64_t n) {
    std::int64_t l = 1;
    while (l * l * l * l < n) ++l;
    return l;
}

inline GridParams params_from_n(std::int64_t n) {
    if (n <= 0) throw Error(ErrorKind::EmptyGraph, "empty graph");
    const std::int64_t l = ceil_fourth_root(n);
    if (l > kMaxSupportedL)
        throw Error(ErrorKind::LimitExceeded, "l = " + std::to_string(l) + " exceeds supported maximum " +
                                                  std::to_string(kMaxSupportedL));
    GridParams p;
    p.n_input = n;
    p.l = l;
    p.levels = l * l;
    p.per_level = l * l;
    p.capacity = p.levels * p.per_level;
    p.slope_num = 1;
    p.slope_den = l * l * l;
    p.level_gap = 8 * l * l * l + l + 1;
    p.col_gap = p.capacity + 1;
    p.level_shift = l * l + 8;
    return p;
}

inline LevelPos level_pos_of(const GridParams& p, VertexId v) {
    const auto id = static_cast<std::int64_t>(v);
    return {id / p.per_level + 1, id % p.per_level + 1};
}

inline Point point_of(const GridParams& p, const LevelPos& lp) {
    return {(lp.level - 1) * p.level_shift + (lp.pos - 1) * p.col_gap, -(lp.level - 1) * p.level_gap};
}

/// Row-major placement of vertices 0..n-1; V(1,1) sits at the origin.
inline std::vector<VertexPlacement> place_vertices(const GridParams& p, std::size_t n) {
    if (static_cast<std::int64_t>(n) > p.capacity) throw Error(ErrorKind::CapacityExceeded, "capacity exceeded");
    std::vector<VertexPlacement> out;
    out.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        const LevelPos lp = level_pos_of(p, static_cast<VertexId>(v));
        out.push_back({lp, point_of(p, lp)});
    }
    return out;
}

/// Routes the edge from `src` (level i, pos j) to `dst` (level u, pos w).
/// Requires src strictly before dst in (level, pos) order.
inline EdgePolyline route_edge(const GridParams& p, const VertexPlacement& src, const VertexPlacement& dst) {
    if (!(src.pos < dst.pos)) throw Error(ErrorKind::InvalidEdgeOrientation, "invalid edge orientation");

    const std::int64_t l = p.l;
    const std::int64_t l3 = p.slope_den;
    const std::int64_t s = p.per_level;
    const std::int64_t N = p.capacity;
    const std::int64_t i = src.pos.level, j = src.pos.pos;
    const std::int64_t u = dst.pos.level, w = dst.pos.pos;

    const std::int64_t k = u * s - w + 1;
    const std::int64_t rise = s - j + i;         // climb of the second segment, in units of l
    const std::int64_t drop = 8 * (u - i + 1) - 1; // run of the third segment
    const std::int64_t back = i + s - w;         // return of the fourth segment, in units of N

    EdgePolyline out;
    out.source_pos = src.pos;
    out.target_pos = dst.pos;
    out.source_point = src.point;
    out.target_point = dst.point;
    out.k = k;

    auto& [a, b, c, d, e, f] = out.bends;
    a = {src.point.x + k, src.point.y + 1};
    b = {a.x + rise * N + l3, a.y + rise * l + 1};
    c = {b.x + drop, b.y - drop * l3};
    d = {c.x - back * N - l3, c.y - back * l - 1};
    e = {d.x - 3, d.y + 3 * l3};
    f = {e.x, dst.point.y - 1};
    return out;
}

namespace detail {

inline EdgePolyline route_ids(const GridParams& p, const std::vector<VertexPlacement>& vs, VertexId a, VertexId b) {
    if (b < a) std::swap(a, b);
    EdgePolyline e = route_edge(p, vs[a], vs[b]);
    e.source = a;
    e.target = b;
    return e;
}

inline void check_graph(const GraphInput& g) {
    if (g.n == 0) throw Error(ErrorKind::EmptyGraph, "empty graph");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(g.edges.size() * 2);
    for (auto [a, b] : g.edges) {
        if (a >= g.n || b >= g.n)
            throw Error(ErrorKind::IdOutOfRange, "vertex id out of range in edge " + std::to_string(a) + " " +
                                                     std::to_string(b));
        if (a == b) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a));
        if (b < a) std::swap(a, b);
        const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        if (!seen.insert(key).second)
            throw Error(ErrorKind::DuplicateEdge, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    }
}

} // namespace detail

/// Draws any simple graph as a subgraph of the complete construction on
/// capacity l^4 vertices. Edge polylines keep input order.
inline Drawing draw_graph(const GraphInput& g) {
    detail::check_graph(g);
    Drawing d;
    d.params = params_from_n(static_cast<std::int64_t>(g.n));
    d.vertices = place_vertices(d.params, g.n);
    d.edges.reserve(g.edges.size());
    for (auto [a, b] : g.edges) d.edges.push_back(detail::route_ids(d.params, d.vertices, a, b));
    return d;
}

/// K_n, edges in lexicographic (source, target) order.
inline Drawing draw_complete(std::int64_t n) {
    Drawing d;
    d.params = params_from_n(n);
    d.vertices = place_vertices(d.params, static_cast<std::size_t>(n));
    const auto count = static_cast<std::size_t>(n);
    d.edges.reserve(count * (count - 1) / 2);
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b) {
            EdgePolyline e = route_edge(d.params, d.vertices[a], d.vertices[b]);
            e.source = static_cast<VertexId>(a);
            e.target = static_cast<VertexId>(b);
            d.edges.push_back(e);
        }
    return d;
}

} // namespace racdraw

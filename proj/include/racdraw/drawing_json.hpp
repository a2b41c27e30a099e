#pragma once

// JSON documents for drawings and validation reports. Every integer is
// written as a decimal string so no consumer ever sees a binary float.

#include <charconv>
#include <string>
#include <string_view>

#include <json.hpp>

#include "racdraw/layout.hpp"
#include "racdraw/validator.hpp"

namespace racdraw {

inline constexpr std::string_view kDrawingSchema = "racdraw.drawing/1";
inline constexpr std::string_view kReportSchema = "racdraw.report/1";

namespace detail {

using nlohmann::json;

inline std::string istr(std::int64_t v) { return std::to_string(v); }

inline std::int64_t parse_int(const json& j, std::string_view what, ErrorKind kind) {
    if (!j.is_string()) throw Error(kind, std::string(what) + ": expected integer string");
    const auto& s = j.get_ref<const std::string&>();
    std::int64_t out = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (s.empty() || ec != std::errc() || ptr != last)
        throw Error(kind, std::string(what) + ": not an integer: \"" + s + "\"");
    return out;
}

inline const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw Error(ErrorKind::SchemaMismatch, std::string("missing field '") + key + "'");
    return obj.at(key);
}

inline std::int64_t int_field(const json& obj, const char* key) {
    return parse_int(field(obj, key), key, ErrorKind::SchemaMismatch);
}

inline std::int64_t coord_field(const json& obj, const char* key) {
    return parse_int(field(obj, key), key, ErrorKind::NonIntegerCoordinate);
}

inline json params_json(const GridParams& p) {
    return json{{"n_input", istr(p.n_input)},     {"l", istr(p.l)},
                {"capacity", istr(p.capacity)},   {"levels", istr(p.levels)},
                {"per_level", istr(p.per_level)}, {"slope_num", istr(p.slope_num)},
                {"slope_den", istr(p.slope_den)}, {"level_gap", istr(p.level_gap)},
                {"col_gap", istr(p.col_gap)},     {"level_shift", istr(p.level_shift)}};
}

inline std::string rational_string(const Rational& r) { return to_string(r); }

inline json point_json(const RationalPoint& p) { return json::array({rational_string(p.x), rational_string(p.y)}); }

inline const char* element_kind(Element::Kind k) {
    switch (k) {
        case Element::Kind::Vertex: return "vertex";
        case Element::Kind::Bend: return "bend";
        case Element::Kind::Segment: return "segment";
    }
    return "?";
}

} // namespace detail

inline nlohmann::json drawing_to_json(const Drawing& d) {
    using detail::istr;
    using nlohmann::json;
    json vertices = json::array();
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        const auto& vp = d.vertices[v];
        vertices.push_back({{"id", istr(static_cast<std::int64_t>(v))},
                            {"level", istr(vp.pos.level)},
                            {"pos", istr(vp.pos.pos)},
                            {"x", istr(vp.point.x)},
                            {"y", istr(vp.point.y)}});
    }
    json edges = json::array();
    for (const auto& e : d.edges) {
        json bends = json::array();
        for (const auto& b : e.bends) bends.push_back(json::array({istr(b.x), istr(b.y)}));
        edges.push_back({{"source", istr(e.source)}, {"target", istr(e.target)}, {"k", istr(e.k)}, {"bends", bends}});
    }
    return json{{"schema", kDrawingSchema},
                {"n", istr(static_cast<std::int64_t>(d.vertices.size()))},
                {"m", istr(static_cast<std::int64_t>(d.edges.size()))},
                {"l", istr(d.params.l)},
                {"params", detail::params_json(d.params)},
                {"vertices", vertices},
                {"edges", edges}};
}

/// Byte-stable: keys sorted, one-space indentation, trailing newline.
inline std::string write_drawing(const Drawing& d) { return drawing_to_json(d).dump(1) + "\n"; }

inline Drawing drawing_from_json(const nlohmann::json& doc) {
    using detail::coord_field;
    using detail::field;
    using detail::int_field;

    if (!doc.is_object() || !doc.contains("schema") || doc.at("schema") != kDrawingSchema)
        throw Error(ErrorKind::SchemaMismatch, "unknown or missing schema tag");

    Drawing d;
    const std::int64_t n = int_field(doc, "n");
    d.params = params_from_n(n);
    const auto& pj = field(doc, "params");
    const GridParams stated{int_field(pj, "n_input"),   int_field(pj, "l"),         int_field(pj, "capacity"),
                            int_field(pj, "levels"),    int_field(pj, "per_level"), int_field(pj, "slope_num"),
                            int_field(pj, "slope_den"), int_field(pj, "level_gap"), int_field(pj, "col_gap"),
                            int_field(pj, "level_shift")};
    if (!(stated == d.params) || int_field(doc, "l") != d.params.l)
        throw Error(ErrorKind::SchemaMismatch, "params do not match n = " + std::to_string(n));

    const auto& vj = field(doc, "vertices");
    if (!vj.is_array() || static_cast<std::int64_t>(vj.size()) != n)
        throw Error(ErrorKind::SchemaMismatch, "vertex array size does not match n");
    d.vertices.reserve(vj.size());
    for (std::size_t v = 0; v < vj.size(); ++v) {
        const auto& x = vj[v];
        if (int_field(x, "id") != static_cast<std::int64_t>(v))
            throw Error(ErrorKind::SchemaMismatch, "vertex ids must be 0..n-1 in order");
        VertexPlacement vp{{int_field(x, "level"), int_field(x, "pos")}, {coord_field(x, "x"), coord_field(x, "y")}};
        if (vp.pos.level < 1 || vp.pos.level > d.params.levels || vp.pos.pos < 1 || vp.pos.pos > d.params.per_level)
            throw Error(ErrorKind::SchemaMismatch, "vertex " + std::to_string(v) + " level/pos out of range");
        d.vertices.push_back(vp);
    }

    const auto& ej = field(doc, "edges");
    if (!ej.is_array()) throw Error(ErrorKind::SchemaMismatch, "edges must be an array");
    if (int_field(doc, "m") != static_cast<std::int64_t>(ej.size()))
        throw Error(ErrorKind::SchemaMismatch, "m does not match edge array size");
    d.edges.reserve(ej.size());
    for (const auto& x : ej) {
        const std::int64_t s = int_field(x, "source"), t = int_field(x, "target");
        if (s < 0 || t < 0 || s >= n || t >= n) throw Error(ErrorKind::SchemaMismatch, "edge endpoint out of range");
        EdgePolyline e;
        e.source = static_cast<VertexId>(s);
        e.target = static_cast<VertexId>(t);
        e.source_pos = d.vertices[e.source].pos;
        e.target_pos = d.vertices[e.target].pos;
        e.source_point = d.vertices[e.source].point;
        e.target_point = d.vertices[e.target].point;
        e.k = int_field(x, "k");
        if (!(e.source_pos < e.target_pos)) throw Error(ErrorKind::SchemaMismatch, "edge source must precede target");
        const auto& bj = field(x, "bends");
        if (!bj.is_array() || bj.size() != kBendsPerEdge)
            throw Error(ErrorKind::SchemaMismatch, "each edge needs exactly 6 bends");
        for (std::size_t b = 0; b < kBendsPerEdge; ++b) {
            if (!bj[b].is_array() || bj[b].size() != 2) throw Error(ErrorKind::SchemaMismatch, "bend must be [x, y]");
            e.bends[b] = {detail::parse_int(bj[b][0], "bend x", ErrorKind::NonIntegerCoordinate),
                          detail::parse_int(bj[b][1], "bend y", ErrorKind::NonIntegerCoordinate)};
        }
        d.edges.push_back(e);
    }
    return d;
}

inline Drawing read_drawing(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw Error(ErrorKind::SchemaMismatch, std::string("invalid JSON: ") + ex.what());
    }
    return drawing_from_json(doc);
}

// ---------------------------------------------------------------------------

inline std::string class_pair_key(ClassPair cp) {
    return "S" + std::to_string(cp.first) + "-S" + std::to_string(cp.second);
}

inline nlohmann::json report_to_json(const CrossingReport& r) {
    using detail::istr;
    using nlohmann::json;
    json crossings = json::array();
    for (const auto& c : r.crossings)
        crossings.push_back({{"edge_a", istr(static_cast<std::int64_t>(c.edge_a))},
                             {"class_a", to_string(c.class_a)},
                             {"edge_b", istr(static_cast<std::int64_t>(c.edge_b))},
                             {"class_b", to_string(c.class_b)},
                             {"at", detail::point_json(c.at)},
                             {"perpendicular", c.perpendicular}});
    json violations = json::array();
    for (const auto& v : r.violations) {
        json who = json::array();
        for (const auto& e : v.participants)
            who.push_back({{"kind", detail::element_kind(e.kind)},
                           {"id", istr(static_cast<std::int64_t>(e.id))},
                           {"index", istr(e.index)}});
        violations.push_back({{"kind", to_string(v.kind)},
                              {"participants", who},
                              {"from", detail::point_json(v.from)},
                              {"to", detail::point_json(v.to)}});
    }
    json pairs = json::object();
    for (const auto& [cp, count] : r.class_pair_counts) pairs[class_pair_key(cp)] = istr(static_cast<std::int64_t>(count));
    return json{{"schema", kReportSchema},
                {"bbox",
                 {{"xmin", istr(r.bbox.xmin)}, {"xmax", istr(r.bbox.xmax)}, {"ymin", istr(r.bbox.ymin)}, {"ymax", istr(r.bbox.ymax)}}},
                {"crossing_count", istr(static_cast<std::int64_t>(r.crossings.size()))},
                {"violation_count", istr(static_cast<std::int64_t>(r.violations.size()))},
                {"class_pairs", pairs},
                {"crossings", crossings},
                {"violations", violations}};
}

inline std::string write_report(const CrossingReport& r) { return report_to_json(r).dump(1) + "\n"; }

} // namespace racdraw

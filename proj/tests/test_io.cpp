#include <gtest/gtest.h>

#include <random>
#include <regex>

#include "racdraw/drawing_json.hpp"
#include "racdraw/edge_list.hpp"
#include "racdraw/svg.hpp"
#include "xml_check.hpp"

using namespace racdraw;

namespace {

ErrorKind parse_error_kind(std::string_view text, std::size_t* line = nullptr) {
    try {
        parse_edge_list(text);
    } catch (const Error& e) {
        if (line && e.line()) *line = *e.line();
        return e.kind();
    }
    ADD_FAILURE() << "expected parse error for: " << text;
    return ErrorKind::EmptyGraph;
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + needle.size())) ++n;
    return n;
}

} // namespace

TEST(EdgeList, ParsesSimpleGraph) {
    const GraphInput g = parse_edge_list("n 2\n0 1");
    EXPECT_EQ(g.n, 2u);
    ASSERT_EQ(g.edges.size(), 1u);
    EXPECT_EQ(g.edges[0], (std::pair<VertexId, VertexId>{0, 1}));
}

TEST(EdgeList, CommentsAndBlankLines) {
    const GraphInput g = parse_edge_list("# a path\n\nn 4   # four vertices\n0 1\n\n 1\t2 \n2 3 # last\n");
    EXPECT_EQ(g.n, 4u);
    EXPECT_EQ(g.edges.size(), 3u);
}

TEST(EdgeList, ErrorKindsCarryLineNumbers) {
    std::size_t line = 0;
    EXPECT_EQ(parse_error_kind("n 3\n0 0", &line), ErrorKind::SelfLoop);
    EXPECT_EQ(line, 2u);
    EXPECT_EQ(parse_error_kind("n 3\n0 1\n1 0", &line), ErrorKind::DuplicateEdge);
    EXPECT_EQ(line, 3u);
    EXPECT_EQ(parse_error_kind("n 3\n0 1\n0 x", &line), ErrorKind::MalformedLine);
    EXPECT_EQ(line, 3u);
    EXPECT_EQ(parse_error_kind("n 3\n0 1 2"), ErrorKind::MalformedLine);
    EXPECT_EQ(parse_error_kind("n 3\n-1 2"), ErrorKind::MalformedLine);
    EXPECT_EQ(parse_error_kind("n 3\n0 3", &line), ErrorKind::IdOutOfRange);
    EXPECT_EQ(line, 2u);
    EXPECT_EQ(parse_error_kind("0 1\n"), ErrorKind::MissingHeader);
    EXPECT_EQ(parse_error_kind("# nothing\n"), ErrorKind::MissingHeader);
    EXPECT_EQ(parse_error_kind("n 0\n"), ErrorKind::EmptyGraph);
}

TEST(EdgeList, CanonicalFormIsAFixedPoint) {
    std::mt19937 rng(5);
    for (int round = 0; round < 20; ++round) {
        GraphInput g{1 + rng() % 30, {}};
        for (VertexId a = 0; a < g.n; ++a)
            for (VertexId b = a + 1; b < g.n; ++b)
                if (rng() % 4 == 0) g.edges.push_back(rng() % 2 ? std::pair{a, b} : std::pair{b, a});
        const std::string once = serialize_edge_list(g);
        const GraphInput back = parse_edge_list(once);
        EXPECT_EQ(back.n, g.n);
        EXPECT_EQ(back.edges, g.edges);
        EXPECT_EQ(serialize_edge_list(back), once);
    }
}

TEST(DrawingJson, RoundTripIdentity) {
    for (std::int64_t n : {1, 2, 5, 16, 17}) {
        const Drawing d = draw_complete(n);
        EXPECT_EQ(read_drawing(write_drawing(d)), d) << "n=" << n;
    }
    const Drawing sub = draw_graph({9, {{8, 0}, {3, 4}}});
    EXPECT_EQ(read_drawing(write_drawing(sub)), sub);
}

TEST(DrawingJson, ByteStable) {
    const std::string a = write_drawing(draw_complete(16));
    const std::string b = write_drawing(draw_complete(16));
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("\"schema\": \"racdraw.drawing/1\""), std::string::npos);
    // all numbers are strings
    EXPECT_FALSE(std::regex_search(a, std::regex(R"([:\[,]\s*-?[0-9])")));
}

TEST(DrawingJson, RejectsNonIntegerCoordinate) {
    auto doc = drawing_to_json(draw_complete(2));
    doc["edges"][0]["bends"][2][0] = "3.5";
    try {
        drawing_from_json(doc);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonIntegerCoordinate);
    }
    auto doc2 = drawing_to_json(draw_complete(2));
    doc2["vertices"][1]["x"] = "3.5";
    EXPECT_THROW(drawing_from_json(doc2), Error);
    auto doc3 = drawing_to_json(draw_complete(2));
    doc3["vertices"][1]["y"] = 7; // a JSON number, not a string
    try {
        drawing_from_json(doc3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonIntegerCoordinate);
    }
}

TEST(DrawingJson, SchemaMismatches) {
    auto expect_schema_error = [](const nlohmann::json& doc) {
        try {
            drawing_from_json(doc);
            ADD_FAILURE() << doc.dump().substr(0, 80);
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::SchemaMismatch) << e.what();
        }
    };
    const auto base = drawing_to_json(draw_complete(3));
    auto d = base;
    d["schema"] = "something/2";
    expect_schema_error(d);
    d = base;
    d.erase("params");
    expect_schema_error(d);
    d = base;
    d["params"]["level_gap"] = "68";
    expect_schema_error(d);
    d = base;
    d["m"] = "7";
    expect_schema_error(d);
    d = base;
    d["edges"][0]["bends"].erase(5);
    expect_schema_error(d);
    d = base;
    std::swap(d["edges"][0]["source"], d["edges"][0]["target"]);
    expect_schema_error(d);
    EXPECT_THROW(read_drawing("{ not json"), Error);
}

TEST(ReportJson, ContainsCountsAndIsDeterministic) {
    const auto r = validate(draw_complete(5));
    const std::string a = write_report(r);
    EXPECT_EQ(a, write_report(validate(draw_complete(5), ValidationMode::BruteForce)));
    const auto j = nlohmann::json::parse(a);
    EXPECT_EQ(j["schema"], "racdraw.report/1");
    EXPECT_EQ(j["violation_count"], "0");
    EXPECT_EQ(j["crossing_count"], std::to_string(r.crossings.size()));
}

TEST(Svg, SingleEdgePolyline) {
    const std::string svg = render_svg(draw_complete(2));
    EXPECT_EQ(count(svg, "<polyline"), 1u);
    const auto start = svg.find("points=\"") + 8;
    const std::string pts = svg.substr(start, svg.find('"', start) - start);
    EXPECT_EQ(count(pts, ","), 8u);
    EXPECT_EQ(count(svg, "<circle class=\"vertex\""), 2u);
    EXPECT_TRUE(xml_check::well_formed(svg));
}

TEST(Svg, ClassColoringAndCrossingMarkers) {
    const Drawing d = draw_complete(16);
    SvgOptions opt;
    opt.color_classes = true;
    const CrossingReport r = validate(d);
    opt.crossings = crossing_points(r);
    const std::string svg = render_svg(d, opt);
    EXPECT_EQ(count(svg, "<line class=\"s"), 840u);
    for (int c = 1; c <= 7; ++c) EXPECT_EQ(count(svg, "<line class=\"s" + std::to_string(c) + "\""), 120u);
    EXPECT_EQ(count(svg, "<circle class=\"crossing\""), r.crossings.size());
    EXPECT_TRUE(xml_check::well_formed(svg));
}

TEST(Svg, WellFormedAcrossSizesAndReadOnly) {
    for (std::int64_t n : {1, 2, 5, 16, 17}) {
        const Drawing d = draw_complete(n);
        const Drawing copy = d;
        EXPECT_TRUE(xml_check::well_formed(render_svg(d))) << n;
        EXPECT_EQ(d, copy);
    }
}

TEST(XmlCheck, RejectsBrokenDocuments) {
    EXPECT_FALSE(xml_check::well_formed("<svg><g></svg>"));
    EXPECT_FALSE(xml_check::well_formed("<svg><line x=\"1/></svg>"));
    EXPECT_FALSE(xml_check::well_formed("<svg></svg><svg></svg>"));
    EXPECT_TRUE(xml_check::well_formed("<?xml version=\"1.0\"?>\n<svg a=\"1\"><g/><text>V1,1</text></svg>\n"));
}

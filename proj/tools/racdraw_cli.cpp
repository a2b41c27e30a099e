// racdraw: draw, certify, measure and render six-bend RAC drawings.
//
// Exit codes: 0 success, 1 drawing not certified, 2 usage or I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <new>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "racdraw/bench.hpp"
#include "racdraw/racdraw.hpp"

namespace {

using namespace racdraw;

constexpr int kOk = 0;
constexpr int kNotCertified = 1;
constexpr int kUsage = 2;

constexpr std::int64_t kDefaultMaxL = 16;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_all(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw UsageError("write to '" + path + "' failed");
}

void check_cap(std::int64_t n, bool allow_large) {
    if (allow_large) return;
    if (ceil_fourth_root(n) > kDefaultMaxL)
        throw UsageError("n = " + std::to_string(n) + " needs l > " + std::to_string(kDefaultMaxL) +
                         "; pass --allow-large to override");
}

Drawing load_drawing(const std::string& path) {
    const std::string text = read_all(path);
    try {
        return read_drawing(text);
    } catch (const Error& e) {
        throw Error(e.kind(), (path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    }
}

ValidationMode parse_mode(const std::string& mode) {
    return mode == "brute" ? ValidationMode::BruteForce : ValidationMode::Filtered;
}

std::string element_name(const Element& e) {
    switch (e.kind) {
        case Element::Kind::Vertex: return "vertex " + std::to_string(e.id);
        case Element::Kind::Bend: return "edge " + std::to_string(e.id) + " bend " + std::string(1, static_cast<char>('a' + e.index - 1));
        case Element::Kind::Segment: return "edge " + std::to_string(e.id) + " S" + std::to_string(e.index);
    }
    return "?";
}

void print_summary(std::ostream& out, const CrossingReport& r) {
    out << "crossings: " << r.crossings.size() << "\n";
    for (const auto& [cp, count] : r.class_pair_counts) out << "  " << class_pair_key(cp) << ": " << count << "\n";
    std::size_t perpendicular = 0;
    for (const auto& c : r.crossings) perpendicular += c.perpendicular;
    out << "perpendicular: " << perpendicular << "/" << r.crossings.size() << "\n";
    out << "violations: " << r.violations.size() << "\n";
    constexpr std::size_t kShown = 20;
    for (std::size_t t = 0; t < r.violations.size() && t < kShown; ++t) {
        const Defect& d = r.violations[t];
        out << "  " << to_string(d.kind) << " at (" << to_string(d.from.x) << ", " << to_string(d.from.y) << "):";
        for (const auto& e : d.participants) out << " [" << element_name(e) << "]";
        out << "\n";
    }
    if (r.violations.size() > kShown) out << "  ... " << r.violations.size() - kShown << " more\n";
    out << "certified: " << (r.certified() ? "yes" : "no") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Six-bend right-angle-crossing drawings on the integer grid"};
    app.require_subcommand(1);

    // draw
    auto* draw = app.add_subcommand("draw", "Compute a drawing and write it as JSON");
    std::int64_t draw_n = 0;
    std::string draw_input, draw_out = "-";
    bool draw_complete_flag = false, draw_large = false;
    auto* opt_n = draw->add_option("--n", draw_n, "Vertex count");
    auto* opt_in = draw->add_option("--input", draw_input, "Edge-list file ('-' for stdin)");
    opt_n->excludes(opt_in);
    opt_in->excludes(opt_n);
    draw->add_flag("--complete", draw_complete_flag, "Draw the complete graph on --n vertices");
    draw->add_option("--out", draw_out, "Output file ('-' for stdout)");
    draw->add_flag("--allow-large", draw_large, "Permit l > 16");

    // validate
    auto* val = app.add_subcommand("validate", "Certify a drawing");
    std::string val_file = "-", val_mode = "filtered", val_report;
    val->add_option("file", val_file, "Drawing JSON ('-' for stdin)");
    val->add_option("--mode", val_mode, "brute | filtered")->check(CLI::IsMember({"brute", "filtered"}));
    val->add_option("--report", val_report, "Write the full JSON report here");

    // stats
    auto* st = app.add_subcommand("stats", "Size, area and crossing statistics");
    std::string st_file = "-", st_mode = "filtered";
    st->add_option("file", st_file, "Drawing JSON ('-' for stdin)");
    st->add_option("--mode", st_mode, "brute | filtered")->check(CLI::IsMember({"brute", "filtered"}));

    // svg
    auto* svg = app.add_subcommand("svg", "Render a drawing as SVG");
    std::string svg_file = "-", svg_out = "-";
    double svg_scale = 4.0;
    bool svg_colors = false, svg_crossings = false, svg_no_labels = false;
    svg->add_option("file", svg_file, "Drawing JSON ('-' for stdin)");
    svg->add_option("--out", svg_out, "Output file ('-' for stdout)");
    svg->add_option("--scale", svg_scale, "Pixels per grid unit")->check(CLI::PositiveNumber);
    svg->add_flag("--color-classes", svg_colors, "Colour segments by class S1..S7");
    svg->add_flag("--crossings", svg_crossings, "Mark every crossing");
    svg->add_flag("--no-labels", svg_no_labels, "Omit vertex labels");

    // bench
    auto* bench = app.add_subcommand("bench", "Time construction of K_{l^4} for l = 2..L");
    std::int64_t bench_l = 4;
    int bench_repeat = 3;
    bool bench_large = false;
    bench->add_option("--l-max", bench_l, "Largest l");
    bench->add_option("--repeat", bench_repeat, "Samples per row (median reported)")->check(CLI::PositiveNumber);
    bench->add_flag("--allow-large", bench_large, "Permit l > 16");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (draw->parsed()) {
            if (!*opt_n && !*opt_in) throw UsageError("draw needs exactly one of --n or --input");
            if (draw_complete_flag && !*opt_n) throw UsageError("--complete requires --n");
            Drawing d;
            if (*opt_in) {
                const GraphInput g = parse_edge_list(read_all(draw_input));
                check_cap(static_cast<std::int64_t>(g.n), draw_large);
                d = draw_graph(g);
            } else {
                if (draw_n <= 0) throw Error(ErrorKind::EmptyGraph, "empty graph");
                check_cap(draw_n, draw_large);
                d = draw_complete_flag ? draw_complete(draw_n) : draw_graph({static_cast<std::size_t>(draw_n), {}});
            }
            write_all(draw_out, write_drawing(d));
            return kOk;
        }

        if (val->parsed()) {
            const Drawing d = load_drawing(val_file);
            const CrossingReport r = validate(d, parse_mode(val_mode));
            if (!val_report.empty()) write_all(val_report, write_report(r));
            print_summary(val_report == "-" ? std::cerr : std::cout, r);
            return r.certified() ? kOk : kNotCertified;
        }

        if (st->parsed()) {
            const Drawing d = load_drawing(st_file);
            const CrossingReport r = validate(d, parse_mode(st_mode));
            const DrawingStats s = stats(d, r);
            std::cout << "n: " << s.n << "\n"
                      << "m: " << s.m << "\n"
                      << "l: " << d.params.l << "\n"
                      << "bends_per_edge: " << s.bends_min;
            if (s.bends_max != s.bends_min) std::cout << ".." << s.bends_max;
            std::cout << "\n"
                      << "straight_bends: " << s.straight_bends << "\n"
                      << "width: " << s.width << "\n"
                      << "height: " << s.height << "\n"
                      << "area: " << to_string(s.area) << "\n";
            char ratio[32];
            std::snprintf(ratio, sizeof ratio, "%.4f", s.area_ratio);
            std::cout << "area_over_n^2.75: " << ratio << "\n"
                      << "crossings: " << s.crossings << "\n";
            for (const auto& [cp, count] : s.class_pair_counts) std::cout << "  " << class_pair_key(cp) << ": " << count << "\n";
            std::cout << "violations: " << s.violations << "\n";
            return kOk;
        }

        if (svg->parsed()) {
            const Drawing d = load_drawing(svg_file);
            SvgOptions opt;
            opt.scale = svg_scale;
            opt.color_classes = svg_colors;
            opt.label_vertices = !svg_no_labels;
            if (svg_crossings) opt.crossings = crossing_points(validate(d));
            write_all(svg_out, render_svg(d, opt));
            return kOk;
        }

        if (bench->parsed()) {
            if (bench_l < 2) throw UsageError("l-max must be ≥ 2");
            if (bench_l > kDefaultMaxL && !bench_large) throw UsageError("l-max above 16 needs --allow-large");
            const auto rows = bench_construction(bench_l, bench_repeat);
            std::printf("%4s %10s %14s %14s %16s\n", "l", "n", "m", "seconds", "ns/(n+m)");
            for (const auto& r : rows)
                std::printf("%4lld %10lld %14lld %14.6f %16.3f\n", static_cast<long long>(r.l), static_cast<long long>(r.n),
                            static_cast<long long>(r.m), r.seconds, r.ns_per_item);
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kUsage;
    }
    return kUsage;
}

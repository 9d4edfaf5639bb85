#include <doctest.h>

#include "moncat/parse.hpp"
#include "moncat/render.hpp"
#include "moncat/theory.hpp"

using namespace moncat;

namespace {

std::string ascii_of(const EquationalTheory& th, const char* expr) {
    return render_ascii(th.sig, *parse_diagram(th.sig, expr));
}

} // namespace

TEST_CASE("ascii goldens") {
    EquationalTheory b = builtin_theory("B");

    CHECK(ascii_of(b, "mu") == "1 --[mu]-------- 1\n"
                               "    [  ]\n"
                               "1 --[  ]\n");

    CHECK(ascii_of(b, "delta . mu") == "1 ----[delta]----[mu]-------- 1\n"
                                       "      [     ]    [  ]\n"
                                       "      [     ]----[  ]\n");

    // A wire below the generator rises once the two upper wires merge.
    CHECK(ascii_of(b, "(mu * id 1) . mu") == "1 --[mu]------[mu]-------- 1\n"
                                             "    [  ]      [  ]\n"
                                             "1 --[  ]    --[  ]\n"
                                             "           /\n"
                                             "1 --------/\n");

    // Unit and counit render as circle-terminated wires, not boxes.
    CHECK(ascii_of(b, "eta . eps") == "    o----o\n");
    CHECK(ascii_of(b, "id 1 * eta") == "1 ----------- 1\n"
                                       "\n"
                                       "      o------ 1\n");

    CHECK(ascii_of(b, "id 1") == "1 ---- 1\n");
    CHECK(ascii_of(b, "id I") == "I\n");
}

TEST_CASE("layout plan geometry is deterministic and well-formed") {
    EquationalTheory g = builtin_theory("G");
    DiagramPtr d = parse_diagram(g.sig, "(id P * deltaO) . (gammaOP * id O)");
    LayoutPlan p1 = plan_layout(g.sig, *d);
    LayoutPlan p2 = plan_layout(g.sig, *d);

    CHECK(p1.boxes.size() == 2);
    CHECK(p1.wires.size() == p2.wires.size());
    for (std::size_t i = 0; i < p1.wires.size(); ++i) CHECK(p1.wires[i].points == p2.wires[i].points);
    CHECK(p1.source_labels == std::vector<std::string>{"P", "O"});
    CHECK(p1.target_labels == std::vector<std::string>{"O", "P", "O"});

    for (const LayoutBox& b : p1.boxes) {
        CHECK(b.row0 <= b.row1);
        CHECK(b.col0 <= b.col1);
        CHECK(b.col1 < p1.cols);
    }
    // Wire polylines only move horizontally or on 45-degree diagonals.
    for (const LayoutWire& w : p1.wires) {
        CHECK(!w.points.empty());
        for (std::size_t k = 0; k + 1 < w.points.size(); ++k) {
            auto [r0, c0] = w.points[k];
            auto [r1, c1] = w.points[k + 1];
            CHECK(c1 >= c0);
            if (r1 != r0) CHECK(c1 - c0 == std::abs(r1 - r0));
        }
    }
}

TEST_CASE("svg output is a standalone document with one shape per element") {
    EquationalTheory b = builtin_theory("B");
    std::string svg = render_svg(b.sig, *parse_diagram(b.sig, "delta . mu"));
    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    auto count = [&](const std::string& needle) {
        std::size_t n = 0;
        for (std::size_t at = svg.find(needle); at != std::string::npos;
             at = svg.find(needle, at + 1))
            ++n;
        return n;
    };
    CHECK(count("<rect") == 2);      // two generator boxes
    CHECK(count("<polyline") == 4);  // in, middle pair, out
    CHECK(count(">delta<") == 1);
    CHECK(count(">mu<") == 1);

    std::string circles = render_svg(b.sig, *parse_diagram(b.sig, "eta . eps"));
    CHECK(circles.find("<circle") != std::string::npos);
    CHECK(circles.find("<rect") == std::string::npos);

    CHECK(render_svg(b.sig, *parse_diagram(b.sig, "delta . mu")) == svg);
}

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "moncat/diagram.hpp"
#include "moncat/signature.hpp"

namespace moncat {

// Geometry shared by the text and SVG renderers. Coordinates live on an
// integer grid: wires run left to right on even rows, one column per
// character cell. All layout is deterministic.
struct LayoutWire {
    std::vector<std::pair<int, int>> points; // (row, col) polyline
};

struct LayoutBox {
    int row0, row1;    // inclusive vertical extent
    int col0, col1;    // inclusive horizontal extent
    std::string label;
    bool circle;       // a generator with boundary sizes (1,0) or (0,1)
};

struct LayoutPlan {
    int rows = 0;
    int cols = 0;
    std::vector<LayoutWire> wires;
    std::vector<LayoutBox> boxes;
    std::vector<std::string> source_labels; // type name per source wire
    std::vector<std::string> target_labels; // type name per target wire
};

LayoutPlan plan_layout(const Signature& sig, const Diagram& d);

// Character rendering of the plan, one string with trailing newline.
std::string render_ascii(const Signature& sig, const Diagram& d);

// Standalone SVG document for the same plan.
std::string render_svg(const Signature& sig, const Diagram& d);

} // namespace moncat

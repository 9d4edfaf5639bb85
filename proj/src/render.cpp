#include "moncat/render.hpp"

#include <algorithm>
#include <sstream>

namespace moncat {

namespace {

bool is_circle_shape(int m, int n) { return (m == 1 && n == 0) || (m == 0 && n == 1); }

struct LiveWire {
    int row;
    std::vector<std::pair<int, int>> points;
};

} // namespace

LayoutPlan plan_layout(const Signature& sig, const Diagram& d) {
    SliceForm sf = to_slices(sig, d);
    LayoutPlan plan;
    for (int t : d.src.types) plan.source_labels.push_back(sig.types[static_cast<std::size_t>(t)]);
    for (int t : d.tgt.types) plan.target_labels.push_back(sig.types[static_cast<std::size_t>(t)]);

    int x = 0;
    std::vector<LiveWire> live;
    for (std::size_t i = 0; i < d.src.types.size(); ++i)
        live.push_back(LiveWire{2 * static_cast<int>(i), {{2 * static_cast<int>(i), 0}}});

    for (const Slice& s : sf.slices) {
        const GenDecl& g = sig.gens[static_cast<std::size_t>(s.gen)];
        const int a = static_cast<int>(s.left.types.size());
        const int m = static_cast<int>(g.source.types.size());
        const int n = static_cast<int>(g.target.types.size());
        const int diff = n - m;
        const bool circle = is_circle_shape(m, n);
        const int body = circle ? 1 : static_cast<int>(g.name.size()) + 2;
        const int pre = diff > 0 ? 2 * diff : 0;
        const int post = diff < 0 ? -2 * diff : 0;
        const int width = pre + 2 + body + 2 + post;
        const int box_l = x + pre + 2;
        const int box_r = box_l + body - 1;

        // Wires below the generator move by `diff` rows: down before the box,
        // up after it, so the diagonal never crosses the box rows.
        for (int t = 0; t < static_cast<int>(live.size()) - a - m; ++t) {
            LiveWire& w = live[static_cast<std::size_t>(a + m + t)];
            if (diff > 0) {
                w.points.emplace_back(w.row, x);
                w.points.emplace_back(w.row + 2 * diff, x + 2 * diff);
            } else if (diff < 0) {
                w.points.emplace_back(w.row, x + width - post);
                w.points.emplace_back(w.row + 2 * diff, x + width);
            }
            w.row += 2 * diff;
        }

        // Incoming wires end at the generator.
        for (int t = 0; t < m; ++t) {
            LiveWire& w = live[static_cast<std::size_t>(a + t)];
            w.points.emplace_back(w.row, box_l);
            plan.wires.push_back(LayoutWire{std::move(w.points)});
        }

        const int tall = std::max({m, n, 1});
        plan.boxes.push_back(LayoutBox{2 * a, 2 * a + 2 * (tall - 1), box_l, box_r,
                                       circle ? std::string() : g.name, circle});

        // Outgoing wires start at the generator.
        std::vector<LiveWire> produced;
        for (int t = 0; t < n; ++t) {
            int row = 2 * (a + t);
            produced.push_back(LiveWire{row, {{row, box_r + 1}}});
        }
        live.erase(live.begin() + a, live.begin() + a + m);
        live.insert(live.begin() + a, produced.begin(), produced.end());
        x += width;
    }

    x += 4; // a final straight run into the target boundary
    for (LiveWire& w : live) {
        w.points.emplace_back(w.row, x);
        plan.wires.push_back(LayoutWire{std::move(w.points)});
    }

    plan.cols = x;
    int max_row = -1;
    for (const LayoutWire& w : plan.wires)
        for (auto [r, c] : w.points) max_row = std::max(max_row, r);
    for (const LayoutBox& b : plan.boxes) max_row = std::max(max_row, b.row1);
    plan.rows = max_row + 1;
    return plan;
}

std::string render_ascii(const Signature& sig, const Diagram& d) {
    LayoutPlan plan = plan_layout(sig, d);
    if (plan.rows == 0 && plan.boxes.empty()) return "I\n";

    std::size_t pre = 0, post = 0;
    for (const std::string& s : plan.source_labels) pre = std::max(pre, s.size());
    for (const std::string& s : plan.target_labels) post = std::max(post, s.size());
    const int off = static_cast<int>(pre) + (pre ? 1 : 0);

    std::vector<std::string> grid(
        static_cast<std::size_t>(plan.rows),
        std::string(static_cast<std::size_t>(off + plan.cols) + (post ? post + 1 : 0), ' '));
    auto put = [&](int r, int c, char ch) {
        grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(off + c)] = ch;
    };

    for (const LayoutWire& w : plan.wires) {
        for (std::size_t k = 0; k + 1 < w.points.size(); ++k) {
            auto [r0, c0] = w.points[k];
            auto [r1, c1] = w.points[k + 1];
            if (r0 == r1) {
                for (int c = c0; c < c1; ++c) put(r0, c, '-');
            } else {
                const int step = r1 > r0 ? 1 : -1;
                const char ch = r1 > r0 ? '\\' : '/';
                for (int i = 0; i < (r1 - r0) * step; ++i) put(r0 + i * step, c0 + i, ch);
            }
        }
    }
    for (const LayoutBox& b : plan.boxes) {
        if (b.circle) {
            put(b.row0, b.col0, 'o');
            continue;
        }
        for (int r = b.row0; r <= b.row1; ++r) {
            put(r, b.col0, '[');
            put(r, b.col1, ']');
            for (int c = b.col0 + 1; c < b.col1; ++c) put(r, c, ' ');
        }
        for (std::size_t i = 0; i < b.label.size(); ++i)
            put(b.row0, b.col0 + 1 + static_cast<int>(i), b.label[i]);
    }
    for (std::size_t i = 0; i < plan.source_labels.size(); ++i)
        for (std::size_t k = 0; k < plan.source_labels[i].size(); ++k)
            grid[2 * i][k] = plan.source_labels[i][k];
    for (std::size_t i = 0; i < plan.target_labels.size(); ++i)
        for (std::size_t k = 0; k < plan.target_labels[i].size(); ++k)
            grid[2 * i][static_cast<std::size_t>(off + plan.cols) + 1 + k] =
                plan.target_labels[i][k];

    std::string out;
    for (std::string& line : grid) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

namespace {

// Integer pixel mapping for the SVG view of the grid.
int px(int col) { return 10 * col + 10; }
int py(int row) { return 12 * row + 16; }

} // namespace

std::string render_svg(const Signature& sig, const Diagram& d) {
    LayoutPlan plan = plan_layout(sig, d);
    const int label_pad = 30;
    const int width = px(plan.cols) + 2 * label_pad;
    const int height = py(std::max(plan.rows - 1, 0)) + 16;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
    for (const LayoutWire& w : plan.wires) {
        svg << "    <polyline points=\"";
        for (std::size_t k = 0; k < w.points.size(); ++k) {
            if (k) svg << ' ';
            svg << label_pad + px(w.points[k].second) << ',' << py(w.points[k].first);
        }
        svg << "\"/>\n";
    }
    svg << "  </g>\n";
    for (const LayoutBox& b : plan.boxes) {
        const int cx = label_pad + (px(b.col0) + px(b.col1)) / 2;
        if (b.circle) {
            svg << "  <circle cx=\"" << cx << "\" cy=\"" << py(b.row0) << "\" r=\"5\" fill=\"black\"/>\n";
            continue;
        }
        const int bx = label_pad + px(b.col0) - 4;
        const int bw = px(b.col1) - px(b.col0) + 8;
        const int by = py(b.row0) - 12;
        const int bh = py(b.row1) - py(b.row0) + 24;
        svg << "  <rect x=\"" << bx << "\" y=\"" << by << "\" width=\"" << bw << "\" height=\""
            << bh << "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
        svg << "  <text x=\"" << cx << "\" y=\"" << py(b.row0) + 5
            << "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">" << b.label
            << "</text>\n";
    }
    for (std::size_t i = 0; i < plan.source_labels.size(); ++i)
        svg << "  <text x=\"" << label_pad - 6 << "\" y=\"" << py(2 * static_cast<int>(i)) + 5
            << "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"end\">"
            << plan.source_labels[i] << "</text>\n";
    for (std::size_t i = 0; i < plan.target_labels.size(); ++i)
        svg << "  <text x=\"" << label_pad + px(plan.cols) + 6 << "\" y=\""
            << py(2 * static_cast<int>(i)) + 5
            << "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"start\">"
            << plan.target_labels[i] << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace moncat

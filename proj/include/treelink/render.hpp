#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "treelink/edge_coloring.hpp"
#include "treelink/link.hpp"
#include "treelink/strip.hpp"
#include "treelink/tangle.hpp"

namespace treelink {
namespace detail {

inline std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Point {
    double x = 0, y = 0;
};

// Deterministic layout shared by all renderings: leaves at integer
// abscissae, carets at depth-proportional ordinates (upper tree above the
// frontier line, lower tree below), each caret horizontally centered over
// its children.
struct Layout {
    static constexpr double unit = 48, step = 36;
    int n = 1;
    TreeIndex plus, minus;
    std::vector<Point> plus_pos, minus_pos;  // per caret, preorder ids
    double top = 0, bottom = 0, left = 0, right = 0;

    static double leaf_x(int i) { return unit * i; }

    explicit Layout(const TreeDiagram& d) {
        n = d.leaf_count();
        int hp = d.plus.height(), hm = d.minus.height();
        if (n >= 2) {
            plus = index_tree(d.plus);
            minus = index_tree(d.minus);
            plus_pos.resize(plus.carets.size());
            minus_pos.resize(minus.carets.size());
            std::size_t next = 0;
            place(d.plus, 0, 1, hp, -1.0, plus_pos, next);
            next = 0;
            place(d.minus, 0, 1, hm, +1.0, minus_pos, next);
        }
        top = -step * (hp + 2);
        bottom = step * (hm + 2);
        left = 0;
        right = unit * (n + 1);
    }

    // mirrors TreeIndex::build's preorder so caret ids line up
    double place(const BinaryTree& t, int depth, int lo, int height, double sgn,
                 std::vector<Point>& out, std::size_t& next) {
        std::size_t id = next++;
        int split = lo + t.left().leaf_count() - 1;
        double lx = t.left().is_leaf() ? leaf_x(lo)
                                       : place(t.left(), depth + 1, lo, height, sgn, out, next);
        double rx = t.right().is_leaf()
                        ? leaf_x(split + 1)
                        : place(t.right(), depth + 1, split + 1, height, sgn, out, next);
        double x = (lx + rx) / 2;
        out[id] = {x, sgn * step * (height + 1 - depth)};
        return x;
    }

    Point caret(bool in_plus, int id) const {
        return in_plus ? plus_pos[static_cast<std::size_t>(id)]
                       : minus_pos[static_cast<std::size_t>(id)];
    }

    // caret positions from `from` down to leaf i (inclusive of both)
    std::vector<Point> path_to_leaf(bool in_plus, int from, int i) const {
        const TreeIndex& ix = in_plus ? plus : minus;
        std::vector<Point> pts;
        int cur = from;
        for (;;) {
            pts.push_back(caret(in_plus, cur));
            const CaretRecord& rec = ix.carets[static_cast<std::size_t>(cur)];
            if (i <= rec.split) {
                if (rec.left_caret < 0) break;
                cur = rec.left_caret;
            } else {
                if (rec.right_caret < 0) break;
                cur = rec.right_caret;
            }
        }
        pts.push_back({leaf_x(i), 0});
        return pts;
    }
};

inline std::string svg_open(const Layout& lay) {
    double w = lay.right - lay.left + 2 * Layout::unit;
    double h = lay.bottom - lay.top + 2 * Layout::step;
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    s += fmt2(lay.left - Layout::unit) + " " + fmt2(lay.top - Layout::step) + " " + fmt2(w) + " " +
         fmt2(h) + "\">\n";
    return s;
}

inline std::string polyline(const std::vector<Point>& pts, const std::string& stroke,
                            double width = 2.5) {
    std::string s = "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
                    fmt2(width) + "\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k) s += ' ';
        s += fmt2(pts[k].x) + "," + fmt2(pts[k].y);
    }
    s += "\"/>\n";
    return s;
}

inline std::string polygon(const std::vector<Point>& pts, const std::string& fill) {
    std::string s = "<polygon fill=\"" + fill + "\" stroke=\"none\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k) s += ' ';
        s += fmt2(pts[k].x) + "," + fmt2(pts[k].y);
    }
    s += "\"/>\n";
    return s;
}

inline std::string svg_text(double x, double y, const std::string& body,
                            const std::string& fill = "#333") {
    return "<text x=\"" + fmt2(x) + "\" y=\"" + fmt2(y) + "\" font-family=\"monospace\" font-size=\"14\" fill=\"" +
           fill + "\">" + body + "</text>\n";
}

// all drawn tree edges of the diagram, plus the two root stubs
inline std::vector<std::vector<Point>> diagram_lines(const Layout& lay, const TreeDiagram& d) {
    std::vector<std::vector<Point>> lines;
    if (lay.n == 1) {
        lines.push_back({{Layout::leaf_x(1), lay.top}, {Layout::leaf_x(1), lay.bottom}});
        return lines;
    }
    auto tree_lines = [&lay, &lines](bool in_plus) {
        const TreeIndex& ix = in_plus ? lay.plus : lay.minus;
        for (std::size_t c = 0; c < ix.carets.size(); ++c) {
            const CaretRecord& rec = ix.carets[c];
            Point here = lay.caret(in_plus, static_cast<int>(c));
            Point l = rec.left_caret >= 0 ? lay.caret(in_plus, rec.left_caret)
                                          : Point{Layout::leaf_x(rec.lo), 0};
            Point r = rec.right_caret >= 0 ? lay.caret(in_plus, rec.right_caret)
                                           : Point{Layout::leaf_x(rec.split + 1), 0};
            lines.push_back({here, l});
            lines.push_back({here, r});
        }
        Point root = lay.caret(in_plus, 0);
        lines.push_back({root, {root.x, in_plus ? lay.top : lay.bottom}});
    };
    (void)d;
    tree_lines(true);
    tree_lines(false);
    return lines;
}

}  // namespace detail

// Plain drawing of the tree diagram.
inline std::string render_tree_svg(const TreeDiagram& d) {
    detail::Layout lay(d);
    std::string s = detail::svg_open(lay);
    for (const auto& line : detail::diagram_lines(lay, d)) s += detail::polyline(line, "#111");
    for (int i = 1; i <= lay.n; ++i)
        s += "<circle cx=\"" + detail::fmt2(detail::Layout::leaf_x(i)) +
             "\" cy=\"0.00\" r=\"3.00\" fill=\"#111\"/>\n";
    s += "</svg>\n";
    return s;
}

// The strip with its regions tinted by the unique 3-coloring, or the plain
// diagram with a failure banner when no coloring exists.
inline std::string render_strip_svg(const TreeDiagram& d) {
    detail::Layout lay(d);
    auto coloring = strip_coloring(d);
    std::string s = detail::svg_open(lay);
    static const char* fill[3] = {"#f6c9c9", "#c9ddf6", "#cdeccd"};

    if (coloring) {
        const auto& colors = coloring->region_colors;
        double xl = lay.left - detail::Layout::unit, xr = lay.right + detail::Layout::unit;
        if (lay.n == 1) {
            double x = detail::Layout::leaf_x(1);
            s += detail::polygon({{xl, lay.top}, {x, lay.top}, {x, lay.bottom}, {xl, lay.bottom}},
                                 fill[colors[0]]);
            s += detail::polygon({{x, lay.top}, {xr, lay.top}, {xr, lay.bottom}, {x, lay.bottom}},
                                 fill[colors[1]]);
        } else {
            detail::Point rp = lay.caret(true, 0), rm = lay.caret(false, 0);
            // left infinite region
            std::vector<detail::Point> left{{xl, lay.top}, {rp.x, lay.top}};
            for (auto p : lay.path_to_leaf(true, 0, 1)) left.push_back(p);
            {
                auto down = lay.path_to_leaf(false, 0, 1);
                for (auto it = down.rbegin(); it != down.rend(); ++it) left.push_back(*it);
            }
            left.push_back({rm.x, lay.bottom});
            left.push_back({xl, lay.bottom});
            s += detail::polygon(left, fill[colors[0]]);
            // right infinite region
            std::vector<detail::Point> right{{xr, lay.top}, {rp.x, lay.top}};
            for (auto p : lay.path_to_leaf(true, 0, lay.n)) right.push_back(p);
            {
                auto down = lay.path_to_leaf(false, 0, lay.n);
                for (auto it = down.rbegin(); it != down.rend(); ++it) right.push_back(*it);
            }
            right.push_back({rm.x, lay.bottom});
            right.push_back({xr, lay.bottom});
            s += detail::polygon(right, fill[colors[static_cast<std::size_t>(lay.n)]]);
            // one bounded region per gap
            for (int k = 1; k <= lay.n - 1; ++k) {
                int ap = lay.plus.caret_of_split[static_cast<std::size_t>(k - 1)];
                int am = lay.minus.caret_of_split[static_cast<std::size_t>(k - 1)];
                std::vector<detail::Point> poly;
                for (auto p : lay.path_to_leaf(true, ap, k)) poly.push_back(p);
                {
                    auto down = lay.path_to_leaf(false, am, k);
                    for (auto it = down.rbegin(); it != down.rend(); ++it) poly.push_back(*it);
                }
                {
                    auto up = lay.path_to_leaf(false, am, k + 1);
                    for (std::size_t j = 1; j < up.size(); ++j) poly.push_back(up[j]);
                }
                {
                    auto back = lay.path_to_leaf(true, ap, k + 1);
                    for (std::size_t j = back.size(); j-- > 1;) poly.push_back(back[j]);
                }
                s += detail::polygon(poly, fill[colors[static_cast<std::size_t>(k)]]);
            }
        }
        // labels: the convention pins 0 left and 1 right
        s += detail::svg_text(xl + 10, 5, std::to_string(colors[0]));
        s += detail::svg_text(xr - 20, 5, std::to_string(colors[static_cast<std::size_t>(lay.n)]));
        for (int k = 1; k <= lay.n - 1; ++k)
            s += detail::svg_text(detail::Layout::leaf_x(k) + detail::Layout::unit / 2 - 4, 5,
                                  std::to_string(colors[static_cast<std::size_t>(k)]));
    }
    for (const auto& line : detail::diagram_lines(lay, d)) s += detail::polyline(line, "#111");
    if (!coloring)
        s += detail::svg_text(lay.left + 10, lay.top + 20, "not 3-strip-colorable", "#b00020");
    s += "</svg>\n";
    return s;
}

// The link diagram: the 4-valent graph drawn over the tree diagram, with the
// under-strand interrupted at each crossing and arcs tinted by the induced
// 3-coloring when one exists.  The identity yields a plain circle.
inline std::string render_link_svg(const GroupElement& g) {
    if (g.is_identity()) {
        return std::string("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 120 120\">\n") +
               "<circle cx=\"60.00\" cy=\"60.00\" r=\"40.00\" fill=\"none\" stroke=\"#111\" "
               "stroke-width=\"2.50\"/>\n</svg>\n";
    }
    const TreeDiagram& d = g.diagram();
    detail::Layout lay(d);
    TangleGraph graph = build_graph(d);
    LinkDiagram link = to_link_diagram(graph);
    EdgeColoring ec = edge_coloring(graph);

    std::vector<int> arc = arc_index_of_edges(link);
    std::vector<int> arc_color;
    if (is_member(g) && ec.conflict_free())
        arc_color = induced_3coloring(link, ec).arc_color;
    static const char* stroke_of[3] = {"#1d4ed8", "#15803d", "#b91c1c"};

    auto edge_points = [&](const TangleEdge& e) {
        std::vector<detail::Point> pts;
        bool p0 = graph.vertices[static_cast<std::size_t>(e.vertex[0])].in_plus;
        bool p1 = graph.vertices[static_cast<std::size_t>(e.vertex[1])].in_plus;
        detail::Point a = lay.caret(p0, e.vertex[0] - (p0 ? 0 : lay.n - 1));
        detail::Point b = lay.caret(p1, e.vertex[1] - (p1 ? 0 : lay.n - 1));
        switch (e.kind) {
            case TangleEdgeKind::tree:
                pts = {a, b};
                break;
            case TangleEdgeKind::leaf:
                pts = {a, {detail::Layout::leaf_x(e.index), 0}, b};
                break;
            case TangleEdgeKind::region:
                pts = {a, {detail::Layout::leaf_x(e.index) + detail::Layout::unit / 2, 0}, b};
                break;
            case TangleEdgeKind::unbounded: {
                double x = lay.left - detail::Layout::unit / 2;
                pts = {a, {x, a.y}, {x, b.y}, {b.x, b.y}};
                break;
            }
        }
        return pts;
    };

    auto trim = [](std::vector<detail::Point>& pts, bool front, double gap) {
        auto shorten = [gap](detail::Point& end, const detail::Point& toward) {
            double dx = toward.x - end.x, dy = toward.y - end.y;
            double len = std::sqrt(dx * dx + dy * dy);
            if (len < 1e-9 || len < gap) return;
            end.x += dx * gap / len;
            end.y += dy * gap / len;
        };
        if (front)
            shorten(pts.front(), pts[1]);
        else
            shorten(pts.back(), pts[pts.size() - 2]);
    };

    std::string s = detail::svg_open(lay);
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const TangleEdge& edge = graph.edges[e];
        auto pts = edge_points(edge);
        // slots 0 and 2 carry the under-strand; interrupt those ends
        if (edge.slot[0] == 0 || edge.slot[0] == 2) trim(pts, true, 9);
        if (edge.slot[1] == 0 || edge.slot[1] == 2) trim(pts, false, 9);
        std::string stroke = "#111";
        if (!arc_color.empty())
            stroke = stroke_of[arc_color[static_cast<std::size_t>(
                arc[static_cast<std::size_t>(static_cast<int>(e))])]];
        s += detail::polyline(pts, stroke);
    }
    s += "</svg>\n";
    return s;
}

}  // namespace treelink

#pragma once

#include <set>
#include <string>
#include <vector>

#include "treelink/coloring.hpp"
#include "treelink/link.hpp"
#include "treelink/tangle.hpp"

namespace treelink {

enum class EdgeColor { blue, green, red };

inline int color_residue(EdgeColor c) {
    switch (c) {
        case EdgeColor::blue: return 0;
        case EdgeColor::green: return 1;
        default: return 2;
    }
}

// The three-color edge assignment of a tangle graph: bounded-region edges
// blue, the unbounded edge green, and every tree edge red or green by the
// parity of its lower endpoint's depth (odd red, even green).  A leaf edge
// has an upper and a lower half, one per tree; leaves whose halves disagree
// are conflicts, and they are exactly the leaves with mismatched depth
// parity.
struct EdgeColoring {
    std::vector<EdgeColor> upper;  // per edge (for leaf edges: the upper-tree half)
    std::vector<EdgeColor> lower;  // per edge (differs from upper only at conflicted leaf edges)
    std::vector<int> conflicts;    // 1-based leaf numbers

    bool conflict_free() const { return conflicts.empty(); }

    EdgeColor uniform(int edge) const {
        if (upper[static_cast<std::size_t>(edge)] != lower[static_cast<std::size_t>(edge)])
            throw std::logic_error("EdgeColoring: edge has no single color");
        return upper[static_cast<std::size_t>(edge)];
    }
};

inline EdgeColoring edge_coloring(const TangleGraph& g) {
    auto parity_color = [](int lower_depth) {
        return (lower_depth & 1) ? EdgeColor::red : EdgeColor::green;
    };
    EdgeColoring ec;
    ec.upper.resize(g.edges.size());
    ec.lower.resize(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const TangleEdge& edge = g.edges[e];
        switch (edge.kind) {
            case TangleEdgeKind::region:
                ec.upper[e] = ec.lower[e] = EdgeColor::blue;
                break;
            case TangleEdgeKind::unbounded:
                ec.upper[e] = ec.lower[e] = EdgeColor::green;
                break;
            case TangleEdgeKind::tree: {
                int child_depth = g.vertices[static_cast<std::size_t>(edge.vertex[1])].depth;
                ec.upper[e] = ec.lower[e] = parity_color(child_depth);
                break;
            }
            case TangleEdgeKind::leaf: {
                int i = edge.index;
                ec.upper[e] = parity_color(g.plus_leaf_depths[static_cast<std::size_t>(i - 1)]);
                ec.lower[e] = parity_color(g.minus_leaf_depths[static_cast<std::size_t>(i - 1)]);
                if (ec.upper[e] != ec.lower[e]) ec.conflicts.push_back(i);
                break;
            }
        }
    }
    return ec;
}

struct ArcColoring {
    std::vector<int> arc_color;  // residues 0/1/2 per arc
};

// Each arc inherits the common color of its edges.  Pre: the edge coloring
// has no leaf conflicts and `l` was produced from the same graph.
inline ArcColoring induced_3coloring(const LinkDiagram& l, const EdgeColoring& ec) {
    if (!ec.conflict_free()) {
        std::string leaves;
        for (int i : ec.conflicts) leaves += (leaves.empty() ? "" : ", ") + std::to_string(i);
        throw std::invalid_argument("induced_3coloring: conflicting colors at leaves " + leaves);
    }
    if (l.free_loops > 0)
        throw std::invalid_argument("induced_3coloring: crossing-free loops carry no edge colors");
    std::vector<int> arc = arc_index_of_edges(l);
    int arcs = arc_count(l);
    ArcColoring ac;
    ac.arc_color.assign(static_cast<std::size_t>(arcs), -1);
    for (int e = 0; e < l.edge_count(); ++e) {
        int a = arc[static_cast<std::size_t>(e)];
        int r = color_residue(ec.uniform(e));
        int& slot = ac.arc_color[static_cast<std::size_t>(a)];
        if (slot == -1)
            slot = r;
        else if (slot != r)
            throw std::logic_error("induced_3coloring: arc with two colors");
    }
    return ac;
}

// The crossing rule: the three arcs at each crossing carry all-distinct or
// all-equal colors.  Checked at every crossing, not sampled.
inline bool valid_3coloring(const LinkDiagram& l, const std::vector<int>& arc_color) {
    for (const auto& [x, z, y] : crossing_arc_triples(l)) {
        int cx = arc_color[static_cast<std::size_t>(x)];
        int cz = arc_color[static_cast<std::size_t>(z)];
        int cy = arc_color[static_cast<std::size_t>(y)];
        bool all_same = cx == cy && cy == cz;
        bool all_diff = cx != cy && cy != cz && cx != cz;
        if (!all_same && !all_diff) return false;
    }
    return true;
}

inline int colors_used(const std::vector<int>& arc_color) {
    std::set<int> s(arc_color.begin(), arc_color.end());
    return static_cast<int>(s.size());
}

}  // namespace treelink

#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "treelink/diagram.hpp"

namespace treelink {

// The 4-valent plane graph associated with a tree diagram: one vertex per
// caret of either tree, and four edge kinds.
//
//   tree      caret -> child caret inside one tree
//   leaf      upper parent caret -> lower parent caret, through leaf i
//   region    the two lowest-common-ancestor carets of gap k (one per tree)
//   unbounded the two roots, routed around the left of the diagram
//
// Rotations are stored counterclockwise with fixed slot meaning:
//   slot 0  parent edge (the unbounded edge at a root)
//   slot 2  region edge
//   slots 1 and 3 the two child ("bifurcating") edges
// so slots {0,2} and {1,3} are the opposite pairs at every vertex.
enum class TangleEdgeKind { tree, leaf, region, unbounded };

struct TangleVertex {
    bool in_plus;   // upper tree caret?
    int depth;      // caret depth within its tree (root = 0)
    int split_gap;  // the gap k (1-based) whose LCA this caret is
};

struct TangleEdge {
    TangleEdgeKind kind;
    std::array<int, 2> vertex;
    std::array<int, 2> slot;
    int index = 0;  // leaf number or gap number when applicable
};

struct TangleGraph {
    int leaves = 0;
    std::vector<TangleVertex> vertices;            // plus carets (preorder), then minus carets
    std::vector<TangleEdge> edges;
    std::vector<std::array<int, 4>> rotation;      // rotation[v][slot] = edge id
    std::vector<int> plus_leaf_depths, minus_leaf_depths;
    int plus_root = 0, minus_root = 0;

    int degree(int v) const {
        int d = 0;
        for (int s = 0; s < 4; ++s)
            if (rotation[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] >= 0) ++d;
        return d;
    }
};

namespace detail {

struct CaretRecord {
    int depth = 0;
    int lo = 0, hi = 0;   // spanned leaves, 1-based
    int split = 0;        // gap between its two child subtrees
    int left_caret = -1;  // caret id of the left child, or -1 if the child is a leaf
    int right_caret = -1;
};

struct TreeIndex {
    std::vector<CaretRecord> carets;                    // preorder
    std::vector<int> leaf_parent;                       // per leaf (1-based slot i-1): caret id
    std::vector<bool> leaf_is_left;                     // is leaf the left child of its parent
    std::vector<int> caret_of_split;                    // gap k (1-based slot k-1) -> caret id

    int build(const BinaryTree& t, int depth, int lo) {  // returns caret id
        int id = static_cast<int>(carets.size());
        carets.push_back({});
        int split = lo + t.left().leaf_count() - 1;
        carets[static_cast<std::size_t>(id)] =
            {depth, lo, lo + t.leaf_count() - 1, split, -1, -1};
        if (t.left().is_leaf()) {
            leaf_parent[static_cast<std::size_t>(lo - 1)] = id;
            leaf_is_left[static_cast<std::size_t>(lo - 1)] = true;
        } else {
            carets[static_cast<std::size_t>(id)].left_caret = build(t.left(), depth + 1, lo);
        }
        if (t.right().is_leaf()) {
            leaf_parent[static_cast<std::size_t>(split)] = id;
            leaf_is_left[static_cast<std::size_t>(split)] = false;
        } else {
            carets[static_cast<std::size_t>(id)].right_caret = build(t.right(), depth + 1, split + 1);
        }
        caret_of_split[static_cast<std::size_t>(split - 1)] = id;
        return id;
    }
};

inline TreeIndex index_tree(const BinaryTree& t) {
    TreeIndex ix;
    int n = t.leaf_count();
    ix.leaf_parent.assign(static_cast<std::size_t>(n), -1);
    ix.leaf_is_left.assign(static_cast<std::size_t>(n), false);
    ix.caret_of_split.assign(static_cast<std::size_t>(n - 1), -1);
    ix.carets.reserve(static_cast<std::size_t>(n - 1));
    ix.build(t, 0, 1);
    return ix;
}

}  // namespace detail

inline TangleGraph build_graph(const TreeDiagram& d) {
    int n = d.leaf_count();
    if (n < 2)
        throw std::invalid_argument("build_graph: the identity diagram has no carets; n >= 2 required");

    detail::TreeIndex plus = detail::index_tree(d.plus);
    detail::TreeIndex minus = detail::index_tree(d.minus);
    int plus_carets = n - 1;

    TangleGraph g;
    g.leaves = n;
    g.plus_leaf_depths = leaf_depths(d.plus);
    g.minus_leaf_depths = leaf_depths(d.minus);
    g.plus_root = 0;
    g.minus_root = plus_carets;
    g.vertices.resize(static_cast<std::size_t>(2 * (n - 1)));
    g.rotation.assign(static_cast<std::size_t>(2 * (n - 1)), {-1, -1, -1, -1});
    for (int c = 0; c < plus_carets; ++c)
        g.vertices[static_cast<std::size_t>(c)] = {true, plus.carets[static_cast<std::size_t>(c)].depth,
                                                   plus.carets[static_cast<std::size_t>(c)].split};
    for (int c = 0; c < plus_carets; ++c)
        g.vertices[static_cast<std::size_t>(plus_carets + c)] =
            {false, minus.carets[static_cast<std::size_t>(c)].depth,
             minus.carets[static_cast<std::size_t>(c)].split};

    // In the counterclockwise rotation, the left child sits at slot 1 for an
    // upper caret and at slot 3 for a lower (mirrored) one.
    auto child_slot = [](bool in_plus, bool left_child) {
        if (in_plus) return left_child ? 1 : 3;
        return left_child ? 3 : 1;
    };
    auto add_edge = [&g](TangleEdgeKind kind, int v0, int s0, int v1, int s1, int index) {
        int id = static_cast<int>(g.edges.size());
        g.edges.push_back({kind, {v0, v1}, {s0, s1}, index});
        auto set = [&g, id](int v, int s) {
            int& slot = g.rotation[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
            if (slot != -1) throw std::logic_error("build_graph: rotation slot used twice");
            slot = id;
        };
        set(v0, s0);
        set(v1, s1);
        return id;
    };

    // internal tree edges, upper tree then lower tree, preorder by parent
    for (int c = 0; c < plus_carets; ++c) {
        const auto& rec = plus.carets[static_cast<std::size_t>(c)];
        if (rec.left_caret >= 0)
            add_edge(TangleEdgeKind::tree, c, child_slot(true, true), rec.left_caret, 0, 0);
        if (rec.right_caret >= 0)
            add_edge(TangleEdgeKind::tree, c, child_slot(true, false), rec.right_caret, 0, 0);
    }
    for (int c = 0; c < plus_carets; ++c) {
        const auto& rec = minus.carets[static_cast<std::size_t>(c)];
        if (rec.left_caret >= 0)
            add_edge(TangleEdgeKind::tree, plus_carets + c, child_slot(false, true),
                     plus_carets + rec.left_caret, 0, 0);
        if (rec.right_caret >= 0)
            add_edge(TangleEdgeKind::tree, plus_carets + c, child_slot(false, false),
                     plus_carets + rec.right_caret, 0, 0);
    }
    // one glued edge through each leaf
    for (int i = 1; i <= n; ++i) {
        int pu = plus.leaf_parent[static_cast<std::size_t>(i - 1)];
        int pl = minus.leaf_parent[static_cast<std::size_t>(i - 1)];
        add_edge(TangleEdgeKind::leaf, pu,
                 child_slot(true, plus.leaf_is_left[static_cast<std::size_t>(i - 1)]),
                 plus_carets + pl,
                 child_slot(false, minus.leaf_is_left[static_cast<std::size_t>(i - 1)]), i);
    }
    // one edge per bounded region, joining the two LCA carets of its gap
    for (int k = 1; k <= n - 1; ++k) {
        add_edge(TangleEdgeKind::region, plus.caret_of_split[static_cast<std::size_t>(k - 1)], 2,
                 plus_carets + minus.caret_of_split[static_cast<std::size_t>(k - 1)], 2, k);
    }
    // the unbounded region's edge, root to root
    add_edge(TangleEdgeKind::unbounded, g.plus_root, 0, g.minus_root, 0, 0);

    for (std::size_t v = 0; v < g.rotation.size(); ++v)
        for (int s = 0; s < 4; ++s)
            if (g.rotation[v][static_cast<std::size_t>(s)] < 0)
                throw std::logic_error("build_graph: unfilled rotation slot");
    return g;
}

}  // namespace treelink

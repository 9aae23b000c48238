#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treelink/diagram.hpp"
#include "treelink/errors.hpp"

namespace treelink {

// Colors of the n+1 frontier regions at the leaf line of one tree, left to
// right; entry 0 is the left infinite region (always 0) and entry n the
// right one (always 1).
struct GapSequence {
    std::vector<int> colors;

    std::string to_string() const {
        std::string out;
        for (std::size_t k = 0; k < colors.size(); ++k) {
            if (k) out += ',';
            out += static_cast<char>('0' + colors[k]);
        }
        return out;
    }

    friend bool operator==(const GapSequence& a, const GapSequence& b) {
        return a.colors == b.colors;
    }
    friend bool operator!=(const GapSequence& a, const GapSequence& b) { return !(a == b); }
};

namespace detail {

// A caret whose outer regions carry distinct colors (a, b) forces the third
// color onto the region below it, because the three regions around the
// trivalent vertex are pairwise adjacent.  Recursing with (a, c) and (c, b)
// keeps the outer colors distinct, so the whole propagation is forced.
inline void frontier_gaps_into(const BinaryTree& t, int a, int b, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(b);
        return;
    }
    int c = ((3 - a - b) % 3 + 3) % 3;
    frontier_gaps_into(t.left(), a, c, out);
    frontier_gaps_into(t.right(), c, b, out);
}

}  // namespace detail

// The unique gap coloring a single tree admits with outer colors (0, 1).
inline GapSequence frontier_gaps(const BinaryTree& t) {
    GapSequence g;
    g.colors.reserve(static_cast<std::size_t>(t.leaf_count()) + 1);
    g.colors.push_back(0);
    detail::frontier_gaps_into(t, 0, 1, g.colors);
    return g;
}

// Membership in the 3-colorable subgroup, decided on the reduced
// representative: the strip is properly 3-colorable exactly when both trees
// force the same frontier gap colors.  The exhaustive region oracle below
// cross-checks this equivalence in the test suite.
inline bool is_member(const GroupElement& g) {
    return frontier_gaps(g.plus()) == frontier_gaps(g.minus());
}

// Leaf-depth parity congruence l_i(plus) == l_i(minus) mod 2 for every leaf
// of the reduced diagram; a consequence of membership.
inline bool leaf_parity_ok(const GroupElement& g) {
    auto dp = leaf_depths(g.plus());
    auto dm = leaf_depths(g.minus());
    for (std::size_t k = 0; k < dp.size(); ++k)
        if (((dp[k] ^ dm[k]) & 1) != 0) return false;
    return true;
}

// Full coloring of the strip of a diagram with n leaves.  The strip has
// exactly n+1 regions: the two infinite ones and one bounded region per gap
// (each gap region reaches from its lowest-common-ancestor caret in the
// upper tree through the open frontier to the one in the lower tree).
struct StripColoring {
    std::vector<int> region_colors;  // indexed by gap 0..n
};

inline std::optional<StripColoring> strip_coloring(const TreeDiagram& d) {
    GapSequence p = frontier_gaps(d.plus);
    GapSequence m = frontier_gaps(d.minus);
    if (!(p == m)) return std::nullopt;
    return StripColoring{std::move(p.colors)};
}

namespace detail {

// Every tree edge above a subtree spanning leaves [lo, hi] (1-based)
// separates gap lo-1 from gap hi; this is the complete adjacency of the
// strip's region graph, together with the root stubs separating gap 0 from
// gap n.
inline int region_edges_into(const BinaryTree& t, int lo,
                             std::vector<std::pair<int, int>>& edges) {
    if (t.is_leaf()) return lo;  // returns hi of this subtree
    int left_hi = region_edges_into(t.left(), lo, edges);
    edges.emplace_back(lo - 1, left_hi);
    int right_hi = region_edges_into(t.right(), left_hi + 1, edges);
    edges.emplace_back(left_hi, right_hi);
    return right_hi;
}

// Gap indices 1..n-1 in the order the upper tree's carets are visited in
// preorder; used as the assignment order of the exhaustive search so that
// each step sees both of its caret's side constraints early.
inline void split_preorder_into(const BinaryTree& t, int lo, std::vector<int>& order) {
    if (t.is_leaf()) return;
    int split = lo + t.left().leaf_count() - 1;
    order.push_back(split);
    split_preorder_into(t.left(), lo, order);
    split_preorder_into(t.right(), split + 1, order);
}

}  // namespace detail

// Exhaustive oracle: every proper {0,1,2}-coloring of the strip's region
// adjacency graph with the infinite regions pinned to 0 and 1.  Guarded at
// 40 regions.
inline std::vector<std::vector<int>> enumerate_strip_colorings(const TreeDiagram& d) {
    int n = d.leaf_count();
    if (n + 1 > 40) throw GuardError("enumerate_strip_colorings: more than 40 regions");

    std::vector<std::pair<int, int>> edges;
    detail::region_edges_into(d.plus, 1, edges);
    detail::region_edges_into(d.minus, 1, edges);
    edges.emplace_back(0, n);  // root stubs

    std::vector<int> order;
    detail::split_preorder_into(d.plus, 1, order);

    std::vector<int> position(static_cast<std::size_t>(n) + 1, -1);
    position[0] = position[static_cast<std::size_t>(n)] = -1;  // preassigned
    for (std::size_t k = 0; k < order.size(); ++k)
        position[static_cast<std::size_t>(order[k])] = static_cast<int>(k);

    // bucket each adjacency under the endpoint assigned later
    std::vector<std::vector<std::pair<int, int>>> bucket(order.size());
    std::vector<std::vector<int>> solutions;
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    color[0] = 0;
    color[static_cast<std::size_t>(n)] = 1;
    for (auto [u, v] : edges) {
        int pu = position[static_cast<std::size_t>(u)];
        int pv = position[static_cast<std::size_t>(v)];
        if (pu == -1 && pv == -1) {
            if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)])
                return solutions;  // stub constraint violated: impossible by construction
            continue;
        }
        if (pu > pv)
            bucket[static_cast<std::size_t>(pu)].emplace_back(u, v);
        else
            bucket[static_cast<std::size_t>(pv)].emplace_back(u, v);
    }

    struct Search {
        const std::vector<int>& order;
        std::vector<std::vector<std::pair<int, int>>>& bucket;
        std::vector<int>& color;
        std::vector<std::vector<int>>& solutions;

        void run(std::size_t step) {
            if (step == order.size()) {
                solutions.push_back(color);
                return;
            }
            int gap = order[step];
            for (int c = 0; c < 3; ++c) {
                color[static_cast<std::size_t>(gap)] = c;
                bool ok = true;
                for (auto [u, v] : bucket[step])
                    if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                        ok = false;
                        break;
                    }
                if (ok) run(step + 1);
            }
            color[static_cast<std::size_t>(gap)] = -1;
        }
    };

    Search{order, bucket, color, solutions}.run(0);
    return solutions;
}

}  // namespace treelink

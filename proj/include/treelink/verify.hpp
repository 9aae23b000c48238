#pragma once

#include <string>

#include "treelink/coloring.hpp"
#include "treelink/edge_coloring.hpp"
#include "treelink/link.hpp"
#include "treelink/strip.hpp"
#include "treelink/tangle.hpp"

namespace treelink {

// The five checks that a non-trivial member of the 3-colorable subgroup
// yields a 3-colorable link: the leaf-parity congruence, a conflict-free
// edge coloring, a valid induced 3-coloring, at least two colors used, and
// an independent rank-based 3-colorability confirmation.
struct TheoremReport {
    bool applicable = false;
    std::string skip_reason;

    bool parity_ok = false;
    bool conflict_free = false;
    bool induced_valid = false;
    bool uses_two_colors = false;
    bool fox_colorable = false;

    int leaves = 0;
    int crossings = 0;
    int components = 0;
    int colors_used = 0;
    int kernel_dim = 0;

    bool passed() const {
        return applicable && parity_ok && conflict_free && induced_valid && uses_two_colors &&
               fox_colorable;
    }
};

inline TheoremReport verify_main_theorem(const GroupElement& g) {
    TheoremReport r;
    if (g.is_identity()) {
        r.skip_reason = "identity element";
        return r;
    }
    if (!is_member(g)) {
        r.skip_reason = "not a member of the 3-colorable subgroup";
        return r;
    }
    r.applicable = true;
    r.leaves = g.leaf_count();

    r.parity_ok = leaf_parity_ok(g);

    TangleGraph graph = build_graph(g.diagram());
    EdgeColoring ec = edge_coloring(graph);
    r.conflict_free = ec.conflict_free();

    LinkDiagram l = to_link_diagram(graph);
    r.crossings = l.crossing_count();
    r.components = components_of(l);

    if (r.conflict_free) {
        ArcColoring ac = induced_3coloring(l, ec);
        r.induced_valid = valid_3coloring(l, ac.arc_color);
        r.colors_used = colors_used(ac.arc_color);
        r.uses_two_colors = r.colors_used >= 2;
    }

    r.kernel_dim = kernel_dimension_mod_p(l, 3);
    r.fox_colorable = r.kernel_dim >= 2;
    return r;
}

}  // namespace treelink

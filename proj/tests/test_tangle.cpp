#include <catch2/catch_amalgamated.hpp>

#include "treelink/quaternary.hpp"
#include "treelink/tangle.hpp"
#include "treelink/words.hpp"

using namespace treelink;

namespace {

void check_structure(const TangleGraph& g) {
    int n = g.leaves;
    REQUIRE(static_cast<int>(g.vertices.size()) == 2 * n - 2);
    REQUIRE(static_cast<int>(g.edges.size()) == 4 * n - 4);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) REQUIRE(g.degree(static_cast<int>(v)) == 4);

    int region_like = 0;
    for (const auto& e : g.edges)
        if (e.kind == TangleEdgeKind::region || e.kind == TangleEdgeKind::unbounded) ++region_like;
    REQUIRE(region_like == n);  // one edge per region of the plane diagram

    // slot discipline: 0 parent/unbounded, 2 region, 1 and 3 child edges
    for (std::size_t v = 0; v < g.rotation.size(); ++v) {
        int vi = static_cast<int>(v);
        const auto& rot = g.rotation[v];
        const TangleEdge& e0 = g.edges[static_cast<std::size_t>(rot[0])];
        REQUIRE(((e0.kind == TangleEdgeKind::tree && e0.vertex[1] == vi) ||
                 e0.kind == TangleEdgeKind::unbounded));
        REQUIRE((e0.kind != TangleEdgeKind::unbounded || g.vertices[v].depth == 0));
        const TangleEdge& e2 = g.edges[static_cast<std::size_t>(rot[2])];
        REQUIRE(e2.kind == TangleEdgeKind::region);
        for (int s : {1, 3}) {
            const TangleEdge& e = g.edges[static_cast<std::size_t>(rot[s])];
            bool child_edge = (e.kind == TangleEdgeKind::tree && e.vertex[0] == vi) ||
                              e.kind == TangleEdgeKind::leaf;
            REQUIRE(child_edge);
        }
    }
}

}  // namespace

TEST_CASE("x0 graph counts") {
    TangleGraph g = build_graph(generator_x(0).diagram());
    REQUIRE(g.vertices.size() == 4);
    REQUIRE(g.edges.size() == 8);
    check_structure(g);
}

TEST_CASE("w0 graph counts, reduced and embedded") {
    GroupElement w0 = generator_w(0);
    TangleGraph g = build_graph(w0.diagram());
    REQUIRE(w0.leaf_count() == 5);
    REQUIRE(g.vertices.size() == 8);
    REQUIRE(g.edges.size() == 16);
    check_structure(g);

    QuaternaryPair y0 = w_pair(0);
    TreeDiagram embedded(embed_tree(y0.plus), embed_tree(y0.minus));
    TangleGraph ge = build_graph(embedded);  // 7 leaves before reduction
    REQUIRE(ge.vertices.size() == 12);
    REQUIRE(ge.edges.size() == 24);
    check_structure(ge);
}

TEST_CASE("identity diagram is rejected") {
    REQUIRE_THROWS_AS(build_graph(GroupElement::identity().diagram()), std::invalid_argument);
}

TEST_CASE("structure holds on random reduced elements") {
    std::mt19937_64 rng(51);
    int built = 0;
    for (int k = 0; k < 60; ++k) {
        Alphabet a = uniform_below(rng, 2) ? Alphabet::f_gens : Alphabet::cf_gens;
        GroupElement g = word_to_element(
            random_word(1 + static_cast<int>(uniform_below(rng, 8)), a, rng));
        if (g.is_identity()) continue;
        check_structure(build_graph(g.diagram()));
        ++built;
    }
    REQUIRE(built > 40);
}

TEST_CASE("each vertex is the lowest common ancestor of exactly one gap") {
    std::mt19937_64 rng(52);
    for (int k = 0; k < 20; ++k) {
        TreeDiagram d = random_diagram(2 + static_cast<int>(uniform_below(rng, 12)), rng);
        TangleGraph g = build_graph(d);
        std::vector<int> plus_gap_seen(static_cast<std::size_t>(g.leaves), 0);
        std::vector<int> minus_gap_seen(static_cast<std::size_t>(g.leaves), 0);
        for (const auto& v : g.vertices) {
            REQUIRE(v.split_gap >= 1);
            REQUIRE(v.split_gap <= g.leaves - 1);
            (v.in_plus ? plus_gap_seen : minus_gap_seen)[static_cast<std::size_t>(v.split_gap)]++;
        }
        for (int gap = 1; gap <= g.leaves - 1; ++gap) {
            REQUIRE(plus_gap_seen[static_cast<std::size_t>(gap)] == 1);
            REQUIRE(minus_gap_seen[static_cast<std::size_t>(gap)] == 1);
        }
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <sstream>

#include "treelink/coloring.hpp"
#include "treelink/link.hpp"
#include "treelink/words.hpp"

using namespace treelink;

namespace {

std::map<int, int> pd_label_counts(const std::string& pd) {
    std::map<int, int> counts;
    std::size_t pos = 0;
    while ((pos = pd.find('[', pos)) != std::string::npos) {
        std::size_t close = pd.find(']', pos);
        std::stringstream ss(pd.substr(pos + 1, close - pos - 1));
        std::string item;
        while (std::getline(ss, item, ',')) counts[std::stoi(item)]++;
        pos = close;
    }
    return counts;
}

GroupElement random_nontrivial(std::mt19937_64& rng, int max_len, bool mixed = true) {
    Alphabet a = (mixed && uniform_below(rng, 2)) ? Alphabet::f_gens : Alphabet::cf_gens;
    return sample_nontrivial(rng, max_len, a).element;
}

}  // namespace

TEST_CASE("x0 link counts and code well-formedness") {
    LinkDiagram l = link_of(generator_x(0));
    REQUIRE(l.crossing_count() == 4);
    REQUIRE(arc_count(l) == 4);
    REQUIRE(components_of(l) == 1);

    std::string pd = pd_code(l);
    auto counts = pd_label_counts(pd);
    REQUIRE(counts.size() == 8);  // labels 1..8
    for (const auto& [label, c] : counts) {
        REQUIRE(label >= 1);
        REQUIRE(label <= 8);
        REQUIRE(c == 2);
    }
    // deterministic output
    REQUIRE(pd == pd_code(link_of(generator_x(0))));
}

TEST_CASE("identity maps to the crossing-free unknot") {
    LinkDiagram l = link_of(GroupElement::identity());
    REQUIRE(l.crossing_count() == 0);
    REQUIRE(l.free_loops == 1);
    REQUIRE(arc_count(l) == 1);
    REQUIRE(components_of(l) == 1);
    REQUIRE(pd_code(l) == "L 1");
    REQUIRE(gauss_code(l) == "L 1\n");
}

TEST_CASE("crossing and arc counts follow the leaf count") {
    std::mt19937_64 rng(61);
    for (int k = 0; k < 50; ++k) {
        GroupElement g = random_nontrivial(rng, 8);
        int n = g.leaf_count();
        LinkDiagram l = link_of(g);
        REQUIRE(l.crossing_count() == 2 * n - 2);
        REQUIRE(arc_count(l) == 2 * n - 2);
        REQUIRE(l.free_loops == 0);
    }
}

TEST_CASE("region and unbounded edges are single-edge arcs") {
    std::mt19937_64 rng(62);
    for (int k = 0; k < 20; ++k) {
        GroupElement g = random_nontrivial(rng, 6);
        TangleGraph graph = build_graph(g.diagram());
        LinkDiagram l = to_link_diagram(graph);
        std::vector<int> arc = arc_index_of_edges(l);
        std::vector<Arc> arcs = arcs_of(l);
        for (std::size_t e = 0; e < graph.edges.size(); ++e) {
            auto kind = graph.edges[e].kind;
            if (kind == TangleEdgeKind::region || kind == TangleEdgeKind::unbounded)
                REQUIRE(arcs[static_cast<std::size_t>(arc[e])].edges.size() == 1);
        }
    }
}

TEST_CASE("inserting a caret adds one split crossing-free unknot") {
    std::mt19937_64 rng(63);
    for (int k = 0; k < 30; ++k) {
        GroupElement g = random_nontrivial(rng, 6);
        LinkDiagram base = link_of(g);
        int i = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(g.leaf_count())));
        LinkDiagram raw = link_of_diagram(insert_caret(g.diagram(), i));
        REQUIRE(raw.crossing_count() == base.crossing_count() + 2);
        REQUIRE(components_of(raw) == components_of(base) + 1);

        // Compare after lifting split loops off both diagrams: the reduced
        // element's own link may contain a monotone component too (when the
        // two roots split at the same gap).
        LinkDiagram norm = normalize_split_loops(raw);
        LinkDiagram norm_base = normalize_split_loops(base);
        REQUIRE(norm.crossing_count() == norm_base.crossing_count());
        REQUIRE(norm.free_loops == norm_base.free_loops + 1);
        REQUIRE(components_of(norm) == components_of(base) + 1);
        REQUIRE(arc_count(norm) == norm.crossing_count() + norm.free_loops);

        LinkDiagram no_loop = norm;
        no_loop.free_loops -= 1;
        REQUIRE(canonical_pd_code(no_loop) == canonical_pd_code(norm_base));
    }
}

TEST_CASE("two insertions add two split components") {
    std::mt19937_64 rng(64);
    for (int k = 0; k < 5; ++k) {
        GroupElement g = random_nontrivial(rng, 5);
        TreeDiagram d = insert_caret(insert_caret(g.diagram(), 1), 3);
        LinkDiagram norm = normalize_split_loops(link_of_diagram(d));
        LinkDiagram norm_base = normalize_split_loops(link_of(g));
        REQUIRE(norm.free_loops == norm_base.free_loops + 2);
        REQUIRE(components_of(norm) == components_of(link_of(g)) + 2);
    }
}

TEST_CASE("no insertion leaves the link unchanged; normalization is idempotent") {
    std::mt19937_64 rng(65);
    for (int k = 0; k < 10; ++k) {
        GroupElement g = random_nontrivial(rng, 5);
        REQUIRE(canonical_pd_code(link_of_diagram(g.diagram())) == canonical_pd_code(link_of(g)));
        LinkDiagram once = normalize_split_loops(link_of(g));
        REQUIRE(canonical_pd_code(normalize_split_loops(once)) == canonical_pd_code(once));
    }
}

TEST_CASE("pd codes round-trip through the parser") {
    std::mt19937_64 rng(66);
    for (int k = 0; k < 25; ++k) {
        GroupElement g = random_nontrivial(rng, 6);
        LinkDiagram l = link_of(g);
        LinkDiagram back = parse_pd(pd_code(l));
        REQUIRE(back.crossing_count() == l.crossing_count());
        REQUIRE(arc_count(back) == arc_count(l));
        REQUIRE(components_of(back) == components_of(l));
        REQUIRE(canonical_pd_code(back) == canonical_pd_code(l));
    }
}

TEST_CASE("standard trefoil text parses to three crossings and arcs") {
    LinkDiagram tre = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    REQUIRE(tre.crossing_count() == 3);
    REQUIRE(arc_count(tre) == 3);
    REQUIRE(components_of(tre) == 1);
}

TEST_CASE("pd parse errors") {
    REQUIRE_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);          // arity
    REQUIRE_THROWS_AS(parse_pd("X[1,2,3,4]"), ParseError);        // labels must occur twice
    REQUIRE_THROWS_AS(parse_pd("X[1,1,2,2] X[3,3,4,4"), ParseError);
    REQUIRE_THROWS_AS(parse_pd("Y[1,2,3,4]"), ParseError);
    LinkDiagram unknot = parse_pd("  L 1 ");
    REQUIRE(unknot.crossing_count() == 0);
    REQUIRE(unknot.free_loops == 1);
}

TEST_CASE("gauss code shape") {
    LinkDiagram l = link_of(generator_x(0));
    std::string gc = gauss_code(l);
    REQUIRE(gc == gauss_code(link_of(generator_x(0))));  // deterministic
    int lines = 0;
    for (char c : gc)
        if (c == '\n') ++lines;
    REQUIRE(lines == components_of(l));
    REQUIRE(gc.find('U') != std::string::npos);
    REQUIRE(gc.find('O') != std::string::npos);
}

TEST_CASE("the mirror flag flips the crossing rule but not colorability") {
    std::mt19937_64 rng(67);
    for (int k = 0; k < 10; ++k) {
        GroupElement g = random_nontrivial(rng, 5);
        LinkDiagram l = link_of(g);
        LinkDiagram m = link_of(g, true);
        REQUIRE(m.crossing_count() == l.crossing_count());
        REQUIRE(components_of(m) == components_of(l));
        REQUIRE(is_p_colorable(m, 3) == is_p_colorable(l, 3));
        REQUIRE(is_p_colorable(m, 5) == is_p_colorable(l, 5));
        // mirrored over-strands are the original under-strands
        for (int c = 0; c < l.crossing_count(); ++c) {
            REQUIRE(m.crossings[static_cast<std::size_t>(c)][1] ==
                    l.crossings[static_cast<std::size_t>(c)][2]);
            REQUIRE(m.crossings[static_cast<std::size_t>(c)][0] ==
                    l.crossings[static_cast<std::size_t>(c)][1]);
        }
    }
}

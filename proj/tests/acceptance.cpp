// Release acceptance suite.  Each criterion prints exactly one PASS/FAIL
// line; the process exit code is the number of failed criteria.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "treelink/treelink.hpp"

using namespace treelink;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << name << (ok ? " PASS" : " FAIL") << " — " << detail << "\n";
    if (!ok) ++failures;
}

// A1: 1000 random non-trivial words over the w generators, length <= 12,
// seed 42; all five theorem checks pass on every sample, in under 60 s.
void a1_main_theorem_sweep() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(42);
    int passed = 0;
    const int samples = 1000;
    std::string first_failure;
    for (int k = 0; k < samples; ++k) {
        WordSample s = sample_nontrivial(rng, 12, Alphabet::cf_gens);
        TheoremReport r = verify_main_theorem(s.element);
        if (r.passed() && r.parity_ok && r.conflict_free && r.induced_valid &&
            r.uses_two_colors && r.fox_colorable)
            ++passed;
        else if (first_failure.empty())
            first_failure = s.word;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream d;
    d << passed << "/" << samples << " samples passed all five checks in " << secs << " s";
    if (!first_failure.empty()) d << "; first failure: " << first_failure;
    report("A1 main-theorem sweep:", passed == samples && secs < 60.0, d.str());
}

// A2: the w generators are members with 3-colorable links; x0 is a
// non-member with the stated gap sequences and parity violations.
void a2_generator_checks() {
    bool ok = true;
    std::ostringstream d;
    for (int i = 0; i < 4; ++i) {
        GroupElement w = generator_w(i);
        if (!is_member(w)) ok = false;
        if (!is_p_colorable(link_of(w), 3)) ok = false;
    }
    GroupElement x0 = generator_x(0);
    if (is_member(x0)) ok = false;
    std::string gp = frontier_gaps(x0.plus()).to_string();
    std::string gm = frontier_gaps(x0.minus()).to_string();
    if (gp != "0,1,2,1" || gm != "0,2,0,1") ok = false;
    EdgeColoring ec = edge_coloring(build_graph(x0.diagram()));
    if (ec.conflicts != std::vector<int>{1, 3}) ok = false;
    d << "w0..w3 members with 3-colorable links; x0 gaps " << gp << " vs " << gm
      << ", parity violations at leaves 1,3";
    report("A2 generator checks:", ok, d.str());
}

// A3: 200 random 4-ary pairs embed to members (checked against the
// exhaustive strip oracle within its guard); the right-comb replacement
// rule fails the same test.
void a3_embedding_validation() {
    std::mt19937_64 rng(3003);
    bool ok = true;
    int comb_nonmembers = 0, oracle_checked = 0;
    for (int k = 0; k < 200; ++k) {
        QuaternaryPair q = random_quaternary_pair(1 + static_cast<int>(uniform_below(rng, 6)), rng);
        GroupElement g = embed_f4(q);
        if (!is_member(g)) ok = false;
        if (g.leaf_count() + 1 <= 40) {
            ++oracle_checked;
            if (enumerate_strip_colorings(g.diagram()).size() != 1) ok = false;
        }
        GroupElement comb = embed_f4(q, CaretReplacement::right_comb);
        if (!comb.is_identity() && !is_member(comb)) ++comb_nonmembers;
    }
    bool comb_fails = comb_nonmembers > 0;
    std::ostringstream d;
    d << "200/200 embeddings are members (" << oracle_checked
      << " oracle-confirmed); right-comb rule produced " << comb_nonmembers << " non-members";
    report("A3 embedding validation:", ok && comb_fails, d.str());
}

// A4: within the 40-region guard, exhaustive enumeration finds exactly one
// strip coloring when the membership predicate says yes and none otherwise.
void a4_strip_uniqueness() {
    std::mt19937_64 rng(4004);
    bool ok = true;
    int agree = 0, total = 0;
    std::vector<TreeDiagram> samples;
    samples.push_back(GroupElement::identity().diagram());
    samples.push_back(generator_x(0).diagram());
    samples.push_back(generator_x(1).diagram());
    for (int i = 0; i < 4; ++i) samples.push_back(generator_w(i).diagram());
    for (int i = 0; i < 4; ++i) {
        QuaternaryPair y = w_pair(i);
        samples.emplace_back(embed_tree(y.plus), embed_tree(y.minus));
    }
    for (int k = 0; k < 60; ++k)
        samples.push_back(random_diagram(1 + static_cast<int>(uniform_below(rng, 14)), rng));
    for (int k = 0; k < 40; ++k) {
        Alphabet a = uniform_below(rng, 2) ? Alphabet::f_gens : Alphabet::cf_gens;
        samples.push_back(
            word_to_element(random_word(1 + static_cast<int>(uniform_below(rng, 5)), a, rng))
                .diagram());
    }
    for (const TreeDiagram& d : samples) {
        if (d.leaf_count() + 1 > 40) continue;
        ++total;
        bool member = is_member(GroupElement(d));
        std::size_t count = enumerate_strip_colorings(d).size();
        if (count == (member ? 1u : 0u))
            ++agree;
        else
            ok = false;
    }
    std::ostringstream det;
    det << agree << "/" << total << " sampled diagrams: oracle count is 1 for members, 0 otherwise";
    report("A4 strip-coloring uniqueness:", ok, det.str());
}

// A5: inserting one caret adds exactly one crossing-free split component:
// with split loops lifted off both diagrams, the inserted link is the
// reduced element's link plus one free loop.
void a5_caret_insertion() {
    std::mt19937_64 rng(5005);
    bool ok = true;
    int agree = 0;
    for (int k = 0; k < 100; ++k) {
        Alphabet a = uniform_below(rng, 2) ? Alphabet::f_gens : Alphabet::cf_gens;
        WordSample s = sample_nontrivial(rng, 6, a);
        LinkDiagram base = link_of(s.element);
        int i = 1 + static_cast<int>(
                        uniform_below(rng, static_cast<std::uint64_t>(s.element.leaf_count())));
        LinkDiagram raw = link_of_diagram(insert_caret(s.element.diagram(), i));
        LinkDiagram norm = normalize_split_loops(raw);
        LinkDiagram norm_base = normalize_split_loops(base);
        bool this_ok = components_of(raw) == components_of(base) + 1 &&
                       raw.crossing_count() == base.crossing_count() + 2 &&
                       norm.free_loops == norm_base.free_loops + 1 &&
                       norm.crossing_count() == norm_base.crossing_count();
        LinkDiagram no_loop = norm;
        no_loop.free_loops -= 1;
        this_ok = this_ok && canonical_pd_code(no_loop) == canonical_pd_code(norm_base);
        if (this_ok)
            ++agree;
        else
            ok = false;
    }
    report("A5 caret-insertion remark:", ok,
           std::to_string(agree) + "/100 insertions added exactly one crossing-free split unknot");
}

// A6: the fixture knots behave as published: trefoil 3-colorable with 9/6
// colorings, figure-eight not 3-colorable with coloring number 5, the
// 0-crossing unknot not 3-colorable.
void a6_fixture_knots() {
    bool ok = true;
    LinkDiagram tre = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
    ColoringCounts tc = count_colorings_bruteforce(tre, 3);
    if (!is_p_colorable(tre, 3) || tc.total != 9 || tc.nonconstant != 6) ok = false;

    LinkDiagram f8 = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
    if (is_p_colorable(f8, 3)) ok = false;
    if (coloring_number(f8, 13) != 5) ok = false;

    LinkDiagram unknot = link_of(GroupElement::identity());
    if (is_p_colorable(unknot, 3)) ok = false;

    report("A6 fixture knots:", ok,
           "trefoil 9 total / 6 non-constant, figure-eight coloring number 5, unknot not 3-colorable");
}

// A7: the three 3-colorability routes agree on 200 small diagrams, and the
// piecewise-linear oracle agrees with tree-pair multiplication on 500 word
// pairs at every dyadic k/2^10.
void a7_oracle_equivalences() {
    std::mt19937_64 rng(7007);
    bool ok = true;
    int diagrams = 0;
    while (diagrams < 200) {
        Alphabet a = uniform_below(rng, 2) ? Alphabet::f_gens : Alphabet::cf_gens;
        WordSample s = sample_nontrivial(rng, 4, a);
        LinkDiagram l = link_of(s.element);
        if (uniform_below(rng, 3) == 0) {
            int i = 1 + static_cast<int>(
                            uniform_below(rng, static_cast<std::uint64_t>(s.element.leaf_count())));
            l = normalize_split_loops(link_of_diagram(insert_caret(s.element.diagram(), i)));
        }
        if (arc_count(l) > 12) continue;
        ++diagrams;
        ColoringCounts cong = count_colorings_bruteforce(l, 3);
        ColoringCounts setr = count_colorings_bruteforce(l, 3, ThreeColorRule::distinct_or_equal);
        bool rank_route = kernel_dimension_mod_p(l, 3) >= 2;
        if (cong.total != setr.total || cong.nonconstant != setr.nonconstant) ok = false;
        if ((cong.nonconstant > 0) != rank_route) ok = false;
    }
    int pl_pairs = 0;
    for (int k = 0; k < 500; ++k) {
        Alphabet a = uniform_below(rng, 2) ? Alphabet::f_gens : Alphabet::cf_gens;
        int la = 1 + static_cast<int>(uniform_below(rng, 8));
        int lb = 1 + static_cast<int>(uniform_below(rng, 8));
        GroupElement ga = word_to_element(random_word(la, a, rng));
        GroupElement gb = word_to_element(random_word(lb, a, rng));
        PLMap fa = PLMap::of(ga), fb = PLMap::of(gb), fab = PLMap::of(multiply(ga, gb));
        bool pair_ok = true;
        for (long long i = 0; i <= 1024; ++i) {
            Dyadic x = Dyadic::scaled(i, 10);
            if (!(fab(x) == fb(fa(x)))) pair_ok = false;
        }
        if (pair_ok)
            ++pl_pairs;
        else
            ok = false;
    }
    std::ostringstream d;
    d << diagrams << " diagrams: set rule == congruence == rank criterion; " << pl_pairs
      << "/500 word pairs match the PL oracle at all k/2^10";
    report("A7 oracle equivalences:", ok, d.str());
}

// A8: structural counts on sampled reduced elements.
void a8_structural_counts() {
    std::mt19937_64 rng(8008);
    bool ok = true;
    int checked = 0;
    for (int k = 0; k < 300; ++k) {
        Alphabet a = uniform_below(rng, 2) ? Alphabet::f_gens : Alphabet::cf_gens;
        WordSample s = sample_nontrivial(rng, 8, a);
        int n = s.element.leaf_count();
        TangleGraph g = build_graph(s.element.diagram());
        if (static_cast<int>(g.vertices.size()) != 2 * n - 2) ok = false;
        if (static_cast<int>(g.edges.size()) != 4 * n - 4) ok = false;
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            if (g.degree(static_cast<int>(v)) != 4) ok = false;
        LinkDiagram l = to_link_diagram(g);
        if (l.crossing_count() != 2 * n - 2) ok = false;
        if (arc_count(l) != 2 * n - 2) ok = false;
        ++checked;
    }
    report("A8 structural counts:", ok,
           std::to_string(checked) + " reduced elements: |V|=2n-2, |E|=4n-4, all degrees 4, "
                                     "crossings=arcs=2n-2");
}

}  // namespace

int main() {
    a1_main_theorem_sweep();
    a2_generator_checks();
    a3_embedding_validation();
    a4_strip_uniqueness();
    a5_caret_insertion();
    a6_fixture_knots();
    a7_oracle_equivalences();
    a8_structural_counts();
    if (failures == 0)
        std::cout << "all acceptance criteria passed\n";
    else
        std::cout << failures << " acceptance criteria FAILED\n";
    return failures;
}

#include <catch2/catch_amalgamated.hpp>

#include "treelink/quaternary.hpp"
#include "treelink/strip.hpp"

using namespace treelink;

TEST_CASE("embedding the trivial pair gives the identity") {
    QuaternaryPair q(QuaternaryTree::leaf(), QuaternaryTree::leaf());
    REQUIRE(embed_f4(q) == GroupElement::identity());
}

TEST_CASE("a single 4-caret becomes the balanced 4-leaf tree") {
    QuaternaryTree l = QuaternaryTree::leaf();
    BinaryTree b = embed_tree(QuaternaryTree::caret(l, l, l, l));
    REQUIRE(leaf_depths(b) == std::vector<int>{2, 2, 2, 2});
    BinaryTree comb = embed_tree(QuaternaryTree::caret(l, l, l, l), CaretReplacement::right_comb);
    REQUIRE(leaf_depths(comb) == std::vector<int>{1, 2, 3, 3});
}

TEST_CASE("the embedded (non-reduced) pair behind w0") {
    QuaternaryPair y0 = w_pair(0);
    BinaryTree plus = embed_tree(y0.plus);
    BinaryTree minus = embed_tree(y0.minus);
    REQUIRE(plus.leaf_count() == 7);
    REQUIRE(leaf_depths(plus) == std::vector<int>{4, 4, 4, 4, 2, 2, 2});
    REQUIRE(leaf_depths(minus) == std::vector<int>{2, 2, 2, 4, 4, 4, 4});
    // all depths even, so every leaf matches parity on both sides
    for (int d : leaf_depths(plus)) REQUIRE(d % 2 == 0);
    TreeDiagram embedded(plus, minus);
    REQUIRE(frontier_gaps(embedded.plus).to_string() == "0,1,2,0,1,2,0,1");
    REQUIRE(frontier_gaps(embedded.minus).to_string() == "0,1,2,0,1,2,0,1");
}

TEST_CASE("w0 reduces to a five-leaf diagram, still a member") {
    GroupElement w0 = generator_w(0);
    REQUIRE(w0.leaf_count() == 5);
    REQUIRE(leaf_depths(w0.plus()) == std::vector<int>{3, 4, 4, 2, 1});
    REQUIRE(leaf_depths(w0.minus()) == std::vector<int>{1, 2, 4, 4, 3});
    REQUIRE(is_member(w0));
    REQUIRE(leaf_parity_ok(w0));
}

TEST_CASE("all four w generators are members") {
    for (int i = 0; i < 4; ++i) {
        GroupElement w = generator_w(i);
        REQUIRE_FALSE(w.is_identity());
        REQUIRE(is_member(w));
        REQUIRE(leaf_parity_ok(w));
    }
    REQUIRE_THROWS_AS(generator_w(4), std::out_of_range);
    REQUIRE_THROWS_AS(w_pair(-1), std::out_of_range);
}

TEST_CASE("embedding is a homomorphism at desk scale") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 50; ++k) {
        int ca = 1 + static_cast<int>(uniform_below(rng, 4));
        int cb = 1 + static_cast<int>(uniform_below(rng, 4));
        QuaternaryPair qa = random_quaternary_pair(ca, rng);
        QuaternaryPair qb = random_quaternary_pair(cb, rng);
        REQUIRE(embed_f4(q_multiply(qa, qb)) == multiply(embed_f4(qa), embed_f4(qb)));
    }
}

TEST_CASE("every embedded pair is a member; the right-comb rule is not sound") {
    std::mt19937_64 rng(32);
    int comb_failures = 0;
    for (int k = 0; k < 60; ++k) {
        QuaternaryPair q = random_quaternary_pair(1 + static_cast<int>(uniform_below(rng, 5)), rng);
        REQUIRE(is_member(embed_f4(q)));
        GroupElement comb = embed_f4(q, CaretReplacement::right_comb);
        if (!comb.is_identity() && !is_member(comb)) ++comb_failures;
    }
    REQUIRE(comb_failures > 0);
}

TEST_CASE("quaternary pair with unequal leaf counts is rejected") {
    QuaternaryTree l = QuaternaryTree::leaf();
    REQUIRE_THROWS_AS(QuaternaryPair(QuaternaryTree::caret(l, l, l, l), QuaternaryTree::leaf()),
                      std::invalid_argument);
}

TEST_CASE("random quaternary trees have leaf count 1 mod 3") {
    std::mt19937_64 rng(33);
    for (int k = 0; k < 30; ++k) {
        QuaternaryTree t = random_quaternary_tree(static_cast<int>(uniform_below(rng, 7)), rng);
        REQUIRE(t.leaf_count() % 3 == 1);
    }
}

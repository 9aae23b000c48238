#pragma once

#include <array>
#include <memory>
#include <stdexcept>
#include <vector>

#include "treelink/diagram.hpp"

namespace treelink {

// Rooted ordered 4-ary tree; leaf count is always 1 mod 3.
class QuaternaryTree {
public:
    QuaternaryTree() = default;  // a single leaf

    static QuaternaryTree leaf() { return QuaternaryTree(); }

    static QuaternaryTree caret(QuaternaryTree c1, QuaternaryTree c2, QuaternaryTree c3,
                                QuaternaryTree c4) {
        QuaternaryTree t;
        int leaves = c1.leaf_count() + c2.leaf_count() + c3.leaf_count() + c4.leaf_count();
        t.node_ = std::make_shared<const Node>(Node{
            {std::move(c1.node_), std::move(c2.node_), std::move(c3.node_), std::move(c4.node_)},
            leaves});
        return t;
    }

    bool is_leaf() const { return node_ == nullptr; }
    QuaternaryTree child(int k) const {
        return QuaternaryTree(node_->children[static_cast<std::size_t>(k)]);
    }
    int leaf_count() const { return node_ ? node_->leaves : 1; }

    friend bool operator==(const QuaternaryTree& a, const QuaternaryTree& b) {
        if (a.node_ == b.node_) return true;
        if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf();
        for (int k = 0; k < 4; ++k)
            if (!(a.child(k) == b.child(k))) return false;
        return true;
    }

private:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        std::array<NodePtr, 4> children;
        int leaves;
    };
    explicit QuaternaryTree(NodePtr p) : node_(std::move(p)) {}
    NodePtr node_;
};

struct QuaternaryPair {
    QuaternaryTree plus;
    QuaternaryTree minus;

    QuaternaryPair(QuaternaryTree p, QuaternaryTree m) : plus(std::move(p)), minus(std::move(m)) {
        if (plus.leaf_count() != minus.leaf_count())
            throw std::invalid_argument("QuaternaryPair: leaf counts differ");
    }
};

namespace detail {

inline QuaternaryTree merge_q(const QuaternaryTree& a, const QuaternaryTree& b) {
    if (a.is_leaf()) return b;
    if (b.is_leaf()) return a;
    return QuaternaryTree::caret(merge_q(a.child(0), b.child(0)), merge_q(a.child(1), b.child(1)),
                                 merge_q(a.child(2), b.child(2)), merge_q(a.child(3), b.child(3)));
}

inline void decompose_q(const QuaternaryTree& whole, const QuaternaryTree& base,
                        std::vector<QuaternaryTree>& out) {
    if (base.is_leaf()) {
        out.push_back(whole);
        return;
    }
    if (whole.is_leaf()) throw std::logic_error("decompose_q: base is not a prefix of whole");
    for (int k = 0; k < 4; ++k) decompose_q(whole.child(k), base.child(k), out);
}

inline QuaternaryTree graft_q(const QuaternaryTree& t, const std::vector<QuaternaryTree>& pieces,
                              std::size_t& next) {
    if (t.is_leaf()) return pieces[next++];
    QuaternaryTree c0 = graft_q(t.child(0), pieces, next);
    QuaternaryTree c1 = graft_q(t.child(1), pieces, next);
    QuaternaryTree c2 = graft_q(t.child(2), pieces, next);
    QuaternaryTree c3 = graft_q(t.child(3), pieces, next);
    return QuaternaryTree::caret(std::move(c0), std::move(c1), std::move(c2), std::move(c3));
}

}  // namespace detail

// Pair product by the same common-refinement algorithm as the binary case,
// run in arity 4.  No canonical reduction is applied; equivalence is decided
// after embedding.
inline QuaternaryPair q_multiply(const QuaternaryPair& a, const QuaternaryPair& b) {
    QuaternaryTree u = detail::merge_q(a.minus, b.plus);
    std::vector<QuaternaryTree> below_a, below_b;
    detail::decompose_q(u, a.minus, below_a);
    detail::decompose_q(u, b.plus, below_b);
    std::size_t next = 0;
    QuaternaryTree plus = detail::graft_q(a.plus, below_a, next);
    next = 0;
    QuaternaryTree minus = detail::graft_q(b.minus, below_b, next);
    return QuaternaryPair(std::move(plus), std::move(minus));
}

// How a 4-ary caret is replaced by binary carets.  `balanced` is the rule the
// library is built on: it is the unique 4-leaf shape with all leaf depths
// even.  `right_comb` exists solely so tests can demonstrate that any other
// reading breaks membership in the 3-colorable subgroup.
enum class CaretReplacement { balanced, right_comb };

inline BinaryTree embed_tree(const QuaternaryTree& q,
                             CaretReplacement rule = CaretReplacement::balanced) {
    if (q.is_leaf()) return BinaryTree::leaf();
    BinaryTree c0 = embed_tree(q.child(0), rule);
    BinaryTree c1 = embed_tree(q.child(1), rule);
    BinaryTree c2 = embed_tree(q.child(2), rule);
    BinaryTree c3 = embed_tree(q.child(3), rule);
    if (rule == CaretReplacement::balanced)
        return BinaryTree::caret(BinaryTree::caret(std::move(c0), std::move(c1)),
                                 BinaryTree::caret(std::move(c2), std::move(c3)));
    return BinaryTree::caret(
        std::move(c0),
        BinaryTree::caret(std::move(c1), BinaryTree::caret(std::move(c2), std::move(c3))));
}

// Caret-replacement embedding of the Brown-Thompson group F(4) into F.
inline GroupElement embed_f4(const QuaternaryPair& q,
                             CaretReplacement rule = CaretReplacement::balanced) {
    return GroupElement(TreeDiagram(embed_tree(q.plus, rule), embed_tree(q.minus, rule)));
}

// The 4-ary tree pair behind generator_w(i): the base pair puts an extra
// 4-caret at child 1 of the plus root and child 4 of the minus root; i >= 1
// prepends a right spine of i 4-carets to both trees.
inline QuaternaryPair w_pair(int i) {
    if (i < 0 || i > 3) throw std::out_of_range("w_pair: index must be 0..3");
    QuaternaryTree l = QuaternaryTree::leaf();
    QuaternaryTree q = QuaternaryTree::caret(l, l, l, l);
    QuaternaryTree plus = QuaternaryTree::caret(q, l, l, l);
    QuaternaryTree minus = QuaternaryTree::caret(l, l, l, q);
    for (int k = 0; k < i; ++k) {
        plus = QuaternaryTree::caret(l, l, l, plus);
        minus = QuaternaryTree::caret(l, l, l, minus);
    }
    return QuaternaryPair(std::move(plus), std::move(minus));
}

// Generators of the 3-colorable subgroup, obtained by embedding w_pair(i).
inline GroupElement generator_w(int i) { return embed_f4(w_pair(i)); }

// Random 4-ary tree grown by expanding a uniformly chosen leaf `carets`
// times; leaf count is 1 + 3*carets.
inline QuaternaryTree random_quaternary_tree(int carets, std::mt19937_64& rng) {
    struct Grow {
        static QuaternaryTree at(const QuaternaryTree& t, int leaf_index) {
            if (t.is_leaf()) {
                QuaternaryTree l = QuaternaryTree::leaf();
                return QuaternaryTree::caret(l, l, l, l);
            }
            std::array<QuaternaryTree, 4> ch{t.child(0), t.child(1), t.child(2), t.child(3)};
            for (int k = 0; k < 4; ++k) {
                if (leaf_index < ch[static_cast<std::size_t>(k)].leaf_count()) {
                    ch[static_cast<std::size_t>(k)] = at(ch[static_cast<std::size_t>(k)], leaf_index);
                    return QuaternaryTree::caret(ch[0], ch[1], ch[2], ch[3]);
                }
                leaf_index -= ch[static_cast<std::size_t>(k)].leaf_count();
            }
            throw std::logic_error("random_quaternary_tree: leaf index out of range");
        }
    };
    QuaternaryTree t = QuaternaryTree::leaf();
    for (int k = 0; k < carets; ++k) {
        int leaf = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(t.leaf_count())));
        t = Grow::at(t, leaf);
    }
    return t;
}

inline QuaternaryPair random_quaternary_pair(int carets, std::mt19937_64& rng) {
    QuaternaryTree p = random_quaternary_tree(carets, rng);
    QuaternaryTree m = random_quaternary_tree(carets, rng);
    return QuaternaryPair(std::move(p), std::move(m));
}

}  // namespace treelink

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treelink/tree.hpp"

namespace treelink {

// A pair of binary trees with the same number of leaves, drawn with `plus`
// root-up above `minus` root-down, leaves identified pairwise.
struct TreeDiagram {
    BinaryTree plus;
    BinaryTree minus;

    TreeDiagram(BinaryTree p, BinaryTree m) : plus(std::move(p)), minus(std::move(m)) {
        if (plus.leaf_count() != minus.leaf_count())
            throw std::invalid_argument("TreeDiagram: leaf counts differ (" +
                                        std::to_string(plus.leaf_count()) + " vs " +
                                        std::to_string(minus.leaf_count()) + ")");
    }

    int leaf_count() const { return plus.leaf_count(); }

    friend bool operator==(const TreeDiagram& a, const TreeDiagram& b) {
        return a.plus == b.plus && a.minus == b.minus;
    }
    friend bool operator!=(const TreeDiagram& a, const TreeDiagram& b) { return !(a == b); }
};

namespace detail {

// flags[i-1] is set when leaves i and i+1 (1-based) are children of one caret.
inline void sibling_flags_into(const BinaryTree& t, int offset, std::vector<char>& flags) {
    if (t.is_leaf()) return;
    if (t.left().is_leaf() && t.right().is_leaf()) {
        flags[static_cast<std::size_t>(offset)] = 1;
        return;
    }
    sibling_flags_into(t.left(), offset, flags);
    sibling_flags_into(t.right(), offset + t.left().leaf_count(), flags);
}

inline std::vector<char> sibling_flags(const BinaryTree& t) {
    std::vector<char> flags(t.leaf_count() > 0 ? static_cast<std::size_t>(t.leaf_count() - 1) : 0, 0);
    sibling_flags_into(t, 0, flags);
    return flags;
}

// Replaces the caret whose children are leaves i, i+1 (1-based) by a leaf.
inline BinaryTree remove_sibling_caret(const BinaryTree& t, int i) {
    if (t.is_leaf()) throw std::logic_error("remove_sibling_caret: no such caret");
    if (t.left().is_leaf() && t.right().is_leaf() && i == 1) return BinaryTree::leaf();
    int left_n = t.left().leaf_count();
    if (i + 1 <= left_n)
        return BinaryTree::caret(remove_sibling_caret(t.left(), i), t.right());
    return BinaryTree::caret(t.left(), remove_sibling_caret(t.right(), i - left_n));
}

// Replaces leaf i (1-based) by a caret over two leaves.
inline BinaryTree expand_leaf(const BinaryTree& t, int i) {
    if (t.is_leaf()) {
        if (i != 1) throw std::out_of_range("expand_leaf: index out of range");
        return BinaryTree::caret(BinaryTree::leaf(), BinaryTree::leaf());
    }
    int left_n = t.left().leaf_count();
    if (i <= left_n) return BinaryTree::caret(expand_leaf(t.left(), i), t.right());
    return BinaryTree::caret(t.left(), expand_leaf(t.right(), i - left_n));
}

// Replaces leaf i (1-based) by an arbitrary subtree.
inline BinaryTree graft_leaf(const BinaryTree& t, int i, const BinaryTree& piece) {
    if (t.is_leaf()) {
        if (i != 1) throw std::out_of_range("graft_leaf: index out of range");
        return piece;
    }
    int left_n = t.left().leaf_count();
    if (i <= left_n) return BinaryTree::caret(graft_leaf(t.left(), i, piece), t.right());
    return BinaryTree::caret(t.left(), graft_leaf(t.right(), i, piece));
}

// Least common refinement: the smallest tree containing both arguments as
// rooted subdivisions.  The merge is a simultaneous recursion and therefore
// deterministic.
inline BinaryTree merge_trees(const BinaryTree& a, const BinaryTree& b) {
    if (a.is_leaf()) return b;
    if (b.is_leaf()) return a;
    return BinaryTree::caret(merge_trees(a.left(), b.left()), merge_trees(a.right(), b.right()));
}

// Given that `base` is a rooted subdivision prefix of `whole`, returns the
// subtree of `whole` hanging below each leaf of `base`, left to right.
inline void decompose_into(const BinaryTree& whole, const BinaryTree& base,
                           std::vector<BinaryTree>& out) {
    if (base.is_leaf()) {
        out.push_back(whole);
        return;
    }
    if (whole.is_leaf()) throw std::logic_error("decompose: base is not a prefix of whole");
    decompose_into(whole.left(), base.left(), out);
    decompose_into(whole.right(), base.right(), out);
}

inline BinaryTree graft_all(const BinaryTree& t, const std::vector<BinaryTree>& pieces,
                            std::size_t& next) {
    if (t.is_leaf()) return pieces[next++];
    BinaryTree l = graft_all(t.left(), pieces, next);
    BinaryTree r = graft_all(t.right(), pieces, next);
    return BinaryTree::caret(std::move(l), std::move(r));
}

}  // namespace detail

// Indices i (1-based) such that leaves i, i+1 share a parent caret in both
// trees; each is a removable caret pair.
inline std::vector<int> common_reducible_gaps(const TreeDiagram& d) {
    auto fp = detail::sibling_flags(d.plus);
    auto fm = detail::sibling_flags(d.minus);
    std::vector<int> out;
    for (std::size_t k = 0; k < fp.size(); ++k)
        if (fp[k] && fm[k]) out.push_back(static_cast<int>(k) + 1);
    return out;
}

inline bool is_reduced(const TreeDiagram& d) { return common_reducible_gaps(d).empty(); }

// Removes the caret pair at leaves i, i+1 from both trees.  Pre: i is a
// common reducible gap.
inline TreeDiagram remove_common_caret(const TreeDiagram& d, int i) {
    return TreeDiagram(detail::remove_sibling_caret(d.plus, i),
                       detail::remove_sibling_caret(d.minus, i));
}

// The unique reduced diagram equivalent to d.  Uniqueness (independence of
// the removal order) is covered by the test suite.
inline TreeDiagram reduce(TreeDiagram d) {
    for (;;) {
        auto gaps = common_reducible_gaps(d);
        if (gaps.empty()) return d;
        d = remove_common_caret(d, gaps.front());
    }
}

// Replaces leaf i of both trees by a caret; the result is equivalent to d.
inline TreeDiagram insert_caret(const TreeDiagram& d, int i) {
    if (i < 1 || i > d.leaf_count())
        throw std::out_of_range("insert_caret: leaf index " + std::to_string(i) + " out of range");
    return TreeDiagram(detail::expand_leaf(d.plus, i), detail::expand_leaf(d.minus, i));
}

// An element of Thompson's group F, held as its unique reduced tree diagram.
class GroupElement {
public:
    GroupElement() : d_(BinaryTree::leaf(), BinaryTree::leaf()) {}
    explicit GroupElement(TreeDiagram d) : d_(reduce(std::move(d))) {}

    static GroupElement identity() { return GroupElement(); }

    const TreeDiagram& diagram() const { return d_; }
    const BinaryTree& plus() const { return d_.plus; }
    const BinaryTree& minus() const { return d_.minus; }
    int leaf_count() const { return d_.leaf_count(); }
    bool is_identity() const { return d_.leaf_count() == 1; }

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.d_ == b.d_; }
    friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

private:
    TreeDiagram d_;
};

// Product: lift both diagrams over the least common refinement of a.minus
// and b.plus, so that the left factor acts first under the piecewise-linear
// reading.
inline GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    BinaryTree u = detail::merge_trees(a.minus(), b.plus());
    std::vector<BinaryTree> below_a_minus, below_b_plus;
    detail::decompose_into(u, a.minus(), below_a_minus);
    detail::decompose_into(u, b.plus(), below_b_plus);
    std::size_t next = 0;
    BinaryTree plus_lifted = detail::graft_all(a.plus(), below_a_minus, next);
    next = 0;
    BinaryTree minus_lifted = detail::graft_all(b.minus(), below_b_plus, next);
    return GroupElement(TreeDiagram(std::move(plus_lifted), std::move(minus_lifted)));
}

inline GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return multiply(a, b);
}

inline GroupElement inverse(const GroupElement& g) {
    return GroupElement(TreeDiagram(g.minus(), g.plus()));
}

// Standard generators of F: x0 = (((..).), (.(..))); x_i wraps the x0
// pattern at the bottom of a right spine of i carets.
inline GroupElement generator_x(int i) {
    if (i < 0) throw std::out_of_range("generator_x: index must be >= 0");
    BinaryTree l = BinaryTree::leaf();
    BinaryTree plus = BinaryTree::caret(BinaryTree::caret(l, l), l);
    BinaryTree minus = BinaryTree::caret(l, BinaryTree::caret(l, l));
    for (int k = 0; k < i; ++k) {
        plus = BinaryTree::caret(l, plus);
        minus = BinaryTree::caret(l, minus);
    }
    return GroupElement(TreeDiagram(std::move(plus), std::move(minus)));
}

// "pair <plus> <minus>" canonical element notation.
inline std::string to_pair_text(const GroupElement& g) {
    return "pair " + to_text(g.plus()) + " " + to_text(g.minus());
}

inline TreeDiagram random_diagram(int leaves, std::mt19937_64& rng) {
    BinaryTree p = random_tree(leaves, rng);
    BinaryTree m = random_tree(leaves, rng);
    return TreeDiagram(std::move(p), std::move(m));
}

}  // namespace treelink

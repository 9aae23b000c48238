#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "treelink/errors.hpp"

namespace treelink {

// Finite rooted ordered binary tree: a leaf, or a caret with two subtrees.
// Immutable; copies share structure.  Leaves are numbered 1..n left to right
// in all public interfaces.
class BinaryTree {
public:
    BinaryTree() = default;  // a single leaf

    static BinaryTree leaf() { return BinaryTree(); }

    static BinaryTree caret(BinaryTree left, BinaryTree right) {
        BinaryTree t;
        int leaves = left.leaf_count() + right.leaf_count();
        int height = 1 + std::max(left.height(), right.height());
        t.node_ = std::make_shared<const Node>(
            Node{std::move(left.node_), std::move(right.node_), leaves, height});
        return t;
    }

    bool is_leaf() const { return node_ == nullptr; }
    BinaryTree left() const { return BinaryTree(node_->left); }
    BinaryTree right() const { return BinaryTree(node_->right); }

    int leaf_count() const { return node_ ? node_->leaves : 1; }
    int caret_count() const { return leaf_count() - 1; }
    int height() const { return node_ ? node_->height : 0; }

    friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
        if (a.node_ == b.node_) return true;
        if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf();
        if (a.leaf_count() != b.leaf_count()) return false;
        return a.left() == b.left() && a.right() == b.right();
    }
    friend bool operator!=(const BinaryTree& a, const BinaryTree& b) { return !(a == b); }

private:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        NodePtr left, right;
        int leaves;
        int height;
    };
    explicit BinaryTree(NodePtr p) : node_(std::move(p)) {}
    NodePtr node_;
};

namespace detail {

inline BinaryTree parse_tree_at(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) throw ParseError("expected '.' or '('", pos);
    char c = text[pos];
    if (c == '.') {
        ++pos;
        return BinaryTree::leaf();
    }
    if (c == '(') {
        ++pos;
        BinaryTree l = parse_tree_at(text, pos);
        BinaryTree r = parse_tree_at(text, pos);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
        ++pos;
        return BinaryTree::caret(std::move(l), std::move(r));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
}

}  // namespace detail

// Grammar: T ::= "." | "(" T T ")", whitespace insignificant.
inline BinaryTree parse_tree(std::string_view text) {
    std::size_t pos = 0;
    BinaryTree t = detail::parse_tree_at(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError("trailing input", pos);
    return t;
}

// Canonical printer; round-trips with parse_tree and contains no whitespace.
inline std::string to_text(const BinaryTree& t) {
    if (t.is_leaf()) return ".";
    return "(" + to_text(t.left()) + to_text(t.right()) + ")";
}

namespace detail {
inline void leaf_depths_into(const BinaryTree& t, int depth, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(depth);
        return;
    }
    leaf_depths_into(t.left(), depth + 1, out);
    leaf_depths_into(t.right(), depth + 1, out);
}
}  // namespace detail

// Edge-length of the path from each leaf to the root, left to right.
inline std::vector<int> leaf_depths(const BinaryTree& t) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(t.leaf_count()));
    detail::leaf_depths_into(t, 0, out);
    return out;
}

// Deterministic helper used by every randomized routine in the library.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) {
    return rng() % k;
}

// Uniform recursive leaf-split: a tree with n leaves is a caret over trees
// with k and n-k leaves, k drawn uniformly from 1..n-1.
inline BinaryTree random_tree(int leaves, std::mt19937_64& rng) {
    if (leaves < 1) throw std::invalid_argument("random_tree: leaves must be >= 1");
    if (leaves == 1) return BinaryTree::leaf();
    int k = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(leaves - 1)));
    BinaryTree l = random_tree(k, rng);
    BinaryTree r = random_tree(leaves - k, rng);
    return BinaryTree::caret(std::move(l), std::move(r));
}

}  // namespace treelink

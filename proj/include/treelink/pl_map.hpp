#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "treelink/diagram.hpp"
#include "treelink/dyadic.hpp"

namespace treelink {

// Test oracle: the piecewise linear self-map of [0,1] described by a tree
// diagram.  Leaf i of the plus tree spans an interval of width 2^-depth and
// is mapped linearly onto the matching interval of the minus tree, so the
// map sends the plus partition onto the minus partition in order.  The
// product convention is "left factor acts first".
struct PLMap {
    std::vector<Dyadic> xs;  // strictly increasing, xs.front()=0, xs.back()=1
    std::vector<Dyadic> ys;

    static PLMap identity() {
        PLMap f;
        f.xs = {Dyadic(0), Dyadic(1)};
        f.ys = {Dyadic(0), Dyadic(1)};
        return f;
    }

    static PLMap of(const TreeDiagram& d) {
        PLMap f;
        f.xs = breakpoints(d.plus);
        f.ys = breakpoints(d.minus);
        return f;
    }

    static PLMap of(const GroupElement& g) { return of(g.diagram()); }

    // Functional inverse: swap the two breakpoint lists.
    PLMap inverse() const {
        PLMap f;
        f.xs = ys;
        f.ys = xs;
        return f;
    }

    // Exact evaluation; pre: 0 <= x <= 1.
    Dyadic operator()(const Dyadic& x) const {
        if (x < Dyadic(0) || Dyadic(1) < x) throw std::domain_error("PLMap: argument outside [0,1]");
        std::size_t hi = static_cast<std::size_t>(
            std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
        if (hi >= xs.size()) hi = xs.size() - 1;  // x == 1 falls in the last segment
        std::size_t lo = hi - 1;
        // segment widths are powers of two, so the slope is an exact shift
        int sx = pow2_exponent(xs[hi] - xs[lo]);
        int sy = pow2_exponent(ys[hi] - ys[lo]);
        return ys[lo] + (x - xs[lo]).times_pow2(sy - sx);
    }

private:
    static std::vector<Dyadic> breakpoints(const BinaryTree& t) {
        std::vector<Dyadic> out;
        out.reserve(static_cast<std::size_t>(t.leaf_count()) + 1);
        out.push_back(Dyadic(0));
        Dyadic acc(0);
        for (int depth : leaf_depths(t)) {
            acc = acc + Dyadic::scaled(1, depth);
            out.push_back(acc);
        }
        return out;
    }

    // Exponent s with value == 2^s; segment widths always have this form.
    static int pow2_exponent(const Dyadic& width) {
        if (width.is_zero()) throw std::logic_error("PLMap: zero-width segment");
        Dyadic probe = Dyadic::scaled(1, width.exponent());
        if (!(probe == width)) throw std::logic_error("PLMap: width is not a power of two");
        return -width.exponent();
    }
};

// Pointwise comparison on the dyadic grid k / 2^log2_den, k = 0..2^log2_den.
inline bool equal_on_grid(const PLMap& f, const PLMap& g, int log2_den) {
    long long den = 1LL << log2_den;
    for (long long k = 0; k <= den; ++k) {
        Dyadic x = Dyadic::scaled(k, log2_den);
        if (!(f(x) == g(x))) return false;
    }
    return true;
}

}  // namespace treelink

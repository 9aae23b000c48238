#pragma once

#include <array>
#include <optional>
#include <vector>

#include "treelink/errors.hpp"
#include "treelink/link.hpp"

namespace treelink {

// The arcs meeting at each crossing: the two under-arcs and the over-arc.
inline std::vector<std::array<int, 3>> crossing_arc_triples(const LinkDiagram& l) {
    std::vector<int> arc = arc_index_of_edges(l);
    std::vector<std::array<int, 3>> out;
    out.reserve(l.crossings.size());
    for (const auto& slots : l.crossings) {
        int over = arc[static_cast<std::size_t>(slots[1])];
        if (over != arc[static_cast<std::size_t>(slots[3])])
            throw std::logic_error("crossing_arc_triples: over strand split across arcs");
        out.push_back({arc[static_cast<std::size_t>(slots[0])], arc[static_cast<std::size_t>(slots[2])], over});
    }
    return out;
}

// Integer crossing-relation matrix: row x + z - 2y per crossing, coefficients
// summed when arcs coincide.  Every row sums to zero, so constant vectors
// are always in the kernel mod p.
struct ColoringMatrix {
    int arcs = 0;
    std::vector<std::vector<int>> rows;
};

inline ColoringMatrix coloring_matrix(const LinkDiagram& l) {
    ColoringMatrix m;
    m.arcs = arc_count(l);
    for (const auto& [x, z, y] : crossing_arc_triples(l)) {
        std::vector<int> row(static_cast<std::size_t>(m.arcs), 0);
        row[static_cast<std::size_t>(x)] += 1;
        row[static_cast<std::size_t>(z)] += 1;
        row[static_cast<std::size_t>(y)] -= 2;
        m.rows.push_back(std::move(row));
    }
    return m;
}

// Rank over Z/p by Gaussian elimination (p prime).
inline int modp_rank(const ColoringMatrix& m, int p) {
    if (m.arcs == 0) return 0;
    std::vector<std::vector<int>> a;
    a.reserve(m.rows.size());
    for (const auto& row : m.rows) {
        std::vector<int> r(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) r[k] = ((row[k] % p) + p) % p;
        a.push_back(std::move(r));
    }
    int rank = 0;
    int rows = static_cast<int>(a.size());
    for (int col = 0; col < m.arcs && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        // scale the pivot row to 1 via Fermat inverse
        int v = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        long long inv = 1, base = v, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int c2 = col; c2 < m.arcs; ++c2)
            a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)] =
                static_cast<int>(a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)] * inv % p);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            int f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c2 = col; c2 < m.arcs; ++c2) {
                long long val = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -
                                static_cast<long long>(f) *
                                    a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c2)];
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] =
                    static_cast<int>(((val % p) + p) % p);
            }
        }
        ++rank;
    }
    return rank;
}

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dimension of the solution space of the coloring relations over Z/p.
inline int kernel_dimension_mod_p(const LinkDiagram& l, int p) {
    if (!is_prime(p)) throw std::invalid_argument("kernel_dimension_mod_p: p must be prime");
    ColoringMatrix m = coloring_matrix(l);
    return m.arcs - modp_rank(m, p);
}

enum class ThreeColorRule { congruence, distinct_or_equal };

struct ColoringCounts {
    long long total = 0;
    long long nonconstant = 0;
};

// Exhaustive count of arc labelings satisfying the crossing rule; guarded at
// 16 arcs.  The set rule (all three colors equal or all distinct) is only
// meaningful for p = 3 and is kept as an independent route from the
// congruence x + z = 2y.
inline ColoringCounts count_colorings_bruteforce(const LinkDiagram& l, int p,
                                                 ThreeColorRule rule = ThreeColorRule::congruence) {
    if (p < 2) throw std::invalid_argument("count_colorings_bruteforce: p must be >= 2");
    if (rule == ThreeColorRule::distinct_or_equal && p != 3)
        throw std::invalid_argument("the distinct-or-equal rule is specific to p = 3");
    int arcs = arc_count(l);
    if (arcs > 16) throw GuardError("count_colorings_bruteforce: more than 16 arcs");

    auto triples = crossing_arc_triples(l);
    // check each crossing as soon as its last arc is assigned
    std::vector<std::vector<std::array<int, 3>>> bucket(static_cast<std::size_t>(arcs));
    for (const auto& tr : triples) {
        int last = std::max({tr[0], tr[1], tr[2]});
        bucket[static_cast<std::size_t>(last)].push_back(tr);
    }

    std::vector<int> color(static_cast<std::size_t>(arcs), 0);
    ColoringCounts counts;
    auto ok = [&](const std::array<int, 3>& tr) {
        int x = color[static_cast<std::size_t>(tr[0])];
        int z = color[static_cast<std::size_t>(tr[1])];
        int y = color[static_cast<std::size_t>(tr[2])];
        if (rule == ThreeColorRule::congruence) return (x + z - 2 * y) % p == 0;
        bool all_same = x == y && y == z;
        bool all_diff = x != y && y != z && x != z;
        return all_same || all_diff;
    };
    struct Search {
        int arcs, p;
        std::vector<int>& color;
        std::vector<std::vector<std::array<int, 3>>>& bucket;
        decltype(ok)& check;
        ColoringCounts& counts;
        void run(int arc) {
            if (arc == arcs) {
                ++counts.total;
                bool constant = true;
                for (int k = 1; k < arcs; ++k)
                    if (color[static_cast<std::size_t>(k)] != color[0]) constant = false;
                if (!constant) ++counts.nonconstant;
                return;
            }
            for (int c = 0; c < p; ++c) {
                color[static_cast<std::size_t>(arc)] = c;
                bool fine = true;
                for (const auto& tr : bucket[static_cast<std::size_t>(arc)])
                    if (!check(tr)) {
                        fine = false;
                        break;
                    }
                if (fine) run(arc + 1);
            }
        }
    };
    if (arcs == 0) {
        counts.total = 1;  // the empty assignment
        return counts;
    }
    Search{arcs, p, color, bucket, ok, counts}.run(0);
    return counts;
}

// A diagram is p-colorable when a non-constant labeling exists: for prime p
// that is kernel dimension >= 2 over Z/p; composite moduli fall back to the
// exhaustive count (and its size guard).
inline bool is_p_colorable(const LinkDiagram& l, int p) {
    if (p < 2) throw std::invalid_argument("is_p_colorable: p must be >= 2");
    if (is_prime(p)) return kernel_dimension_mod_p(l, p) >= 2;
    return count_colorings_bruteforce(l, p).nonconstant > 0;
}

// Smallest p in 3..bound admitting a non-constant p-coloring.
inline std::optional<int> coloring_number(const LinkDiagram& l, int bound) {
    if (bound < 3) throw std::invalid_argument("coloring_number: bound must be >= 3");
    for (int p = 3; p <= bound; ++p)
        if (is_p_colorable(l, p)) return p;
    return std::nullopt;
}

}  // namespace treelink

#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "treelink/errors.hpp"
#include "treelink/tangle.hpp"

namespace treelink {

// A link diagram as combinatorics: each crossing stores its four incident
// edge ids in counterclockwise order, with the under-strand in slots {0,2}
// and the over-strand in slots {1,3}.  Crossing-free unknot components are
// carried as a plain count.
struct LinkDiagram {
    struct End {
        int crossing;
        int slot;
        friend bool operator==(const End& a, const End& b) {
            return a.crossing == b.crossing && a.slot == b.slot;
        }
    };
    struct Edge {
        End a, b;
    };

    std::vector<std::array<int, 4>> crossings;
    std::vector<Edge> edges;
    int free_loops = 0;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    End opposite_end(int edge, const End& at) const {
        const Edge& e = edges[static_cast<std::size_t>(edge)];
        return e.a == at ? e.b : e.a;
    }
};

// Resolve every 4-valent vertex into a crossing with the bifurcating (child)
// pair on top.  With `mirror` set the opposite rule is used at every vertex,
// producing the mirror diagram.
inline LinkDiagram to_link_diagram(const TangleGraph& g, bool mirror = false) {
    LinkDiagram l;
    l.crossings.resize(g.rotation.size());
    for (std::size_t v = 0; v < g.rotation.size(); ++v)
        for (int s = 0; s < 4; ++s) {
            int target = mirror ? (s + 3) % 4 : s;  // rotate one notch: children become under
            l.crossings[v][static_cast<std::size_t>(target)] = g.rotation[v][static_cast<std::size_t>(s)];
        }
    l.edges.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        auto fix = [mirror](int slot) { return mirror ? (slot + 3) % 4 : slot; };
        l.edges.push_back({{e.vertex[0], fix(e.slot[0])}, {e.vertex[1], fix(e.slot[1])}});
    }
    return l;
}

// Link diagram of a (possibly non-reduced) tree diagram with n >= 2 leaves.
inline LinkDiagram link_of_diagram(const TreeDiagram& d, bool mirror = false) {
    return to_link_diagram(build_graph(d), mirror);
}

// Link diagram of a group element, built from its reduced representative;
// the identity yields the 0-crossing unknot.
inline LinkDiagram link_of(const GroupElement& g, bool mirror = false) {
    if (g.is_identity()) {
        LinkDiagram l;
        l.free_loops = 1;
        return l;
    }
    return link_of_diagram(g.diagram(), mirror);
}

namespace detail {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void join(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

inline Dsu arc_partition(const LinkDiagram& l) {
    Dsu dsu(static_cast<std::size_t>(l.edge_count()));
    for (const auto& c : l.crossings) dsu.join(c[1], c[3]);  // the over strand passes through
    return dsu;
}

inline Dsu component_partition(const LinkDiagram& l) {
    Dsu dsu(static_cast<std::size_t>(l.edge_count()));
    for (const auto& c : l.crossings) {
        dsu.join(c[1], c[3]);
        dsu.join(c[0], c[2]);
    }
    return dsu;
}

}  // namespace detail

// Maximal strands, broken only at under-passes.  Free loops are listed last
// with no edges.
struct Arc {
    std::vector<int> edges;
    bool free_loop = false;
};

// edge id -> arc id; arcs are numbered by their smallest edge id, free loops
// appended after all edge-bearing arcs.
inline std::vector<int> arc_index_of_edges(const LinkDiagram& l) {
    detail::Dsu dsu = detail::arc_partition(l);
    std::vector<int> arc(static_cast<std::size_t>(l.edge_count()), -1);
    int next = 0;
    for (int e = 0; e < l.edge_count(); ++e) {
        int root = dsu.find(e);
        if (arc[static_cast<std::size_t>(root)] == -1) arc[static_cast<std::size_t>(root)] = next++;
        arc[static_cast<std::size_t>(e)] = arc[static_cast<std::size_t>(root)];
    }
    return arc;
}

inline std::vector<Arc> arcs_of(const LinkDiagram& l) {
    std::vector<int> ix = arc_index_of_edges(l);
    int count = 0;
    for (int a : ix) count = std::max(count, a + 1);
    std::vector<Arc> arcs(static_cast<std::size_t>(count));
    for (int e = 0; e < l.edge_count(); ++e)
        arcs[static_cast<std::size_t>(ix[static_cast<std::size_t>(e)])].edges.push_back(e);
    for (int k = 0; k < l.free_loops; ++k) arcs.push_back({{}, true});
    return arcs;
}

inline int arc_count(const LinkDiagram& l) { return static_cast<int>(arcs_of(l).size()); }

inline int components_of(const LinkDiagram& l) {
    detail::Dsu dsu = detail::component_partition(l);
    int count = 0;
    for (int e = 0; e < l.edge_count(); ++e)
        if (dsu.find(e) == e) ++count;
    return count + l.free_loops;
}

// Lifts off every component that runs purely on one side of the diagram: a
// component that is only ever the over strand (or only ever the under
// strand) at its crossings is a split unknot lying above (below) the rest.
// Its crossings are removed, the severed strands healed, and the component
// recorded as a crossing-free loop.  Repeats until stable; no other moves
// are performed.
inline LinkDiagram normalize_split_loops(const LinkDiagram& input) {
    LinkDiagram l = input;
    for (;;) {
        if (l.crossing_count() == 0) return l;
        detail::Dsu comp = detail::component_partition(l);

        // per component: does it ever appear as under / as over?
        std::map<int, std::pair<bool, bool>> roles;  // root -> (under, over)
        for (const auto& c : l.crossings) {
            roles[comp.find(c[0])].first = true;
            roles[comp.find(c[1])].second = true;
        }
        int victim = -1;
        bool victim_over = false;
        for (int e = 0; e < l.edge_count() && victim < 0; ++e) {
            if (comp.find(e) != e) continue;
            auto it = roles.find(e);
            if (it == roles.end()) continue;  // an edge cycle without crossings cannot occur here
            auto [as_under, as_over] = it->second;
            if (as_over && !as_under) {
                victim = e;
                victim_over = true;
            } else if (as_under && !as_over) {
                victim = e;
                victim_over = false;
            }
        }
        if (victim < 0) return l;

        // remove the victim's crossings, healing the other strand through each
        std::vector<bool> crossing_removed(static_cast<std::size_t>(l.crossing_count()), false);
        detail::Dsu heal(static_cast<std::size_t>(l.edge_count()));
        for (int c = 0; c < l.crossing_count(); ++c) {
            const auto& slots = l.crossings[static_cast<std::size_t>(c)];
            int strand = victim_over ? comp.find(slots[1]) : comp.find(slots[0]);
            if (strand != victim) continue;
            crossing_removed[static_cast<std::size_t>(c)] = true;
            if (victim_over)
                heal.join(slots[0], slots[2]);
            else
                heal.join(slots[1], slots[3]);
        }
        std::vector<bool> edge_removed(static_cast<std::size_t>(l.edge_count()), false);
        for (int e = 0; e < l.edge_count(); ++e)
            if (comp.find(e) == victim) edge_removed[static_cast<std::size_t>(e)] = true;

        LinkDiagram next;
        next.free_loops = l.free_loops + 1;

        std::vector<int> new_crossing(static_cast<std::size_t>(l.crossing_count()), -1);
        for (int c = 0; c < l.crossing_count(); ++c)
            if (!crossing_removed[static_cast<std::size_t>(c)]) {
                new_crossing[static_cast<std::size_t>(c)] = next.crossing_count();
                next.crossings.push_back({-1, -1, -1, -1});
            }

        // collect each healed class's surviving ends, in deterministic order
        std::map<int, std::vector<LinkDiagram::End>> class_ends;
        for (int e = 0; e < l.edge_count(); ++e) {
            if (edge_removed[static_cast<std::size_t>(e)]) continue;
            int root = heal.find(e);
            for (const auto& end : {l.edges[static_cast<std::size_t>(e)].a,
                                    l.edges[static_cast<std::size_t>(e)].b}) {
                if (crossing_removed[static_cast<std::size_t>(end.crossing)]) continue;
                class_ends[root].push_back({new_crossing[static_cast<std::size_t>(end.crossing)], end.slot});
            }
        }
        for (auto& [root, ends] : class_ends) {
            (void)root;
            if (ends.empty()) continue;  // handled below as an extra loop
            if (ends.size() != 2) throw std::logic_error("normalize_split_loops: bad healing");
            int id = next.edge_count();
            next.edges.push_back({ends[0], ends[1]});
            for (const auto& end : ends)
                next.crossings[static_cast<std::size_t>(end.crossing)][static_cast<std::size_t>(end.slot)] = id;
        }
        // healed classes whose every end sat on removed crossings close up
        // into crossing-free loops
        std::map<int, bool> class_seen;
        for (int e = 0; e < l.edge_count(); ++e)
            if (!edge_removed[static_cast<std::size_t>(e)]) class_seen[heal.find(e)] = true;
        for (auto& [root, seen] : class_seen) {
            (void)seen;
            if (class_ends.find(root) == class_ends.end() || class_ends[root].empty())
                ++next.free_loops;
        }
        l = std::move(next);
    }
}

namespace detail {

// Directed traversal bookkeeping shared by the code emitters.  Starting from
// a directed edge, strands are walked by leaving each crossing through the
// slot opposite the arrival slot; labels count edges 1.. in traversal order.
struct Traversal {
    std::vector<int> label;       // per edge, 1-based; 0 = unvisited
    std::vector<int> head;        // per edge: which end (0/1) the direction points to
    std::vector<int> crossing_order;  // crossings by first visit
    std::vector<int> crossing_rank;   // inverse of crossing_order, -1 if unvisited
    std::vector<std::vector<std::pair<int, bool>>> component_passes;
    // per component, in order: (crossing rank, over?) of each passage

    explicit Traversal(const LinkDiagram& l)
        : label(static_cast<std::size_t>(l.edge_count()), 0),
          head(static_cast<std::size_t>(l.edge_count()), -1),
          crossing_rank(static_cast<std::size_t>(l.crossing_count()), -1) {}
};

inline LinkDiagram::End end_of(const LinkDiagram& l, int edge, int which) {
    const auto& e = l.edges[static_cast<std::size_t>(edge)];
    return which == 0 ? e.a : e.b;
}

// Walks the whole diagram: first strand from (start_edge, start_head), later
// strands from the first unvisited edge around already-visited crossings; a
// remaining disconnected piece aborts with false when `single_piece` is set.
inline bool traverse(const LinkDiagram& l, int start_edge, int start_head, Traversal& t,
                     bool single_piece = false) {
    int next_label = 1;
    int edge = start_edge, head = start_head;
    bool new_component = true;
    for (;;) {
        if (new_component) t.component_passes.emplace_back();
        new_component = false;
        // walk one closed strand
        int first_edge = edge, first_head = head;
        do {
            t.label[static_cast<std::size_t>(edge)] = next_label++;
            t.head[static_cast<std::size_t>(edge)] = head;
            LinkDiagram::End at = end_of(l, edge, head);
            if (t.crossing_rank[static_cast<std::size_t>(at.crossing)] == -1) {
                t.crossing_rank[static_cast<std::size_t>(at.crossing)] =
                    static_cast<int>(t.crossing_order.size());
                t.crossing_order.push_back(at.crossing);
            }
            t.component_passes.back().push_back(
                {t.crossing_rank[static_cast<std::size_t>(at.crossing)], at.slot == 1 || at.slot == 3});
            int out_slot = (at.slot + 2) % 4;
            int out_edge = l.crossings[static_cast<std::size_t>(at.crossing)][static_cast<std::size_t>(out_slot)];
            LinkDiagram::End out_end{at.crossing, out_slot};
            head = (end_of(l, out_edge, 0) == out_end) ? 1 : 0;
            edge = out_edge;
        } while (!(edge == first_edge && head == first_head));
        // find the next strand: first unvisited edge around visited crossings
        int found_edge = -1, found_head = -1;
        for (std::size_t k = 0; k < t.crossing_order.size() && found_edge < 0; ++k) {
            int c = t.crossing_order[k];
            for (int s = 0; s < 4 && found_edge < 0; ++s) {
                int e = l.crossings[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)];
                if (t.label[static_cast<std::size_t>(e)] == 0) {
                    found_edge = e;
                    found_head = (end_of(l, e, 0) == LinkDiagram::End{c, s}) ? 1 : 0;
                }
            }
        }
        if (found_edge < 0) {
            // disconnected remainder?
            for (int e = 0; e < l.edge_count(); ++e)
                if (t.label[static_cast<std::size_t>(e)] == 0) {
                    if (single_piece) return false;
                    found_edge = e;
                    found_head = 1;
                    break;
                }
            if (found_edge < 0) return true;
        }
        edge = found_edge;
        head = found_head;
        new_component = true;
    }
}

// X-term for one crossing under a traversal: labels counterclockwise from
// the incoming under-edge.
inline std::array<int, 4> x_term(const LinkDiagram& l, const Traversal& t, int c) {
    const auto& slots = l.crossings[static_cast<std::size_t>(c)];
    int in_slot = -1;
    for (int s : {0, 2}) {
        int e = slots[static_cast<std::size_t>(s)];
        if (end_of(l, e, t.head[static_cast<std::size_t>(e)]) == LinkDiagram::End{c, s}) in_slot = s;
    }
    if (in_slot < 0) throw std::logic_error("x_term: no incoming under-edge");
    std::array<int, 4> out{};
    for (int k = 0; k < 4; ++k)
        out[static_cast<std::size_t>(k)] =
            t.label[static_cast<std::size_t>(slots[static_cast<std::size_t>((in_slot + k) % 4)])];
    return out;
}

inline std::string render_code(const LinkDiagram& l, const Traversal& t) {
    // crossings ordered by the label of their incoming under-edge
    std::vector<std::pair<int, std::array<int, 4>>> terms;
    for (int c = 0; c < l.crossing_count(); ++c) {
        if (t.crossing_rank[static_cast<std::size_t>(c)] == -1) continue;  // other piece
        auto x = x_term(l, t, c);
        terms.push_back({x[0], x});
    }
    std::sort(terms.begin(), terms.end());
    std::string out;
    for (const auto& [key, x] : terms) {
        (void)key;
        if (!out.empty()) out += ' ';
        out += "X[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
               std::to_string(x[2]) + "," + std::to_string(x[3]) + "]";
    }
    return out;
}

}  // namespace detail

// PD code: one X[a,b,c,d] term per crossing, labels counterclockwise from
// the incoming under-edge; components oriented from the lowest-numbered edge
// in creation direction.  Crossing-free components append "L k".
inline std::string pd_code(const LinkDiagram& l) {
    std::string out;
    if (l.crossing_count() > 0) {
        detail::Traversal t(l);
        detail::traverse(l, 0, 1, t);
        out = detail::render_code(l, t);
    }
    if (l.free_loops > 0) {
        if (!out.empty()) out += ' ';
        out += "L " + std::to_string(l.free_loops);
    }
    if (out.empty()) out = "L 0";
    return out;
}

// One line per component: O/U, crossing id by first visit, and the sign of
// the crossing.  Crossing-free components are summarized by a final "L k".
inline std::string gauss_code(const LinkDiagram& l) {
    std::string out;
    if (l.crossing_count() > 0) {
        detail::Traversal t(l);
        detail::traverse(l, 0, 1, t);
        // sign per crossing: positive when the over strand exits through the
        // slot counterclockwise-next from the incoming under-edge
        std::vector<char> sign(static_cast<std::size_t>(l.crossing_count()), '+');
        for (int c = 0; c < l.crossing_count(); ++c) {
            const auto& slots = l.crossings[static_cast<std::size_t>(c)];
            int in_slot = -1;
            for (int s : {0, 2}) {
                int e = slots[static_cast<std::size_t>(s)];
                if (detail::end_of(l, e, t.head[static_cast<std::size_t>(e)]) == LinkDiagram::End{c, s})
                    in_slot = s;
            }
            int over_in = slots[static_cast<std::size_t>((in_slot + 3) % 4)];
            bool enters_at_prev =
                detail::end_of(l, over_in, t.head[static_cast<std::size_t>(over_in)]) ==
                LinkDiagram::End{c, (in_slot + 3) % 4};
            sign[static_cast<std::size_t>(c)] = enters_at_prev ? '+' : '-';
        }
        for (const auto& comp : t.component_passes) {
            std::string line;
            for (const auto& [rank, over] : comp) {
                int crossing_id = t.crossing_order[static_cast<std::size_t>(rank)];
                if (!line.empty()) line += ' ';
                line += over ? 'O' : 'U';
                line += std::to_string(rank + 1);
                line += sign[static_cast<std::size_t>(crossing_id)];
            }
            out += line;
            out += '\n';
        }
    }
    if (l.free_loops > 0) out += "L " + std::to_string(l.free_loops) + "\n";
    if (out.empty()) out = "L 0\n";
    return out;
}

namespace detail {

// Canonical labeling by branch and bound.  A traversal is encoded as a
// stream of integers: one arrival record per directed edge, combining the
// crossing's discovery rank, the arrival slot relative to the slot of the
// crossing's first arrival (counterclockwise), and whether the arrival is on
// the under strand; plus one negative departure record at each new-strand
// boundary.  Relative slots make the stream invariant under cyclic
// relabeling of crossing slots, the under bit pins the strand roles the
// relative encoding would otherwise erase, and the stream reconstructs the
// diagram, so the minimal stream over all starts and strand-entry choices is
// a complete isomorphism invariant.  Branches are pruned as soon as their
// stream exceeds the best known prefix.
struct CanonSearch {
    const LinkDiagram& l;
    std::vector<int> best_stream;
    Traversal best_traversal;
    bool have_best = false;

    explicit CanonSearch(const LinkDiagram& link) : l(link), best_traversal(link) {}

    // cmp: 0 = prefix equals best so far, 1 = already strictly smaller
    void run(Traversal t, std::vector<int> stream, std::vector<int> ref_slot, int edge, int head,
             int next_label, int cmp) {
        // walk one closed strand
        int first_edge = edge, first_head = head;
        do {
            t.label[static_cast<std::size_t>(edge)] = next_label++;
            t.head[static_cast<std::size_t>(edge)] = head;
            LinkDiagram::End at = end_of(l, edge, head);
            int c = at.crossing;
            if (t.crossing_rank[static_cast<std::size_t>(c)] == -1) {
                t.crossing_rank[static_cast<std::size_t>(c)] =
                    static_cast<int>(t.crossing_order.size());
                t.crossing_order.push_back(c);
                ref_slot[static_cast<std::size_t>(c)] = at.slot;
            }
            int delta = (at.slot - ref_slot[static_cast<std::size_t>(c)] + 4) % 4;
            int under = (at.slot == 0 || at.slot == 2) ? 0 : 1;
            if (!push(stream,
                      8 * t.crossing_rank[static_cast<std::size_t>(c)] + 2 * delta + under, cmp))
                return;  // pruned
            int out_slot = (at.slot + 2) % 4;
            int out_edge =
                l.crossings[static_cast<std::size_t>(c)][static_cast<std::size_t>(out_slot)];
            LinkDiagram::End out_end{c, out_slot};
            head = (end_of(l, out_edge, 0) == out_end) ? 1 : 0;
            edge = out_edge;
        } while (!(edge == first_edge && head == first_head));

        // next strand: the first discovered crossing with unlabeled edges
        for (std::size_t k = 0; k < t.crossing_order.size(); ++k) {
            int c = t.crossing_order[k];
            bool found = false;
            for (int s = 0; s < 4; ++s) {
                int e = l.crossings[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)];
                if (t.label[static_cast<std::size_t>(e)] != 0) continue;
                found = true;
                int away = (end_of(l, e, 0) == LinkDiagram::End{c, s}) ? 1 : 0;
                int delta = (s - ref_slot[static_cast<std::size_t>(c)] + 4) % 4;
                int under = (s == 0 || s == 2) ? 0 : 1;
                std::vector<int> branch_stream = stream;
                int branch_cmp = cmp;
                if (!push(branch_stream,
                          -(8 * t.crossing_rank[static_cast<std::size_t>(c)] + 2 * delta + under) - 1,
                          branch_cmp))
                    continue;
                run(t, std::move(branch_stream), ref_slot, e, away, next_label, branch_cmp);
            }
            if (found) return;
        }
        // piece complete; cmp is only a pruning hint and may be stale once a
        // sibling branch has replaced the best, so compare in full
        if (!have_best || stream < best_stream) {
            have_best = true;
            best_stream = std::move(stream);
            best_traversal = std::move(t);
        }
    }

private:
    bool push(std::vector<int>& stream, int value, int& cmp) {
        if (have_best && cmp == 0) {
            std::size_t pos = stream.size();
            if (pos >= best_stream.size() || value > best_stream[pos]) return false;
            if (value < best_stream[pos]) cmp = 1;
        }
        stream.push_back(value);
        return true;
    }
};

}  // namespace detail

// Canonical form: the PD code of the lexicographically smallest traversal
// encoding over every start edge, direction and strand-entry choice,
// computed per connected piece (pieces sorted), plus the free-loop count.
// Two diagrams are isomorphic exactly when these agree.
inline std::string canonical_pd_code(const LinkDiagram& l) {
    std::vector<std::string> piece_codes;
    std::vector<bool> done(static_cast<std::size_t>(l.edge_count()), false);
    for (int seed = 0; seed < l.edge_count(); ++seed) {
        if (done[static_cast<std::size_t>(seed)]) continue;
        // discover the piece via one throwaway traversal
        detail::Traversal probe(l);
        detail::traverse(l, seed, 1, probe, /*single_piece=*/true);
        std::vector<int> piece_edges;
        for (int e = 0; e < l.edge_count(); ++e)
            if (probe.label[static_cast<std::size_t>(e)] != 0) {
                piece_edges.push_back(e);
                done[static_cast<std::size_t>(e)] = true;
            }
        detail::CanonSearch search(l);
        std::vector<int> ref_slot(static_cast<std::size_t>(l.crossing_count()), 0);
        for (int e : piece_edges)
            for (int h : {0, 1})
                search.run(detail::Traversal(l), {}, ref_slot, e, h, 1, search.have_best ? 0 : 1);
        piece_codes.push_back(detail::render_code(l, search.best_traversal));
    }
    std::sort(piece_codes.begin(), piece_codes.end());
    std::string out;
    for (const auto& p : piece_codes) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    if (l.free_loops > 0) {
        if (!out.empty()) out += ' ';
        out += "L " + std::to_string(l.free_loops);
    }
    if (out.empty()) out = "L 0";
    return out;
}

// Parses the PD format emitted above; labels must each occur exactly twice.
inline LinkDiagram parse_pd(std::string_view text) {
    LinkDiagram l;
    std::map<int, std::vector<LinkDiagram::End>> ends_of_label;
    bool saw_loops = false;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", pos);
        return std::stoi(std::string(text.substr(start, pos - start)));
    };
    for (;;) {
        skip_ws();
        if (pos >= text.size()) break;
        char c = text[pos];
        if (c == 'X') {
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
            ++pos;
            std::vector<int> labels;
            for (;;) {
                labels.push_back(read_int());
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
            skip_ws();
            if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']'", pos);
            ++pos;
            if (labels.size() != 4)
                throw ParseError("X-term must have exactly 4 labels, got " +
                                     std::to_string(labels.size()),
                                 pos);
            int crossing = l.crossing_count();
            l.crossings.push_back({-1, -1, -1, -1});
            for (int s = 0; s < 4; ++s)
                ends_of_label[labels[static_cast<std::size_t>(s)]].push_back({crossing, s});
        } else if (c == 'L') {
            ++pos;
            if (saw_loops) throw ParseError("duplicate L term", pos);
            l.free_loops = read_int();
            saw_loops = true;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
    }
    for (const auto& [label, ends] : ends_of_label) {
        if (ends.size() != 2)
            throw ParseError("label " + std::to_string(label) + " appears " +
                                 std::to_string(ends.size()) + " times (expected 2)",
                             text.size());
    }
    for (const auto& [label, ends] : ends_of_label) {
        (void)label;
        int id = l.edge_count();
        l.edges.push_back({ends[0], ends[1]});
        for (const auto& end : ends)
            l.crossings[static_cast<std::size_t>(end.crossing)][static_cast<std::size_t>(end.slot)] = id;
    }
    for (const auto& slots : l.crossings)
        for (int s = 0; s < 4; ++s)
            if (slots[static_cast<std::size_t>(s)] < 0)
                throw ParseError("crossing with an unfilled slot", text.size());
    return l;
}

}  // namespace treelink

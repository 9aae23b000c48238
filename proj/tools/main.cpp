// Command-line front end: reduce elements, test membership, emit link codes,
// run Fox colorings, drive the randomized verification harness, render SVGs.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treelink/treelink.hpp"

namespace {

using nlohmann::json;
using namespace treelink;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_args(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

std::string dist_to_string(const std::map<int, int>& dist) {
    std::string out;
    for (const auto& [k, v] : dist) {
        if (!out.empty()) out += ' ';
        out += std::to_string(k) + ":" + std::to_string(v);
    }
    return out;
}

json dist_to_json(const std::map<int, int>& dist) {
    json j = json::object();
    for (const auto& [k, v] : dist) j[std::to_string(k)] = v;
    return j;
}

int cmd_reduce(const std::string& element_text) {
    GroupElement g = element_from_text(element_text);
    std::cout << to_pair_text(g) << "\n";
    return 0;
}

int cmd_member(const std::string& element_text, bool as_json) {
    GroupElement g = element_from_text(element_text);
    bool member = is_member(g);
    std::string gp = frontier_gaps(g.plus()).to_string();
    std::string gm = frontier_gaps(g.minus()).to_string();
    if (as_json) {
        std::cout << json{{"member", member}, {"gaps_plus", gp}, {"gaps_minus", gm}}.dump() << "\n";
    } else {
        std::cout << "member: " << yes_no(member) << "\n";
        std::cout << "gaps+: " << gp << "\n";
        std::cout << "gaps-: " << gm << "\n";
    }
    return 0;
}

int cmd_link(const std::string& element_text, const std::string& format, bool mirror) {
    GroupElement g = element_from_text(element_text);
    LinkDiagram l = link_of(g, mirror);
    if (format == "pd")
        std::cout << pd_code(l) << "\n";
    else
        std::cout << gauss_code(l);
    return 0;
}

int cmd_color(const std::string& element_text, const std::string& pd_file, int p, int bound,
              bool as_json) {
    std::optional<GroupElement> g;
    LinkDiagram l;
    if (!pd_file.empty()) {
        std::ifstream in(pd_file);
        if (!in) throw std::invalid_argument("cannot open PD file: " + pd_file);
        std::stringstream buf;
        buf << in.rdbuf();
        l = parse_pd(buf.str());
    } else {
        g = element_from_text(element_text);
        l = link_of(*g);
    }

    ColoringMatrix m = coloring_matrix(l);
    int rank3 = modp_rank(m, 3);
    bool three = is_p_colorable(l, 3);
    bool p_col = (p == 3) ? three : is_p_colorable(l, p);

    std::optional<bool> member, parity;
    std::vector<int> conflicts;
    std::optional<int> used;
    if (g) {
        member = is_member(*g);
        parity = leaf_parity_ok(*g);
        if (!g->is_identity()) {
            TangleGraph graph = build_graph(g->diagram());
            EdgeColoring ec = edge_coloring(graph);
            conflicts = ec.conflicts;
            if (*member && ec.conflict_free())
                used = colors_used(induced_3coloring(to_link_diagram(graph), ec).arc_color);
        }
    }
    std::optional<int> cnum;
    bool cnum_guarded = false;
    if (bound >= 3) {
        try {
            cnum = coloring_number(l, bound);
        } catch (const GuardError&) {
            cnum_guarded = true;
        }
    }

    if (as_json) {
        json j;
        j["member"] = g ? json(*member) : json(nullptr);
        j["parity_ok"] = g ? json(*parity) : json(nullptr);
        j["conflicts"] = conflicts;
        j["three_colorable"] = three;
        j["rank"] = rank3;
        j["colors_used"] = used ? json(*used) : json(nullptr);
        j["p"] = p;
        j["p_colorable"] = p_col;
        j["arcs"] = arc_count(l);
        j["crossings"] = l.crossing_count();
        if (bound >= 3)
            j["coloring_number"] = cnum_guarded ? json("guarded") : (cnum ? json(*cnum) : json("none"));
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (g) {
        std::cout << "member: " << yes_no(*member) << "\n";
        std::cout << "parity_ok: " << yes_no(*parity) << "\n";
        std::string cs;
        for (int c : conflicts) cs += (cs.empty() ? "" : ",") + std::to_string(c);
        std::cout << "conflicts: " << (cs.empty() ? "(none)" : cs) << "\n";
    }
    std::cout << "crossings: " << l.crossing_count() << "\n";
    std::cout << "arcs: " << arc_count(l) << "\n";
    std::cout << "three_colorable: " << yes_no(three) << "\n";
    std::cout << "rank: " << rank3 << "\n";
    if (p != 3) std::cout << "p=" << p << "_colorable: " << yes_no(p_col) << "\n";
    if (used) std::cout << "colors_used: " << *used << "\n";
    if (bound >= 3) {
        std::cout << "coloring_number: ";
        if (cnum_guarded)
            std::cout << "guarded\n";
        else if (cnum)
            std::cout << *cnum << "\n";
        else
            std::cout << "none<=" << bound << "\n";
    }
    return 0;
}

int cmd_verify(std::uint64_t seed, int samples, int max_len, const std::string& alphabet_name,
               int bound, bool as_json) {
    Alphabet alphabet = alphabet_name == "xgens" ? Alphabet::f_gens : Alphabet::cf_gens;
    std::mt19937_64 rng(seed);

    int passes = 0, members = 0, non_members = 0, non_member_constant = 0;
    std::vector<std::string> failures;
    std::string constant_example;
    std::map<int, int> crossings_dist, components_dist, cnum_dist;
    int cnum_guarded = 0, cnum_none = 0;

    for (int k = 0; k < samples; ++k) {
        WordSample s = sample_nontrivial(rng, max_len, alphabet);
        LinkDiagram l = link_of(s.element);
        crossings_dist[l.crossing_count()]++;
        components_dist[components_of(l)]++;
        if (is_member(s.element)) {
            ++members;
            TheoremReport rep = verify_main_theorem(s.element);
            if (rep.passed())
                ++passes;
            else
                failures.push_back(s.word);
        } else {
            ++non_members;
            if (!is_p_colorable(l, 3)) {
                ++non_member_constant;
                if (constant_example.empty()) constant_example = s.word;
            }
        }
        if (bound >= 3) {
            try {
                auto c = coloring_number(l, bound);
                if (c)
                    cnum_dist[*c]++;
                else
                    ++cnum_none;
            } catch (const GuardError&) {
                ++cnum_guarded;
            }
        }
    }

    if (as_json) {
        json j{{"samples", samples},
               {"passes", passes},
               {"failures", failures},
               {"members", members},
               {"non_members", non_members},
               {"crossings", dist_to_json(crossings_dist)},
               {"components", dist_to_json(components_dist)}};
        if (alphabet == Alphabet::f_gens) {
            j["non_member_constant_only"] = non_member_constant;
            j["non_member_constant_example"] = constant_example;
        }
        if (bound >= 3) {
            j["coloring_numbers"] = dist_to_json(cnum_dist);
            j["coloring_number_none"] = cnum_none;
            j["coloring_number_guarded"] = cnum_guarded;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "samples: " << samples << "\n";
        if (samples > 0) {
            std::cout << "members: " << members << "\n";
            std::cout << "passes: " << passes << "\n";
            std::cout << "failures: " << failures.size() << "\n";
            for (const auto& w : failures) std::cout << "failure: " << w << "\n";
            if (alphabet == Alphabet::f_gens) {
                std::cout << "non_members: " << non_members << "\n";
                std::cout << "non_member_constant_only: " << non_member_constant << "\n";
                if (!constant_example.empty())
                    std::cout << "non_member_constant_example: " << constant_example << "\n";
            }
            std::cout << "crossings: " << dist_to_string(crossings_dist) << "\n";
            std::cout << "components: " << dist_to_string(components_dist) << "\n";
            if (bound >= 3) {
                std::cout << "coloring_numbers: " << dist_to_string(cnum_dist) << "\n";
                if (cnum_none) std::cout << "coloring_number_none: " << cnum_none << "\n";
                if (cnum_guarded) std::cout << "coloring_number_guarded: " << cnum_guarded << "\n";
            }
        }
    }
    return failures.empty() ? 0 : 3;
}

int cmd_render(const std::string& element_text, const std::string& what, const std::string& out) {
    GroupElement g = element_from_text(element_text);
    std::string svg;
    if (what == "tree")
        svg = render_tree_svg(g.diagram());
    else if (what == "strip")
        svg = render_strip_svg(g.diagram());
    else
        svg = render_link_svg(g);
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + out);
    file << svg;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree diagrams of Thompson's group F: reduction, strip 3-colorability, "
                 "link diagrams and Fox p-colorings"};
    app.require_subcommand(1);

    std::vector<std::string> element_args;
    bool as_json = false;

    auto* reduce_cmd = app.add_subcommand("reduce", "canonical reduced pair of an element");
    reduce_cmd->add_option("element", element_args, "generator word or 'pair <T+> <T->'")
        ->required()
        ->expected(-1);

    auto* member_cmd =
        app.add_subcommand("member", "3-colorable-subgroup membership and gap sequences");
    member_cmd->add_option("element", element_args)->required()->expected(-1);
    member_cmd->add_flag("--json", as_json);

    std::string format = "pd";
    bool mirror = false;
    auto* link_cmd = app.add_subcommand("link", "link diagram code of an element");
    link_cmd->add_option("element", element_args)->required()->expected(-1);
    link_cmd->add_option("--format", format)->check(CLI::IsMember({"pd", "gauss"}));
    link_cmd->add_flag("--mirror", mirror, "use the mirrored crossing rule");

    std::string pd_file;
    int p = 3, bound = 0;
    auto* color_cmd = app.add_subcommand("color", "Fox p-colorability report");
    color_cmd->add_option("element", element_args)->expected(-1);
    color_cmd->add_option("--pd", pd_file, "read a PD code file instead of an element");
    color_cmd->add_option("--p", p, "modulus (default 3)");
    color_cmd->add_option("--bound", bound, "also search the coloring number up to this bound");
    color_cmd->add_flag("--json", as_json);

    std::uint64_t seed = 42;
    int samples = 1000, max_len = 12;
    std::string alphabet = "wgens";
    auto* verify_cmd = app.add_subcommand("verify", "randomized verification harness");
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--alphabet", alphabet)->check(CLI::IsMember({"wgens", "xgens"}));
    verify_cmd->add_option("--bound", bound, "record coloring numbers up to this bound");
    verify_cmd->add_flag("--json", as_json);

    std::string what = "tree", out_path;
    auto* render_cmd = app.add_subcommand("render", "write an SVG rendering");
    render_cmd->add_option("element", element_args)->required()->expected(-1);
    render_cmd->add_option("--what", what)->check(CLI::IsMember({"tree", "strip", "link"}));
    render_cmd->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*reduce_cmd) return cmd_reduce(join_args(element_args));
        if (*member_cmd) return cmd_member(join_args(element_args), as_json);
        if (*link_cmd) return cmd_link(join_args(element_args), format, mirror);
        if (*color_cmd) {
            if (pd_file.empty() && element_args.empty())
                throw std::invalid_argument("color: need an element or --pd FILE");
            return cmd_color(join_args(element_args), pd_file, p, bound, as_json);
        }
        if (*verify_cmd) return cmd_verify(seed, samples, max_len, alphabet, bound, as_json);
        if (*render_cmd) return cmd_render(join_args(element_args), what, out_path);
    } catch (const treelink::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treelink/diagram.hpp"
#include "treelink/quaternary.hpp"

namespace treelink {

struct WordToken {
    std::string name;  // "x<i>" or "w<0..3>"
    bool inverted = false;
};

enum class Alphabet { f_gens, cf_gens };

inline const std::vector<std::string>& alphabet_tokens(Alphabet a) {
    static const std::vector<std::string> f{"x0", "x1"};
    static const std::vector<std::string> cf{"w0", "w1", "w2", "w3"};
    return a == Alphabet::f_gens ? f : cf;
}

inline std::vector<WordToken> tokenize_word(std::string_view word) {
    std::vector<WordToken> out;
    std::size_t pos = 0;
    while (pos < word.size()) {
        if (std::isspace(static_cast<unsigned char>(word[pos]))) {
            ++pos;
            continue;
        }
        std::size_t start = pos;
        while (pos < word.size() && !std::isspace(static_cast<unsigned char>(word[pos])) &&
               word[pos] != '\'' && word[pos] != '^')
            ++pos;
        WordToken tok;
        tok.name = std::string(word.substr(start, pos - start));
        if (pos < word.size() && word[pos] == '\'') {
            tok.inverted = true;
            ++pos;
        } else if (pos < word.size() && word[pos] == '^') {
            if (word.substr(pos, 3) != "^-1") throw ParseError("expected ^-1", pos);
            tok.inverted = true;
            pos += 3;
        }
        if (tok.name.empty()) throw ParseError("empty token", start);
        out.push_back(std::move(tok));
    }
    return out;
}

inline GroupElement token_element(const WordToken& tok, std::size_t at = 0) {
    GroupElement g;
    if (tok.name.size() >= 2 && (tok.name[0] == 'x' || tok.name[0] == 'w')) {
        int index = -1;
        bool digits = true;
        for (std::size_t k = 1; k < tok.name.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(tok.name[k]))) digits = false;
        if (digits) {
            try {
                index = std::stoi(tok.name.substr(1));
            } catch (const std::out_of_range&) {
                throw ParseError("generator index out of range in '" + tok.name + "'", at);
            }
        }
        if (index >= 0) {
            if (tok.name[0] == 'x') {
                g = generator_x(index);
            } else if (index <= 3) {
                g = generator_w(index);
            } else {
                throw ParseError("unknown token '" + tok.name + "'", at);
            }
            return tok.inverted ? inverse(g) : g;
        }
    }
    throw ParseError("unknown token '" + tok.name + "'", at);
}

// Left-to-right product of the named generators and inverses.
inline GroupElement word_to_element(std::string_view word) {
    GroupElement g = GroupElement::identity();
    for (const auto& tok : tokenize_word(word)) g = multiply(g, token_element(tok));
    return g;
}

// Either a generator word or "pair <plus-tree> <minus-tree>".
inline GroupElement element_from_text(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (text.substr(pos, 4) == "pair" &&
        (pos + 4 == text.size() || std::isspace(static_cast<unsigned char>(text[pos + 4])))) {
        pos += 4;
        BinaryTree plus = detail::parse_tree_at(text, pos);
        BinaryTree minus = detail::parse_tree_at(text, pos);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos != text.size()) throw ParseError("trailing input", pos);
        return GroupElement(TreeDiagram(std::move(plus), std::move(minus)));
    }
    return word_to_element(text);
}

// `len` uniform tokens (generator or inverse) joined by single spaces.
inline std::string random_word(int len, Alphabet a, std::mt19937_64& rng) {
    const auto& toks = alphabet_tokens(a);
    std::string out;
    for (int k = 0; k < len; ++k) {
        std::size_t which = uniform_below(rng, toks.size());
        bool inv = uniform_below(rng, 2) == 1;
        if (!out.empty()) out += ' ';
        out += toks[which];
        if (inv) out += "^-1";
    }
    return out;
}

inline GroupElement random_element(int len, Alphabet a, std::uint64_t seed) {
    if (len < 1) throw std::invalid_argument("random_element: len must be >= 1");
    std::mt19937_64 rng(seed);
    return word_to_element(random_word(len, a, rng));
}

struct WordSample {
    std::string word;
    GroupElement element;
};

// Uniform word of length 1..max_len; identities are resampled, never returned.
inline WordSample sample_nontrivial(std::mt19937_64& rng, int max_len, Alphabet a) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        int len = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_len)));
        std::string w = random_word(len, a, rng);
        GroupElement g = word_to_element(w);
        if (!g.is_identity()) return {std::move(w), std::move(g)};
    }
    throw std::runtime_error("sample_nontrivial: resampling failed");
}

}  // namespace treelink

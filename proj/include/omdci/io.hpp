#pragma once

// Line-oriented text formats for instances, solutions, graphs, exact-cover
// inputs, and reduction maps. Renders are canonical (byte-deterministic);
// parsers skip blank lines and '#' comments and report 1-based line numbers.

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "omdci/core.hpp"
#include "omdci/problems.hpp"
#include "omdci/reduce.hpp"

namespace omdci {
namespace detail {

inline bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                  c == '_';
        if (!ok) return false;
    }
    return true;
}

inline std::string require_identifier(const std::string& s, const char* what) {
    if (!is_identifier(s))
        throw DomainError(std::string(what) + " '" + s + "' is not a valid identifier");
    return s;
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct ContentLine {
    std::string text;
    std::size_t number;
};

// Non-blank, non-comment lines with their 1-based numbers.
inline std::vector<ContentLine> content_lines(const std::string& text) {
    std::vector<ContentLine> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line =
            nl == std::string::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        ++line_no;
        std::string t = trim(line);
        if (!t.empty() && t[0] != '#') out.push_back({t, line_no});
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    return out;
}

inline std::size_t parse_uint(const std::string& tok, std::size_t line) {
    if (tok.empty()) throw ParseError("expected a number", line);
    std::size_t value = 0;
    for (char c : tok) {
        if (c < '0' || c > '9')
            throw ParseError("'" + tok + "' is not a non-negative integer", line);
        std::size_t digit = static_cast<std::size_t>(c - '0');
        if (value > (static_cast<std::size_t>(-1) - digit) / 10)
            throw ParseError("number '" + tok + "' is too large", line);
        value = value * 10 + digit;
    }
    return value;
}

inline Block parse_block_token(const std::string& tok, std::size_t line) {
    std::size_t slash = tok.find('/');
    if (slash == std::string::npos || tok.find('/', slash + 1) != std::string::npos)
        throw ParseError("token '" + tok + "' is not of the form char/color", line);
    std::string ch = tok.substr(0, slash);
    std::string color = tok.substr(slash + 1);
    if (!is_identifier(ch) || !is_identifier(color))
        throw ParseError("token '" + tok + "' uses characters outside [A-Za-z0-9_]", line);
    return make_block(ch, color);
}

inline std::string render_block_token(const Block& b) {
    return require_identifier(b.ch.id(), "char") + "/" +
           require_identifier(b.color.id(), "color");
}

inline Variant parse_variant_token(const std::string& tok, std::size_t line) {
    if (tok == "general") return Variant::general;
    if (tok == "omdci") return Variant::omdci;
    if (tok == "omdci+") return Variant::omdci_plus;
    throw ParseError("unknown variant '" + tok + "'", line);
}

}  // namespace detail

inline std::string render_instance(const Instance& inst) {
    std::string out = "variant: " + variant_name(inst.variant()) + "\n";
    out += "M:";
    for (const Block& b : inst.m().blocks()) out += " " + detail::render_block_token(b);
    out += "\nA:";
    for (const Block& b : inst.a().blocks()) out += " " + detail::render_block_token(b);
    out += "\n";
    return out;
}

inline Instance parse_instance(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.size() != 3)
        throw ParseError("expected exactly three content lines: variant, M, A",
                         lines.empty() ? 1 : lines.back().number);
    auto expect = [&](std::size_t idx, const std::string& key) {
        const auto& l = lines[idx];
        if (l.text.rfind(key, 0) != 0)
            throw ParseError("expected line starting with '" + key + "'", l.number);
        return detail::trim(l.text.substr(key.size()));
    };
    Variant variant =
        detail::parse_variant_token(expect(0, "variant:"), lines[0].number);
    auto parse_blocks = [&](std::size_t idx, const std::string& key) {
        std::vector<Block> blocks;
        for (const std::string& tok : detail::split_ws(expect(idx, key)))
            blocks.push_back(detail::parse_block_token(tok, lines[idx].number));
        return ColoredString(std::move(blocks));
    };
    ColoredString m = parse_blocks(1, "M:");
    ColoredString a = parse_blocks(2, "A:");
    return Instance(variant, std::move(m), std::move(a));
}

inline std::string render_solution(const SolutionPair& sol) {
    std::string out = "IM:";
    for (std::size_t i : sol.idx_m) out += " " + std::to_string(i);
    out += "\nIA:";
    for (std::size_t i : sol.idx_a) out += " " + std::to_string(i);
    out += "\n";
    return out;
}

// An empty file (no content lines) parses as the empty solution. Index
// sanity (strictly increasing, in range) is left to the verifiers so that
// malformed pairs can be diagnosed rather than rejected at parse time.
inline SolutionPair parse_solution(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) return SolutionPair{};
    if (lines.size() != 2)
        throw ParseError("expected exactly two content lines: IM and IA", lines.back().number);
    auto parse_indices = [&](std::size_t idx, const std::string& key) {
        const auto& l = lines[idx];
        if (l.text.rfind(key, 0) != 0)
            throw ParseError("expected line starting with '" + key + "'", l.number);
        std::vector<std::size_t> out;
        for (const std::string& tok : detail::split_ws(l.text.substr(key.size())))
            out.push_back(detail::parse_uint(tok, l.number));
        return out;
    };
    return SolutionPair{parse_indices(0, "IM:"), parse_indices(1, "IA:")};
}

inline std::string render_graph(const Graph& g) {
    std::string out = "n " + std::to_string(g.n()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline Graph parse_graph(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError("expected a header line 'n <count>'", 1);
    auto header = detail::split_ws(lines[0].text);
    if (header.size() != 2 || header[0] != "n")
        throw ParseError("expected a header line 'n <count>'", lines[0].number);
    std::size_t n = detail::parse_uint(header[1], lines[0].number);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto toks = detail::split_ws(lines[i].text);
        if (toks.size() != 2) throw ParseError("expected an edge line '<u> <v>'", lines[i].number);
        std::size_t u = detail::parse_uint(toks[0], lines[i].number);
        std::size_t v = detail::parse_uint(toks[1], lines[i].number);
        if (u < 1 || v > n || u >= v)
            throw ParseError("edge must satisfy 1 <= u < v <= n", lines[i].number);
        if (!seen.insert({u, v}).second) throw ParseError("duplicate edge", lines[i].number);
        edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
}

inline std::string render_x3c(const X3CInstance& x) {
    std::string out =
        "q " + std::to_string(x.q()) + " m " + std::to_string(x.m()) + "\n";
    for (const auto& t : x.triples())
        out += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " +
               std::to_string(t[2]) + "\n";
    return out;
}

inline X3CInstance parse_x3c(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError("expected a header line 'q <q> m <m>'", 1);
    auto header = detail::split_ws(lines[0].text);
    if (header.size() != 4 || header[0] != "q" || header[2] != "m")
        throw ParseError("expected a header line 'q <q> m <m>'", lines[0].number);
    std::size_t q = detail::parse_uint(header[1], lines[0].number);
    std::size_t m = detail::parse_uint(header[3], lines[0].number);
    if (lines.size() != m + 1)
        throw ParseError("expected " + std::to_string(m) + " triple lines",
                         lines.back().number);
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto toks = detail::split_ws(lines[i].text);
        if (toks.size() != 3)
            throw ParseError("expected a triple line of three integers", lines[i].number);
        triples.push_back({detail::parse_uint(toks[0], lines[i].number),
                           detail::parse_uint(toks[1], lines[i].number),
                           detail::parse_uint(toks[2], lines[i].number)});
    }
    return X3CInstance(q, std::move(triples));
}

// One record per emitted position: "<M|A> <position> <gadget> <char>/<color>".
inline std::string render_reduction_map(const ReductionMap& map) {
    std::string out =
        map.kind == ReductionKind::x3c ? "reduction x3c\n" : "reduction cohc\n";
    for (std::size_t p = 0; p < map.m_records.size(); ++p)
        out += "M " + std::to_string(p + 1) + " " + map.m_records[p].gadget + " " +
               detail::render_block_token(map.m_records[p].block) + "\n";
    for (std::size_t p = 0; p < map.a_records.size(); ++p)
        out += "A " + std::to_string(p + 1) + " " + map.a_records[p].gadget + " " +
               detail::render_block_token(map.a_records[p].block) + "\n";
    return out;
}

}  // namespace omdci

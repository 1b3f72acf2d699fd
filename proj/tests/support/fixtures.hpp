#pragma once

// Shared instances for the test suite. cs() builds a ColoredString from
// space-separated char/color tokens with its own tiny tokenizer so the
// fixtures do not depend on the production parsers.

#include <array>
#include <string>
#include <vector>

#include "omdci/core.hpp"
#include "omdci/problems.hpp"

namespace fixtures {

inline omdci::ColoredString cs(const std::string& tokens) {
    std::vector<omdci::Block> blocks;
    std::size_t i = 0;
    while (i < tokens.size()) {
        while (i < tokens.size() && tokens[i] == ' ') ++i;
        std::size_t start = i;
        while (i < tokens.size() && tokens[i] != ' ') ++i;
        if (i == start) break;
        std::string tok = tokens.substr(start, i - start);
        std::size_t slash = tok.find('/');
        blocks.push_back(omdci::make_block(tok.substr(0, slash), tok.substr(slash + 1)));
    }
    return omdci::ColoredString(std::move(blocks));
}

inline std::vector<std::size_t> idx(std::initializer_list<std::size_t> xs) { return xs; }

// General variant, max k = 2 via positions (1,2)/(1,3).
inline omdci::Instance worked_general() {
    return omdci::Instance(omdci::Variant::general, cs("a1/1 a2/2 a4/1 a3/4"),
                           cs("a2/1 a4/4 a1/2 a3/3 a5/4 a3/3"));
}

// Full-cover variant with the unique matched program positions (1,3,5,6).
inline omdci::Instance worked_plus() {
    return omdci::Instance(omdci::Variant::omdci_plus, cs("a2/1 a1/2 a4/4 a3/3"),
                           cs("a1/1 a4/4 a2/2 a3/3 a3/4 a4/3"));
}

// Permutation-pattern variant whose unique solution has size 3:
// positions (1,3,4)/(1,5,6). No size-1 or size-2 solution exists.
inline omdci::Instance worked_perm() {
    return omdci::Instance(omdci::Variant::omdci, cs("a2/1 a1/2 a4/4 a3/3"),
                           cs("a4/1 a1/4 a2/2 a4/3 a3/4 a2/3"));
}

// Two size-2 solutions, (1,2)/(4,5) and (1,3)/(2,6); the tie-break rule
// must pick the first.
inline omdci::Instance tie_instance() {
    return omdci::Instance(omdci::Variant::omdci, cs("x/c1 y/c2 z/c3"),
                           cs("f1/c9 z/c1 f2/c9 y/c1 x/c2 x/c3"));
}

// k_max = 2 but no size-1 solution: solutions are not downward closed.
inline omdci::Instance nonmono_instance() {
    return omdci::Instance(omdci::Variant::omdci, cs("a1/1 a2/2"), cs("a2/1 a1/2"));
}

// Permutation pattern admitting no solution at all.
inline omdci::Instance zero_instance() {
    return omdci::Instance(omdci::Variant::omdci, cs("a1/1 a2/2"), cs("a1/2 a2/1"));
}

// Exact-cover input with the unique cover {1, 3}.
inline omdci::X3CInstance golden_x3c() {
    return omdci::X3CInstance(
        2, {{{1, 3, 5}}, {{2, 5, 6}}, {{2, 4, 6}}, {{1, 2, 4}}});
}

// Expected pattern gadget 1 of the golden exact-cover reduction.
inline omdci::ColoredString golden_t1() {
    return cs("C_1_1/v_1_1_1 C_1_2/v_1_1_2 C_1_3/v_1_1_3 "
              "C_1_4/v_1_2_1 C_1_5/v_1_2_2 C_1_6/v_1_2_3 "
              "C_1_7/v_1_3_1 C_1_8/v_1_3_2 C_1_9/v_1_3_3 "
              "b_1/v_1_4_1 b_2/v_1_4_2 b_3/v_1_4_3");
}

// Expected program gadget 1 of the golden exact-cover reduction.
inline omdci::ColoredString golden_x1() {
    return cs("b_1/v_1_1_1 b_3/v_1_1_2 b_5/v_1_1_3 "
              "C_1_1/v_1_2_1 C_1_2/v_1_2_2 C_1_3/v_1_2_3 "
              "C_1_1/v_1_1_1 C_1_2/v_1_1_2 C_1_3/v_1_1_3 "
              "b_2/v_1_2_1 b_5/v_1_2_2 b_6/v_1_2_3 "
              "C_1_4/v_1_3_1 C_1_5/v_1_3_2 C_1_6/v_1_3_3 "
              "C_1_4/v_1_2_1 C_1_5/v_1_2_2 C_1_6/v_1_2_3 "
              "b_2/v_1_3_1 b_4/v_1_3_2 b_6/v_1_3_3 "
              "C_1_7/v_1_4_1 C_1_8/v_1_4_2 C_1_9/v_1_4_3 "
              "C_1_7/v_1_3_1 C_1_8/v_1_3_2 C_1_9/v_1_3_3 "
              "b_1/v_1_4_1 b_2/v_1_4_2 b_4/v_1_4_3");
}

// C5 drawn with scrambled labels; its unique cycle is 1-3-5-2-4-1.
inline omdci::Graph scrambled_cycle5() {
    return omdci::Graph(5, {{3, 5}, {1, 3}, {1, 4}, {2, 4}, {2, 5}});
}

}  // namespace fixtures

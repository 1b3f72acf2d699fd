#include <catch2/catch_amalgamated.hpp>

#include "omdci/gen.hpp"
#include "omdci/io.hpp"
#include "omdci/reduce.hpp"
#include "support/fixtures.hpp"

using namespace omdci;
using fixtures::cs;

TEST_CASE("instances render canonically") {
    CHECK(render_instance(fixtures::worked_perm()) ==
          "variant: omdci\n"
          "M: a2/1 a1/2 a4/4 a3/3\n"
          "A: a4/1 a1/4 a2/2 a4/3 a3/4 a2/3\n");
}

TEST_CASE("instances round-trip through text") {
    for (const Instance& inst : {fixtures::worked_general(), fixtures::worked_plus(),
                                 fixtures::worked_perm()}) {
        std::string text = render_instance(inst);
        Instance back = parse_instance(text);
        CHECK(back == inst);
        CHECK(render_instance(back) == text);
    }
}

TEST_CASE("instance parsing skips comments and blank lines") {
    Instance inst = parse_instance(
        "# worked instance\n"
        "\n"
        "variant: general\n"
        "  M: a1/1 a2/2\n"
        "\n"
        "A: a1/1\n"
        "# trailing note\n");
    CHECK(inst.variant() == Variant::general);
    CHECK(inst.m() == cs("a1/1 a2/2"));
    CHECK(inst.a() == cs("a1/1"));
}

TEST_CASE("instance parsing reports structural errors with line numbers") {
    CHECK_THROWS_AS(parse_instance(""), ParseError);
    CHECK_THROWS_AS(parse_instance("variant: general\nM: a/1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("M: a/1\nvariant: general\nA: a/1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("variant: general\nM: a/1\nA: a/1\nA: a/1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_instance("variant: nope\nM: a/1\nA: a/1\n"), ParseError);

    try {
        parse_instance("variant: general\nM: bad token\nA: a/1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("block tokens must be char/color identifiers") {
    CHECK_THROWS_AS(parse_instance("variant: general\nM: a1\nA:\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("variant: general\nM: a/1/2\nA:\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("variant: general\nM: a-b/1\nA:\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("variant: general\nM: a/c*\nA:\n"), ParseError);
    CHECK_NOTHROW(parse_instance("variant: general\nM: A_z9/c_1\nA:\n"));
}

TEST_CASE("semantic instance errors surface after parsing") {
    CHECK_THROWS_AS(parse_instance("variant: omdci\nM: a/1 b/1\nA: a/1\n"), DomainError);
}

TEST_CASE("renderers reject identifiers that cannot round-trip") {
    Instance inst(Variant::general, ColoredString({make_block("a b", "1")}),
                  ColoredString());
    CHECK_THROWS_AS(render_instance(inst), DomainError);
}

TEST_CASE("solutions render canonically and round-trip") {
    SolutionPair sol{{1, 3, 4}, {1, 5, 6}};
    std::string text = render_solution(sol);
    CHECK(text == "IM: 1 3 4\nIA: 1 5 6\n");
    CHECK(parse_solution(text) == sol);
    CHECK(render_solution(parse_solution(text)) == text);
    CHECK(render_solution(SolutionPair{}) == "IM:\nIA:\n");
}

TEST_CASE("an empty solution file is the empty solution") {
    CHECK(parse_solution("") == SolutionPair{});
    CHECK(parse_solution("# nothing\n\n") == SolutionPair{});
}

TEST_CASE("solution parsing accepts ill-formed indices for the verifiers") {
    SolutionPair sol = parse_solution("IM: 0 2 2\nIA: 99 1\n");
    CHECK(sol.idx_m == fixtures::idx({0, 2, 2}));
    CHECK(sol.idx_a == fixtures::idx({99, 1}));
}

TEST_CASE("solution parsing rejects structural damage") {
    CHECK_THROWS_AS(parse_solution("IM: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_solution("IA: 1\nIM: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_solution("IM: x\nIA: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_solution("IM: 1\nIA: 1\nIA: 1\n"), ParseError);
}

TEST_CASE("numbers too large to represent are parse errors") {
    CHECK_THROWS_AS(parse_solution("IM: 99999999999999999999999\nIA: 1\n"), ParseError);
}

TEST_CASE("graphs render canonically and round-trip") {
    Graph g(4, {{3, 4}, {1, 2}, {1, 4}});
    std::string text = render_graph(g);
    CHECK(text == "n 4\n1 2\n1 4\n3 4\n");
    CHECK(parse_graph(text) == g);
    CHECK(render_graph(parse_graph(text)) == text);
    CHECK(render_graph(Graph(3, {})) == "n 3\n");
}

TEST_CASE("graph parsing enforces normalized edge lines") {
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("m 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 3\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 3\n2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 3\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 3\n1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 3\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 3\n1 2\n1 2\n"), ParseError);
    CHECK_NOTHROW(parse_graph("n 3\n# comment\n1 2\n\n2 3\n"));
}

TEST_CASE("cover inputs render canonically and round-trip") {
    X3CInstance x = fixtures::golden_x3c();
    std::string text = render_x3c(x);
    CHECK(text == "q 2 m 4\n1 3 5\n2 5 6\n2 4 6\n1 2 4\n");
    CHECK(parse_x3c(text) == x);
    CHECK(render_x3c(parse_x3c(text)) == text);
}

TEST_CASE("cover input parsing separates structure from semantics") {
    CHECK_THROWS_AS(parse_x3c(""), ParseError);
    CHECK_THROWS_AS(parse_x3c("q 2\n"), ParseError);
    CHECK_THROWS_AS(parse_x3c("q 1 m 2\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_x3c("q 1 m 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_x3c("q 1 m 1\n1 2 x\n"), ParseError);
    CHECK_THROWS_AS(parse_x3c("q 1 m 1\n1 2 2\n"), DomainError);
    CHECK_THROWS_AS(parse_x3c("q 1 m 1\n1 2 9\n"), DomainError);
    CHECK_THROWS_AS(parse_x3c("q 0 m 1\n1 2 3\n"), DomainError);
}

TEST_CASE("reduction maps render one record per emitted position") {
    auto [inst, map] = reduce_x3c(X3CInstance(1, {{{1, 2, 3}}}));
    CHECK(render_reduction_map(map) ==
          "reduction x3c\n"
          "M 1 T_1 b_1/v_1_1_1\n"
          "M 2 T_1 b_2/v_1_1_2\n"
          "M 3 T_1 b_3/v_1_1_3\n"
          "A 1 P_1_1 b_1/v_1_1_1\n"
          "A 2 P_1_1 b_2/v_1_1_2\n"
          "A 3 P_1_1 b_3/v_1_1_3\n");

    auto [g_inst, g_map] = reduce_cohc(make_complete(3));
    std::string text = render_reduction_map(g_map);
    CHECK(text.rfind("reduction cohc\n", 0) == 0);
    CHECK(text.find("M 1 MSelection_1 p_1_1/P_1_1\n") != std::string::npos);
    CHECK(text.find("A 1 ASelection_1 s_1_3/P_1_3\n") != std::string::npos);
}

TEST_CASE("generated corpora round-trip byte-exactly") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Instance inst = gen_random_instance(seed, Variant::omdci, 4, 7, 4, 4);
        CHECK(render_instance(parse_instance(render_instance(inst))) ==
              render_instance(inst));
        Graph g = make_random_graph(6, 0.4, seed);
        CHECK(render_graph(parse_graph(render_graph(g))) == render_graph(g));
        X3CInstance x = gen_x3c(seed, 2, 4, seed % 2 == 0);
        CHECK(render_x3c(parse_x3c(render_x3c(x))) == render_x3c(x));
    }
}

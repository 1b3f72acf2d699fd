#include <catch2/catch_amalgamated.hpp>

#include "omdci/problems.hpp"

using namespace omdci;

TEST_CASE("exact-cover inputs normalize triples to ascending order") {
    X3CInstance x(2, {{{5, 3, 1}}, {{6, 2, 4}}});
    CHECK(x.q() == 2);
    CHECK(x.m() == 2);
    CHECK(x.base_size() == 6);
    CHECK(x.triples()[0] == std::array<std::size_t, 3>{1, 3, 5});
    CHECK(x.triples()[1] == std::array<std::size_t, 3>{2, 4, 6});
}

TEST_CASE("exact-cover inputs validate their parameters") {
    CHECK_THROWS_AS(X3CInstance(0, {{{1, 2, 3}}}), DomainError);
    CHECK_THROWS_AS(X3CInstance(1, {}), DomainError);
    CHECK_THROWS_AS(X3CInstance(1, {{{1, 2, 2}}}), DomainError);
    CHECK_THROWS_AS(X3CInstance(1, {{{0, 1, 2}}}), DomainError);
    CHECK_THROWS_AS(X3CInstance(1, {{{1, 2, 4}}}), DomainError);
    CHECK_NOTHROW(X3CInstance(1, {{{1, 2, 3}}}));
}

TEST_CASE("graphs normalize and validate edges") {
    Graph g(4, {{2, 1}, {3, 4}, {1, 3}});
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{
                           {1, 2}, {1, 3}, {3, 4}});
    CHECK(g.neighbors(1) == std::vector<std::size_t>{2, 3});
    CHECK(g.neighbors(3) == std::vector<std::size_t>{1, 4});
    CHECK(g.neighbors(2) == std::vector<std::size_t>{1});
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(4) == 1);
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(2, 3));
}

TEST_CASE("graphs reject malformed edges") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{1, 2}}).neighbors(0), DomainError);
    CHECK_THROWS_AS(Graph(3, {{1, 2}}).neighbors(4), DomainError);
}

TEST_CASE("edgeless and empty graphs are legal") {
    Graph g(3, {});
    CHECK(g.edge_count() == 0);
    CHECK(g.neighbors(2).empty());
    CHECK(Graph(0, {}).n() == 0);
}

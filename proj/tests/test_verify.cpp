#include <catch2/catch_amalgamated.hpp>

#include "omdci/verify.hpp"
#include "support/fixtures.hpp"

using namespace omdci;
using fixtures::cs;

namespace {

Violation violation_of(const VerifyResult& r) {
    REQUIRE_FALSE(r.ok);
    return *r.violation;
}

}  // namespace

TEST_CASE("worked instances verify") {
    CHECK(verify_general(fixtures::worked_general(), {{1, 2}, {1, 3}}).ok);
    CHECK(verify_omdci(fixtures::worked_perm(), {{1, 3, 4}, {1, 5, 6}}).ok);
    CHECK(verify_plus(fixtures::worked_plus(), {{1, 2, 3, 4}, {1, 3, 5, 6}}).ok);
}

TEST_CASE("index sequences must be strictly increasing") {
    Instance inst = fixtures::worked_general();
    CHECK(violation_of(verify_general(inst, {{2, 2}, {1, 3}})) ==
          Violation::non_increasing_indices);
    CHECK(violation_of(verify_general(inst, {{1, 2}, {3, 1}})) ==
          Violation::non_increasing_indices);
}

TEST_CASE("non-increasing is reported before range errors") {
    Instance inst = fixtures::worked_general();
    CHECK(violation_of(verify_general(inst, {{3, 2, 99}, {1, 2, 3}})) ==
          Violation::non_increasing_indices);
}

TEST_CASE("indices must be in range") {
    Instance inst = fixtures::worked_general();
    CHECK(violation_of(verify_general(inst, {{1, 99}, {1, 3}})) ==
          Violation::index_out_of_range);
    CHECK(violation_of(verify_general(inst, {{1}, {7}})) == Violation::index_out_of_range);
    CHECK(violation_of(verify_general(inst, {{0, 2}, {1, 3}})) ==
          Violation::index_out_of_range);
}

TEST_CASE("index tuples must have equal length") {
    Instance inst = fixtures::worked_general();
    CHECK(violation_of(verify_general(inst, {{1}, {1, 3}})) == Violation::length_mismatch);
    CHECK(violation_of(verify_general(inst, {{1, 2}, {}})) == Violation::length_mismatch);
}

TEST_CASE("color mismatch reports the offending program position") {
    VerifyResult r = verify_plus(fixtures::worked_plus(), {{1, 2, 3, 4}, {1, 3, 4, 5}});
    CHECK(violation_of(r) == Violation::color_mismatch_at);
    CHECK(r.position == 4);
    CHECK(r.to_string() == "color_mismatch_at(4)");
}

TEST_CASE("char multisets must agree") {
    Instance inst(Variant::omdci, cs("a/1 b/2"), cs("c/1 a/2"));
    CHECK(violation_of(verify_general(inst, {{1, 2}, {1, 2}})) ==
          Violation::char_multiset_mismatch);
}

TEST_CASE("empty solutions are rejected last") {
    Instance inst = fixtures::worked_general();
    VerifyResult r = verify_general(inst, {});
    CHECK(violation_of(r) == Violation::k_zero);
    CHECK(r.to_string() == "k_zero");
}

TEST_CASE("permutation check applies to the stricter verifiers only") {
    Instance inst(Variant::general, cs("x/1 y/1"), cs("x/1"));
    SolutionPair sol{{1}, {1}};
    CHECK(verify_general(inst, sol).ok);
    CHECK(violation_of(verify_omdci(inst, sol)) == Violation::m_not_permutation);
    CHECK(violation_of(verify_plus(inst, sol)) == Violation::m_not_permutation);
}

TEST_CASE("full-cover verifier requires k equal to the pattern length") {
    Instance inst(Variant::omdci_plus, cs("a/1 b/2"), cs("a/1 b/2"));
    CHECK(violation_of(verify_plus(inst, {{1}, {1}})) == Violation::incomplete_m_cover);
    CHECK(verify_plus(inst, {{1, 2}, {1, 2}}).ok);
    CHECK(verify_omdci(inst, {{1}, {1}}).ok);
}

TEST_CASE("verifiers judge the strings, not the variant tag") {
    Instance tagged_plus = fixtures::worked_plus();
    CHECK(verify_general(tagged_plus, {{1, 2, 3, 4}, {1, 3, 5, 6}}).ok);
    CHECK(verify_omdci(tagged_plus, {{1, 2, 3, 4}, {1, 3, 5, 6}}).ok);
}

TEST_CASE("violation order follows the enum") {
    Instance inst = fixtures::worked_general();
    CHECK(violation_of(verify_general(inst, {{2, 1}, {99}})) ==
          Violation::non_increasing_indices);
    CHECK(violation_of(verify_general(inst, {{99}, {1, 3}})) ==
          Violation::index_out_of_range);
}

TEST_CASE("verify result formatting") {
    CHECK(VerifyResult::pass().to_string() == "ok");
    CHECK(VerifyResult::fail(Violation::length_mismatch).to_string() == "length_mismatch");
    CHECK(VerifyResult::fail(Violation::incomplete_m_cover).to_string() ==
          "incomplete_m_cover");
    CHECK(VerifyResult::fail(Violation::color_mismatch_at, 7).to_string() ==
          "color_mismatch_at(7)");
}

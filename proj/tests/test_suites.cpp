#include <doctest.h>

#include "bjorth/suites.hpp"

using namespace bjorth;

TEST_CASE("unimodular sweep suite is orthogonal only at the angle pi") {
    const SuiteReport r = run_suite("lemma6.1", 360, 77);
    CHECK(r.pass());
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].trials == 360);
}

TEST_CASE("last-row and construction suites pass at reduced budgets") {
    CHECK(run_suite("lemma3.1", 60, 78).pass());
    CHECK(run_suite("lemma3.2", 20, 79).pass());
    CHECK(run_suite("lemma3.7", 40, 80).pass());
}

TEST_CASE("falsifier dichotomy suite passes") {
    CHECK(run_suite("lemma3.5", 600, 81).pass());
}

TEST_CASE("preservation suites pass at reduced budgets") {
    CHECK(run_suite("thm1.1", 60, 82).pass());
    CHECK(run_suite("examples7", 80, 83).pass());
}

TEST_CASE("suite reports are deterministic for a fixed seed") {
    const std::string a = run_suite("lemma3.1", 40, 99).render();
    const std::string b = run_suite("lemma3.1", 40, 99).render();
    CHECK(a == b);
    CHECK(a.find("overall=PASS") != std::string::npos);
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suite("lemma9.9", 10, 1), ParseError);
}

TEST_CASE("scalar fit residual is zero exactly on multiples") {
    const AlgebraShape shape{{2, 2}};
    AlgebraElement X = AlgebraElement::identity(shape);
    AlgebraElement Y = X;
    Y *= cx{0.3, -0.4};
    CHECK(scalar_fit_residual(Y, X) < 1e-9);

    AlgebraElement Z = X;
    Z.blocks[1] *= cx{0.25, 0.0}; // I + I versus I + 0.25I
    CHECK(scalar_fit_residual(Z, X) > 0.1);
}

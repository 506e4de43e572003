#include <doctest.h>

#include "generators.hpp"
#include "propiso/semantics.hpp"

using namespace propiso;

TEST_CASE("eval follows classical semantics") {
    CHECK(!eval(parse("p & q"), {{"p", true}, {"q", false}}));
    CHECK(eval(parse("T"), {}));
    CHECK(!eval(parse("F"), {}));
    CHECK(eval(parse("~p | p"), {{"p", true}}));
    CHECK_THROWS_AS(eval(parse("p"), {}), Error);
}

TEST_CASE("tautology and equivalence checks") {
    CHECK(is_tautology(parse("~p | p")));
    CHECK(!is_tautology(parse("p")));
    // extraction target of p | q
    CHECK(are_equivalent(parse("p | q"), parse("(p & T) | (F | q)")));
    CHECK(are_equivalent(parse("p | (p & q)"), parse("p & (p | q)")));
    CHECK(!are_equivalent(parse("p"), parse("q")));
    CHECK(are_equivalent(parse("p & q"), parse("q & p")));
    CHECK(implies(parse("p & q"), parse("p")));
    CHECK(!implies(parse("p"), parse("p & q")));
}

TEST_CASE("letter cap errors instead of degrading") {
    Formula f = parse("a1");
    for (int i = 2; i <= 25; ++i) f = Formula::conj(f, Formula::letter("a" + std::to_string(i)));
    CHECK_THROWS_AS(is_tautology(f), Error);
    CHECK_THROWS_AS(is_tautology(parse("p & q"), 1), Error);
}

TEST_CASE("lemma1_assignment on the worked positions") {
    {
        // a = p & (q | r), B = q
        auto s = lemma1_assignment(parse("p & (q | r)"), {1, 0});
        REQUIRE(s.size() == 2);
        CHECK(s.at("p") == Formula::top());
        CHECK(s.at("r") == Formula::bot());
        CHECK(are_equivalent(apply_assignment(parse("p & (q | r)"), s), parse("q")));
    }
    {
        // whole formula: empty assignment
        auto s = lemma1_assignment(parse("p & q"), {});
        CHECK(s.empty());
    }
    {
        // a = (p & q) | r, B = p
        auto s = lemma1_assignment(parse("(p & q) | r"), {0, 0});
        CHECK(s.at("q") == Formula::top());
        CHECK(s.at("r") == Formula::bot());
    }
    CHECK_THROWS_AS(lemma1_assignment(parse("p & p"), {0}), Error);   // not diversified
    CHECK_THROWS_AS(lemma1_assignment(parse("~p & q"), {1}), Error);  // negation
    CHECK_THROWS_AS(lemma1_assignment(parse("p & q"), {2}), Error);   // bad position
}

TEST_CASE("lemma1_assignment holds exhaustively on small diversified formulas") {
    auto formulas = testgen::all_diversified_av({"p", "q", "r", "s", "t"});
    int checked = 0;
    for (const Formula& a : formulas) {
        for (const Path& pos : testgen::all_positions(a)) {
            Formula b = subformula_at(a, pos);
            auto s = lemma1_assignment(a, pos);
            CHECK(are_equivalent(apply_assignment(a, s), b));
            ++checked;
        }
    }
    CHECK(checked > 10000);
}

TEST_CASE("a foreign letter in a diversified formula breaks equivalence") {
    testgen::Rng rng(23);
    std::vector<std::string> base{"p", "r", "s"};
    for (int i = 0; i < 300; ++i) {
        Formula a = testgen::random_av(rng, base, 1 + testgen::pick(rng, 5));
        // diversified b containing q, a letter absent from a
        std::vector<std::string> with_q{"q", "p", "r", "s"};
        Formula b = testgen::random_diversified_av(rng, with_q, 1 + testgen::pick(rng, 4));
        CHECK(!are_equivalent(a, b));
    }
}

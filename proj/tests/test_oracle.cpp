#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "propiso/construct.hpp"
#include "propiso/oracle.hpp"
#include "propiso/semantics.hpp"

using namespace propiso;

TEST_CASE("bounded_closure reaches single-step and multi-step neighbours") {
    {
        RewriteClosure c = bounded_closure(parse("p & q"), 1);
        CHECK(c.reached.size() == 2);
        CHECK(c.contains(parse("p & q")));
        CHECK(c.contains(parse("q & p")));
    }
    {
        RewriteClosure c = bounded_closure(parse("p"), 3);
        CHECK(c.reached.size() == 1);
        CHECK(c.contains(parse("p")));
    }
    CHECK(bounded_closure(parse("(p & q) & r"), 2).contains(parse("r & (p & q)")));
}

TEST_CASE("closure guards") {
    Formula big = parse("p");
    for (int i = 0; i < 12; ++i) big = Formula::conj(big, parse("p"));
    CHECK_THROWS_AS(bounded_closure(big, 1), Error);
    CHECK_THROWS_AS(bounded_closure(parse("p"), 9), Error);
}

TEST_CASE("oracle_theorem answers yes or unknown") {
    CHECK(oracle_theorem(parse("p & q"), parse("q & p"), 1) == OracleAnswer::Yes);
    CHECK(oracle_theorem(parse("p"), parse("q"), 8) == OracleAnswer::Unknown);
    CHECK(oracle_theorem(parse("~~p & q"), parse("q & p"), 3) == OracleAnswer::Yes);
    // too shallow: unknown, never "no"
    CHECK(oracle_theorem(parse("~~p & q"), parse("q & p"), 1) == OracleAnswer::Unknown);
}

TEST_CASE("closure members are always theorems of the canonical decider") {
    testgen::Rng rng(79);
    std::vector<std::string> alphabet{"p", "q"};
    for (int i = 0; i < 60; ++i) {
        Formula a = testgen::random_nav(rng, alphabet, 1 + testgen::pick(rng, 4),
                                        testgen::pick(rng, 2));
        for (const Formula& b : bounded_closure(a, 3).reached)
            CHECK(is_theorem_nav(a, b));
    }
}

// like testgen::random_shuffle, minus the unguarded expansion steps the
// closure deliberately skips
static Formula shuffle_no_expansion(testgen::Rng& rng, Formula f, int k) {
    for (int i = 0; i < k; ++i) {
        auto steps = testgen::applicable_steps(f, false);
        std::erase_if(steps, [](const RewriteStep& s) {
            return s.axiom == Axiom::DoubleNeg && s.dir == Direction::RL;
        });
        if (steps.empty()) break;
        f = apply_step(f, steps[testgen::pick(rng, steps.size())]);
    }
    return f;
}

TEST_CASE("the decider's theorems are reachable at small sizes") {
    testgen::Rng rng(83);
    std::vector<std::string> alphabet{"p", "q"};
    for (int i = 0; i < 40; ++i) {
        Formula a = testgen::random_nav(rng, alphabet, 1 + testgen::pick(rng, 3),
                                        testgen::pick(rng, 2));
        Formula b = shuffle_no_expansion(rng, a, 1 + testgen::pick(rng, 3));
        REQUIRE(is_theorem_nav(a, b));
        CHECK(oracle_theorem(a, b, 4) == OracleAnswer::Yes);
    }
}

TEST_CASE("oracle_witness_search on the worked examples") {
    {
        auto bij = oracle_witness_search(parse("p & q"), parse("q & p"));
        REQUIRE(bij.has_value());
        CHECK(*bij == std::vector<int>{1, 0});
    }
    CHECK(!oracle_witness_search(parse("p"), parse("q")).has_value());
    CHECK(oracle_witness_search(parse("p | (p & q)"), parse("p & (p | q)")).has_value());
    CHECK_THROWS_AS(oracle_witness_search(parse("~(p & q)"), parse("~p | ~q")), Error);
    Formula nine = parse("p & p & p & p & p & p & p & p & p");
    CHECK_THROWS_AS(oracle_witness_search(nine, nine), Error);
}

TEST_CASE("witness search agrees with the boolean decider") {
    testgen::Rng rng(89);
    std::vector<std::string> alphabet{"p", "q"};
    int found = 0;
    for (int i = 0; i < 120; ++i) {
        Formula a = nnf(testgen::random_nav(rng, alphabet, 1 + testgen::pick(rng, 3),
                                            testgen::pick(rng, 2))).first;
        Formula b = i % 2 ? nnf(testgen::random_shuffle(rng, a, 1 + testgen::pick(rng, 3))).first
                          : nnf(testgen::random_nav(rng, alphabet, 1 + testgen::pick(rng, 3),
                                                    testgen::pick(rng, 2))).first;
        bool iso = decide_iso_boolean(a, b).iso;
        auto bij = oracle_witness_search(a, b);
        CHECK(iso == bij.has_value());
        if (bij) {
            IsoWitness w = lemma7_iso(a, b, *bij);
            CHECK(w.gf_is_identity);
            CHECK(w.fg_is_identity);
            ++found;
        }
    }
    CHECK(found > 30);
}

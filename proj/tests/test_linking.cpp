#include <doctest.h>

#include "generators.hpp"
#include "propiso/construct.hpp"
#include "propiso/linking.hpp"
#include "propiso/semantics.hpp"

using namespace propiso;
using Rel = std::set<std::pair<int, int>>;

TEST_CASE("identity, zero and converse arrows") {
    CHECK(identity_arrow(parse("p & q")).rel == Rel{{0, 0}, {1, 1}});
    CHECK(identity_arrow(parse("T")).rel.empty());
    CHECK(identity_arrow(parse("p")).rel == Rel{{0, 0}});
    CHECK(zero_arrow(parse("p"), parse("p")).rel.empty());
    CHECK(zero_arrow(parse("p & q"), parse("q")).rel.empty());
    TypedRelArrow f{parse("p & q"), parse("q & p"), {{0, 1}, {1, 0}}};
    CHECK(converse(f).rel == Rel{{0, 1}, {1, 0}});
    CHECK(converse(f).source == f.target);
}

TEST_CASE("compose is relational composition with units and a zero") {
    TypedRelArrow f{parse("p & q"), parse("q & p"), {{0, 1}}};
    TypedRelArrow g{parse("q & p"), parse("p"), {{1, 0}}};
    CHECK(compose(f, g).rel == Rel{{0, 0}});
    CHECK(compose(f, identity_arrow(parse("q & p"))).rel == f.rel);
    CHECK(compose(identity_arrow(parse("p & q")), f).rel == f.rel);
    CHECK(compose(zero_arrow(parse("r"), parse("p & q")), f).rel.empty());
    CHECK_THROWS_AS(compose(f, f), Error);  // endpoint mismatch
}

TEST_CASE("compose is associative on random triples") {
    testgen::Rng rng(47);
    Formula a = parse("p & p & p & p"), b = a, c = a, d = a;
    auto random_arrow = [&](const Formula& s, const Formula& t) {
        TypedRelArrow arrow{s, t, {}};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (testgen::pick(rng, 3) == 0) arrow.rel.emplace(i, j);
        return arrow;
    };
    for (int i = 0; i < 200; ++i) {
        TypedRelArrow f = random_arrow(a, b), g = random_arrow(b, c), h = random_arrow(c, d);
        CHECK(compose(compose(f, g), h).rel == compose(f, compose(g, h)).rel);
    }
}

TEST_CASE("arrow_union") {
    TypedRelArrow f{parse("p & q"), parse("p & q"), {{0, 0}}};
    TypedRelArrow g{parse("p & q"), parse("p & q"), {{1, 1}}};
    CHECK(arrow_union(f, g).rel == Rel{{0, 0}, {1, 1}});
    CHECK(arrow_union(f, f).rel == f.rel);
    CHECK(arrow_union(f, zero_arrow(f.source, f.target)).rel == f.rel);
}

TEST_CASE("eq_closure partitions the disjoint union") {
    {
        LinkEquivalence l = eq_closure(identity_arrow(parse("p & q")));
        CHECK(l.blocks() == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    }
    {
        LinkEquivalence l = eq_closure(zero_arrow(parse("p & q"), parse("p")));
        CHECK(l == LinkEquivalence::discrete(2, 1));
        for (int i = 0; i < l.size(); ++i)
            CHECK(l.blocks()[i] == std::vector<int>{i});
    }
    {
        TypedRelArrow f{parse("p"), parse("p | p"), {{0, 0}, {0, 1}}};
        CHECK(eq_closure(f).blocks() == std::vector<std::vector<int>>{{0, 1, 2}});
    }
}

TEST_CASE("LinkEquivalence validates its blocks") {
    CHECK_THROWS_AS(LinkEquivalence(1, 1, {{0}}), Error);          // not covering
    CHECK_THROWS_AS(LinkEquivalence(1, 1, {{0, 1}, {1}}), Error);  // overlap
    CHECK_THROWS_AS(LinkEquivalence(1, 1, {{0, 1}, {}}), Error);   // empty block
    LinkEquivalence l(2, 1, {{2, 0}, {1}});
    CHECK(l.same_block(0, 2));
    CHECK(!l.same_block(0, 1));
    CHECK(l.block_of(1) != l.block_of(2));
}

TEST_CASE("is_perfect") {
    Formula pq = parse("p & q");
    CHECK(is_perfect(eq_closure(identity_arrow(pq)), pq, pq));
    CHECK(!is_perfect(eq_closure(zero_arrow(parse("p"), parse("p"))), parse("p"), parse("p")));
    Formula pp = parse("p & p");
    CHECK(!is_perfect(eq_closure(identity_arrow(pp)), pp, pp));
}

TEST_CASE("is_bijective") {
    CHECK(is_bijective(identity_arrow(parse("p & q"))));
    CHECK(!is_bijective(zero_arrow(parse("p"), parse("p"))));
    TypedRelArrow f{parse("p"), parse("p | p"), {{0, 0}, {0, 1}}};
    CHECK(!is_bijective(f));
}

TEST_CASE("generalize reproduces the modus ponens and projection pictures") {
    Formula a = parse("p & (~p | p)"), b = parse("p");
    {
        GeneralizeResult r = generalize(a, b, parse_links("s0 s1 | s2 t0", 3, 1));
        CHECK(print(r.a1) == "q1 & (~q1 | q2)");
        CHECK(print(r.b1) == "q2");
        CHECK(r.substitution == std::map<std::string, std::string>{{"q1", "p"}, {"q2", "p"}});
        auto back = uniform_instance(a, r.a1);
        REQUIRE(back.has_value());
        CHECK(back->at("q1") == "p");
        CHECK(back->at("q2") == "p");
        CHECK(is_perfect(parse_links("s0 s1 | s2 t0", 3, 1), r.a1, r.b1));
    }
    {
        GeneralizeResult r = generalize(a, b, parse_links("s0 t0", 3, 1));
        CHECK(print(r.a1) == "q1 & (~q2 | q3)");
        CHECK(print(r.b1) == "q1");
    }
    {
        GeneralizeResult r = generalize(parse("p"), parse("p"), parse_links("s0 t0", 1, 1));
        CHECK(print(r.a1) == "q1");
        CHECK(print(r.b1) == "q1");
        CHECK(r.substitution == std::map<std::string, std::string>{{"q1", "p"}});
    }
    // a block mixing distinct letters is not a legal linking
    CHECK_THROWS_AS(generalize(parse("p & q"), parse("p"), parse_links("s0 s1", 2, 1)), Error);
}

TEST_CASE("generalize postconditions hold on random bijective linkings") {
    testgen::Rng rng(53);
    std::vector<std::string> alphabet{"p", "q", "r"};
    for (int i = 0; i < 200; ++i) {
        Formula a = testgen::random_nav(rng, alphabet, 2 + testgen::pick(rng, 4),
                                        testgen::pick(rng, 2));
        Formula b = testgen::random_shuffle(rng, a, 1 + testgen::pick(rng, 5));
        GeneralityVerdict v = decide_iso_generality(a, b);
        REQUIRE(v.iso);
        LinkEquivalence links = eq_closure(*v.bijection);
        GeneralizeResult r = generalize(a, b, links);
        CHECK(is_perfect(links, r.a1, r.b1));
        CHECK(uniform_instance(a, r.a1).has_value());
        CHECK(uniform_instance(b, r.b1).has_value());
        // the bijective linking pairs occurrences one to one, so the
        // relabeled formulas are diversified and stay equivalent
        CHECK(is_diversified(r.a1));
        CHECK(is_diversified(r.b1));
        CHECK(are_equivalent(r.a1, r.b1));
    }
}

TEST_CASE("gen_compose chains split equivalences through the middle") {
    Formula pq = parse("p & q");
    LinkEquivalence id = eq_closure(identity_arrow(pq));
    CHECK(gen_compose(id, id) == id);

    Formula p = parse("p");
    LinkEquivalence linked = eq_closure(TypedRelArrow{p, p, {{0, 0}}});
    LinkEquivalence broken = eq_closure(zero_arrow(p, p));
    CHECK(gen_compose(linked, broken) == LinkEquivalence::discrete(1, 1));
    CHECK(gen_compose(linked, linked) == linked);
}

TEST_CASE("gen_compose is associative on random split equivalences") {
    testgen::Rng rng(59);
    auto random_links = [&](int n, int m) {
        TypedRelArrow f{parse("p"), parse("p"), {}};
        // the formulas are irrelevant to closure; build the partition directly
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                if (testgen::pick(rng, 3) == 0) f.rel.emplace(i, j);
        f.source = testgen::random_av(rng, {"p"}, n);
        f.target = testgen::random_av(rng, {"p"}, m);
        return eq_closure(f);
    };
    for (int i = 0; i < 200; ++i) {
        LinkEquivalence l1 = random_links(3, 4);
        LinkEquivalence l2 = random_links(4, 3);
        LinkEquivalence l3 = random_links(3, 4);
        CHECK(gen_compose(gen_compose(l1, l2), l3) == gen_compose(l1, gen_compose(l2, l3)));
    }
}

TEST_CASE("links serialize and parse back") {
    LinkEquivalence l(3, 1, {{0, 1}, {2, 3}});
    std::string text = links_text(l);
    CHECK(text == "s0 s1 | s2 t0");
    CHECK(parse_links(text, 3, 1) == l);
    // unmentioned occurrences become singletons
    CHECK(parse_links("s0 t0", 2, 1) == LinkEquivalence(2, 1, {{0, 2}, {1}}));
    CHECK_THROWS_AS(parse_links("s9", 1, 1), Error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "lkh/errors.hpp"
#include "lkh/ops.hpp"
#include "support/builders.hpp"

using namespace lkh;
using namespace lkh::testing;

TEST_CASE("depth follows the tree recurrence") {
    auto a = k("a"), b = k("b");
    CHECK(depth(P("P", {a, b})) == 1);
    CHECK(depth(Not(Top())) == 2);
    auto x = v("x"), y = v("y");
    auto f = Imp(Ex("y", All("x", P("P", {x, y}))), All("x", Ex("y", P("P", {x, y}))));
    CHECK(depth(f) == 4);
    CHECK(depth(Top()) == 1);
    CHECK(depth(Bot()) == 1);
    CHECK(depth(And(Not(Top()), Bot())) == 3);
}

TEST_CASE("substitution replaces exactly the free occurrences") {
    auto y = v("y"), x = v("x"), z = v("z");
    // D(x) with x := c_{forall y D(y)}  ->  D(c_{forall y D(y)})
    auto allD = All("y", P("D", {y}));
    auto c = cex(allD);
    CHECK(equal(substitute(P("D", {x}), "x", c), P("D", {c})));
    // P(a,z) with z := c_{exists z P(a,z)}  (the section-5.3 step)
    auto fx = fixture53();
    auto target = substitute(P("P", {fx.a, z}), "z", fx.b);
    CHECK(equal(target, P("P", {fx.a, fx.b})));
    // vacuous substitution
    auto closed = All("x", P("D", {x}));
    CHECK(substitute(closed, "x", c) == closed);
    // bound occurrences untouched
    auto shadow = And(P("D", {x}), All("x", P("D", {x})));
    auto out = substitute(shadow, "x", c);
    CHECK(equal(out, And(P("D", {c}), All("x", P("D", {x})))));
    // non-closed substituted terms are rejected
    CHECK_THROWS_AS(substitute(P("D", {x}), "x", v("w")), LkhError);
}

TEST_CASE("substitution preserves depth") {
    auto x = v("x");
    auto c = cex(All("y", P("D", {v("y")})));
    std::vector<FormulaPtr> samples = {
        P("D", {x}),
        Imp(P("D", {x}), Ex("z", P("P", {x, v("z")}))),
        All("w", Or(P("D", {v("w")}), Not(P("D", {x})))),
    };
    for (const auto& f : samples)
        CHECK(depth(substitute(f, "x", c)) == depth(f));
}

TEST_CASE("henkin rank via the local recurrence") {
    auto fx53 = fixture53();
    CHECK(henkin_rank(cex(All("y", P("D", {v("y")})))) == 1);
    CHECK(henkin_rank(fx53.a) == 1);
    CHECK(henkin_rank(fx53.b) == 2);  // index contains the rank-1 constant a
    CHECK_THROWS_AS(henkin_rank(k("k")), LkhError);
}

TEST_CASE("rank agrees with a bounded materialization of the C_n hierarchy") {
    // Build the constants appearing in the fixtures and check membership in
    // C_1, C_2, C_3 restricted to the corpus: a constant is in C_{n+1} iff
    // every Henkin constant in its index is in C_n.
    std::vector<TermPtr> corpus;
    auto fx51 = fixture51();
    auto fx53 = fixture53();
    corpus.push_back(fx51.a);
    corpus.push_back(fx51.b);
    corpus.push_back(fx53.a);
    corpus.push_back(fx53.b);
    auto c3 = wit(Ex("u", P("P", {v("u"), fx53.b})));  // contains a rank-2 constant
    corpus.push_back(c3);

    auto member_Cn = [&](const TermPtr& c, std::size_t n) {
        // recursive lambda via Y-combinator-ish helper
        auto rec = [&](auto&& self, const TermPtr& cc, std::size_t nn) -> bool {
            if (nn == 0) return false;
            std::vector<TermPtr> inner;
            collect_henkin_constants(cc->index(), inner);
            for (const auto& b : inner)
                if (!self(self, b, nn - 1)) return false;
            return true;
        };
        return rec(rec, c, n);
    };
    for (const auto& c : corpus) {
        std::size_t rank = henkin_rank(c);
        CHECK(member_Cn(c, rank));
        CHECK_FALSE(member_Cn(c, rank - 1));
    }
    CHECK(henkin_rank(c3) == 3);
}

TEST_CASE("rank monotonicity: constants occurring in an index have smaller rank") {
    auto fx51 = fixture51();
    auto fx53 = fixture53();
    std::vector<TermPtr> all{fx51.a, fx51.b, fx53.a, fx53.b};
    for (const auto& c : all) {
        std::vector<TermPtr> inner;
        collect_henkin_constants(c->index(), inner);
        for (const auto& b : inner) CHECK(henkin_rank(b) < henkin_rank(c));
    }
}

TEST_CASE("deep occurrence counts sites inside Henkin indices") {
    auto one = k("1"), two = k("2");
    auto x = v("x");
    auto exP1 = Ex("x", P("P", {one, x}));
    auto cw = wit(exP1);
    auto axiom = Imp(exP1, P("P", {one, cw}));
    CHECK(deep_occurs(one, axiom));
    CHECK(deep_occurrence_count(one, axiom) == 3);
    CHECK_FALSE(deep_occurs(two, axiom));
    CHECK(deep_occurrence_count(two, axiom) == 0);
    // every expression deeply occurs in itself
    CHECK(deep_occurs(cw, cw));
}

TEST_CASE("deep replacement rewrites indices and does not rescan") {
    auto one = k("1"), two = k("2");
    auto x = v("x");
    auto exP1 = Ex("x", P("P", {one, x}));
    auto exP2 = Ex("x", P("P", {two, x}));
    auto axiom = Imp(exP1, P("P", {one, wit(exP1)}));
    auto expected = Imp(exP2, P("P", {two, wit(exP2)}));
    CHECK(equal(deep_replace(axiom, one, two), expected));

    // identity replacement
    CHECK(deep_replace(axiom, one, one) == axiom);
    // absent target
    CHECK(deep_replace(axiom, two, one) == axiom);
    // termination when r occurs deeply in s: f(1) -> g(f(1))
    auto f1 = fn("f", {one});
    auto gf1 = fn("g", {f1});
    auto t = fn("h", {f1, one});
    auto replaced = deep_replace(t, f1, gf1);
    CHECK(equal(replaced, fn("h", {gf1, one})));
}

TEST_CASE("deep replacement round-trips on fresh targets") {
    auto fx = fixture53();
    auto fresh = k("fresh");
    std::vector<FormulaPtr> samples = {
        Imp(Ex("z", P("P", {fx.a, v("z")})), P("P", {fx.a, fx.b})),
        P("Q", {fx.b}),
    };
    for (const auto& e : samples) {
        auto there = deep_replace(e, fx.a, fresh);
        CHECK_FALSE(deep_occurs(fx.a, there));
        auto back = deep_replace(there, fresh, fx.a);
        CHECK(equal(back, e));
    }
}

TEST_CASE("purity detects Henkin constants at any depth") {
    auto fx = fixture51();
    CHECK(is_pure(fx.goal));
    auto exP = Ex("x", P("P", {v("x")}));
    auto bad = Imp(P("P", {k("k")}), P("P", {wit(exP)}));
    CHECK_FALSE(is_pure(bad));
    CHECK(is_pure(Top()));
}

TEST_CASE("gentzen subformula relation") {
    auto x = v("x"), y = v("y");
    auto kk = k("k");
    // instance with t = k
    auto pat = All("x", P("P", {x, fn("f", {x})}));
    CHECK(is_gentzen_subformula(P("P", {kk, fn("f", {kk})}), pat));
    // reflexivity
    auto fx = fixture51();
    CHECK(is_gentzen_subformula(fx.goal, fx.goal));
    // the drinker instance
    auto allD = All("y", P("D", {y}));
    auto c = cex(allD);
    auto drink = Ex("x", Imp(P("D", {x}), allD));
    CHECK(is_gentzen_subformula(Imp(P("D", {c}), allD), drink));
    // inconsistent instantiation is rejected
    CHECK_FALSE(is_gentzen_subformula(P("P", {kk, fn("f", {k("m")})}), pat));
    // non-closed instantiation is rejected
    CHECK_FALSE(
        is_gentzen_subformula(Ex("w", P("P", {v("w"), v("w")})),
                              All("x", Ex("w", P("P", {x, v("w")})))));
    // but the same-shape closed instance works deeper down
    CHECK(is_gentzen_subformula(P("P", {kk, k("m")}), All("x", Ex("w", P("P", {x, v("w")})))));
}

TEST_CASE("superexponentiation and modified subtraction") {
    CHECK(superexp(0, 5) == 5);
    CHECK(superexp(2, 1) == 4);
    CHECK(superexp(1, 3) == 8);
    CHECK(superexp(3, 0) == 4);  // 2_3^0 = 2^(2^(2^0)) = 4
    CHECK_THROWS_AS(superexp(2, 7), OverflowError);
    CHECK(superexp_geq(2, 7, UINT64_MAX));
    CHECK(superexp_geq(1, 4, 16));
    CHECK_FALSE(superexp_geq(1, 4, 17));
    CHECK(monus(5, 2) == 3);
    CHECK(monus(2, 5) == 0);
    CHECK(monus(0, 0) == 0);
}

TEST_CASE("structural identity: no alpha equivalence") {
    auto f1 = Ex("x", P("P", {v("x")}));
    auto f2 = Ex("y", P("P", {v("y")}));
    CHECK_FALSE(equal(f1, f2));
    CHECK(equal(f1, Ex("x", P("P", {v("x")}))));
    CHECK(compare(f1, f2) != 0);
    CHECK(compare(f1, f1) == 0);
}

TEST_CASE("deep_occurs is false after replacing away") {
    auto one = k("1"), two = k("2");
    auto e = Imp(Ex("x", P("P", {one, v("x")})), P("Q", {one}));
    auto r = deep_replace(e, one, two);
    CHECK_FALSE(deep_occurs(one, r));
}

#include <doctest.h>

#include <random>

#include <lm/errors.hpp>
#include <lm/generators.hpp>
#include <lm/piecewise_map.hpp>

#include "oracles.hpp"

using namespace lm;

namespace {

PiecewiseMap word_map(const char* text) { return eval_r(parse_word(text)); }

}  // namespace

TEST_SUITE("piecewise_map") {

TEST_CASE("translation map from empty breakpoint list") {
    PiecewiseMap a({}, {ProjMat::translation(1)});
    CHECK(a == gen_a());
    CHECK(a.breakpoints().empty());
    CHECK(a.eval(rational(-7, 3)) == rational(-4, 3));
}

TEST_CASE("spurious breakpoints are pruned") {
    PiecewiseMap m({rational(0)}, {ProjMat(), ProjMat()});
    CHECK(m.is_identity());
    CHECK(m.breakpoints().empty());
}

TEST_CASE("the displayed 3-breakpoint map builds as given") {
    PiecewiseMap b({rational(0), rational(1, 2), rational(1)},
                   {ProjMat(), ProjMat(1, 0, -1, 1), ProjMat(3, -1, 1, 0), ProjMat::translation(1)});
    CHECK(b == gen_b());
    CHECK(b.breakpoints().size() == 3);
    CHECK(b.eval(rational(1, 2)) == rational(1));
}

TEST_CASE("construction errors name the offending place") {
    // Discontinuity at 0: t vs t+1.
    CHECK_THROWS_AS(PiecewiseMap({rational(0)}, {ProjMat(), ProjMat::translation(1)}),
                    ConstructionError);
    // Decreasing piece 1/t.
    CHECK_THROWS_AS(PiecewiseMap({rational(1), rational(2)},
                                 {ProjMat(), ProjMat(0, 1, 1, 0), ProjMat()}),
                    ConstructionError);
    // Pole inside the middle component: 1/(1-t) style piece t/(1-t) has
    // its pole at 1, inside [0, 2].
    CHECK_THROWS_AS(PiecewiseMap({rational(0), rational(2)},
                                 {ProjMat(), ProjMat(1, 0, -1, 1), ProjMat::translation(-42)}),
                    ConstructionError);
    // Non-translation ends.
    CHECK_THROWS_AS(PiecewiseMap({}, {ProjMat(2, 0, 0, 1)}), ConstructionError);
    // Size mismatch and unsorted breakpoints.
    CHECK_THROWS_AS(PiecewiseMap({rational(0)}, {ProjMat()}), ConstructionError);
    CHECK_THROWS_AS(PiecewiseMap({rational(1), rational(0)}, {ProjMat(), ProjMat(), ProjMat()}),
                    ConstructionError);
}

TEST_CASE("eval picks the right piece") {
    CHECK(gen_b().eval(rational(1, 2)) == rational(1));      // (3t-1)/t
    CHECK(gen_c().eval(rational(1, 3)) == rational(1, 2));   // 2t/(1+t)
    CHECK(gen_a().eval(rational(-7, 3)) == rational(-4, 3)); // t+1
}

TEST_CASE("compose with inverse gives the identity") {
    PiecewiseMap b = gen_b();
    CHECK(compose(b, invert(b)).is_identity());
    CHECK(compose(invert(b), b).is_identity());
    CHECK(breakpoints(compose(b, invert(b))).empty());
}

TEST_CASE("the 6-letter chain reproduces the first embedded generator") {
    PiecewiseMap g1 = word_map("b c a^-1 c^-1 a b^-1");
    CHECK(g1.breakpoints() ==
          std::vector<Rational>{rational(0), rational(1, 2), rational(1)});
    CHECK(g1.mats() == std::vector<ProjMat>{ProjMat(), ProjMat(2, 0, 2, 1),
                                            ProjMat(0, 1, -2, 3), ProjMat()});
    CHECK(g1 == g1_map());
}

TEST_CASE("compose matches the interval-refinement oracle") {
    PiecewiseMap bc = compose(gen_b(), gen_c());
    CHECK(bc == oracle::compose_by_refinement(gen_b(), gen_c()));
    CHECK(bc.breakpoints() == std::vector<Rational>{rational(0), rational(1, 2), rational(1)});

    PiecewiseMap more = compose(g1_map(), invert(gen_b()));
    CHECK(more == oracle::compose_by_refinement(g1_map(), invert(gen_b())));
}

TEST_CASE("invert reproduces the displayed inverse table") {
    PiecewiseMap binv = invert(gen_b());
    CHECK(binv.breakpoints() == std::vector<Rational>{rational(0), rational(1), rational(2)});
    CHECK(binv.mats() == std::vector<ProjMat>{ProjMat(), ProjMat(1, 0, 1, 1),
                                              ProjMat(0, 1, -1, 3), ProjMat::translation(-1)});
    CHECK(invert(PiecewiseMap::identity()).is_identity());
}

TEST_CASE("inverse of the first embedded generator fixes [0,1]") {
    PiecewiseMap inv = invert(g1_map());
    CHECK(inv.breakpoints() == std::vector<Rational>{rational(0), rational(1, 2), rational(1)});
    CHECK(inv.eval(rational(0)) == rational(0));
    CHECK(inv.eval(rational(1)) == rational(1));
    CHECK(compose(g1_map(), inv).is_identity());
}

TEST_CASE("breakpoint queries") {
    CHECK(breakpoints(gen_a()).empty());
    PiecewiseMap g2 = word_map("b b a^-1 b^-1 a b^-1");
    CHECK(g2.breakpoints() == std::vector<Rational>{rational(0), rational(1, 3),
                                                    rational(1, 2), rational(1)});
    CHECK(equals(compose(gen_a(), invert(gen_a())), PiecewiseMap::identity()));
}

TEST_CASE("inverse evaluation undoes evaluation") {
    std::mt19937_64 rng(515253);
    for (int it = 0; it < 200; ++it) {
        PiecewiseMap f = eval_r(random_r_word(rng, 1 + rng() % 10));
        Rational t = rational(static_cast<long>(rng() % 61) - 30, 1 + rng() % 16);
        CHECK(f.eval_inverse(f.eval(t)) == t);
    }
}

TEST_CASE("json rejects malformed payloads") {
    CHECK_THROWS_AS(PiecewiseMap::from_json("not json"), ParseError);
    CHECK_THROWS_AS(PiecewiseMap::from_json(R"({"mats":[]})"), ParseError);
    // structurally valid JSON but an invalid map
    CHECK_THROWS_AS(
        PiecewiseMap::from_json(R"({"breakpoints":["0"],"mats":[["1","0","0","1"],["1","1","0","1"]]})"),
        ConstructionError);
}

TEST_CASE("json round-trip is bit-exact") {
    PiecewiseMap g2 = word_map("b b a^-1 b^-1 a b^-1");
    std::string j = g2.to_json();
    CHECK(PiecewiseMap::from_json(j) == g2);
    CHECK(PiecewiseMap::from_json(j).to_json() == j);
    CHECK(PiecewiseMap::from_json(PiecewiseMap::identity().to_json()).is_identity());
}

TEST_CASE("properties on sampled words") {
    std::mt19937_64 rng(20250811);
    const Rational half = rational(1, 2);
    int samples = 0;
    for (int it = 0; it < 1100; ++it) {
        GroupWord uw = random_r_word(rng, 1 + rng() % 12);
        GroupWord vw = random_r_word(rng, 1 + rng() % 12);
        GroupWord ww = random_r_word(rng, 1 + rng() % 12);
        PiecewiseMap f = eval_r(uw), g = eval_r(vw), h = eval_r(ww);

        // Associativity, exactly.
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));

        // Composed breakpoints stay inside the candidate superset.
        CHECK(breakpoints_contained_in_pullback(f, g));

        // Pointwise composition law and strict monotonicity.
        Rational t = rational(static_cast<long>(rng() % 41) - 20, 1 + rng() % 12);
        PiecewiseMap fg = compose(f, g);
        CHECK(fg.eval(t) == g.eval(f.eval(t)));
        CHECK(f.eval(t) < f.eval(t + half));

        // Canonical matrices: increasing pieces, normalized entries,
        // translations at both ends; rebuild from parts is the identity
        // operation.
        for (const ProjMat& m : fg.mats()) {
            CHECK(m.det() > 0);
            Int g4 = gcd(gcd(abs(m.a()), abs(m.b())), gcd(abs(m.c()), abs(m.d())));
            CHECK(g4 == 1);
            CHECK((m.a() > 0 || (m.a() == 0 && m.b() > 0)));
        }
        CHECK(fg.mats().front().is_translation());
        CHECK(fg.mats().back().is_translation());
        CHECK(PiecewiseMap(fg.breakpoints(), fg.mats()) == fg);
        ++samples;
    }
    CHECK(samples >= 1000);
}

}  // TEST_SUITE

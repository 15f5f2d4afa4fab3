#include "doctest.h"

#include "qlie/stability.hpp"

using namespace qlie;

TEST_CASE("king character on A2") {
    RootSystem rs(build_graph("A2"));
    Orientation om = Orientation::parse(rs.graph(), "1>2");
    Character th = king_character(om, DimVector{1, 1});
    CHECK(th.eval(DimVector{0, 1}) == Rational(1));
    CHECK(th.eval(DimVector{1, 0}) == Rational(-1));
    CHECK(th.eval(DimVector{1, 1}).is_zero());
}

TEST_CASE("king character vanishes on its ambient vector (all D4 orientations)") {
    RootSystem rs(build_graph("D4"));
    for (const auto& om : all_orientations(rs.graph()))
        for (const auto& a : rs.positive_roots())
            CHECK(king_character(om, a).eval(a).is_zero());
}

TEST_CASE("slope character formula") {
    RootSystem rs(build_graph("A2"));
    SlopeCondition mu;
    mu.c = {Rational(1), Rational(0)};
    mu.r = {Rational(1), Rational(1)};
    Character th = slope_character(mu, DimVector{1, 1});
    CHECK(th.eval(DimVector{1, 0}) == Rational(-1, 2));
    CHECK(th.eval(DimVector{0, 1}) == Rational(1, 2));
    CHECK(th.eval(DimVector{1, 1}).is_zero());

    // c = r collapses to zero
    SlopeCondition same;
    same.c = {Rational(1), Rational(1)};
    same.r = {Rational(1), Rational(1)};
    Character zero = slope_character(same, DimVector{1, 1});
    CHECK(zero.eval(DimVector{1, 0}).is_zero());
    CHECK(zero.eval(DimVector{0, 1}).is_zero());
}

TEST_CASE("nakajima character values") {
    auto a1t = build_graph("A~1");
    Character th = nakajima_character(a1t, DimVector{1, 1});
    CHECK(th.values[0] == Rational(1));  // extending vertex
    CHECK(th.values[1] == Rational(-1));
    CHECK(th.eval(DimVector{1, 1}).is_zero());

    Character th2 = nakajima_character(a1t, DimVector{2, 2});
    CHECK(th2.eval(DimVector{2, 2}).is_zero());

    auto d4t = build_graph("D~4");
    Character thd = nakajima_character(d4t, DimVector{1, 1, 1, 1, 2});
    CHECK(thd.values[0] == Rational(5));
    CHECK(thd.eval(DimVector{1, 1, 1, 1, 2}).is_zero());

    DimVector bad{0, 1, 1, 1, 2};
    CHECK_THROWS_AS(nakajima_character(d4t, bad), input_error);
}

TEST_CASE("flow counts: n for A~n, one for D~4 and E~6") {
    for (int n = 1; n <= 4; ++n) {
        auto g = build_graph("A~" + std::to_string(n));
        int count = 0;
        for (const auto& om : all_orientations(g))
            if (flows_to_extending(om, g.extending_vertex)) ++count;
        CHECK(count == n);
    }
    for (const char* type : {"D~4", "E~6"}) {
        auto g = build_graph(type);
        int count = 0;
        for (const auto& om : all_orientations(g))
            if (flows_to_extending(om, g.extending_vertex)) ++count;
        CHECK(count == 1);
    }
    // p a source fails
    auto g = build_graph("A~2");
    auto om = Orientation::parse(g, "0>1,1>2,0>2");
    CHECK(!flows_to_extending(om, 0));
}

TEST_CASE("is_stable on A2: worked examples") {
    RootSystem rs(build_graph("A2"));
    Orientation om = Orientation::parse(rs.graph(), "1>2");
    RepContext ctx(rs, om, 2);
    Character th = king_character(om, DimVector{1, 1});

    StabilityResult ind = is_stable(ctx.indecomposable(DimVector{1, 1}), th);
    CHECK(ind.verdict == Verdict::stable);

    FqRep zero = FqRep::zero(ctx.field(), rs.graph(), DimVector{1, 1});
    StabilityResult z = is_stable(zero, th);
    CHECK(z.verdict == Verdict::unstable);
    REQUIRE(z.witness.has_value());
    CHECK(*z.witness == DimVector{1, 0});

    // simple with theta = 0 is stable (no proper nonzero subspaces)
    Character th0;
    th0.ambient = DimVector{1, 0};
    th0.values = {Rational(0), Rational(7)};
    FqRep s1 = FqRep::zero(ctx.field(), rs.graph(), DimVector{1, 0});
    CHECK(is_stable(s1, th0).verdict == Verdict::stable);

    Character bad;
    bad.ambient = DimVector{1, 1};
    bad.values = {Rational(1), Rational(0)};
    CHECK_THROWS_AS(is_stable(zero, bad), input_error);
}

TEST_CASE("semistable-not-stable shows up for theta = 0") {
    RootSystem rs(build_graph("A2"));
    Orientation om = Orientation::parse(rs.graph(), "1>2");
    RepContext ctx(rs, om, 2);
    Character zero_theta;
    zero_theta.ambient = DimVector{1, 1};
    zero_theta.values = {Rational(0), Rational(0)};
    StabilityResult r = is_stable(ctx.indecomposable(DimVector{1, 1}), zero_theta);
    CHECK(r.verdict == Verdict::semistable_not_stable);
}

TEST_CASE("stability lemma harness A2 and A3") {
    RootSystem a2(build_graph("A2"));
    Orientation om = Orientation::parse(a2.graph(), "1>2");
    RepContext ctx(a2, om, 2);
    auto rep = stability_lemma_harness(ctx, DimVector{1, 1});
    CHECK(rep.all_ok);
    CHECK(rep.entries.size() == 2);

    RootSystem a3(build_graph("A3"));
    for (const auto& o : all_orientations(a3.graph())) {
        RepContext c(a3, o, 2);
        auto r = stability_lemma_harness(c, DimVector{1, 1, 1});
        CHECK(r.all_ok);
        CHECK(r.entries.size() == 4);
    }
}

TEST_CASE("harness verdicts agree at q=2 and q=3 on D4 highest root") {
    RootSystem d4(build_graph("D4"));
    Orientation om = canonical_orientation(d4.graph());
    RepContext c2(d4, om, 2), c3(d4, om, 3);
    auto r2 = stability_lemma_harness(c2, d4.highest_root());
    auto r3 = stability_lemma_harness(c3, d4.highest_root());
    CHECK(r2.all_ok);
    CHECK(r3.all_ok);
    REQUIRE(r2.entries.size() == r3.entries.size());
    for (size_t i = 0; i < r2.entries.size(); ++i) {
        CHECK(r2.entries[i].label == r3.entries[i].label);
        CHECK(r2.entries[i].verdict == r3.entries[i].verdict);
    }
}

TEST_CASE("slope and king stability verdicts coincide for matched pairs") {
    RootSystem rs(build_graph("A2"));
    Orientation om = Orientation::parse(rs.graph(), "1>2");
    RepContext ctx(rs, om, 2);
    DimVector amb{1, 1};
    Character king = king_character(om, amb);
    SlopeCondition mu;
    mu.c = {-king.values[0], -king.values[1]};
    mu.r = {Rational(1), Rational(1)};
    Character slope = slope_character(mu, amb);
    for (const auto& [label, r] : enumerate_reps(ctx, amb)) {
        CHECK(is_stable(r, king).verdict == is_stable(r, slope).verdict);
    }
}

TEST_CASE("triality: relabeling D4 legs permutes verdicts") {
    RootSystem d4(build_graph("D4"));
    // orientation with legs 1,2 in, 3 out; swapping legs 1 and 2 is a
    // graph automorphism fixing the orientation shape
    Orientation om_a = Orientation::parse(d4.graph(), "1>0,2>0,0>3");
    RepContext ctx(d4, om_a, 2);
    // root alpha_0 + alpha_1 maps to alpha_0 + alpha_2 under the swap
    DimVector r1{1, 1, 0, 0}, r2{1, 0, 1, 0};
    auto h1 = stability_lemma_harness(ctx, r1);
    auto h2 = stability_lemma_harness(ctx, r2);
    REQUIRE(h1.entries.size() == h2.entries.size());
    for (size_t i = 0; i < h1.entries.size(); ++i)
        CHECK(h1.entries[i].verdict == h2.entries[i].verdict);
}

TEST_CASE("wall test") {
    RootSystem a2t(build_graph("A~2"));
    // Nakajima restriction: -1 on I'
    std::vector<Rational> nak = {Rational(0), Rational(-1), Rational(-1)};
    CHECK(wall_test(a2t, nak));

    std::vector<Rational> zero_at_simple = {Rational(0), Rational(0), Rational(-1)};
    CHECK(!wall_test(a2t, zero_at_simple));

    std::vector<Rational> sum_wall = {Rational(0), Rational(1), Rational(-1)};
    CHECK(!wall_test(a2t, sum_wall)); // alpha_1 + alpha_2 wall

    RootSystem d4t(build_graph("D~4"));
    std::vector<Rational> nak4(5, Rational(-1));
    nak4[0] = Rational(0);
    CHECK(wall_test(d4t, nak4));
}

TEST_CASE("stability bounds enforced") {
    RootSystem rs(build_graph("A2"));
    Orientation om = Orientation::parse(rs.graph(), "1>2");
    RepContext ctx(rs, om, 2);
    Character th = king_character(om, DimVector{4, 4});
    FqRep big = FqRep::zero(ctx.field(), rs.graph(), DimVector{4, 4});
    CHECK_THROWS_AS(is_stable(big, th), resource_error);
}

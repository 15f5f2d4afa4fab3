#include "doctest.h"

#include "qlie/quiver_rep.hpp"

using namespace qlie;

TEST_CASE("indecomposables exist, are certified, and labels come out right") {
    RootSystem rs(build_graph("A2"));
    auto g = rs.graph();
    Orientation om = Orientation::parse(rs.graph(), "1>2");
    RepContext ctx(rs, om, 3);

    // the indecomposable of dimension (1,1) is a nonzero map
    const FqRep& ind = ctx.indecomposable(DimVector{1, 1});
    CHECK(end_dim(ind) == 1);
    CHECK(!ind.mats[om.arrow_for_edge(0)].is_zero());

    // identify the zero representation of dimension (1,1)
    FqRep zero = FqRep::zero(ctx.field(), rs.graph(), DimVector{1, 1});
    auto label = ctx.identify(zero);
    CHECK(label.str() == "0,1;1,0");

    // identify the indecomposable
    CHECK(ctx.identify(ind).str() == "1,1");
}

TEST_CASE("enumerate_reps matches root partitions (A2, A3, D4)") {
    for (const char* type : {"A2", "A3", "D4"}) {
        RootSystem rs(build_graph(type));
        Orientation om = canonical_orientation(rs.graph());
        RepContext ctx(rs, om, 2);
        DimVector d = rs.highest_root();
        auto reps = enumerate_reps(ctx, d);
        CHECK(reps.size() == rs.root_partitions(d).size());
        for (const auto& [label, rep] : reps) {
            CHECK(ctx.identify(rep) == label);
            CHECK(rep.dim == d);
        }
    }
}

TEST_CASE("A3 sincere dimension vector has 4 classes") {
    RootSystem rs(build_graph("A3"));
    RepContext ctx(rs, canonical_orientation(rs.graph()), 2);
    auto reps = enumerate_reps(ctx, DimVector{1, 1, 1});
    CHECK(reps.size() == 4);
}

TEST_CASE("enumeration bounds are enforced") {
    RootSystem rs(build_graph("D4"));
    RepContext ctx(rs, canonical_orientation(rs.graph()), 2);
    RepLimits tight;
    tight.max_total_dim = 3;
    CHECK_THROWS_AS(enumerate_reps(ctx, rs.highest_root(), tight), resource_error);
}

TEST_CASE("hom dims: A2 classics") {
    RootSystem rs(build_graph("A2"));
    RepContext ctx(rs, Orientation::parse(rs.graph(), "1>2"), 2);
    DimVector s1{1, 0}, s2{0, 1}, x{1, 1};
    // with 1>2: hom(S2, X) = 1 (socle), hom(X, S1) = 1 (top), hom(S1, X) = 0
    CHECK(ctx.hom_between_roots(s2, x) == 1);
    CHECK(ctx.hom_between_roots(x, s1) == 1);
    CHECK(ctx.hom_between_roots(s1, x) == 0);
    CHECK(ctx.hom_between_roots(x, s2) == 0);
    CHECK(ctx.hom_between_roots(x, x) == 1);
}

TEST_CASE("graded subspaces and stability on A2") {
    RootSystem rs(build_graph("A2"));
    RepContext ctx(rs, Orientation::parse(rs.graph(), "1>2"), 2);
    const FqRep& x = ctx.indecomposable(DimVector{1, 1});

    auto sub01 = graded_subspaces(ctx.field(), x.dim, DimVector{0, 1});
    REQUIRE(sub01.size() == 1);
    CHECK(subspace_is_stable(x, sub01[0]));
    auto [s, q] = sub_quotient(x, sub01[0]);
    CHECK(ctx.identify(s).str() == "0,1");
    CHECK(ctx.identify(q).str() == "1,0");

    auto sub10 = graded_subspaces(ctx.field(), x.dim, DimVector{1, 0});
    REQUIRE(sub10.size() == 1);
    CHECK(!subspace_is_stable(x, sub10[0]));
}

TEST_CASE("D4 generic inward representation with distinct lines is the highest root") {
    RootSystem rs(build_graph("D4"));
    Orientation inward = Orientation::parse(rs.graph(), "1>0,2>0,3>0");
    RepContext ctx(rs, inward, 3);
    // three pairwise distinct lines in F_3^2: (1,0), (0,1), (1,1)
    FqRep x = FqRep::zero(ctx.field(), rs.graph(), DimVector{2, 1, 1, 1});
    int h1 = inward.arrow_for_edge(0), h2 = inward.arrow_for_edge(1),
        h3 = inward.arrow_for_edge(2);
    x.mats[h1].at(0, 0) = 1;
    x.mats[h2].at(1, 0) = 1;
    x.mats[h3].at(0, 0) = 1;
    x.mats[h3].at(1, 0) = 1;
    CHECK(ctx.identify(x).str() == "2,1,1,1");
    CHECK(end_dim(x) == 1);
}

TEST_CASE("moment map and nilpotency") {
    RootSystem rs(build_graph("A2"));
    RepContext ctx(rs, Orientation::parse(rs.graph(), "1>2"), 2);
    const FqRep& x = ctx.indecomposable(DimVector{1, 1});
    // single-orientation representations satisfy the preprojective
    // relations trivially and are nilpotent on an acyclic quiver
    CHECK(moment_map_vanishes(x));
    CHECK(is_nilpotent(x));

    // a double-quiver representation with both arrows nonzero on A2:
    // composition is a nonzero loop at each vertex -> not nilpotent,
    // moment map nonzero
    FqRep d = FqRep::zero(ctx.field(), rs.graph(), DimVector{1, 1});
    d.mats[0].at(0, 0) = 1;
    d.mats[1].at(0, 0) = 1;
    CHECK(!moment_map_vanishes(d));
    CHECK(!is_nilpotent(d));
}

TEST_CASE("representatives reproducible across contexts at q=101") {
    RootSystem rs(build_graph("D5"));
    RepContext a(rs, canonical_orientation(rs.graph()), 101);
    RepContext b(rs, canonical_orientation(rs.graph()), 101);
    for (const auto& r : rs.positive_roots())
        CHECK(a.indecomposable(r).mats == b.indecomposable(r).mats);
}

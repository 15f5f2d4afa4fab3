#include "doctest.h"

#include "qlie/cocycle.hpp"
#include "qlie/root_system.hpp"

using namespace qlie;

TEST_CASE("orientation counts and encoding") {
    auto a2 = build_graph("A2");
    CHECK(all_orientations(a2).size() == 2);
    auto d4 = build_graph("D4");
    CHECK(all_orientations(d4).size() == 8);
    auto a1t = build_graph("A~1");
    CHECK(all_orientations(a1t).size() == 4);

    auto om = Orientation::parse(d4, "0>1,0>2,0>3");
    CHECK(om.str() == "0>1,0>2,0>3");
    auto om2 = Orientation::parse(d4, "1>0,0>2,3>0");
    CHECK(om2.str() == "1>0,0>2,3>0");
    CHECK_THROWS_AS(Orientation::parse(d4, "0>1"), input_error);
    CHECK_THROWS_AS(Orientation::parse(d4, "0>1,0>2,1>2"), input_error);

    // A~1 parallel edges: both arrows the same way is a valid orientation
    auto par = Orientation::parse(a1t, "0>1,0>1");
    CHECK(par.str() == "0>1,0>1");
}

TEST_CASE("canonical orientation points from lower to higher label") {
    auto a3 = build_graph("A3");
    CHECK(canonical_orientation(a3).str() == "1>2,2>3");
    auto d4 = build_graph("D4");
    CHECK(canonical_orientation(d4).str() == "0>1,0>2,0>3");
}

TEST_CASE("euler form on A2 with orientation 1>2") {
    auto g = build_graph("A2");
    RootSystem rs(g);
    Cocycle eps(Orientation::parse(g, "1>2"));
    DimVector a1 = {1, 0}, a2 = {0, 1};
    CHECK(eps.form(a1, a2) == 0);
    CHECK(eps.form(a2, a1) == -1);
    CHECK(eps.epsilon(a1, a2) == 1);
    CHECK(eps.epsilon(a2, a1) == -1);
    CHECK(eps.epsilon(DimVector{0, 0}, a2) == 1);
}

TEST_CASE("form symmetrizes to the Cartan pairing; diagonal is 1 on real roots") {
    for (const char* type : {"A3", "D4", "A~1"}) {
        auto g = build_graph(type);
        RootSystem rs(g);
        auto roots = rs.finite() ? rs.positive_roots() : rs.positive_roots(5);
        for (const auto& om : all_orientations(g)) {
            Cocycle eps(om);
            for (const auto& a : roots)
                for (const auto& b : roots)
                    CHECK(eps.form(a, b) + eps.form(b, a) == rs.pairing(a, b));
            for (const auto& a : roots)
                if (rs.pairing(a, a) == 2) CHECK(eps.form(a, a) == 1);
        }
    }
}

TEST_CASE("bimultiplicativity over D4 and A~1 roots") {
    for (const char* type : {"D4", "A~1"}) {
        auto g = build_graph(type);
        RootSystem rs(g);
        auto roots = rs.finite() ? rs.positive_roots() : rs.positive_roots(5);
        for (const auto& om : all_orientations(g)) {
            Cocycle eps(om);
            for (const auto& a : roots)
                for (const auto& b : roots)
                    for (const auto& c : roots) {
                        CHECK(eps.epsilon(a + b, c) == eps.epsilon(a, c) * eps.epsilon(b, c));
                        CHECK(eps.epsilon(a, b + c) == eps.epsilon(a, b) * eps.epsilon(a, c));
                    }
        }
    }
}

TEST_CASE("skew relation and epsilon(a,a) = -1 on real roots") {
    for (const char* type : {"A3", "D4"}) {
        auto g = build_graph(type);
        RootSystem rs(g);
        auto roots = rs.positive_roots();
        for (const auto& om : all_orientations(g)) {
            Cocycle eps(om);
            for (const auto& a : roots) {
                CHECK(eps.epsilon(a, a) == -1);
                for (const auto& b : roots) {
                    int lhs = eps.epsilon(a, b) * eps.epsilon(b, a);
                    int rhs = rs.pairing(a, b) % 2 == 0 ? 1 : -1;
                    CHECK(lhs == rhs);
                }
            }
        }
    }
    // affine real roots of height <= 4
    auto g = build_graph("A~1");
    RootSystem rs(g);
    for (const auto& om : all_orientations(g)) {
        Cocycle eps(om);
        for (const auto& a : rs.positive_roots(5))
            if (rs.pairing(a, a) == 2) CHECK(eps.epsilon(a, a) == -1);
    }
}

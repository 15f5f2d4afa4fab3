#include "doctest.h"

#include "qlie/fmatrix.hpp"
#include "qlie/gf.hpp"
#include "qlie/rational.hpp"

using namespace qlie;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, 2) * Rational(2, 3) == Rational(-1, 3));
    CHECK(Rational(7, -14) == Rational(-1, 2));
    CHECK((Rational(3, 4) / Rational(3, 4)) == Rational(1));
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational(6, 3).as_integer() == 2);
    CHECK(Rational(1, 2).str() == "1/2");
}

TEST_CASE("prime power detection") {
    int p = 0, k = 0;
    CHECK(Gf::is_prime_power(2, &p, &k));
    CHECK((p == 2 && k == 1));
    CHECK(Gf::is_prime_power(4, &p, &k));
    CHECK((p == 2 && k == 2));
    CHECK(Gf::is_prime_power(9, &p, &k));
    CHECK((p == 3 && k == 2));
    CHECK(Gf::is_prime_power(8));
    CHECK(!Gf::is_prime_power(6));
    CHECK(!Gf::is_prime_power(12));
    CHECK(Gf::next_prime_power(1) == 2);
    CHECK(Gf::next_prime_power(4) == 5);
    CHECK(Gf::next_prime_power(7) == 8);
    CHECK(Gf::next_prime_power(9) == 11);
}

TEST_CASE("field axioms hold in every table-built field") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 101}) {
        const Gf& F = Gf::get(q);
        REQUIRE(F.q() == q);
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                if (q <= 9)
                    for (int c = 0; c < q; ++c) {
                        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                        CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
                    }
            }
        }
    }
}

TEST_CASE("GF(4) is not Z/4") {
    const Gf& F = Gf::get(4);
    // characteristic 2: x + x = 0 for all x
    for (int a = 0; a < 4; ++a) CHECK(F.add(a, a) == 0);
}

TEST_CASE("matrix rank, inverse, solve") {
    const Gf& F = Gf::get(5);
    FMatrix m(F, 3, 3);
    // [[1,2,3],[0,1,4],[0,0,2]]
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 1) = 1; m.at(1, 2) = 4;
    m.at(2, 2) = 2;
    CHECK(m.rank() == 3);
    FMatrix inv = m.inverse();
    CHECK(m.mul(inv) == FMatrix::identity(F, 3));

    FMatrix sing(F, 2, 2);
    sing.at(0, 0) = 1; sing.at(0, 1) = 2;
    sing.at(1, 0) = 2; sing.at(1, 1) = 4;
    CHECK(sing.rank() == 1);
    CHECK(sing.nullity() == 1);
}

TEST_CASE("subspace enumeration matches Gaussian binomials") {
    for (int q : {2, 3, 4}) {
        const Gf& F = Gf::get(q);
        for (int d = 0; d <= 4; ++d)
            for (int a = 0; a <= d; ++a) {
                auto subs = all_subspaces(F, d, a);
                CHECK((long long)subs.size() == gaussian_binomial(d, a, q));
                for (const auto& s : subs) CHECK(s.rank() == a);
            }
    }
    // distinctness spot check
    const Gf& F2 = Gf::get(2);
    auto subs = all_subspaces(F2, 4, 2);
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = i + 1; j < subs.size(); ++j)
            CHECK(!(subs[i] == subs[j]));
}

#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "qlie/semican.hpp"

using namespace qlie;

TEST_CASE("canonical presentation peels simple roots") {
    RootSystem rs(build_graph("D4"));
    for (const auto& alpha : rs.positive_roots()) {
        auto pres = canonical_presentation(rs, alpha);
        CHECK((int)pres.size() == alpha.height());
        DimVector sum = rs.graph().zero_vector();
        for (int k : pres) {
            sum = sum + rs.graph().simple_root(k);
            CHECK(rs.is_positive_root(sum));
        }
        CHECK(sum == alpha);
    }
}

TEST_CASE("all presentations enumerate every bracketing order") {
    RootSystem rs(build_graph("A3"));
    auto pres = all_presentations(rs, DimVector{1, 1, 1});
    // theta = a1+a2+a3: orders 123, 321, 213, 231 (partial sums roots)
    CHECK(pres.size() == 4);
}

TEST_CASE("c_orientation on A2") {
    RootSystem rs(build_graph("A2"));
    Cocycle fwd(Orientation::parse(rs.graph(), "1>2"));
    Cocycle bwd(Orientation::parse(rs.graph(), "2>1"));
    CHECK(c_orientation({0, 1}, fwd, rs) == 1);
    CHECK(c_orientation({0, 1}, bwd, rs) == -1);
    CHECK(c_orientation({0}, fwd, rs) == 1); // empty product
    CHECK_THROWS_AS(c_orientation({0, 0}, fwd, rs), input_error);
}

TEST_CASE("orientation component vector on A2") {
    SemicanContext ctx("A2");
    DimVector theta{1, 1};
    auto vec = orientation_component_vector(ctx, theta, {0, 1});
    REQUIRE(vec.by_label.size() == 2);
    CHECK(vec.by_label.at(RootPartition::parse("1,1", 2)) == 1);
    CHECK(vec.by_label.at(RootPartition::parse("0,1;1,0", 2)) == -1);

    // reversed presentation negates the whole vector
    auto rev = orientation_component_vector(ctx, theta, {1, 0});
    for (const auto& [label, sign] : vec.by_label)
        CHECK(rev.by_label.at(label) == -sign);

    // a simple root has a single entry +1
    auto single = orientation_component_vector(ctx, DimVector{1, 0}, {0});
    REQUIRE(single.by_label.size() == 1);
    CHECK(single.by_label.begin()->second == 1);
}

TEST_CASE("well-definedness where labels collide (A2..A4, all roots, all presentations)") {
    for (int n = 2; n <= 4; ++n) {
        SemicanContext ctx("A" + std::to_string(n));
        for (const auto& alpha : ctx.roots().positive_roots())
            for (const auto& pres : all_presentations(ctx.roots(), alpha))
                CHECK_NOTHROW(orientation_component_vector(ctx, alpha, pres));
    }
}

TEST_CASE("presentation independence up to one global sign (A3 and D4 highest root)") {
    for (const char* type : {"A3", "D4"}) {
        SemicanContext ctx(type);
        const RootSystem& rs = ctx.roots();
        std::vector<DimVector> roots;
        if (std::string(type) == "A3") roots = rs.positive_roots();
        else roots = {rs.highest_root()};
        for (const auto& alpha : roots) {
            auto presentations = all_presentations(rs, alpha);
            REQUIRE(!presentations.empty());
            auto base = orientation_component_vector(ctx, alpha, presentations[0]);
            for (size_t i = 1; i < presentations.size(); ++i) {
                auto other = orientation_component_vector(ctx, alpha, presentations[i]);
                REQUIRE(other.by_label.size() == base.by_label.size());
                int g = 0;
                bool ok = true;
                for (const auto& [label, sign] : base.by_label) {
                    int o = other.by_label.at(label);
                    if (g == 0) g = o * sign;
                    if (o != g * sign) ok = false;
                }
                CHECK(ok);
            }
        }
    }
}

TEST_CASE("jordan types in type A") {
    auto y_theta = RootPartition::parse("1,1", 2);
    CHECK(jordan_type_an(y_theta, 2) == std::vector<int>{2, 1});
    auto y_split = RootPartition::parse("0,1;1,0", 2);
    CHECK(jordan_type_an(y_split, 2) == std::vector<int>{3});
    auto a1 = RootPartition::parse("1", 1);
    CHECK(jordan_type_an(a1, 1) == std::vector<int>{2});
}

TEST_CASE("sign character") {
    CHECK(sign_character({3}) == 1);
    CHECK(sign_character({2, 1}) == -1);
    CHECK(sign_character({1, 1, 1, 1}) == 1);
    CHECK(sign_character({4, 2}) == 1);
}

TEST_CASE("c_an closed form: depends only on the number of parts") {
    for (int n = 2; n <= 4; ++n) {
        RootSystem rs(build_graph("A" + std::to_string(n)));
        for (const auto& alpha : rs.positive_roots())
            for (const auto& y : rs.root_partitions(alpha)) {
                int expect = y.part_count() % 2 == 1 ? 1 : -1; // (-1)^(l+1)
                CHECK(c_an(rs, alpha, y) == expect);
            }
    }
}

TEST_CASE("cross-check: orientation products vs sign characters (A2..A4)") {
    for (int n = 2; n <= 4; ++n) {
        auto rep = cross_check_an(n);
        CHECK_MESSAGE(rep.ok, "mismatches: ", rep.mismatches.size());
    }
}

TEST_CASE("D4 reference table: paper entries and merged completeness") {
    CoefficientTable t = load_reference_table("D4-thetamax");
    RootSystem rs(build_graph("D4"));
    CHECK(t.file_checksum_ok);
    CHECK(t.entries.size() == 15);
    CHECK(t.stored_count() == 7);

    int orientation_count = 0, unknown_count = 0;
    for (const auto& [k, e] : t.entries) {
        if (e.prov == Provenance::computed_orientation) ++orientation_count;
        if (e.prov == Provenance::unknown) ++unknown_count;
    }
    CHECK(orientation_count == 8);
    CHECK(unknown_count == 0);

    // the +2 entry and a -1 entry keep their paper-relative signs
    auto two = t.entries.at(RootPartition::parse("1,0,0,0;1,1,1,1", 4));
    auto minus = t.entries.at(RootPartition::parse("1,1,0,0;1,0,1,1", 4));
    CHECK(two.prov == Provenance::stored_paper);
    CHECK((two.value == 2 || two.value == -2));
    CHECK(two.value == -2 * minus.value);

    // normalization anchors the one-part label at +1
    CHECK(t.entries.at(RootPartition::parse("2,1,1,1", 4)).value == 1);
}

TEST_CASE("D5 reference table: 55 partitions, 39 stored, all in {1,2} magnitude") {
    CoefficientTable t = load_reference_table("D5-thetamax");
    CHECK(t.file_checksum_ok);
    CHECK(t.entries.size() == 55);
    CHECK(t.stored_count() == 39);
    for (const auto& [k, e] : t.entries) {
        if (e.prov == Provenance::stored_paper) {
            long long a = e.value < 0 ? -e.value : e.value;
            CHECK((a == 1 || a == 2));
        }
        if (e.prov == Provenance::computed_orientation) {
            CHECK((e.value == 1 || e.value == -1));
        }
        CHECK(e.prov != Provenance::unknown);
    }
}

TEST_CASE("validators pass on shipped tables") {
    for (const char* case_name : {"D4-thetamax", "D5-thetamax"}) {
        auto rep = validate_table(load_reference_table(case_name));
        for (const auto& item : rep.items) CHECK_MESSAGE(item.passed, item.check, ": ", item.detail);
        CHECK(rep.ok);
    }
}

TEST_CASE("single-entry mutations are detected") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "qlie_mut_tables";
    fs::remove_all(dir);
    fs::create_directories(dir);
    fs::copy_file(default_data_dir() + "/d4_thetamax.qtab", dir / "d4_thetamax.qtab");
    fs::copy_file(default_data_dir() + "/d5_thetamax.qtab", dir / "d5_thetamax.qtab");

    // value mutation: 2 -> 1 stays in range but breaks the checksum
    {
        auto path = (dir / "d4_thetamax.qtab").string();
        std::ifstream in(path);
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        in.close();
        auto pos = content.find("= 2 #");
        REQUIRE(pos != std::string::npos);
        content[pos + 2] = '1';
        std::ofstream(path, std::ios::trunc) << content;
        CoefficientTable t = load_reference_table("D4-thetamax", dir.string());
        CHECK(!t.file_checksum_ok);
        CHECK(!validate_table(t).ok);
    }
    // key mutation: corrupt a coordinate so the key is no partition
    {
        auto path = (dir / "d5_thetamax.qtab").string();
        std::ifstream in(path);
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        in.close();
        auto pos = content.find("1,0,1,1,0;1,1,0,1,1");
        REQUIRE(pos != std::string::npos);
        content[pos] = '2';
        std::ofstream(path, std::ios::trunc) << content;
        CoefficientTable t = load_reference_table("D5-thetamax", dir.string());
        auto rep = validate_table(t);
        CHECK(!rep.ok);
        bool keys_failed = false;
        for (const auto& item : rep.items)
            if (item.check == "keys-valid-partitions" && !item.passed) keys_failed = true;
        CHECK(keys_failed);
    }
    fs::remove_all(dir);
}

TEST_CASE("decompose_e_star: complete in type A") {
    SemicanContext ctx("A3");
    auto t = decompose_e_star(ctx, DimVector{1, 1, 1});
    CHECK(t.entries.size() == 4);
    for (const auto& [k, e] : t.entries) {
        CHECK(e.prov == Provenance::computed_an);
        CHECK((e.value == 1 || e.value == -1));
    }
}

TEST_CASE("decompose_e_star: merged D4 table, partial E6 table") {
    SemicanContext d4("D4");
    auto t = decompose_e_star(d4, RootSystem(build_graph("D4")).highest_root());
    CHECK(t.entries.size() == 15);
    CHECK(t.stored_count() == 7);

    SemicanContext e6("E6");
    // a height-2 root: orientation part known and complete
    DimVector beta = e6.roots().graph().simple_root(0) + e6.roots().graph().simple_root(1);
    REQUIRE(e6.roots().is_positive_root(beta));
    auto te = decompose_e_star(e6, beta);
    bool has_unknown = false, has_orientation = false;
    for (const auto& [k, e] : te.entries) {
        if (e.prov == Provenance::unknown) has_unknown = true;
        if (e.prov == Provenance::computed_orientation) has_orientation = true;
    }
    CHECK(has_orientation);
    CHECK(!has_unknown); // height-2: both partitions arise from orientations
    CHECK(te.entries.size() == 2);

    // the E6 highest root has components beyond orientations: those
    // entries are marked unknown, never guessed
    auto th = decompose_e_star(e6, e6.roots().highest_root());
    int unknown = 0, orient = 0;
    for (const auto& [k, e] : th.entries) {
        if (e.prov == Provenance::unknown) {
            CHECK(e.value == 0);
            ++unknown;
        }
        if (e.prov == Provenance::computed_orientation) ++orient;
    }
    CHECK(unknown > 0);
    CHECK(orient > 0);
    CHECK(th.entries.size() == e6.roots().root_partitions(e6.roots().highest_root()).size());
}

TEST_CASE("malformed data files are input errors") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "qlie_bad_table";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ofstream(dir / "d4_thetamax.qtab") << "not a table at all\n";
    CHECK_THROWS_AS(load_reference_table("D4-thetamax", dir.string()), input_error);
    std::ofstream(dir / "d4_thetamax.qtab", std::ios::trunc)
        << "# qlie-table v1\n# type: D4\n# root: 2,1,1,1\n1,0,0,0;1,1,1,1 = 2 # guessed\n";
    CHECK_THROWS_AS(load_reference_table("D4-thetamax", dir.string()), input_error);
    fs::remove_all(dir);
}

TEST_CASE("ad jordan fingerprint distinguishes the two A2 orbits") {
    RootSystem rs(build_graph("A2"));
    auto regular = ad_jordan_fingerprint(rs, RootPartition::parse("0,1;1,0", 2));
    auto subreg = ad_jordan_fingerprint(rs, RootPartition::parse("1,1", 2));
    int total_r = 0, total_s = 0;
    for (int x : regular) total_r += x;
    for (int x : subreg) total_s += x;
    CHECK(total_r == 8);
    CHECK(total_s == 8);
    CHECK(regular != subreg);
    // the regular nilpotent of sl3 has ad-Jordan blocks (5,3)
    CHECK(regular == std::vector<int>{5, 3});
}

TEST_CASE("unknown reference table case is rejected") {
    CHECK_THROWS_AS(load_reference_table("E8-thetamax"), input_error);
}

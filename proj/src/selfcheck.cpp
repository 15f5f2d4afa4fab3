#include "qlie/selfcheck.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "qlie/bps.hpp"
#include "qlie/hall.hpp"
#include "qlie/semican.hpp"
#include "qlie/stability.hpp"

namespace qlie {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    std::vector<CriterionResult> results;

    void run(int id, const std::string& name, const std::function<std::string()>& body) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        auto t0 = Clock::now();
        try {
            r.detail = body();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        results.push_back(std::move(r));
    }
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw validation_error(msg);
}

std::string criterion_tables(const std::string& data_dir) {
    CoefficientTable d4 = load_reference_table("D4-thetamax", data_dir);
    CoefficientTable d5 = load_reference_table("D5-thetamax", data_dir);
    for (const auto* t : {&d4, &d5}) {
        auto rep = validate_table(*t);
        for (const auto& item : rep.items)
            require(item.passed, t->type + " " + item.check + ": " + item.detail);
    }
    RootSystem rs4(build_graph("D4"));
    auto key = RootPartition::parse("1,0,0,0;1,1,1,1", 4);
    long long v = d4.entries.at(key).value;
    require(v == 2 || v == -2, "D4 highest-weight pair entry has |c| != 2");
    for (const auto& [k, e] : d5.entries)
        if (e.prov == Provenance::stored_paper)
            require(e.value == 1 || e.value == -1 || e.value == 2 || e.value == -2,
                    "D5 stored coefficient outside {1,2} magnitude: " + k.str());
    return "D4: 7 stored + 8 orientation = 15; D5: 39 stored + 16 orientation = 55";
}

std::string criterion_presentations() {
    long long pairs = 0;
    for (const char* type : {"A3", "D4"}) {
        SemicanContext ctx(type);
        const RootSystem& rs = ctx.roots();
        std::vector<DimVector> roots;
        if (std::string(type) == "A3")
            roots = rs.positive_roots();
        else
            roots = {rs.highest_root()};
        for (const auto& alpha : roots) {
            auto presentations = all_presentations(rs, alpha);
            auto base = orientation_component_vector(ctx, alpha, presentations[0]);
            for (size_t i = 1; i < presentations.size(); ++i) {
                auto other = orientation_component_vector(ctx, alpha, presentations[i]);
                require(other.by_label.size() == base.by_label.size(),
                        "label sets differ between presentations of " + alpha.str());
                int g = 0;
                for (const auto& [label, sign] : base.by_label) {
                    int o = other.by_label.at(label);
                    if (g == 0) g = o * sign;
                    require(o == g * sign, "presentation dependence at " + alpha.str() +
                                               " label " + label.str());
                }
                ++pairs;
            }
        }
    }
    return std::to_string(pairs) + " presentation pairs compared";
}

std::string criterion_hall_bracket(const std::string& cache_dir) {
    long long checks = 0;
    for (const char* type : {"A2", "A3"}) {
        RootSystem rs(build_graph(type));
        for (const auto& om : all_orientations(rs.graph())) {
            HallAlgebra H(rs, om, cache_dir);
            for (const auto& a : rs.positive_roots())
                for (const auto& b : rs.positive_roots()) {
                    if (!rs.is_positive_root(a + b)) continue;
                    auto r = H.verify_bracket_E(a, b);
                    require(r.ok, std::string(type) + " " + om.str() + " " + r.detail);
                    ++checks;
                }
        }
    }
    RootSystem d4(build_graph("D4"));
    DimVector theta = d4.highest_root();
    for (const auto& om : all_orientations(d4.graph())) {
        HallAlgebra H(d4, om, cache_dir);
        for (const auto& a : d4.positive_roots()) {
            DimVector b = theta - a;
            if (!d4.is_positive_root(b)) continue;
            auto r1 = H.verify_bracket_E(a, b);
            require(r1.ok, "D4 " + om.str() + " " + r1.detail);
            auto r2 = H.verify_bracket_E(b, a);
            require(r2.ok, "D4 " + om.str() + " " + r2.detail);
            checks += 2;
        }
    }
    return std::to_string(checks) + " bracket identities";
}

std::string criterion_serre_hall(const std::string& cache_dir) {
    long long checks = 0;
    for (const char* type : {"A2", "A3", "D4"}) {
        RootSystem rs(build_graph(type));
        for (const auto& om : all_orientations(rs.graph())) {
            HallAlgebra H(rs, om, cache_dir);
            for (int i = 0; i < rs.rank(); ++i)
                for (int j = 0; j < rs.rank(); ++j) {
                    if (i == j) continue;
                    require(H.serre_in_hall(i, j),
                            std::string(type) + " " + om.str() + " serre(" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
                    ++checks;
                }
        }
    }
    return std::to_string(checks) + " Serre relations";
}

std::string criterion_cocycle_laws() {
    long long checks = 0;
    {
        RootSystem d4(build_graph("D4"));
        auto roots = d4.positive_roots();
        for (const auto& om : all_orientations(d4.graph())) {
            Cocycle eps(om);
            for (const auto& a : roots)
                for (const auto& b : roots) {
                    int skew = eps.epsilon(a, b) * eps.epsilon(b, a);
                    int expect = d4.pairing(a, b) % 2 == 0 ? 1 : -1;
                    require(skew == expect, "skew law fails on D4");
                    for (const auto& c : roots) {
                        require(eps.epsilon(a + b, c) == eps.epsilon(a, c) * eps.epsilon(b, c),
                                "bimultiplicativity (left) fails on D4");
                        require(eps.epsilon(a, b + c) == eps.epsilon(a, b) * eps.epsilon(a, c),
                                "bimultiplicativity (right) fails on D4");
                        ++checks;
                    }
                }
            for (const auto& a : roots) {
                require(eps.form(a, a) == 1, "euler form diagonal != 1 on D4 root");
                ++checks;
            }
        }
    }
    {
        RootSystem a1t(build_graph("A~1"));
        auto roots = a1t.positive_roots(5); // height <= 4
        for (const auto& om : all_orientations(a1t.graph())) {
            Cocycle eps(om);
            for (const auto& a : roots)
                for (const auto& b : roots)
                    for (const auto& c : roots) {
                        require(eps.epsilon(a + b, c) == eps.epsilon(a, c) * eps.epsilon(b, c),
                                "bimultiplicativity fails on A~1");
                        ++checks;
                    }
            for (const auto& a : roots)
                if (a1t.pairing(a, a) == 2) {
                    require(eps.form(a, a) == 1, "euler form diagonal != 1 on A~1 real root");
                    ++checks;
                }
        }
    }
    return std::to_string(checks) + " cocycle law instances";
}

std::string criterion_jacobi() {
    std::string detail;
    for (const char* type : {"A2", "A3", "D4"}) {
        RootSystem rs(build_graph(type));
        FullLieAlgebra g(rs, Cocycle(canonical_orientation(rs.graph())));
        auto rep = jacobi_full(g);
        require(rep.ok, std::string("jacobi fails on g^eps(") + type + "): " +
                            rep.failing_triple);
        detail += std::string(type) + ":" + std::to_string(rep.triples_checked) + " ";
    }
    for (const char* type : {"A~1", "A~2"}) {
        RootSystem rs(build_graph(type));
        auto rep = jacobi_affine(rs, Cocycle(canonical_orientation(rs.graph())), 4);
        require(rep.ok,
                std::string("jacobi fails on n^eps(") + type + "): " + rep.failing_triple);
        detail += std::string(type) + ":" + std::to_string(rep.triples_checked) + " ";
    }
    return "triples " + detail;
}

std::string criterion_stability() {
    long long classes = 0;
    auto run_case = [&](const RootSystem& rs, const Orientation& om, const DimVector& alpha) {
        RepContext c2(rs, om, 2), c3(rs, om, 3);
        auto r2 = stability_lemma_harness(c2, alpha);
        auto r3 = stability_lemma_harness(c3, alpha);
        require(r2.all_ok, rs.graph().type_label + " " + om.str() + " " + alpha.str() +
                               " fails the stability lemma at q=2");
        require(r3.all_ok, rs.graph().type_label + " " + om.str() + " " + alpha.str() +
                               " fails the stability lemma at q=3");
        require(r2.entries.size() == r3.entries.size(), "class counts differ across q");
        for (size_t i = 0; i < r2.entries.size(); ++i) {
            require(r2.entries[i].label == r3.entries[i].label &&
                        r2.entries[i].verdict == r3.entries[i].verdict,
                    "verdicts disagree between q=2 and q=3");
            ++classes;
        }
    };
    for (const char* type : {"A2", "A3"}) {
        RootSystem rs(build_graph(type));
        for (const auto& om : all_orientations(rs.graph()))
            for (const auto& alpha : rs.positive_roots()) run_case(rs, om, alpha);
    }
    RootSystem d4(build_graph("D4"));
    for (const auto& om : all_orientations(d4.graph())) run_case(d4, om, d4.highest_root());
    return std::to_string(classes) + " iso-classes verified at q=2,3";
}

std::string criterion_flows() {
    for (int n = 1; n <= 4; ++n) {
        auto g = build_graph("A~" + std::to_string(n));
        int count = 0;
        for (const auto& om : all_orientations(g))
            if (flows_to_extending(om, g.extending_vertex)) ++count;
        require(count == n, "A~" + std::to_string(n) + " has " + std::to_string(count) +
                                " flowing orientations, expected " + std::to_string(n));
    }
    for (const char* type : {"D~4", "E~6"}) {
        auto g = build_graph(type);
        int count = 0;
        for (const auto& om : all_orientations(g))
            if (flows_to_extending(om, g.extending_vertex)) ++count;
        require(count == 1, std::string(type) + " has " + std::to_string(count) +
                                " flowing orientations, expected 1");
    }
    return "A~1..A~4 = 1..4; D~4 = E~6 = 1";
}

std::string criterion_affine_audits() {
    for (const char* type : {"A~1", "A~2"}) {
        RootSystem rs(build_graph(type));
        Cocycle eps(canonical_orientation(rs.graph()));
        for (int k : rs.finite_vertices())
            for (int m = 1; m <= 3; ++m)
                require(ehat(k, m, eps, rs) ==
                            LieElement::single(BasisSymbol::imaginary(k, m)),
                        std::string(type) + ": ehat(k,m) != alpha_k(m)");
    }
    for (const char* type : {"A~1", "A~2", "D~4"}) {
        RootSystem rs(build_graph(type));
        auto rep = multiplicity_audit(rs, 4);
        require(rep.ok, std::string(type) + ": multiplicity audit failed");
        Character nak = nakajima_character(rs.graph(), rs.delta());
        require(wall_test(rs, nak.values),
                std::string(type) + ": Nakajima character lies on a wall");
        Cocycle eps(canonical_orientation(rs.graph()));
        auto con = conjecture_algebra_checks(rs, eps, std::string(type) == "D~4" ? 2 : 3);
        require(con.ok, std::string(type) + ": conjecture algebra checks failed");
    }
    return "ehat, multiplicity histograms, wall tests, graded bijections";
}

std::string criterion_mutations(const std::string& data_dir) {
    namespace fs = std::filesystem;
    std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
    fs::path tmp = fs::temp_directory_path() / "qlie_acceptance_mutations";
    fs::remove_all(tmp);
    fs::create_directories(tmp);

    int mutations = 0;
    for (const char* file : {"d4_thetamax.qtab", "d5_thetamax.qtab"}) {
        std::ifstream in(dir + "/" + std::string(file));
        require(in.good(), std::string("cannot open ") + file);
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        in.close();
        for (size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].empty() || lines[i][0] == '#') continue;
            // flip the sign region of this entry: "= v" -> "= v^"
            std::string mutated = lines[i];
            auto eq = mutated.find("= ");
            mutated[eq + 2] = mutated[eq + 2] == '-' ? '1' : '-';
            fs::path target = tmp / file;
            std::ofstream out(target, std::ios::trunc);
            for (size_t j = 0; j < lines.size(); ++j)
                out << (j == i ? mutated : lines[j]) << "\n";
            out.close();
            require(!reference_table_checksum_ok(target.string()),
                    std::string(file) + ": mutated entry escaped the checksum");
            ++mutations;
        }
    }

    // one full validator pass on a mutated table must fail
    fs::copy_file(dir + "/d4_thetamax.qtab", tmp / "d4_thetamax.qtab",
                  fs::copy_options::overwrite_existing);
    fs::copy_file(dir + "/d5_thetamax.qtab", tmp / "d5_thetamax.qtab",
                  fs::copy_options::overwrite_existing);
    {
        std::ifstream in(tmp / "d4_thetamax.qtab");
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        in.close();
        auto pos = content.find("= 2 #");
        content[pos + 2] = '4'; // still a power of two; only the checksum sees it
        std::ofstream(tmp / "d4_thetamax.qtab", std::ios::trunc) << content;
        CoefficientTable t = load_reference_table("D4-thetamax", tmp.string());
        require(!validate_table(t).ok, "validator accepted a mutated D4 table");
    }

    // cache record mutation
    {
        RootSystem rs(build_graph("A2"));
        Orientation om = canonical_orientation(rs.graph());
        std::string cdir = (tmp / "cache").string();
        {
            HallAlgebra H(rs, om, cdir);
            H.hall_polynomial(RootPartition::parse("0,1;1,0", 2),
                              RootPartition::parse("1,0", 2), RootPartition::parse("0,1", 2));
        }
        std::string cache_file;
        for (const auto& e : fs::directory_iterator(cdir)) cache_file = e.path().string();
        require(!cache_file.empty(), "cache file not written");
        std::ifstream in(cache_file);
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        in.close();
        auto pos = content.find(";1;crc=");
        require(pos != std::string::npos, "unexpected cache record layout");
        content[pos + 1] = '7';
        std::ofstream(cache_file, std::ios::trunc) << content;
        HallAlgebra H(rs, om, cdir);
        require(H.cache_corruption_seen(), "mutated cache record escaped detection");
        // and the recount still gives the right value
        auto p = H.hall_polynomial(RootPartition::parse("0,1;1,0", 2),
                                   RootPartition::parse("1,0", 2),
                                   RootPartition::parse("0,1", 2));
        require(p.at_one() == 1, "recount after corruption is wrong");
    }
    fs::remove_all(tmp);
    return std::to_string(mutations) + " single-entry mutations all detected";
}

} // namespace

bool reference_table_checksum_ok(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    std::string line, payload, checksum;
    while (std::getline(in, line)) {
        if (line.rfind("# checksum:", 0) == 0) {
            checksum = line.substr(11);
            while (!checksum.empty() && checksum.front() == ' ') checksum.erase(0, 1);
            continue;
        }
        payload += line;
        payload += '\n';
    }
    return HallCache::record_checksum(payload) == checksum;
}

std::vector<CriterionResult> run_acceptance(const SelfcheckOptions& options) {
    Runner r;

    r.run(1, "D5 partition count", [&] {
        RootSystem d5(build_graph("D5"));
        auto parts = d5.root_partitions(d5.highest_root());
        require(parts.size() == 55, "count = " + std::to_string(parts.size()));
        return std::string("55 root partitions of the D5 highest root");
    });

    r.run(2, "D4/D5 reference tables", [&] { return criterion_tables(options.data_dir); });

    r.run(3, "A_n sign-character cross-check", [&] {
        for (int n = 2; n <= 4; ++n) {
            auto rep = cross_check_an(n);
            require(rep.ok, "A" + std::to_string(n) + ": " +
                                (rep.mismatches.empty() ? "" : rep.mismatches.front()));
        }
        return std::string("A2, A3, A4 consistent up to one global sign per root");
    });

    r.run(4, "presentation independence", [&] { return criterion_presentations(); });

    r.run(5, "Hall bracket identity", [&] { return criterion_hall_bracket(options.cache_dir); });

    r.run(6, "Serre relations in the Hall algebra",
          [&] { return criterion_serre_hall(options.cache_dir); });

    r.run(7, "cocycle laws", [&] { return criterion_cocycle_laws(); });

    r.run(8, "Jacobi suites", [&] { return criterion_jacobi(); });

    r.run(9, "stability lemma harness", [&] { return criterion_stability(); });

    r.run(10, "orientation flow counts", [&] { return criterion_flows(); });

    r.run(11, "affine audits", [&] { return criterion_affine_audits(); });

    r.run(12, "mutation robustness", [&] { return criterion_mutations(options.data_dir); });

    return r.results;
}

} // namespace qlie

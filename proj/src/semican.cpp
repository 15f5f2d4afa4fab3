#include "qlie/semican.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef QLIE_SOURCE_DATA_DIR
#define QLIE_SOURCE_DATA_DIR "data"
#endif

namespace qlie {

SemicanContext::SemicanContext(const std::string& type)
    : rs_(build_graph(type)), ref_(reference_orientation(rs_.graph())), labeler_(rs_, ref_) {
    if (!rs_.finite()) throw input_error("SemicanContext: finite type required");
}

std::vector<int> canonical_presentation(const RootSystem& rs, const DimVector& alpha) {
    if (!rs.is_positive_root(alpha))
        throw input_error("canonical_presentation: not a positive root");
    if (alpha.height() == 1) {
        for (int i = 0; i < rs.rank(); ++i)
            if (alpha[i] == 1) return {i};
    }
    for (int i = 0; i < rs.rank(); ++i) {
        if (alpha[i] == 0) continue;
        DimVector beta = alpha - rs.graph().simple_root(i);
        if (rs.is_positive_root(beta)) {
            auto pres = canonical_presentation(rs, beta);
            pres.push_back(i);
            return pres;
        }
    }
    throw internal_error("canonical_presentation: no simple root peels off " + alpha.str());
}

namespace {

void presentations_rec(const RootSystem& rs, const DimVector& alpha, std::vector<int>& tail,
                       std::vector<std::vector<int>>& out) {
    if (alpha.height() == 1) {
        for (int i = 0; i < rs.rank(); ++i)
            if (alpha[i] == 1) {
                std::vector<int> pres = {i};
                pres.insert(pres.end(), tail.rbegin(), tail.rend());
                out.push_back(std::move(pres));
            }
        return;
    }
    for (int i = 0; i < rs.rank(); ++i) {
        if (alpha[i] == 0) continue;
        DimVector beta = alpha - rs.graph().simple_root(i);
        if (!rs.is_positive_root(beta)) continue;
        tail.push_back(i);
        presentations_rec(rs, beta, tail, out);
        tail.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> all_presentations(const RootSystem& rs, const DimVector& alpha) {
    if (!rs.is_positive_root(alpha))
        throw input_error("all_presentations: not a positive root");
    std::vector<std::vector<int>> out;
    std::vector<int> tail;
    presentations_rec(rs, alpha, tail, out);
    return out;
}

int c_orientation(const std::vector<int>& presentation, const Cocycle& eps,
                  const RootSystem& rs) {
    if (presentation.empty()) throw input_error("c_orientation: empty presentation");
    DimVector partial = rs.graph().zero_vector();
    for (int k : presentation) {
        partial = partial + rs.graph().simple_root(k);
        if (!rs.is_positive_root(partial))
            throw input_error("c_orientation: partial sum " + partial.str() + " is not a root");
    }
    int sign = 1;
    for (size_t i = 0; i < presentation.size(); ++i)
        for (size_t j = i + 1; j < presentation.size(); ++j)
            sign *= eps.epsilon(rs.graph().simple_root(presentation[i]),
                                rs.graph().simple_root(presentation[j]));
    return sign;
}

OrientationVector orientation_component_vector(const SemicanContext& ctx,
                                               const DimVector& alpha,
                                               const std::vector<int>& presentation) {
    const RootSystem& rs = ctx.roots();
    OrientationVector out;
    for (const auto& om : all_orientations(rs.graph())) {
        int sign = c_orientation(presentation, Cocycle(om), rs);
        RootPartition label = ctx.labeler().label_for_orientation(alpha, om);
        auto it = out.by_label.find(label);
        if (it == out.by_label.end()) {
            out.by_label.emplace(label, sign);
        } else if (it->second != sign) {
            throw internal_error("orientation_component_vector: orientations sharing label " +
                                 label.str() + " disagree on the sign");
        }
        out.orientation_labels.emplace_back(om.str(), std::move(label));
    }
    return out;
}

namespace {

int rational_rank(std::vector<std::vector<Rational>> m) {
    int rows = (int)m.size();
    if (rows == 0) return 0;
    int cols = (int)m[0].size();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Rational f = m[r][c] / m[rank][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

std::vector<int> jordan_from_ranks(const std::vector<int>& ranks) {
    // ranks[k] = rank(N^k); blocks of size >= k: ranks[k-1] - ranks[k]
    std::vector<int> lambda;
    for (size_t k = 1; k < ranks.size(); ++k) {
        int ge_k = ranks[k - 1] - ranks[k];
        int ge_k1 = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
        for (int t = 0; t < ge_k - ge_k1; ++t) lambda.push_back((int)k);
    }
    std::sort(lambda.rbegin(), lambda.rend());
    return lambda;
}

std::vector<int> nilpotent_jordan_type(const std::vector<std::vector<Rational>>& n_mat) {
    int n = (int)n_mat.size();
    std::vector<int> ranks = {n};
    std::vector<std::vector<Rational>> power = n_mat;
    while (true) {
        int r = rational_rank(power);
        ranks.push_back(r);
        if (r == 0) break;
        // next power
        std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (power[i][k].is_zero()) continue;
                for (int j = 0; j < n; ++j) next[i][j] += power[i][k] * n_mat[k][j];
            }
        power = std::move(next);
        if ((int)ranks.size() > n + 2)
            throw internal_error("nilpotent_jordan_type: matrix is not nilpotent");
    }
    return jordan_from_ranks(ranks);
}

} // namespace

std::vector<int> jordan_type_an(const RootPartition& y, int n) {
    std::vector<std::vector<Rational>> mat(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    for (const auto& part : y.parts) {
        int lo = -1, hi = -1;
        for (int i = 0; i < part.size(); ++i) {
            if (part[i] == 1) {
                if (lo < 0) lo = i;
                hi = i;
            } else if (part[i] != 0) {
                throw internal_error("jordan_type_an: non-interval part " + part.str());
            }
        }
        if (lo < 0) throw internal_error("jordan_type_an: empty part");
        for (int i = lo; i < hi; ++i)
            if (part[i] != 1) throw internal_error("jordan_type_an: non-interval part");
        mat[lo][hi + 1] = Rational(1); // E_{i, j+1} on the interval [i..j]
    }
    return nilpotent_jordan_type(mat);
}

int sign_character(const std::vector<int>& lambda) {
    int transpositions = 0;
    for (int part : lambda) transpositions += part - 1;
    return transpositions % 2 == 0 ? 1 : -1;
}

int c_an(const RootSystem& rs, const DimVector& alpha, const RootPartition& y,
         bool normalize) {
    if (rs.graph().type_label.size() < 2 || rs.graph().type_label[0] != 'A' || !rs.finite())
        throw input_error("c_an: type A required");
    if (!(y.total == alpha)) throw input_error("c_an: partition does not sum to the root");
    int n = rs.rank();
    int value = sign_character(jordan_type_an(y, n));
    if (normalize) {
        RootPartition one({alpha}, rs.rank());
        value *= sign_character(jordan_type_an(one, n));
    }
    return value;
}

CrossCheckReport cross_check_an(int n) {
    if (n < 2 || n > 4) throw input_error("cross_check_an: rank 2..4");
    SemicanContext ctx("A" + std::to_string(n));
    const RootSystem& rs = ctx.roots();
    CrossCheckReport rep;
    for (const auto& alpha : rs.positive_roots()) {
        auto pres = canonical_presentation(rs, alpha);
        OrientationVector vec = orientation_component_vector(ctx, alpha, pres);
        auto partitions = rs.root_partitions(alpha);
        if (vec.by_label.size() != partitions.size()) {
            rep.ok = false;
            rep.mismatches.push_back("root " + alpha.str() +
                                     ": orientation labels miss some partitions");
            continue;
        }
        int g = 0;
        for (const auto& [label, sign] : vec.by_label) {
            int expect = c_an(rs, alpha, label);
            if (g == 0) {
                g = sign * expect;
                rep.global_sign = g;
            }
            if (sign != g * expect) {
                rep.ok = false;
                rep.mismatches.push_back("root " + alpha.str() + " label " + label.str() +
                                         ": orientation " + std::to_string(sign) +
                                         " vs sign-character " + std::to_string(g * expect));
            }
        }
    }
    return rep;
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::computed_orientation: return "computed-orientation";
        case Provenance::computed_an: return "computed-An";
        case Provenance::stored_paper: return "stored-paper";
        case Provenance::unknown: return "unknown";
    }
    return "?";
}

int CoefficientTable::stored_count() const {
    int c = 0;
    for (const auto& [k, e] : entries)
        if (e.prov == Provenance::stored_paper) ++c;
    return c;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("QLIE_DATA")) return env;
    return QLIE_SOURCE_DATA_DIR;
}

namespace {

struct ParsedTableFile {
    std::string case_name, type;
    DimVector root;
    std::vector<std::pair<std::string, long long>> entries; // key text, value
    bool checksum_ok = false;
};

ParsedTableFile parse_table_file(const std::string& path, int rank_hint) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open reference table " + path);
    ParsedTableFile out;
    std::string line, payload, checksum;
    std::string root_text;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# checksum:", 0) == 0) {
            checksum = line.substr(11);
            while (!checksum.empty() && checksum.front() == ' ') checksum.erase(0, 1);
            continue;
        }
        payload += line;
        payload += '\n';
        if (line[0] == '#') {
            auto grab = [&](const char* tag) -> std::optional<std::string> {
                std::string t = std::string("# ") + tag + ":";
                if (line.rfind(t, 0) != 0) return std::nullopt;
                std::string v = line.substr(t.size());
                while (!v.empty() && v.front() == ' ') v.erase(0, 1);
                return v;
            };
            if (auto v = grab("case")) out.case_name = *v;
            if (auto v = grab("type")) out.type = *v;
            if (auto v = grab("root")) root_text = *v;
            continue;
        }
        // entry: "<key> = <int> # <provenance>"
        auto eq = line.find('=');
        auto hash = line.find('#');
        if (eq == std::string::npos || hash == std::string::npos || hash < eq)
            throw input_error("malformed table line: " + line);
        auto trim = [](std::string s) {
            while (!s.empty() && s.front() == ' ') s.erase(0, 1);
            while (!s.empty() && s.back() == ' ') s.pop_back();
            return s;
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1, hash - eq - 1));
        std::string prov = trim(line.substr(hash + 1));
        if (prov != "stored-paper")
            throw input_error("reference tables may only carry stored-paper entries");
        try {
            out.entries.emplace_back(key, std::stoll(val));
        } catch (...) {
            throw input_error("malformed table value: " + line);
        }
    }
    if (out.type.empty() || root_text.empty())
        throw input_error("reference table missing type/root header: " + path);
    out.root = DimVector::parse(root_text, rank_hint);
    out.checksum_ok = (HallCache::record_checksum(payload) == checksum);
    return out;
}

} // namespace

CoefficientTable load_reference_table(const std::string& case_name,
                                      const std::string& data_dir, bool normalize) {
    std::string file;
    std::string type;
    if (case_name == "D4-thetamax") {
        file = "d4_thetamax.qtab";
        type = "D4";
    } else if (case_name == "D5-thetamax") {
        file = "d5_thetamax.qtab";
        type = "D5";
    } else {
        throw input_error("unknown reference table case '" + case_name + "'");
    }
    std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
    std::string path = dir + "/" + file;

    SemicanContext ctx(type);
    const RootSystem& rs = ctx.roots();
    ParsedTableFile parsed = parse_table_file(path, rs.rank());
    if (parsed.type != type)
        throw input_error("reference table type mismatch in " + path);

    CoefficientTable t;
    t.type = type;
    t.root = parsed.root;
    t.file_checksum_ok = parsed.checksum_ok;
    t.source_file = path;
    for (const auto& [key, value] : parsed.entries) {
        RootPartition label = RootPartition::parse(key, rs.rank());
        if (t.entries.count(label))
            throw input_error("duplicate stored key " + key + " in " + path);
        t.entries[label] = {value, Provenance::stored_paper};
    }

    // Orientation components for the decomposition root.
    auto pres = canonical_presentation(rs, t.root);
    OrientationVector vec = orientation_component_vector(ctx, t.root, pres);
    for (const auto& [label, sign] : vec.by_label) {
        auto it = t.entries.find(label);
        if (it != t.entries.end()) {
            // stored and orientation keys must be disjoint; keep the
            // stored value and let the validator flag the collision
            continue;
        }
        t.entries[label] = {sign, Provenance::computed_orientation};
    }

    // Everything else is an explicitly unknown slot.
    for (const auto& label : rs.root_partitions(t.root))
        if (!t.entries.count(label)) t.entries[label] = {0, Provenance::unknown};

    if (normalize) {
        RootPartition ref_label({t.root}, rs.rank());
        auto it = t.entries.find(ref_label);
        if (it != t.entries.end() && it->second.value < 0)
            for (auto& [k, e] : t.entries) e.value = -e.value;
    }
    return t;
}

ValidationReport validate_table(const CoefficientTable& t) {
    ValidationReport rep;
    auto add = [&](const std::string& check, bool passed, const std::string& detail) {
        rep.items.push_back({check, passed, detail});
        if (!passed) rep.ok = false;
    };

    add("file-checksum", t.file_checksum_ok,
        t.file_checksum_ok ? "" : "stored entries fail the file checksum (mutation?)");

    RootSystem rs(build_graph(t.type));
    bool keys_ok = true;
    std::string bad_key;
    for (const auto& [label, e] : t.entries) {
        DimVector sum(rs.rank());
        bool ok = true;
        for (const auto& part : label.parts) {
            if (!rs.is_positive_root(part)) ok = false;
            sum = sum + part;
        }
        if (!ok || !(sum == t.root)) {
            keys_ok = false;
            bad_key = label.str();
            break;
        }
    }
    add("keys-valid-partitions", keys_ok,
        keys_ok ? "" : "entry key is not a root partition of the root: " + bad_key);

    bool zero_ok = true;
    for (const auto& [label, e] : t.entries)
        if (e.prov != Provenance::unknown && e.value == 0) zero_ok = false;
    add("no-zero-coefficients", zero_ok, zero_ok ? "" : "stored or computed entry equals 0");

    auto universe = rs.root_partitions(t.root);
    add("universe-size", t.entries.size() == universe.size(),
        "entries " + std::to_string(t.entries.size()) + " vs partitions " +
            std::to_string(universe.size()));
    if (t.type == "D5" && t.root == rs.highest_root()) {
        add("d5-universe-55", universe.size() == 55,
            "partition universe has " + std::to_string(universe.size()) + " elements");
        add("d5-stored-count", t.stored_count() == 39,
            "stored entries: " + std::to_string(t.stored_count()));
    }
    if (t.type == "D4" && t.root == rs.highest_root())
        add("d4-stored-count", t.stored_count() == 7,
            "stored entries: " + std::to_string(t.stored_count()));

    // Disjointness: no orientation-derived label may carry a stored
    // value. The loader preserves stored entries on collision, so a
    // collision shows up as stored_count + orientation_count exceeding
    // the number of distinct keys with those provenances.
    SemicanContext ctx(t.type);
    bool disjoint = true;
    std::string collide;
    try {
        auto pres = canonical_presentation(ctx.roots(), t.root);
        OrientationVector vec = orientation_component_vector(ctx, t.root, pres);
        for (const auto& [label, sign] : vec.by_label) {
            auto it = t.entries.find(label);
            if (it != t.entries.end() && it->second.prov == Provenance::stored_paper) {
                disjoint = false;
                collide = label.str();
                break;
            }
        }
    } catch (const std::exception& e) {
        disjoint = false;
        collide = e.what();
    }
    add("stored-disjoint-from-orientation", disjoint,
        disjoint ? "" : "label also arises from an orientation: " + collide);

    bool powers = true;
    std::string bad_val;
    for (const auto& [label, e] : t.entries) {
        if (e.prov != Provenance::stored_paper) continue;
        long long v = e.value < 0 ? -e.value : e.value;
        while (v > 1 && v % 2 == 0) v /= 2;
        if (v != 1) {
            powers = false;
            bad_val = label.str() + " = " + std::to_string(e.value);
        }
    }
    add("stored-powers-of-two", powers, powers ? "" : bad_val);

    return rep;
}

CoefficientTable decompose_e_star(const SemicanContext& ctx, const DimVector& alpha,
                                  const std::string& data_dir, bool normalize) {
    const RootSystem& rs = ctx.roots();
    if (!rs.is_positive_root(alpha))
        throw input_error("decompose_e_star: not a positive root");
    const std::string& type = rs.graph().type_label;

    CoefficientTable t;
    t.type = type;
    t.root = alpha;

    if (type[0] == 'A') {
        for (const auto& label : rs.root_partitions(alpha))
            t.entries[label] = {c_an(rs, alpha, label, normalize), Provenance::computed_an};
        return t;
    }
    if ((type == "D4" || type == "D5") && alpha == rs.highest_root())
        return load_reference_table(type + "-thetamax", data_dir, normalize);

    auto pres = canonical_presentation(rs, alpha);
    OrientationVector vec = orientation_component_vector(ctx, alpha, pres);
    for (const auto& [label, sign] : vec.by_label)
        t.entries[label] = {sign, Provenance::computed_orientation};
    for (const auto& label : rs.root_partitions(alpha))
        if (!t.entries.count(label)) t.entries[label] = {0, Provenance::unknown};
    if (normalize) {
        RootPartition ref_label({alpha}, rs.rank());
        auto it = t.entries.find(ref_label);
        if (it != t.entries.end() && it->second.value < 0)
            for (auto& [k, e] : t.entries) e.value = -e.value;
    }
    return t;
}

std::vector<int> ad_jordan_fingerprint(const RootSystem& rs, const RootPartition& y) {
    FullLieAlgebra g(rs, Cocycle(canonical_orientation(rs.graph())));
    LieElement x;
    for (const auto& part : y.parts)
        x = x + LieElement::single(BasisSymbol::real_root(part));
    const auto& basis = g.basis();
    int dim = (int)basis.size();
    std::map<BasisSymbol, int> index;
    for (int i = 0; i < dim; ++i) index[basis[i]] = i;
    std::vector<std::vector<Rational>> ad(dim, std::vector<Rational>(dim, Rational(0)));
    for (int j = 0; j < dim; ++j) {
        LieElement img = g.bracket(x, LieElement::single(basis[j]));
        for (const auto& [sym, c] : img.terms()) ad[index.at(sym)][j] = c;
    }
    return nilpotent_jordan_type(ad);
}

} // namespace qlie

#include "qlie/hall.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qlie/rational.hpp"

namespace qlie {

std::string HallElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [l, c] : terms_) {
        long long a = c;
        if (first) {
            if (a < 0) { s += "-"; a = -a; }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        s += std::to_string(a) + "*[" + l.str() + "]";
        first = false;
    }
    return s;
}

namespace {

std::string plus_encode(const RootPartition& p) {
    std::string s;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) s += '+';
        s += p.parts[i].str();
    }
    return s.empty() ? "0" : s;
}

} // namespace

std::string HallCache::default_dir() {
    if (const char* env = std::getenv("QLIE_CACHE")) return env;
    if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/qlie";
    return ".qlie_cache";
}

std::string HallCache::record_checksum(const std::string& payload) {
    std::uint64_t h = Rng::hash_string(payload);
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

HallCache::HallCache(std::string dir, std::string type, std::string orientation)
    : dir_(std::move(dir)), type_(std::move(type)), orientation_(std::move(orientation)) {
    if (dir_.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ostringstream name;
    name << dir_ << "/hall_" << type_ << "_" << std::hex << Rng::hash_string(orientation_)
         << ".cache";
    path_ = name.str();
    load();
}

void HallCache::load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    bool header_ok = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.find("qlie-hall-cache v1") != std::string::npos) header_ok = true;
            continue;
        }
        if (!header_ok) { corruption_seen_ = true; return; }
        auto crc_pos = line.rfind(";crc=");
        if (crc_pos == std::string::npos) { corruption_seen_ = true; continue; }
        std::string payload = line.substr(0, crc_pos);
        std::string crc = line.substr(crc_pos + 5);
        if (record_checksum(payload) != crc) { corruption_seen_ = true; continue; }
        // payload = type;orientation;M;N;P;c0,c1,...
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : payload + ";") {
            if (ch == ';') { fields.push_back(cur); cur.clear(); }
            else cur += ch;
        }
        if (fields.size() != 6 || fields[0] != type_ || fields[1] != orientation_) {
            corruption_seen_ = true;
            continue;
        }
        std::vector<long long> coeffs;
        std::string num;
        bool bad = false;
        for (char ch : fields[5] + ",") {
            if (ch == ',') {
                if (num.empty()) { bad = true; break; }
                coeffs.push_back(std::stoll(num));
                num.clear();
            } else if (ch == '-' || (ch >= '0' && ch <= '9')) {
                num += ch;
            } else { bad = true; break; }
        }
        if (bad) { corruption_seen_ = true; continue; }
        mem_[fields[2] + ";" + fields[3] + ";" + fields[4]] = std::move(coeffs);
    }
}

std::optional<std::vector<long long>> HallCache::lookup(const std::string& key) const {
    auto it = mem_.find(key);
    if (it == mem_.end()) return std::nullopt;
    return it->second;
}

void HallCache::store(const std::string& key, const std::vector<long long>& coeffs) {
    mem_[key] = coeffs;
    if (dir_.empty()) return;
    bool fresh = !std::filesystem::exists(path_);
    std::ofstream out(path_, std::ios::app);
    if (!out) return; // cache is an accelerator only; never fail the computation
    if (fresh) out << "# qlie-hall-cache v1\n";
    std::string cs;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) cs += ',';
        cs += std::to_string(coeffs[i]);
    }
    std::string payload = type_ + ";" + orientation_ + ";" + key + ";" + cs;
    out << payload << ";crc=" << record_checksum(payload) << "\n";
}

HallAlgebra::HallAlgebra(const RootSystem& rs, Orientation om, std::string cache_dir,
                         HallLimits limits)
    : rs_(&rs), om_(std::move(om)), eps_(om_), limits_(limits) {
    if (!rs.finite()) throw input_error("HallAlgebra: finite type required");
    cache_ =
        std::make_unique<HallCache>(std::move(cache_dir), rs.graph().type_label, om_.str());
}

RepContext& HallAlgebra::ctx(int q) {
    auto it = ctx_by_q_.find(q);
    if (it == ctx_by_q_.end())
        it = ctx_by_q_.emplace(q, std::make_unique<RepContext>(*rs_, om_, q)).first;
    return *it->second;
}

const HallAlgebra::SweepTable& HallAlgebra::sweep(const RootPartition& M,
                                                 const DimVector& subdim, int q) {
    std::string key = M.str() + "|" + subdim.str() + "|" + std::to_string(q);
    auto it = sweeps_.find(key);
    if (it != sweeps_.end()) return it->second;

    RepContext& c = ctx(q);
    FqRep x = c.rep_for_label(M);
    const DynkinGraph& g = rs_->graph();

    // Vertices not touched by a nonzero arrow matrix decouple: their
    // subspace choice is free, contributing a Gaussian-binomial factor
    // and forced simple summands. This keeps thick multiples of a
    // single simple (huge Grassmannians) out of the enumeration.
    std::vector<bool> coupled(g.rank(), false);
    for (int h = 0; h < g.arrow_count(); ++h) {
        if (x.mats[h].is_zero()) continue;
        Arrow a = g.arrow(h);
        coupled[a.src] = coupled[a.dst] = true;
    }
    long long free_factor = 1;
    std::vector<DimVector> sub_extra, quot_extra;
    FqRep xr = x;
    DimVector reduced_sub = subdim;
    for (int i = 0; i < g.rank(); ++i) {
        if (coupled[i] || x.dim[i] == 0) continue;
        free_factor *= gaussian_binomial(x.dim[i], subdim[i], q);
        for (int t = 0; t < subdim[i]; ++t) sub_extra.push_back(g.simple_root(i));
        for (int t = 0; t < x.dim[i] - subdim[i]; ++t) quot_extra.push_back(g.simple_root(i));
        xr.dim[i] = 0;
        reduced_sub[i] = 0;
    }
    for (int h = 0; h < g.arrow_count(); ++h) {
        Arrow a = g.arrow(h);
        xr.mats[h] = FMatrix(c.field(), xr.dim[a.dst], xr.dim[a.src]);
        if (!x.mats[h].is_zero()) xr.mats[h] = x.mats[h];
    }

    SweepTable table;
    for (const auto& W : graded_subspaces(c.field(), xr.dim, reduced_sub)) {
        auto sq = try_sub_quotient(xr, W);
        if (!sq) continue;
        RootPartition ps = c.identify(sq->first);
        RootPartition pq = c.identify(sq->second);
        std::vector<DimVector> sp = ps.parts, qp = pq.parts;
        sp.insert(sp.end(), sub_extra.begin(), sub_extra.end());
        qp.insert(qp.end(), quot_extra.begin(), quot_extra.end());
        table[{RootPartition(std::move(qp), rs_->rank()),
               RootPartition(std::move(sp), rs_->rank())}] += free_factor;
    }
    return sweeps_.emplace(std::move(key), std::move(table)).first->second;
}

long long HallAlgebra::hall_number(const RootPartition& M, const RootPartition& N,
                                   const RootPartition& P, int q) {
    if (!(N.total + P.total == M.total))
        throw input_error("hall_number: dim N + dim P != dim M");
    if (M.total.height() > limits_.max_total_dim)
        throw resource_error("hall_number: dimension bound exceeded");

    const SweepTable& table = sweep(M, P.total, q);
    auto it = table.find({N, P});
    return it == table.end() ? 0 : it->second;
}

HallPolynomial HallAlgebra::hall_polynomial(const RootPartition& M, const RootPartition& N,
                                            const RootPartition& P) {
    if (!(N.total + P.total == M.total))
        throw input_error("hall_polynomial: dim N + dim P != dim M");
    std::string key = plus_encode(M) + ";" + plus_encode(N) + ";" + plus_encode(P);
    HallPolynomial poly;
    poly.M = M;
    poly.N = N;
    poly.P = P;
    if (auto hit = cache_->lookup(key)) {
        poly.coeffs = *hit;
        return poly;
    }

    // Degree bound: the subspaces live in a product of Grassmannians of
    // dimension D = sum_i a_i (d_i - a_i).
    int deg = 0;
    for (int i = 0; i < M.total.size(); ++i) deg += P.total[i] * (M.total[i] - P.total[i]);

    std::vector<int> qs;
    for (int q = 2; (int)qs.size() < deg + 2; q = Gf::next_prime_power(q)) qs.push_back(q);
    std::vector<long long> counts;
    for (int i = 0; i + 1 < (int)qs.size(); ++i) counts.push_back(hall_number(M, N, P, qs[i]));

    // Lagrange interpolation through the first deg+1 samples.
    int npts = deg + 1;
    std::vector<Rational> coeffs(npts, Rational(0));
    for (int i = 0; i < npts; ++i) {
        std::vector<Rational> basis = {Rational(1)};
        Rational denom(1);
        for (int j = 0; j < npts; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] += basis[t];
                next[t] -= basis[t] * Rational(qs[j]);
            }
            basis = std::move(next);
            denom *= Rational(qs[i] - qs[j]);
        }
        Rational w = Rational(counts[i]) / denom;
        for (size_t t = 0; t < basis.size(); ++t) coeffs[t] += basis[t] * w;
    }
    poly.coeffs.clear();
    for (const auto& cq : coeffs) {
        if (!cq.is_integer()) throw internal_error("hall_polynomial: non-integer coefficient");
        poly.coeffs.push_back(cq.as_integer());
    }
    while (!poly.coeffs.empty() && poly.coeffs.back() == 0) poly.coeffs.pop_back();

    // One control point beyond the interpolation set, plus the samples.
    int qc = qs.back();
    if (poly.eval(qc) != hall_number(M, N, P, qc))
        throw internal_error("hall_polynomial: control point mismatch (degree bound violated)");
    for (int i = 0; i < npts; ++i)
        if (poly.eval(qs[i]) != counts[i])
            throw internal_error("hall_polynomial: interpolation failed to reproduce a sample");

    cache_->store(key, poly.coeffs);
    return poly;
}

HallElement HallAlgebra::product(const HallElement& f, const HallElement& g) {
    HallElement out;
    for (const auto& [ln, cn] : f.terms()) {
        for (const auto& [lp, cp] : g.terms()) {
            DimVector d = ln.total + lp.total;
            if (d.height() > limits_.max_total_dim)
                throw resource_error("product: dimension bound exceeded");
            std::string key = plus_encode(ln) + "|" + plus_encode(lp);
            auto it = pair_products_.find(key);
            if (it == pair_products_.end()) {
                HallElement pe;
                for (const auto& M : rs_->root_partitions(d)) {
                    long long c = hall_polynomial(M, ln, lp).at_one();
                    if (c != 0) pe.add_term(M, c);
                }
                it = pair_products_.emplace(std::move(key), std::move(pe)).first;
            }
            out = out + it->second.scaled(cn * cp);
        }
    }
    return out;
}

HallElement HallAlgebra::e_alpha(const DimVector& root) const {
    if (!rs_->is_positive_root(root))
        throw input_error("e_alpha: " + root.str() + " is not a positive root");
    return HallElement::single(RootPartition({root}, rs_->rank()));
}

HallElement HallAlgebra::e_simple(int vertex) const {
    return e_alpha(rs_->graph().simple_root(vertex));
}

HallAlgebra::BracketCheck HallAlgebra::verify_bracket_E(const DimVector& a,
                                                        const DimVector& b) {
    BracketCheck r;
    HallElement lhs = product(e_alpha(a), e_alpha(b)) - product(e_alpha(b), e_alpha(a));
    HallElement rhs;
    DimVector sum = a + b;
    if (rs_->is_positive_root(sum)) rhs = e_alpha(sum).scaled(eps_.epsilon(a, b));
    if (!(lhs == rhs)) {
        r.ok = false;
        r.detail = "[" + a.str() + "," + b.str() + "]: got " + lhs.str() + ", expected " +
                   rhs.str();
    }
    return r;
}

HallElement HallAlgebra::iterated_bracket_value(const std::vector<int>& presentation) {
    if (presentation.empty()) throw input_error("iterated_bracket_value: empty presentation");
    DimVector partial = rs_->graph().zero_vector();
    for (int k : presentation) {
        partial = partial + rs_->graph().simple_root(k);
        if (!rs_->is_positive_root(partial))
            throw input_error("iterated_bracket_value: partial sum " + partial.str() +
                              " is not a root");
    }
    HallElement acc = e_simple(presentation[0]);
    for (size_t t = 1; t < presentation.size(); ++t) {
        HallElement s = e_simple(presentation[t]);
        acc = product(acc, s) - product(s, acc);
    }
    int sign = 1;
    for (size_t i = 0; i < presentation.size(); ++i)
        for (size_t j = i + 1; j < presentation.size(); ++j)
            sign *= eps_.epsilon(rs_->graph().simple_root(presentation[i]),
                                 rs_->graph().simple_root(presentation[j]));
    if (!(acc == e_alpha(partial).scaled(sign)))
        throw internal_error("iterated_bracket_value: commutator disagrees with the epsilon "
                             "product");
    return acc;
}

bool HallAlgebra::serre_in_hall(int i, int j) {
    if (i == j) throw input_error("serre_in_hall: vertices must differ");
    int n = 1 - rs_->graph().simple_pairing(i, j);
    HallElement ei = e_simple(i), ej = e_simple(j);
    HallElement total;
    for (int p = 0; p <= n; ++p) {
        long long binom = 1;
        for (int t = 0; t < p; ++t) binom = binom * (n - t) / (t + 1);
        HallElement term = ej;
        for (int t = 0; t < p; ++t) term = product(ei, term);
        for (int t = 0; t < n - p; ++t) term = product(term, ei);
        total = total + term.scaled((p % 2 ? -1 : 1) * binom);
    }
    return total.is_zero();
}

std::vector<int> agreeing_arrows(const Orientation& om_ref, const Orientation& om) {
    std::vector<int> out;
    for (int e = 0; e < om_ref.graph().edge_count(); ++e)
        if (om_ref.arrow_for_edge(e) == om.arrow_for_edge(e))
            out.push_back(om_ref.arrow_for_edge(e));
    return out;
}

GenericLabeler::GenericLabeler(const RootSystem& rs, Orientation om_ref)
    : rs_(&rs), om_ref_(std::move(om_ref)) {
    for (int q : {101, 103}) ctxs_.push_back(std::make_unique<RepContext>(rs, om_ref_, q));
}

RootPartition GenericLabeler::label(const DimVector& d,
                                    const std::vector<int>& active_arrows) const {
    // The generic label is the one whose hom fingerprint is pointwise
    // minimal among the samples (dense orbits minimize hom dimensions
    // by semicontinuity).
    std::string act;
    for (int h : active_arrows) act += std::to_string(h) + "_";
    std::map<RootPartition, std::vector<int>> seen; // label -> fingerprint
    for (int round = 0; round < 4; ++round) {
        for (const auto& ctx : ctxs_) {
            Rng rng(Rng::hash_string("generic|" + rs_->graph().type_label + "|" +
                                     om_ref_.str() + "|" + d.str() + "|" + act + "|" +
                                     std::to_string(ctx->field().q()) + "|round" +
                                     std::to_string(round)));
            for (int s = 0; s < 16; ++s) {
                FqRep x = ctx->random_rep(d, active_arrows, rng);
                RootPartition label = ctx->identify(x);
                if (!seen.count(label)) seen.emplace(label, ctx->fingerprint_of_label(label));
            }
        }
        for (const auto& [label, fp] : seen) {
            bool dominant = true;
            for (const auto& [other, ofp] : seen) {
                for (size_t t = 0; t < fp.size() && dominant; ++t)
                    if (fp[t] > ofp[t]) dominant = false;
                if (!dominant) break;
            }
            if (dominant) return label;
        }
    }
    throw internal_error("generic_label: sampling inconclusive for " + d.str());
}

RootPartition GenericLabeler::label_for_orientation(const DimVector& d,
                                                    const Orientation& om) const {
    return label(d, agreeing_arrows(om_ref_, om));
}

RootPartition generic_label(const RootSystem& rs, const Orientation& om_ref,
                            const DimVector& d, const std::vector<int>& active_arrows) {
    return GenericLabeler(rs, om_ref).label(d, active_arrows);
}

} // namespace qlie

#include "mwb/matroid_io.hpp"

#include <stdexcept>

namespace mwb {

namespace {

Json linear_json(const FieldSpec& fs, int rows, const std::vector<std::vector<FieldElement>>& cols) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "linear";
    j["p"] = fs.p();
    j["k"] = fs.k();
    j["poly"] = fs.modulus();
    j["rows"] = rows;
    Json matrix = Json::array();
    for (int r = 0; r < rows; ++r)
        for (const auto& c : cols) matrix.push_back(c[r]);
    j["matrix"] = std::move(matrix);
    return j;
}

}  // namespace

Json matroid_to_json(const Matroid& M) {
    if (auto lv = M.linear_view()) return linear_json(*lv->fs, lv->rows, *lv->cols);

    if (auto ds = dynamic_cast<const DirectSum*>(&M)) {
        auto la = ds->left()->linear_view();
        auto lb = ds->right()->linear_view();
        if (la && lb && *la->fs == *lb->fs) {
            int rows = la->rows + lb->rows;
            std::vector<std::vector<FieldElement>> cols;
            for (const auto& c : *la->cols) {
                auto v = c;
                v.resize(rows, 0);
                cols.push_back(std::move(v));
            }
            for (const auto& c : *lb->cols) {
                std::vector<FieldElement> v(la->rows, 0);
                v.insert(v.end(), c.begin(), c.end());
                cols.push_back(std::move(v));
            }
            return linear_json(*la->fs, rows, cols);
        }
    }

    auto bm = dynamic_cast<const BasesMatroid*>(&M);
    std::shared_ptr<const BasesMatroid> owned;
    if (!bm) {
        owned = to_bases(M);
        bm = owned.get();
    }
    Json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "bases";
    j["n"] = bm->size();
    j["rank"] = bm->basis_size();
    Json bases = Json::array();
    for (const auto& b : bm->bases()) bases.push_back(b.elements());
    j["bases"] = std::move(bases);
    return j;
}

MatroidPtr matroid_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("matroid file: expected a JSON object");
    std::string kind = j.value("kind", "");
    if (kind == "linear") {
        int p = j.at("p").get<int>();
        int k = j.at("k").get<int>();
        auto fs = FieldSpec::make(p, k);
        auto poly = j.at("poly").get<std::vector<int>>();
        if (poly != fs.modulus())
            throw std::invalid_argument("matroid file: modulus is not the canonical minimum for GF(" +
                                        std::to_string(fs.q()) + ")");
        int rows = j.at("rows").get<int>();
        auto flat = j.at("matrix").get<std::vector<int>>();
        if (rows <= 0 || flat.size() % rows != 0)
            throw std::invalid_argument("matroid file: matrix size is not a multiple of rows");
        int n = static_cast<int>(flat.size()) / rows;
        std::vector<std::vector<FieldElement>> cols(n, std::vector<FieldElement>(rows));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < n; ++c) cols[c][r] = flat[r * n + c];
        return std::make_shared<LinearMatroid>(std::move(fs), rows, std::move(cols));
    }
    if (kind == "bases") {
        int n = j.at("n").get<int>();
        int rank = j.at("rank").get<int>();
        std::vector<IndexSet> bases;
        for (const auto& b : j.at("bases")) bases.push_back(IndexSet::of(b.get<std::vector<int>>()));
        auto m = std::make_shared<BasesMatroid>(n, std::move(bases));
        if (m->basis_size() != rank) throw std::invalid_argument("matroid file: rank field mismatch");
        return m;
    }
    throw std::invalid_argument("matroid file: unknown kind '" + kind + "'");
}

std::shared_ptr<const BasesMatroid> to_bases(const Matroid& M, int max_elements) {
    int n = M.size();
    if (n > max_elements) throw std::invalid_argument("to_bases: ground set too large to enumerate");
    int r = M.full_rank();
    std::vector<IndexSet> bases;
    std::vector<int> comb(r);
    auto rec = [&](auto&& rec, int pos, int start) -> void {
        if (pos == r) {
            IndexSet s = IndexSet::of(comb);
            if (M.rank(s) == r) bases.push_back(s);
            return;
        }
        for (int e = start; e < n; ++e) {
            comb[pos] = e;
            rec(rec, pos + 1, e + 1);
        }
    };
    if (r == 0)
        bases.push_back(IndexSet{});
    else
        rec(rec, 0, 0);
    // Exchange is inherited from M; skip the quadratic re-check.
    return std::make_shared<BasesMatroid>(n, std::move(bases), 0);
}

Json index_set_to_json(const IndexSet& s) { return Json(s.elements()); }

IndexSet index_set_from_json(const Json& j) {
    return IndexSet::of(j.get<std::vector<int>>());
}

Json rat_to_json(const Rat& r) {
    Json j;
    j["num"] = r.numerator();
    j["den"] = r.denominator();
    return j;
}

Json restriction_witness_to_json(const RestrictionWitness& w) {
    Json j;
    Json map = Json::array();
    for (size_t i = 0; i < w.map.size(); ++i) map.push_back({static_cast<int>(i), w.map[i]});
    j["map"] = std::move(map);
    return j;
}

RestrictionWitness restriction_witness_from_json(const Json& j) {
    RestrictionWitness w;
    const auto& map = j.at("map");
    w.map.assign(map.size(), -1);
    for (const auto& pair : map) {
        int t = pair.at(0).get<int>();
        if (t < 0 || t >= static_cast<int>(w.map.size()))
            throw std::invalid_argument("witness: malformed map");
        w.map[t] = pair.at(1).get<int>();
    }
    return w;
}

Json minor_witness_to_json(const MinorWitness& w) {
    Json j;
    j["contract"] = index_set_to_json(w.contract);
    j["delete"] = index_set_to_json(w.del);
    j["map"] = restriction_witness_to_json(w.inner)["map"];
    return j;
}

MinorWitness minor_witness_from_json(const Json& j) {
    MinorWitness w;
    w.contract = index_set_from_json(j.at("contract"));
    w.del = index_set_from_json(j.at("delete"));
    w.inner = restriction_witness_from_json(j);
    return w;
}

Json stack_cert_to_json(const StackCertificate& c) {
    Json j;
    j["q"] = c.q;
    j["t"] = c.t;
    Json layers = Json::array();
    for (const auto& f : c.layers) layers.push_back(f.elements());
    j["layers"] = std::move(layers);
    if (c.incomplete_scan) j["incomplete_scan"] = true;
    return j;
}

StackCertificate stack_cert_from_json(const Json& j) {
    StackCertificate c;
    c.q = j.at("q").get<int>();
    c.t = j.at("t").get<int>();
    for (const auto& f : j.at("layers")) c.layers.push_back(IndexSet::of(f.get<std::vector<int>>()));
    c.incomplete_scan = j.value("incomplete_scan", false);
    return c;
}

Json stack_verdict_to_json(const StackVerdict& v) {
    Json j;
    j["valid"] = v.valid;
    j["inconclusive"] = v.inconclusive;
    if (!v.failure.empty()) {
        j["failure"] = v.failure;
        if (v.failing_layer > 0) j["failing_layer"] = v.failing_layer;
    }
    j["spanning_convention"] = v.convention;
    return j;
}

Json roundness_to_json(const RoundnessWitness& w) {
    Json j;
    j["verdict"] = w.weakly_round ? "weakly-round" : "not-weakly-round";
    if (!w.weakly_round) {
        j["A"] = index_set_to_json(w.A);
        j["B"] = index_set_to_json(w.B);
    }
    return j;
}

Json density_report_to_json(const DensityReport& r) {
    Json j;
    j["epsilon"] = r.epsilon;
    j["rank"] = r.rank;
    j["ell"] = r.ell;
    j["kung_bound"] = r.kung_bound;
    if (r.ratio_q) {
        j["ratio_q"] = *r.ratio_q;
        j["ratio"] = rat_to_json(*r.ratio);
    }
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) {
        Json jv;
        jv["name"] = v.name;
        jv["relation"] = v.relation;
        jv["lhs"] = rat_to_json(v.lhs);
        jv["rhs"] = rat_to_json(v.rhs);
        jv["holds"] = v.holds;
        verdicts.push_back(std::move(jv));
    }
    j["verdicts"] = std::move(verdicts);
    if (r.membership_verified) j["membership_verified"] = *r.membership_verified;
    return j;
}

Json kungrel_to_json(const KungrelReport& r) {
    Json j;
    j["epsilon"] = r.eps_m;
    j["epsilon_contract"] = r.eps_contract;
    j["contract_rank"] = r.contract_rank;
    j["lhs"] = rat_to_json(r.lhs);
    j["rhs"] = rat_to_json(r.rhs);
    j["holds"] = r.holds;
    j["flat_count"] = r.flat_count;
    j["identity_holds"] = r.identity_holds;
    return j;
}

Json projection_check_to_json(const ProjectionCheck& c) {
    Json j;
    j["hypothesis_ok"] = c.hypothesis_ok;
    if (!c.hypothesis_ok) {
        j["error"] = c.hypothesis_error;
        return j;
    }
    j["k"] = c.k;
    j["rank_after"] = c.r_after;
    j["epsilon_after"] = c.eps_after;
    j["bound"] = rat_to_json(c.bound);
    j["holds"] = c.holds;
    return j;
}

}  // namespace mwb

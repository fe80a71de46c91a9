#include "mwb/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "mwb/bounds.hpp"
#include "mwb/geometry.hpp"
#include "mwb/matroid.hpp"
#include "mwb/matroid_io.hpp"
#include "mwb/search.hpp"
#include "mwb/structure.hpp"
#include "mwb/verify_suite.hpp"

namespace mwb {

namespace {

constexpr const char* kToolVersion = "0.1.0";

// Exit codes: 0 ok/found, 1 not-found/violated, 2 input error, 3 inconclusive.
enum ExitCode { kOk = 0, kNotFound = 1, kInputError = 2, kInconclusive = 3 };

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Session {
    uint64_t seed = kDefaultSeed;
    uint64_t budget = 10000000;
    std::vector<std::string> command;  // echoed args, --threads stripped
    Json inputs = Json::object();
    std::vector<std::string> notes;

    Json report(Json result) const {
        Json r;
        r["format_version"] = kFormatVersion;
        r["tool"] = "mwb";
        r["version"] = kToolVersion;
        r["command"] = command;
        r["seed"] = seed;
        r["inputs"] = inputs;
        if (!notes.empty()) r["notes"] = notes;
        r["result"] = std::move(result);
        // Timing is reported in deterministic work units, never wall clock:
        // reports must be byte-identical across identical runs.
        Json timing;
        timing["model"] = "deterministic-work-counters";
        timing["rank_queries"] = rank_query_count();
        timing["search_nodes"] = search_node_count();
        r["timing"] = timing;
        return r;
    }
};

int emit(std::ostream& out, const Session& s, Json result, int code) {
    out << s.report(std::move(result)).dump(2) << "\n";
    return code;
}

int emit_error(std::ostream& out, const Session& s, const std::string& type,
               const std::string& reason) {
    Json e;
    e["error"]["type"] = type;
    e["error"]["reason"] = reason;
    return emit(out, s, std::move(e), kInputError);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write file: " + path);
    f << bytes;
}

bool is_inline_tag(const std::string& s) {
    return s.rfind("pg:", 0) == 0 || s.rfind("ag:", 0) == 0 || s.rfind("uniform:", 0) == 0;
}

MatroidPtr matroid_from_tag(const std::string& tag) {
    if (tag.rfind("uniform:", 0) == 0) {
        auto a = tag.find(':'), b = tag.find(':', a + 1);
        if (b == std::string::npos) throw std::invalid_argument("expected uniform:rank:size");
        return uniform_matroid(std::stoi(tag.substr(a + 1, b - a - 1)),
                               std::stoi(tag.substr(b + 1)));
    }
    return make_geometry(GeometryTag::parse(tag));
}

// A matroid argument is either a file path or an inline tag like pg:3:2.
MatroidPtr load_matroid(Session& s, const std::string& arg) {
    if (is_inline_tag(arg)) {
        s.inputs[arg] = fnv1a_hex(arg);
        return matroid_from_tag(arg);
    }
    std::string bytes = read_file(arg);
    s.inputs[arg] = fnv1a_hex(bytes);
    auto m = matroid_from_json(Json::parse(bytes));
    if (auto bm = std::dynamic_pointer_cast<const BasesMatroid>(m))
        if (!bm->exchange_fully_validated())
            s.notes.push_back(arg + ": exchange axiom sampled, not exhaustively verified (n > 12)");
    return m;
}

Json load_json_file(Session& s, const std::string& path) {
    std::string bytes = read_file(path);
    s.inputs[path] = fnv1a_hex(bytes);
    return Json::parse(bytes);
}

IndexSet parse_index_list(const std::string& text) {
    IndexSet out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) out.add(std::stoi(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    return out;
}

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(text));
    return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Found: return "found";
        case Outcome::None: return "none";
        default: return "inconclusive";
    }
}

int outcome_code(Outcome o) {
    switch (o) {
        case Outcome::Found: return kOk;
        case Outcome::None: return kNotFound;
        default: return kInconclusive;
    }
}

// Emitted witnesses re-verify through their serialized form: serialize,
// reparse, run the checker on the artifact.
bool reverify_restriction(const Matroid& host, const Matroid& target, const RestrictionWitness& w) {
    auto round = restriction_witness_from_json(restriction_witness_to_json(w));
    return verify_restriction(host, target, round);
}

bool reverify_minor(const Matroid& host, const Matroid& target, const MinorWitness& w) {
    auto round = minor_witness_from_json(minor_witness_to_json(w));
    return verify_minor_witness(host, target, round);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    reset_rank_query_count();
    reset_search_node_count();

    Session ses;
    ses.command.reserve(args.size());
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--threads") {  // execution advice only, not part of the logical command
            ++i;
            continue;
        }
        if (args[i].rfind("--threads=", 0) == 0) continue;
        ses.command.push_back(args[i]);
    }

    CLI::App app{"matroid workbench: exact matroid computations, density bounds, certificates"};
    app.name("mwb");
    int threads = 1;
    app.add_option("--seed", ses.seed, "seed for randomized suites");
    app.add_option("--threads", threads, "worker threads (results are identical for any value)");
    app.add_option("--budget", ses.budget, "search node budget (0 = unlimited)");
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a matroid file");
    gen->fallthrough();
    gen->require_subcommand(1);
    int g_rank = 0, g_q = 0, g_size = 0;
    std::string g_out, g_lhs, g_rhs;
    auto* gen_pg = gen->add_subcommand("pg", "projective geometry pg(rank, q)");
    gen_pg->add_option("--rank", g_rank)->required();
    gen_pg->add_option("--q", g_q)->required();
    gen_pg->add_option("-o,--out", g_out, "write the matroid file here");
    auto* gen_ag = gen->add_subcommand("ag", "affine geometry ag(rank, q)");
    gen_ag->add_option("--rank", g_rank)->required();
    gen_ag->add_option("--q", g_q)->required();
    gen_ag->add_option("-o,--out", g_out);
    auto* gen_uniform = gen->add_subcommand("uniform", "uniform matroid U_{rank,size}");
    gen_uniform->add_option("--rank", g_rank)->required();
    gen_uniform->add_option("--size", g_size)->required();
    gen_uniform->add_option("-o,--out", g_out);
    auto* gen_sum = gen->add_subcommand("sum", "direct sum of two matroids");
    gen_sum->add_option("--lhs", g_lhs, "matroid file or inline tag like pg:3:2")->required();
    gen_sum->add_option("--rhs", g_rhs, "matroid file or inline tag like pg:3:2")->required();
    gen_sum->add_option("-o,--out", g_out);

    // ---- density ------------------------------------------------------
    auto* density = app.add_subcommand("density", "Kung bound density report");
    density->fallthrough();
    int d_ell = 0, d_q = 0;
    bool d_membership = false;
    std::string d_file;
    density->add_option("--ell", d_ell, "line-length parameter")->required();
    density->add_option("--q", d_q, "base for the density ratio (default: field order)");
    density->add_flag("--check-membership", d_membership, "verify absence of the long-line minor");
    density->add_option("file", d_file)->required();

    // ---- find ---------------------------------------------------------
    auto* find = app.add_subcommand("find", "search for restrictions and minors");
    find->fallthrough();
    find->require_subcommand(1);
    std::string f_target, f_file, f_out;
    int f_m = 0, f_rank = 0, f_q = 0;
    auto* find_r = find->add_subcommand("restriction", "target as a restriction");
    find_r->add_option("--target", f_target, "matroid file or inline tag like pg:3:2")->required();
    find_r->add_option("file", f_file)->required();
    find_r->add_option("-o,--out", f_out, "write the witness here");
    auto* find_u2 = find->add_subcommand("u2-minor", "long-line minor");
    find_u2->add_option("--m", f_m, "line length")->required();
    find_u2->add_option("file", f_file)->required();
    find_u2->add_option("-o,--out", f_out);
    auto* find_pg = find->add_subcommand("pg-minor", "projective geometry minor");
    find_pg->add_option("--rank", f_rank)->required();
    find_pg->add_option("--q", f_q)->required();
    find_pg->add_option("file", f_file)->required();
    find_pg->add_option("-o,--out", f_out);

    // ---- representable --------------------------------------------------
    auto* rep = app.add_subcommand("representable", "GF(q)-representability by embedding");
    rep->fallthrough();
    int r_q = 0, r_cap = 4;
    std::string r_file;
    rep->add_option("--q", r_q)->required();
    rep->add_option("--cap", r_cap, "rank cap t (desk scale, <= 4)");
    rep->add_option("file", r_file)->required();

    // ---- stack ----------------------------------------------------------
    auto* stack = app.add_subcommand("stack", "stack certificates");
    stack->fallthrough();
    stack->require_subcommand(1);
    int s_q = 0, s_t = 0;
    std::string s_file, s_cert, s_out;
    auto* stack_build = stack->add_subcommand("build", "stack construction (greedy by default)");
    bool s_exhaustive = false;
    stack_build->add_option("--q", s_q)->required();
    stack_build->add_option("--t", s_t)->required();
    stack_build->add_flag("--exhaustive", s_exhaustive,
                          "exact maximum height by exhaustive layer search (exponential)");
    stack_build->add_option("file", s_file)->required();
    stack_build->add_option("-o,--out", s_out, "write the certificate here");
    auto* stack_verify = stack->add_subcommand("verify", "check a stack certificate");
    stack_verify->add_option("--cert", s_cert)->required();
    stack_verify->add_option("file", s_file)->required();

    // ---- weakround -------------------------------------------------------
    auto* weakround = app.add_subcommand("weakround", "weak roundness decision");
    weakround->fallthrough();
    std::string w_file;
    weakround->add_option("file", w_file)->required();

    // ---- probe -----------------------------------------------------------
    auto* probe = app.add_subcommand("probe", "stack / majority-flat / lifting pipeline");
    probe->fallthrough();
    int p_q = 0, p_t = 0, p_n = 3;
    std::string p_beta = "1/4", p_file;
    probe->add_option("--q", p_q)->required();
    probe->add_option("--t", p_t)->required();
    probe->add_option("--beta", p_beta, "density coefficient, e.g. 1/4");
    probe->add_option("--n", p_n, "affine geometry target rank");
    probe->add_option("file", p_file)->required();

    // ---- verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "re-check serialized artifacts and instances");
    verify->fallthrough();
    verify->require_subcommand(1);
    std::string v_file, v_witness, v_target, v_cert, v_contract, v_flat;
    int v_ell = 0, v_q = 0, v_m = 0;
    auto* verify_kungrel = verify->add_subcommand("kungrel", "contraction density inequality");
    verify_kungrel->add_option("--ell", v_ell)->required();
    verify_kungrel->add_option("--contract", v_contract, "comma-separated indices");
    verify_kungrel->add_option("file", v_file)->required();
    auto* verify_projection = verify->add_subcommand("projection", "projection density instance");
    verify_projection->add_option("--q", v_q)->required();
    verify_projection->add_option("--flat", v_flat, "comma-separated indices");
    verify_projection->add_option("--witness", v_witness, "spanning geometry witness file")->required();
    verify_projection->add_option("file", v_file)->required();
    auto* verify_restr = verify->add_subcommand("restriction", "restriction witness");
    verify_restr->add_option("--target", v_target)->required();
    verify_restr->add_option("--witness", v_witness)->required();
    verify_restr->add_option("file", v_file)->required();
    auto* verify_u2 = verify->add_subcommand("u2-minor", "long-line minor witness");
    verify_u2->add_option("--m", v_m)->required();
    verify_u2->add_option("--witness", v_witness)->required();
    verify_u2->add_option("file", v_file)->required();

    // ---- verify-suite -------------------------------------------------------
    auto* suite = app.add_subcommand("verify-suite", "run the acceptance property suites");
    suite->fallthrough();
    std::vector<int> suite_criteria;
    suite->add_option("--criterion", suite_criteria, "run only these criteria ids");

    try {
        std::vector<std::string> raw = args;
        std::reverse(raw.begin(), raw.end());
        app.parse(raw);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        Json j;
        j["error"]["type"] = "usage";
        j["error"]["reason"] = e.what();
        out << ses.report(std::move(j)).dump(2) << "\n";
        err << "usage error: " << e.what() << "\n";
        return kInputError;
    }

    SearchOptions opts;
    opts.node_budget = ses.budget;

    try {
        // ---- gen ----
        if (gen->parsed()) {
            MatroidPtr m;
            if (gen_pg->parsed()) m = pg(g_rank, g_q);
            if (gen_ag->parsed()) m = ag(g_rank, g_q);
            if (gen_uniform->parsed()) m = uniform_matroid(g_rank, g_size);
            if (gen_sum->parsed())
                m = direct_sum(load_matroid(ses, g_lhs), load_matroid(ses, g_rhs));
            Json file = matroid_to_json(*m);
            // Emitted files re-verify: parse back and compare rank behaviour
            // on the ground set.
            auto round = matroid_from_json(file);
            if (round->size() != m->size() || round->full_rank() != m->full_rank())
                throw std::logic_error("gen: serialized matroid failed re-verification");
            if (!g_out.empty()) write_file(g_out, file.dump(2) + "\n");
            Json res;
            res["matroid"] = std::move(file);
            res["elements"] = m->size();
            res["rank"] = m->full_rank();
            return emit(out, ses, std::move(res), kOk);
        }

        // ---- density ----
        if (density->parsed()) {
            auto m = load_matroid(ses, d_file);
            std::optional<int> ratio_q;
            if (d_q > 0)
                ratio_q = d_q;
            else if (auto lv = m->linear_view())
                ratio_q = lv->fs->q();
            auto repRes = kung_check(*m, d_ell, ratio_q, d_membership);
            Json res = density_report_to_json(repRes);
            return emit(out, ses, std::move(res), repRes.all_hold() ? kOk : kNotFound);
        }

        // ---- find ----
        if (find->parsed()) {
            auto host = load_matroid(ses, f_file);
            Json res;
            if (find_r->parsed()) {
                auto target = load_matroid(ses, f_target);
                auto sr = find_restriction(*host, *target, opts);
                res["outcome"] = outcome_name(sr.outcome);
                res["nodes"] = sr.nodes;
                if (sr.witness) {
                    Json w = restriction_witness_to_json(*sr.witness);
                    if (!reverify_restriction(*host, *target, *sr.witness))
                        throw std::logic_error("witness failed re-verification");
                    res["reverified"] = true;
                    if (!f_out.empty()) write_file(f_out, w.dump(2) + "\n");
                    res["witness"] = std::move(w);
                }
                return emit(out, ses, std::move(res), outcome_code(sr.outcome));
            }
            if (find_u2->parsed()) {
                auto sr = has_u2_minor(*host, f_m, opts);
                res["outcome"] = outcome_name(sr.outcome);
                res["nodes"] = sr.nodes;
                if (sr.witness) {
                    auto target = uniform_matroid(2, f_m);
                    Json w = minor_witness_to_json(*sr.witness);
                    if (!reverify_minor(*host, *target, *sr.witness))
                        throw std::logic_error("witness failed re-verification");
                    res["reverified"] = true;
                    if (!f_out.empty()) write_file(f_out, w.dump(2) + "\n");
                    res["witness"] = std::move(w);
                }
                return emit(out, ses, std::move(res), outcome_code(sr.outcome));
            }
            // pg-minor
            auto sr = find_pg_minor(*host, f_rank, f_q, opts);
            res["outcome"] = outcome_name(sr.outcome);
            res["nodes"] = sr.nodes;
            if (sr.witness) {
                auto target = pg(f_rank, f_q);
                Json w = minor_witness_to_json(*sr.witness);
                if (!reverify_minor(*host, *target, *sr.witness))
                    throw std::logic_error("witness failed re-verification");
                res["reverified"] = true;
                if (!f_out.empty()) write_file(f_out, w.dump(2) + "\n");
                res["witness"] = std::move(w);
            }
            return emit(out, ses, std::move(res), outcome_code(sr.outcome));
        }

        // ---- representable ----
        if (rep->parsed()) {
            auto m = load_matroid(ses, r_file);
            auto rr = is_representable(*m, r_q, std::max(r_cap, m->full_rank()));
            Json res;
            if (rr.kind == RepresentabilityResult::Refused) {
                res["outcome"] = "refused";
                res["reason"] = rr.reason;
                return emit(out, ses, std::move(res), kInconclusive);
            }
            res["outcome"] = rr.yes() ? "representable" : "not-representable";
            if (rr.yes()) {
                Json emb = Json::array();
                for (auto [elem, point] : rr.embedding) emb.push_back({elem, point});
                res["embedding"] = std::move(emb);
            }
            return emit(out, ses, std::move(res), rr.yes() ? kOk : kNotFound);
        }

        // ---- stack ----
        if (stack->parsed()) {
            auto m = load_matroid(ses, s_file);
            if (stack_build->parsed()) {
                StackCertificate cert;
                if (s_exhaustive) {
                    cert.q = s_q;
                    cert.t = s_t;
                    for (int h = 1;; ++h) {
                        auto found = find_stack_exhaustive(*m, s_q, h, s_t);
                        if (found.inconclusive) {
                            cert.incomplete_scan = true;
                            break;
                        }
                        if (!found.found) break;
                        cert.layers = found.layers;
                    }
                } else {
                    cert = build_stack_greedy(*m, s_q, s_t);
                }
                Json cj = stack_cert_to_json(cert);
                auto verdict = verify_stack(*m, stack_cert_from_json(cj));
                if (cert.height() > 0 && !verdict.valid)
                    throw std::logic_error("stack build: certificate failed re-verification");
                if (!s_out.empty()) write_file(s_out, cj.dump(2) + "\n");
                Json res;
                res["height"] = cert.height();
                res["certificate"] = std::move(cj);
                res["reverified"] = verdict.valid;
                return emit(out, ses, std::move(res), kOk);
            }
            auto cert = stack_cert_from_json(load_json_file(ses, s_cert));
            auto verdict = verify_stack(*m, cert);
            Json res = stack_verdict_to_json(verdict);
            int code = verdict.valid ? kOk : (verdict.inconclusive ? kInconclusive : kNotFound);
            return emit(out, ses, std::move(res), code);
        }

        // ---- weakround ----
        if (weakround->parsed()) {
            auto m = load_matroid(ses, w_file);
            auto rw = is_weakly_round(*m);
            Json res = roundness_to_json(rw);
            if (!rw.weakly_round) {
                res["checked"]["rank_A"] = m->rank(rw.A);
                res["checked"]["rank_B"] = m->rank(rw.B);
                res["checked"]["rank"] = m->full_rank();
            }
            return emit(out, ses, std::move(res), rw.weakly_round ? kOk : kNotFound);
        }

        // ---- probe ----
        if (probe->parsed()) {
            auto m = load_matroid(ses, p_file);
            Json res;
            res["beta"] = p_beta;

            auto cert = build_stack_greedy(*m, p_q, p_t);
            res["stack"] = stack_cert_to_json(cert);
            res["stack_height"] = cert.height();

            auto contracted = minor(m, cert.union_of_layers(), IndexSet{});
            auto sim = simplify(*contracted);
            auto M0 = restriction(contracted, IndexSet::of(sim.representatives));
            int r0 = M0->full_rank();
            res["contraction_rank"] = r0;
            res["contraction_points"] = M0->size();

            if (p_t < 1 || r0 < p_t) {
                res["branch"] = "rank-exhausted";
                return emit(out, ses, std::move(res), kNotFound);
            }
            auto f0s = flats_of_rank(*M0, p_t - 1);
            IndexSet F0 = f0s.front();
            res["f0"] = index_set_to_json(F0);
            auto maj = majority_flat(*M0, F0, p_t);
            res["majority"]["flat"] = index_set_to_json(maj.flat);
            res["majority"]["family_size"] = maj.family_size;
            res["majority"]["gained"] = maj.gained;
            res["majority"]["inequality_holds"] = maj.inequality_holds;

            auto L = restriction(M0, maj.flat);
            auto rr = is_representable(*L, p_q, p_t);
            if (rr.kind == RepresentabilityResult::Refused) {
                res["branch"] = "representability-refused";
                res["reason"] = rr.reason;
                return emit(out, ses, std::move(res), kInconclusive);
            }
            res["flat_representable"] = rr.yes();
            if (!rr.yes()) {
                res["branch"] = "flat-not-representable";
                return emit(out, ses, std::move(res), kNotFound);
            }

            auto target = ag(p_n, p_q);
            if (target->size() > L->size() || target->full_rank() > L->full_rank()) {
                res["branch"] = "ag-none";
                res["ag"] = "target-larger-than-flat";
                return emit(out, ses, std::move(res), kNotFound);
            }
            auto sr = find_restriction(*L, *target, opts);
            res["ag"] = outcome_name(sr.outcome);
            if (sr.outcome == Outcome::Found) {
                res["ag_witness"] = restriction_witness_to_json(*sr.witness);
                res["branch"] = "ag-found";
                return emit(out, ses, std::move(res), kOk);
            }
            res["branch"] = sr.outcome == Outcome::None ? "ag-none" : "ag-inconclusive";
            return emit(out, ses, std::move(res),
                        sr.outcome == Outcome::None ? kNotFound : kInconclusive);
        }

        // ---- verify ----
        if (verify->parsed()) {
            auto m = load_matroid(ses, v_file);
            Json res;
            if (verify_kungrel->parsed()) {
                auto rep2 = kungrel_check(*m, parse_index_list(v_contract), v_ell);
                res = kungrel_to_json(rep2);
                return emit(out, ses, std::move(res),
                            rep2.holds && rep2.identity_holds ? kOk : kNotFound);
            }
            if (verify_projection->parsed()) {
                auto w = restriction_witness_from_json(load_json_file(ses, v_witness));
                auto chk = verify_projection_instance(*m, w, parse_index_list(v_flat), v_q);
                res = projection_check_to_json(chk);
                if (!chk.hypothesis_ok) return emit(out, ses, std::move(res), kInputError);
                return emit(out, ses, std::move(res), chk.holds ? kOk : kNotFound);
            }
            if (verify_restr->parsed()) {
                auto target = load_matroid(ses, v_target);
                auto w = restriction_witness_from_json(load_json_file(ses, v_witness));
                bool ok = verify_restriction(*m, *target, w);
                res["valid"] = ok;
                return emit(out, ses, std::move(res), ok ? kOk : kNotFound);
            }
            // u2-minor witness
            auto w = minor_witness_from_json(load_json_file(ses, v_witness));
            bool ok = verify_minor_witness(*m, *uniform_matroid(2, v_m), w);
            res["valid"] = ok;
            return emit(out, ses, std::move(res), ok ? kOk : kNotFound);
        }

        // ---- verify-suite ----
        if (suite->parsed()) {
            std::set<int> which(suite_criteria.begin(), suite_criteria.end());
            auto results = run_acceptance(which, ses.seed);
            Json res;
            Json arr = Json::array();
            bool all = true;
            for (const auto& c : results) {
                Json jc;
                jc["id"] = c.id;
                jc["name"] = c.name;
                jc["pass"] = c.pass;
                jc["details"] = c.details;
                arr.push_back(std::move(jc));
                all = all && c.pass;
            }
            res["criteria"] = std::move(arr);
            res["all_pass"] = all;
            return emit(out, ses, std::move(res), all ? kOk : kNotFound);
        }
    } catch (const std::invalid_argument& e) {
        return emit_error(out, ses, "input", e.what());
    } catch (const std::out_of_range& e) {
        return emit_error(out, ses, "input", e.what());
    } catch (const Json::parse_error& e) {
        return emit_error(out, ses, "input", e.what());
    } catch (const std::exception& e) {
        return emit_error(out, ses, "internal", e.what());
    }

    err << "no subcommand\n";
    return kInputError;
}

}  // namespace mwb

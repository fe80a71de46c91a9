#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mwb/cli.hpp"
#include "mwb/geometry.hpp"
#include "mwb/matroid_io.hpp"

using namespace mwb;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path tmpdir() {
    auto d = std::filesystem::temp_directory_path() / "mwb_cli_tests";
    std::filesystem::create_directories(d);
    return d;
}

Json result_of(const CliRun& r) { return Json::parse(r.out).at("result"); }

}  // namespace

TEST_CASE("gen writes matroid files that parse back to the same matroid") {
    auto file = (tmpdir() / "fano.json").string();
    auto r = run({"gen", "pg", "--rank", "3", "--q", "2", "-o", file});
    CHECK(r.code == 0);
    CHECK(result_of(r)["elements"] == 7);

    std::ifstream f(file);
    Json doc = Json::parse(f);
    auto parsed = matroid_from_json(doc);
    CHECK(rank_tables_equal(*parsed, *pg(3, 2)));

    auto u = run({"gen", "uniform", "--rank", "2", "--size", "4", "-o",
                  (tmpdir() / "u24.json").string()});
    CHECK(u.code == 0);
    std::ifstream fu(tmpdir() / "u24.json");
    CHECK(rank_tables_equal(*matroid_from_json(Json::parse(fu)), *uniform_matroid(2, 4)));
}

TEST_CASE("gen sum emits linear block sums and bases fallbacks") {
    auto lin = run({"gen", "sum", "--lhs", "pg:2:2", "--rhs", "pg:2:2"});
    CHECK(lin.code == 0);
    Json r1 = result_of(lin);
    CHECK(r1["matroid"]["kind"] == "linear");
    auto parsed = matroid_from_json(r1["matroid"]);
    CHECK(rank_tables_equal(*parsed, *direct_sum(pg(2, 2), pg(2, 2))));

    auto bas = run({"gen", "sum", "--lhs", "uniform:2:4", "--rhs", "uniform:2:4"});
    CHECK(bas.code == 0);
    Json r2 = result_of(bas);
    CHECK(r2["matroid"]["kind"] == "bases");
    auto parsed2 = matroid_from_json(r2["matroid"]);
    CHECK(rank_tables_equal(*parsed2, *direct_sum(uniform_matroid(2, 4), uniform_matroid(2, 4))));
}

TEST_CASE("exit codes distinguish verdicts, absence, input errors, budgets") {
    CHECK(run({"density", "--ell", "2", "pg:3:2"}).code == 0);
    CHECK(run({"density", "--ell", "2", "uniform:2:4"}).code == 1);  // violated
    CHECK(run({"find", "restriction", "--target", "ag:3:2", "pg:3:2"}).code == 0);
    CHECK(run({"find", "restriction", "--target", "uniform:2:4", "pg:3:2"}).code == 1);
    CHECK(run({"--budget", "2", "find", "restriction", "--target", "ag:3:2", "pg:4:2"}).code == 3);
    CHECK(run({"density", "--ell", "2", "no-such-file.json"}).code == 2);
    CHECK(run({"density", "--ell", "2"}).code == 2);  // missing argument
    CHECK(run({"weakround", "pg:3:2"}).code == 0);
    CHECK(run({"representable", "--q", "2", "--cap", "2", "uniform:2:4"}).code == 1);
    CHECK(run({"representable", "--q", "3", "--cap", "2", "uniform:2:4"}).code == 0);

    auto bad = run({"density", "--ell", "2", "no-such-file.json"});
    Json doc = Json::parse(bad.out);
    CHECK(doc["result"]["error"]["type"] == "input");
}

TEST_CASE("emitted witnesses re-verify from their serialized artifacts") {
    auto w = (tmpdir() / "w.json").string();
    auto found = run({"find", "restriction", "--target", "ag:3:2", "pg:3:2", "-o", w});
    REQUIRE(found.code == 0);
    CHECK(result_of(found)["reverified"] == true);
    auto check = run({"verify", "restriction", "--target", "ag:3:2", "--witness", w, "pg:3:2"});
    CHECK(check.code == 0);
    CHECK(result_of(check)["valid"] == true);

    auto uw = (tmpdir() / "u2w.json").string();
    auto sumfile = (tmpdir() / "sum.json").string();
    run({"gen", "sum", "--lhs", "uniform:2:4", "--rhs", "uniform:2:4", "-o", sumfile});
    auto u2 = run({"find", "u2-minor", "--m", "4", sumfile, "-o", uw});
    REQUIRE(u2.code == 0);
    CHECK(run({"verify", "u2-minor", "--m", "4", "--witness", uw, sumfile}).code == 0);

    auto cert = (tmpdir() / "cert.json").string();
    auto built = run({"stack", "build", "--q", "2", "--t", "2", sumfile, "-o", cert});
    REQUIRE(built.code == 0);
    CHECK(result_of(built)["height"] == 2);
    CHECK(run({"stack", "verify", "--cert", cert, sumfile}).code == 0);

    auto exact = run({"stack", "build", "--q", "2", "--t", "2", "--exhaustive", sumfile});
    REQUIRE(exact.code == 0);
    CHECK(result_of(exact)["height"] == 2);
}

TEST_CASE("verify subcommands for inequalities") {
    auto kr = run({"verify", "kungrel", "--ell", "2", "--contract", "0", "pg:3:2"});
    CHECK(kr.code == 0);
    CHECK(result_of(kr)["identity_holds"] == true);

    // Projection instance with the identity spanning witness and F = {}.
    auto wfile = (tmpdir() / "idw.json").string();
    {
        Json w;
        Json map = Json::array();
        for (int i = 0; i < 7; ++i) map.push_back({i, i});
        w["map"] = map;
        std::ofstream f(wfile);
        f << w.dump(2);
    }
    auto pr = run({"verify", "projection", "--q", "2", "--witness", wfile, "pg:3:2"});
    CHECK(pr.code == 0);
    CHECK(result_of(pr)["holds"] == true);
}

TEST_CASE("probe reports the fired branch") {
    auto found = run({"probe", "--q", "2", "--t", "2", "--beta", "1/4", "--n", "2", "pg:3:2"});
    CHECK(found.code == 0);
    CHECK(result_of(found)["branch"] == "ag-found");
    CHECK(result_of(found)["stack_height"] == 0);

    auto none = run({"probe", "--q", "2", "--t", "2", "--beta", "1/4", "--n", "3", "pg:3:2"});
    CHECK(none.code == 1);
    CHECK(result_of(none)["branch"] == "ag-none");
}

TEST_CASE("reports are byte-identical across repeats and thread counts") {
    std::vector<std::string> cmd = {"find", "restriction", "--target", "ag:3:2", "pg:3:2"};
    auto a = run(cmd);
    auto b = run(cmd);
    std::vector<std::string> threaded = cmd;
    threaded.insert(threaded.begin(), {"--threads", "8"});
    auto c = run(threaded);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.code == c.code);
}

TEST_CASE("verify-suite subcommand emits per-criterion json") {
    auto r = run({"verify-suite", "--criterion", "1", "--criterion", "9"});
    CHECK(r.code == 0);
    Json res = result_of(r);
    REQUIRE(res["criteria"].size() == 2);
    CHECK(res["criteria"][0]["id"] == 1);
    CHECK(res["criteria"][0]["pass"] == true);
    CHECK(res["all_pass"] == true);
}

TEST_CASE("matroid file validation") {
    Json bad;
    bad["format_version"] = 1;
    bad["kind"] = "linear";
    bad["p"] = 2;
    bad["k"] = 2;
    bad["poly"] = {1, 0, 1};  // reducible, and not the canonical modulus
    bad["rows"] = 1;
    bad["matrix"] = {1, 2};
    CHECK_THROWS_AS(matroid_from_json(bad), std::invalid_argument);

    Json bad2;
    bad2["format_version"] = 1;
    bad2["kind"] = "bases";
    bad2["n"] = 4;
    bad2["rank"] = 3;  // mismatched with the bases below
    bad2["bases"] = {{0, 1}, {0, 2}, {1, 2}};
    CHECK_THROWS_AS(matroid_from_json(bad2), std::invalid_argument);

    Json bad3;
    bad3["kind"] = "mystery";
    CHECK_THROWS_AS(matroid_from_json(bad3), std::invalid_argument);
}

TEST_CASE("help is available") {
    CHECK(run({"--help"}).code == 0);
}

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sbmotive/cli.hpp"
#include "sbmotive/json_io.hpp"

using sbm::json::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = sbm::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Commands with fixed arguments covering every subcommand.
const std::vector<std::vector<std::string>> kCommands = {
    {"gaussian", "6", "3"},
    {"mu", "--p", "3", "--n", "1", "--k", "0", "--all"},
    {"mu", "--p", "2", "--n", "2", "--k", "1", "--i", "6"},
    {"chow-order", "--p", "2", "--n", "1", "--k", "0"},
    {"decompose", "--p", "2", "--n", "3", "--k", "1"},
    {"endpoints", "--p", "3", "--n", "2", "--k", "1"},
    {"type-bound", "--p", "2", "--n", "3", "--k", "1"},
    {"type-bound", "--p", "2", "--n", "3", "--k", "1", "--trace"},
    {"conjecture", "--k", "12"},
    {"verify", "--max-n", "2"},
};

std::vector<std::string> with_format(std::vector<std::string> args, const std::string& fmt) {
    args.insert(args.begin(), {"--format", fmt});
    return args;
}

}  // namespace

TEST_CASE("gaussian text and json") {
    const auto r = run({"gaussian", "4", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "[4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4\ndim 4, rank 6\n");
    CHECK(run({"--format", "json", "gaussian", "4", "2"}).out == "{\"0\":\"1\",\"1\":\"1\",\"2\":\"2\",\"3\":\"1\",\"4\":\"1\"}\n");
    CHECK(run({"gaussian", "4", "2", "--format", "csv"}).out ==
          "degree,coefficient\n0,1\n1,1\n2,2\n3,1\n4,1\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"gaussian", "2"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"mu", "--p", "4", "--n", "1", "--k", "0", "--all"}).code == 2);
    CHECK(run({"mu", "--p", "2", "--n", "1", "--k", "0"}).code == 2);
    CHECK(run({"mu", "--p", "2", "--n", "1", "--k", "0", "--i", "1", "--all"}).code == 2);
    CHECK(run({"decompose", "--p", "2", "--n", "-1", "--k", "0"}).code == 2);
    CHECK(run({"--format", "xml", "gaussian", "4", "2"}).code == 2);
    CHECK(run({"conjecture", "--k", "0"}).code == 2);
    CHECK(run({"verify", "--max-n", "9"}).code == 2);
    const auto r = run({"gaussian", "2"});
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("engine errors exit with 1") {
    CHECK(run({"gaussian", "2", "3"}).code == 1);
    CHECK(run({"decompose", "--p", "3", "--n", "2", "--k", "1"}).code == 1);
    CHECK(run({"endpoints", "--p", "2", "--n", "2", "--k", "2"}).code == 1);
    CHECK(run({"type-bound", "--p", "2", "--n", "1", "--k", "3"}).code == 1);
    const auto r = run({"decompose", "--p", "3", "--n", "2", "--k", "1"});
    CHECK(r.err.find("p = 2") != std::string::npos);
}

TEST_CASE("help exits with 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("decompose") != std::string::npos);
}

TEST_CASE("verify succeeds with exit 0") {
    const auto r = run({"verify", "--max-n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify: OK") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    const auto j = Json::parse(run({"--format", "json", "verify", "--max-n", "1"}).out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == 16);
}

TEST_CASE("text output of the other commands") {
    CHECK(run({"conjecture", "--k", "8"}).out == "k=8: OPEN (blocking factor 8)\n");
    CHECK(run({"conjecture", "--k", "12"}).out.rfind("k=12: COVERED (four_times_odd_squarefree, k'=3)\n", 0) == 0);

    const auto d = run({"decompose", "--p", "2", "--n", "2", "--k", "1"}).out;
    CHECK(d.find("upper: SB(p=2,n=1,[0,2])(0)") != std::string::npos);
    CHECK(d.find("lower: SB(p=2,n=1,[2,0])(4)") != std::string::npos);
    CHECK(d.find("conservation: OK") != std::string::npos);

    const auto t = run({"type-bound", "--p", "2", "--n", "3", "--k", "1"}).out;
    CHECK(t.find("type bound -1") != std::string::npos);
    CHECK(t.find("indecomposability: INDECOMPOSABLE") != std::string::npos);
    CHECK(t.find("[1]") == std::string::npos);
    CHECK(run({"--trace", "type-bound", "--p", "2", "--n", "3", "--k", "1"}).out.find("[1] coefficient-reduction") !=
          std::string::npos);

    CHECK(run({"endpoints", "--p", "3", "--n", "2", "--k", "1", "--format", "csv"}).out ==
          "role,level,twist\nupper,1,0\nlower,1,18\n");
    CHECK(run({"mu", "--p", "3", "--n", "1", "--k", "0", "--all", "--format", "csv"}).out == "i,mu\n3,1\n4,1\n5,1\n");
    CHECK(run({"chow-order", "--p", "2", "--n", "1", "--k", "0", "--format", "csv"}).out ==
          "i,mu,order_exponent,paper_literal\n0,0,0,0\n1,1,1,2\n2,1,1,2\n");
}

TEST_CASE("json output decodes with the library decoders") {
    const auto dec = Json::parse(run({"--format", "json", "decompose", "--p", "2", "--n", "3", "--k", "2"}).out);
    const auto expr = sbm::json::decode_expr(dec["terms"]);
    CHECK(expr == sbm::function_field_decomposition(sbm::SBVariety(sbm::DivisionContext(2, 3), 2)));
    CHECK(sbm::json::decode_poly(dec["poincare"]) == sbm::gaussian_binomial(8, 4));
    CHECK(dec["conservation"] == "OK");
    CHECK(sbm::json::decode_term(dec["upper"]).twist == 0);
    CHECK(sbm::json::decode_term(dec["lower"]).twist == 16);

    const auto tb = Json::parse(run({"--format", "json", "--trace", "type-bound", "--p", "2", "--n", "4", "--k", "2"}).out);
    CHECK(tb["bound"] == "0");
    CHECK(sbm::replay(sbm::json::decode_trace(tb["trace"])));

    const auto ch = Json::parse(run({"--format", "json", "chow-order", "--p", "3", "--n", "1", "--k", "1"}).out);
    for (const auto& row : ch["rows"]) CHECK(sbm::json::decode_chow_report(row).literal_product >= 0);

    const auto cj = Json::parse(run({"--format", "json", "conjecture", "--k", "30"}).out);
    CHECK(cj["k"] == "30");
    CHECK(cj["status"] == "covered");

    const auto en = Json::parse(run({"--format", "json", "endpoints", "--p", "2", "--n", "3", "--k", "1"}).out);
    CHECK(sbm::json::decode_term(en["lower"]).twist == 8);

    const auto mu = Json::parse(run({"--format", "json", "mu", "--p", "2", "--n", "2", "--k", "1", "--i", "6"}).out);
    CHECK(mu["rows"][0]["mu"] == "2");
}

TEST_CASE("every command is deterministic in every format") {
    for (const auto& cmd : kCommands)
        for (const std::string fmt : {"text", "json", "csv"}) {
            const auto a = run(with_format(cmd, fmt));
            const auto b = run(with_format(cmd, fmt));
            CAPTURE(cmd.front());
            CAPTURE(fmt);
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
            CHECK_FALSE(a.out.empty());
            if (fmt == "json") CHECK(Json::accept(a.out));
        }
}

TEST_CASE("format default comes from the environment") {
    ::setenv(sbm::cli::kFormatEnv, "json", 1);
    const auto env_json = run({"gaussian", "4", "1"});
    const auto flag_wins = run({"--format", "csv", "gaussian", "4", "1"});
    ::setenv(sbm::cli::kFormatEnv, "yaml", 1);
    const auto bad = run({"gaussian", "4", "1"});
    ::unsetenv(sbm::cli::kFormatEnv);
    CHECK(env_json.out == "{\"0\":\"1\",\"1\":\"1\",\"2\":\"1\",\"3\":\"1\"}\n");
    CHECK(flag_wins.out.rfind("degree,coefficient\n", 0) == 0);
    CHECK(bad.code == 2);
    CHECK(run({"gaussian", "4", "1"}).out.rfind("[4 choose 1]_q", 0) == 0);
}

TEST_CASE("--out writes the same bytes to a file") {
    const auto path = std::filesystem::temp_directory_path() / "sbmotive_cli_out_test.json";
    std::filesystem::remove(path);
    const auto r = run({"--format", "json", "--out", path.string(), "gaussian", "5", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == run({"--format", "json", "gaussian", "5", "2"}).out);
    std::filesystem::remove(path);

    CHECK(run({"--out", "/nonexistent-dir/x.txt", "gaussian", "2", "1"}).code == 1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Drives the installed binary end to end through a shell, checking rendered
// output, JSON structure, exit codes, and byte determinism.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args)
{
    const std::string out_path
        = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp")
          + "/qma_cli_test_out.txt";
    const std::string cmd
        = std::string(QMA_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

bool contains(const std::string& hay, const std::string& needle)
{
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("degree command examples")
{
    const auto a = run("degree --algebra mq --n 3 --m 5");
    CHECK(a.exit_code == 0);
    CHECK(contains(a.out, "degree: 125"));
    CHECK(contains(a.out, "match: true"));

    const auto b = run("degree --algebra anr --n 3 --r 2 --m 3");
    CHECK(b.exit_code == 0);
    CHECK(contains(b.out, "degree: 27"));

    const auto c = run("degree --algebra mq --n 1 --m 7");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "degree: 1"));
}

TEST_CASE("blocks command examples")
{
    const auto a = run("blocks --algebra mqnr --n 6 --r 3 --format json");
    CHECK(a.exit_code == 0);
    const auto ja = nlohmann::json::parse(a.out);
    CHECK(ja["result"]["count_4"] == 1);
    CHECK(ja["findings"].empty());

    const auto b = run("blocks --algebra mqnr --n 3 --r 2 --format json");
    CHECK(b.exit_code == 0);
    const auto jb = nlohmann::json::parse(b.out);
    CHECK(jb["result"]["count_1"] == 2);
    CHECK(jb["result"]["count_2"].get<int>()
              + jb["result"]["count_4"].get<int>()
          == 1);

    const auto c = run("blocks --algebra anr --n 3 --r 2 --format json");
    CHECK(c.exit_code == 0);
    const auto jc = nlohmann::json::parse(c.out);
    CHECK(jc["result"]["count_1"] == 2);
    CHECK(jc["result"]["count_2"] == 1);
}

TEST_CASE("center command examples")
{
    const auto a = run("center --algebra mqnr --n 2 --r 2 --m 3 --format json");
    CHECK(a.exit_code == 0);
    const auto ja = nlohmann::json::parse(a.out);
    CHECK(ja["result"]["corank"] == 2);
    for (const auto& v : ja["result"]["verdicts"])
        CHECK(v["pass"] == true);
    CHECK(ja["result"]["generation"]["pass"] == true);

    // even m: the half-power corner element of Lemma-style centrality
    const auto b = run("center --algebra mqnr --n 2 --r 2 --m 4 --format json");
    CHECK(b.exit_code == 0);
    const auto jb = nlohmann::json::parse(b.out);
    bool saw_corner = false;
    for (const auto& v : jb["result"]["verdicts"]) {
        CHECK(v["pass"] == true);
        if (contains(v["candidate"].get<std::string>(), "corner"))
            saw_corner = true;
    }
    CHECK(saw_corner);

    const auto c = run("center --algebra mqnr --n 6 --r 3 --m 4");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "quarter(6,3)"));
    CHECK(!contains(c.out, "pass=false"));
}

TEST_CASE("corank, snf, minor commands")
{
    const auto a = run("corank --n 6 --r 2");
    CHECK(a.exit_code == 0);
    CHECK(contains(a.out, "corank: 2"));

    const std::string j_path = "/tmp/qma_cli_test_J.txt";
    {
        std::ofstream f(j_path);
        f << "2\n0 1\n-1 0\n";
    }
    const auto b = run("snf --input " + j_path + " --format json");
    CHECK(b.exit_code == 0);
    const auto jb = nlohmann::json::parse(b.out);
    CHECK(jb["result"]["divisors"] == nlohmann::json::array({1}));
    CHECK(jb["result"]["zero_rank"] == 0);
    std::remove(j_path.c_str());

    const auto c = run("minor --n 2 --rows 1,2 --cols 1,2");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "Z11*Z22 - q*Z12*Z21"));
}

TEST_CASE("verify command and guard exit codes")
{
    CHECK(run("verify --n 2 --r 2 --m 3 --candidate za --mode lattice")
              .exit_code
          == 0);
    CHECK(run("verify --n 2 --r 2 --m 3 --candidate za --mode symbolic")
              .exit_code
          == 0);
    CHECK(run("verify --algebra mqnr --n 6 --r 3 --m 4 --candidate quarter")
              .exit_code
          == 0);

    // symbolic cost guard: m = 5 exceeds it, the unsafe flag lifts it
    const auto g
        = run("verify --n 2 --r 2 --m 5 --candidate za --mode symbolic");
    CHECK(g.exit_code == 3);
    CHECK(run("verify --n 2 --r 2 --m 5 --candidate za --mode symbolic "
              "--unsafe-guard-symbolic")
              .exit_code
          == 0);

    // enumeration guard on the brute-force cross-check
    CHECK(run("degree --algebra mq --n 2 --m 3 --brute --unsafe-guard-enum 10")
              .exit_code
          == 3);
    CHECK(run("degree --algebra mq --n 2 --m 3 --brute").exit_code == 0);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run("degree --badflag").exit_code == 2);
    CHECK(run("degree --algebra nope --n 2 --m 3").exit_code == 2);
    CHECK(run("degree --algebra mqnr --n 2 --m 3").exit_code == 2); // no --r
    CHECK(run("verify --n 2 --r 2 --m 3 --candidate bogus").exit_code == 2);
    CHECK(run("reproduce --suite bogus").exit_code == 2);
    CHECK(run("snf --input /nonexistent/J.txt").exit_code == 2);
}

TEST_CASE("reproduce suites")
{
    for (const std::string args :
         {"reproduce --suite detdeg --max-n 3 --moduli 3,5",
          "reproduce --suite gcd --max-n 8",
          "reproduce --suite blocks-rprime --r 3 --max-n 12"}) {
        const auto r = run(args);
        CHECK(r.exit_code == 0);
        CHECK(contains(r.out, "all_pass: true"));
        CHECK(!contains(r.out, "pass=false"));
    }
}

TEST_CASE("json output round-trips and is deterministic")
{
    const std::string cmd
        = "degree --algebra mqnr --n 3 --r 2 --m 3 --format json";
    const auto a = run(cmd), b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out); // byte-identical across runs

    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "degree");
    CHECK(j["config"]["n"] == 3);
    CHECK(j["config"]["r"] == 2);
    CHECK(j["config"]["m"] == 3);
    // re-serialize and re-parse: same structured values
    CHECK(nlohmann::json::parse(j.dump()) == j);

    // csv renders the same leaf values
    const auto c
        = run("degree --algebra mqnr --n 3 --r 2 --m 3 --format csv");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "key,value"));
    CHECK(contains(c.out,
                   "degree," + j["result"]["degree"].get<std::string>()));
}

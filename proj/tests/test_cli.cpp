#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run
{
    int code = -1;
    std::string out;
};

const fs::path &workdir()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "dnawords_test_cli";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string &args)
{
    const fs::path out = workdir() / "stdout.txt";
    const std::string cmd = std::string(DNAWORDS_CLI) + " " + args + " > " +
                            out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

std::string path(const std::string &name) { return (workdir() / name).string(); }

} // namespace

TEST_CASE("minlen")
{
    CHECK(run("minlen --n 2 --k1 2 --k4 1").out == "min=2, ell_star=13\n");
    const Run r = run("minlen --n 2 --k1 1 --k4 1");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("min=1, ", 0) == 0);
    CHECK(run("minlen --n 16 --k1 2 --hamming-only").out.rfind("min=", 0) == 0);
    CHECK(run("minlen --n 4").code == 2);
}

TEST_CASE("generate then verify")
{
    const std::string file = path("c16.txt");
    const Run g = run("generate --pipeline c1-6 --n 8 --k 2 --out " + file +
                      " --no-timestamp");
    REQUIRE(g.code == 0);
    const auto manifest = nlohmann::json::parse(slurp(file + ".manifest.json"));
    CHECK(manifest["command"] == "generate");
    CHECK(manifest["verification"]["status"] == "passed");
    CHECK(manifest["result"]["words"] == 8);
    CHECK_FALSE(manifest.contains("volatile"));

    const Run v = run("verify " + file + " --manifest " + file + ".manifest.json");
    CHECK(v.code == 0);
    CHECK(v.out.rfind("OK: 8 words", 0) == 0);

    // Stricter than generated: should fail with exit 1.
    const Run f = run("verify " + file + " --constraints c1 --k1 9");
    CHECK(f.code == 1);
    CHECK(f.out.find("FAIL: ") != std::string::npos);
}

TEST_CASE("generate is byte-identical across runs")
{
    const std::string a = path("a.txt"), b = path("b.txt");
    const std::string args = "generate --pipeline c1-8b --n 6 --k 2 --gamma 0.5 --d 4 --no-timestamp --out ";
    REQUIRE(run(args + a).code == 0);
    REQUIRE(run(args + b).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a + ".manifest.json") == slurp(b + ".manifest.json"));
}

TEST_CASE("stdout output")
{
    const Run r = run("generate --pipeline c1-4 --n 3 --k 1");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# dnawords", 0) == 0);
}

TEST_CASE("exit codes for errors")
{
    CHECK(run("generate --pipeline c12378 --n 4 --k 2 --gamma 0.5").code == 2);
    CHECK(run("generate --pipeline nope --n 4 --k 2").code == 2);
    CHECK(run("generate --pipeline c1-6 --n 4 --k 2 --hamming-only").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify " + path("missing.txt") + " --constraints c1 --k 1").code == 3);
    std::ofstream(path("bad.txt")) << "0101\n01x1\n";
    CHECK(run("verify " + path("bad.txt") + " --constraints c1 --k 1").code == 3);
    std::ofstream(path("ok.txt")) << "0101\n1010\n";
    CHECK(run("verify " + path("ok.txt") + " --constraints c7 --gamma 0.5").code == 2);
    CHECK(run("verify " + path("ok.txt")).code == 2);
}

TEST_CASE("c1-8a with k4 > k1 exits 1")
{
    CHECK(run("generate --pipeline c1-8a --n 8 --k 1 --k4 4 --gamma 0.5 --d 3").code == 1);
}

TEST_CASE("verify with energy table")
{
    std::ofstream(path("e.json")) << "{\"gamma\": [0,0,0,0, 0,1,0,0, 0,0,0,0, 0,0,0,0]}";
    std::ofstream(path("fe.txt")) << "CCCCCCAAA\nCCCCCCCCC\n";
    CHECK(run("verify " + path("fe.txt") + " --constraints c9 --sigma 3 --energy-table " +
              path("e.json")).code == 0);
    CHECK(run("verify " + path("fe.txt") + " --constraints c9 --sigma 2 --energy-table " +
              path("e.json")).code == 1);
    CHECK(run("verify " + path("fe.txt") + " --constraints c9 --sigma 2").code == 2);
}

TEST_CASE("bench writes both files")
{
    const std::string out = path("bench");
    const Run r = run("bench --ns 4 --ks 1 --trials 5 --out " + out);
    CHECK(r.code == 0);
    CHECK(fs::exists(out + ".txt"));
    const auto j = nlohmann::json::parse(slurp(out + ".json"));
    CHECK(j["records"].size() == 1);
    CHECK(slurp(out + ".txt") == r.out);
}

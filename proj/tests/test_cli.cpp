#include "iqaoa/report.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(IQAOA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("iqaoa_cli_" + name);
    fs::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("rank, unrank and decode") {
    CHECK(cli("rank jssp-3x3-a 2,0,2,1,0,1,0,1,2").out == "1293\n");
    CHECK(cli("unrank jssp-3x3-a 1293").out == "2,0,2,1,0,1,0,1,2\n");
    const auto json = iqaoa::Json::parse(cli("decode jssp-3x3-a [2,0,2,1,0,1,0,1,2]").out);
    CHECK(json["makespan"] == 188);
    const auto csv = cli("decode jssp-3x3-a 2,0,2,1,0,1,0,1,2 --format csv");
    CHECK(csv.status == 0);
    CHECK(csv.out.find("0,1,1,116,151\n") != std::string::npos);
    CHECK(csv.out.find("# makespan 188") != std::string::npos);
}

TEST_CASE("instance files on disk") {
    const std::string path = std::string(IQAOA_FIXTURE_DIR) + "/jssp-5x2.txt";
    CHECK(cli("decode " + path + " 1,4,3,0,2,4,0,3,1,2").status == 0);
    CHECK(iqaoa::Json::parse(cli("decode " + path + " 1,4,3,0,2,4,0,3,1,2").out)["makespan"] == 22);
}

TEST_CASE("enumerate to stdout and to a directory") {
    const auto out = cli("enumerate jssp-3x3-b");
    CHECK(out.status == 0);
    CHECK(out.out.rfind("makespan,count,probability\n181,928,", 0) == 0);

    const auto dir = scratch("enumerate");
    CHECK(cli("enumerate jssp-4x3 --svg --out-dir " + dir.string()).status == 0);
    const auto summary = iqaoa::Json::parse(iqaoa::read_text(dir / "summary.json"));
    CHECK(summary["lower_quartile"] == 68);
    CHECK(summary["min"] == 59);
    CHECK(fs::exists(dir / "distribution.csv"));
    CHECK(fs::exists(dir / "distribution.svg"));
    CHECK(iqaoa::Json::parse(iqaoa::read_text(dir / "manifest.json"))["schema"] == iqaoa::kManifestSchema);
    fs::remove_all(dir);
}

TEST_CASE("exit codes") {
    CHECK(cli("decode no-such-instance 0,1").status == 4);
    CHECK(cli("decode jssp-3x3-a 0,0,0").status == 2);
    CHECK(cli("unrank jssp-3x3-a 1680").status == 2);
    CHECK(cli("rank jssp-3x3-a 2,x").status == 2);
    CHECK(cli("enumerate jssp-3x3-a --budget 100").status == 3);
    CHECK(cli("solve jssp-3x3-a --out-dir /tmp/x --mixer 9").status == 2);
    CHECK(cli("no-such-command").status == 2);
    CHECK(cli("fixtures").status == 0);
}

TEST_CASE("solve writes its artifacts and rerun reproduces them") {
    const auto dir = scratch("solve");
    const auto again = scratch("rerun");
    const std::string opts = " --generations 4 --population 5 --shots 100 --seed 3 --svg --dump-amplitudes";
    REQUIRE(cli("solve jssp-3x3-b --out-dir " + dir.string() + opts).status == 0);
    for (const char* f : {"result.json", "convergence.csv", "final_histogram.csv", "initial_histogram.csv",
                          "histogram.svg", "amplitudes.csv", "manifest.json"}) {
        CAPTURE(f);
        CHECK(fs::exists(dir / f));
    }
    const auto result = iqaoa::Json::parse(iqaoa::read_text(dir / "result.json"));
    CHECK(result["best_gammas"].size() == 2);
    CHECK(result["history"].size() == 5);
    CHECK(result["mixer"] == 1);
    const auto conv = iqaoa::read_text(dir / "convergence.csv");
    CHECK(conv.rfind("generation,beta_1,beta_2,gamma_1,gamma_2,objective,", 0) == 0);

    REQUIRE(cli("rerun " + (dir / "manifest.json").string() + " --out-dir " + again.string()).status == 0);
    for (const char* f : {"result.json", "convergence.csv", "final_histogram.csv", "initial_histogram.csv",
                          "histogram.svg", "amplitudes.csv"}) {
        CAPTURE(f);
        CHECK(iqaoa::read_text(dir / f) == iqaoa::read_text(again / f));
    }
    fs::remove_all(dir);
    fs::remove_all(again);
}

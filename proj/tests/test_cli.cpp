// End-to-end checks of the command-line tool: spawns the built binary
// (path in SUBMEASURE_LAB_BIN) and inspects stdout and exit codes.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "sml/io.hpp"
#include "sml/zoo.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary() {
    const char* env = std::getenv("SUBMEASURE_LAB_BIN");
    REQUIRE_MESSAGE(env != nullptr, "SUBMEASURE_LAB_BIN must point at the built binary");
    return env;
}

RunResult run(const std::string& args) {
    const std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "submeasure_lab_cli_test";
    fs::create_directories(dir);
    return dir;
}

fs::path write_minpath() {
    const fs::path path = scratch_dir() / "minpath.json";
    std::ofstream out(path);
    out << sml::submeasure_to_json(sml::gen_minimal_pathological()).dump(2) << "\n";
    return path;
}

} // namespace

TEST_CASE("compute eval / hat / pathology on the minimal example") {
    const std::string input = write_minpath().string();

    const RunResult eval = run("compute eval --input " + input + " --set all");
    CHECK(eval.exit_code == 0);
    auto j = sml::Json::parse(eval.out);
    CHECK(j["value"] == "2/1");

    const RunResult hat = run("compute hat --input " + input + " --set 0,1,2");
    CHECK(hat.exit_code == 0);
    auto hj = sml::Json::parse(hat.out);
    CHECK(hj["value"] == "3/2");
    CHECK(hj["witness"] == sml::Json::array({"1/2", "1/2", "1/2"}));

    const RunResult path = run("compute pathology --input " + input + " --scope all");
    CHECK(path.exit_code == 0);
    auto pj = sml::Json::parse(path.out);
    CHECK(pj["degree"] == "4/3");
    CHECK(pj["argmax"] == sml::Json::array({0, 1, 2}));

    const RunResult metric = run("compute metric --input " + input + " --a 0 --b 1");
    CHECK(metric.exit_code == 0);
    CHECK(sml::Json::parse(metric.out)["value"] == "1/1");
}

TEST_CASE("identical argv produces identical bytes") {
    const std::string input = write_minpath().string();
    const RunResult a = run("compute pathology --input " + input + " --scope all");
    const RunResult b = run("compute pathology --input " + input + " --scope all");
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("gen writes files plus a manifest with hashes") {
    const fs::path dir = scratch_dir() / "gen";
    fs::create_directories(dir);
    const RunResult gen = run("gen mazur --n 2 --out " + dir.string());
    CHECK(gen.exit_code == 0);
    auto manifest = sml::Json::parse(gen.out);
    CHECK(manifest["generator"] == "mazur");
    CHECK(manifest["files"].size() == 2);
    for (const auto& f : manifest["files"]) {
        const fs::path p = f["path"].get<std::string>();
        REQUIRE(fs::exists(p));
        std::ifstream in(p, std::ios::binary);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(sml::hex64(sml::fnv1a64(text)) == f["fnv1a64"].get<std::string>());
        CHECK(text.size() == f["bytes"].get<size_t>());
    }

    // the generated submeasure evaluates as documented
    const fs::path sub = dir / "mazur2.submeasure.json";
    const RunResult eval = run("compute eval --input " + sub.string() + " --set all");
    CHECK(sml::Json::parse(eval.out)["value"] == "3/1");

    const fs::path cov = dir / "mazur2.covering.json";
    const RunResult stats = run("compute cover-stats --input " + cov.string());
    CHECK(sml::Json::parse(stats.out)["delta"] == "1/2");
}

TEST_CASE("exit codes follow the contract") {
    // 2: malformed input
    const fs::path bad = scratch_dir() / "bad.json";
    std::ofstream(bad) << "{\"ground\": 2}\n";
    CHECK(run("compute eval --input " + bad.string() + " --set all").exit_code == 2);
    CHECK(run("compute eval --input /nonexistent.json --set all").exit_code == 2);
    CHECK(run("compute eval").exit_code == 2); // missing required option

    // 3: size guard (all-subsets sweep over a 70-point ground)
    const fs::path dir = scratch_dir() / "guard";
    fs::create_directories(dir);
    REQUIRE(run("gen solecki --n 3 --out " + dir.string()).exit_code == 0);
    const fs::path sub = dir / "solecki3.submeasure.json";
    CHECK(run("compute pathology --input " + sub.string() + " --scope all").exit_code == 3);

    // 0/1: verification outcomes
    CHECK(run("verify minpath").exit_code == 0);
    CHECK(run("verify no-such-target").exit_code == 2);
}

TEST_CASE("verify emits a row per assertion with its basis") {
    const RunResult v = run("verify minpath");
    CHECK(v.exit_code == 0);
    auto j = sml::Json::parse(v.out);
    CHECK(j["target"] == "minpath");
    CHECK(j["all_pass"] == true);
    bool saw_reference = false, saw_oracle = false;
    for (const auto& row : j["rows"]) {
        CHECK(row["pass"] == true);
        if (row["basis"] == "reference") saw_reference = true;
        if (row["basis"] == "oracle") saw_oracle = true;
    }
    CHECK(saw_reference);
    CHECK(saw_oracle);
}

TEST_CASE("the environment variable overrides the exhaustive guard") {
    const fs::path dir = scratch_dir() / "env";
    fs::create_directories(dir);
    REQUIRE(run("gen edfin --n 2 --out " + dir.string()).exit_code == 0);
    const std::string sub = (dir / "edfin2.submeasure.json").string();
    // the 6-point sweep passes by default but trips a lowered guard
    CHECK(run("compute pathology --input " + sub + " --scope all").exit_code == 0);
    const std::string cmd = "SUBMEASURE_LAB_MAX_GROUND=4 " + binary() +
                            " compute pathology --input " + sub + " --scope all 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[256];
    while (fread(buf, 1, sizeof(buf), pipe) > 0) {
    }
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("decimal display column is additive only") {
    const std::string input = write_minpath().string();
    const RunResult plain = run("compute hat --input " + input + " --set all");
    const RunResult dec = run("--decimal 6 compute hat --input " + input + " --set all");
    auto pj = sml::Json::parse(plain.out);
    auto dj = sml::Json::parse(dec.out);
    CHECK(dj["value"] == pj["value"]);
    CHECK(dj.contains("value_decimal"));
    CHECK(dj["value_decimal"] == "1.5");
    CHECK_FALSE(pj.contains("value_decimal"));
}

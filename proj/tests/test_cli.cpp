#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>

#include <sys/wait.h>

namespace {

// The harness exports KB_CLI as the path to the kbalance binary.
const char* cli_path() {
    return std::getenv("KB_CLI");
}

#define REQUIRE_CLI()                                  \
    const char* cli = cli_path();                      \
    if (cli == nullptr) {                              \
        MESSAGE("KB_CLI not set; skipping CLI test");  \
        return;                                        \
    }

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& command) {
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        output.append(buffer, n);
    }
    const int status = ::pclose(pipe);
    RunResult result;
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    result.output = std::move(output);
    return result;
}

std::string quoted(const std::string& text) {
    return "'" + text + "'";
}

// stdout only; stderr is discarded.
RunResult run_cli(const std::string& cli, const std::string& args) {
    return run(quoted(cli) + " " + args + " 2>/dev/null");
}

// stderr only; stdout is discarded.
RunResult run_cli_stderr(const std::string& cli, const std::string& args) {
    return run(quoted(cli) + " " + args + " 2>&1 1>/dev/null");
}

struct TempFile {
    std::string path;

    TempFile(const std::string& name, const std::string& content)
        : path("/tmp/kb_cli_" + name) {
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::string asset_path() {
    return std::string(KB_TEST_DATA_DIR) + "/champions_league_2003_2019.csv";
}

const std::string kRankEuclideanW2Top5 =
    "rank,entity,value\n"
    "1,Barcelona,12.767145334803704\n"
    "2,Real Madrid,12.124355652982141\n"
    "3,Bayern Munich,10.63014581273465\n"
    "4,Liverpool,9.7979589711327115\n"
    "5,Chelsea,9.7467943448089631\n";

}  // namespace

TEST_CASE("cli: validate accepts the embedded dataset") {
    REQUIRE_CLI();
    const RunResult result = run_cli(cli, "validate");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "ok: 256 records, 16 seasons, 58 clubs, 17 countries\n");
}

TEST_CASE("cli: validate explains inconsistent stage counts") {
    REQUIRE_CLI();
    const TempFile bad("bad_counts.csv",
                       "season,club,country,stage\n"
                       "2003,A,X,W\n"
                       "2003,B,X,W\n");
    const RunResult result = run_cli(cli, "validate " + quoted(bad.path));
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("season 2003") != std::string::npos);
    CHECK(result.output.find("stage W") != std::string::npos);
}

TEST_CASE("cli: validate distinguishes syntax errors from missing files") {
    REQUIRE_CLI();
    const TempFile bad("bad_stage.csv",
                       "season,club,country,stage\n"
                       "2003,A,X,WINNER\n");
    CHECK(run_cli(cli, "validate " + quoted(bad.path)).exit_code == 2);
    CHECK(run_cli(cli, "validate /does/not/exist.csv").exit_code == 2);
}

TEST_CASE("cli: rank produces the full-period euclidean table") {
    REQUIRE_CLI();
    const RunResult result =
        run_cli(cli, "rank --index euclidean --weights W2 --top 5");
    CHECK(result.exit_code == 0);
    CHECK(result.output == kRankEuclideanW2Top5);
    // byte-for-byte reproducible
    CHECK(run_cli(cli, "rank --index euclidean --weights W2 --top 5").output ==
          result.output);
}

TEST_CASE("cli: rank keeps ties together") {
    REQUIRE_CLI();
    const RunResult result =
        run_cli(cli, "rank --index rectangle --weights W1 --top 5");
    CHECK(result.exit_code == 0);
    CHECK(result.output ==
          "rank,entity,value\n"
          "1,Barcelona,64\n"
          "1,Real Madrid,64\n"
          "3,Liverpool,32\n"
          "4,Bayern Munich,28\n"
          "4,Chelsea,28\n");
}

TEST_CASE("cli: custom weights replicate the matching preset") {
    REQUIRE_CLI();
    const RunResult preset = run_cli(cli, "rank --weights W2 --top 10");
    const RunResult custom = run_cli(cli, "rank --weights w:5,4,3,2,1 --top 10");
    CHECK(preset.exit_code == 0);
    CHECK(custom.exit_code == 0);
    CHECK(preset.output == custom.output);
}

TEST_CASE("cli: hhi emits a labelled series") {
    REQUIRE_CLI();
    const RunResult result = run_cli(
        cli, "hhi --scope within-country --country Portugal --index euclidean --weights W2");
    CHECK(result.exit_code == 0);
    CHECK(result.output.rfind("label_year,entity,value\n", 0) == 0);
    CHECK(result.output.find("\n2019,Portugal,0.51471862576142957\n") != std::string::npos);
}

TEST_CASE("cli: share tracks one entity across windows") {
    REQUIRE_CLI();
    const RunResult result = run_cli(
        cli, "share --scope countries --entity Spain --index euclidean --weights W2");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\n2019,Spain,0.23545619519497307\n") != std::string::npos);

    const RunResult gaps =
        run_cli(cli, "share --scope within-country --country Cyprus --entity APOEL");
    CHECK(gaps.exit_code == 0);
    CHECK(gaps.output.find("\n2008,APOEL,\n") != std::string::npos);
    CHECK(gaps.output.find("\n2012,APOEL,1\n") != std::string::npos);
}

TEST_CASE("cli: usage mistakes exit with 2") {
    REQUIRE_CLI();
    CHECK(run_cli(cli, "").exit_code == 2);
    CHECK(run_cli(cli, "conquer").exit_code == 2);
    CHECK(run_cli(cli, "rank --no-such-flag").exit_code == 2);
    CHECK(run_cli(cli, "rank --index gini").exit_code == 2);
    CHECK(run_cli(cli, "rank --weights W9").exit_code == 2);
    CHECK(run_cli(cli, "rank --weights w:1,2").exit_code == 2);
    CHECK(run_cli(cli, "hhi --scope within-country").exit_code == 2);
    CHECK(run_cli(cli, "hhi --scope clubs --country Spain").exit_code == 2);
    CHECK(run_cli(cli, "hhi --scope clubs --group England,Spain").exit_code == 2);
    CHECK(run_cli(cli, "share --scope clubs --entity 'Narnia United'").exit_code == 2);
    CHECK(run_cli(cli, "rank --window-len 0").exit_code == 2);
    CHECK(run_cli(cli, "rank --window-len 17").exit_code == 2);
    CHECK(run_cli(cli, "hhi --window-len 0").exit_code == 2);
    CHECK(run_cli(cli, "hhi --window-len 17").exit_code == 2);
    CHECK(run_cli(cli, "--help").exit_code == 0);
}

TEST_CASE("cli: discouraged pairings warn on stderr only") {
    REQUIRE_CLI();
    const RunResult warning =
        run_cli_stderr(cli, "rank --index euclidean --weights W1 --top 3");
    CHECK(warning.exit_code == 0);
    CHECK(warning.output.find("warning:") != std::string::npos);

    const RunResult note =
        run_cli_stderr(cli, "rank --index rectangle --weights W4 --top 3");
    CHECK(note.exit_code == 0);
    CHECK(note.output.find("note:") != std::string::npos);

    const RunResult clean = run_cli_stderr(cli, "rank --index euclidean --weights W2 --top 3");
    CHECK(clean.exit_code == 0);
    CHECK(clean.output.empty());

    // the warning never contaminates stdout
    const RunResult payload = run_cli(cli, "rank --index euclidean --weights W1 --top 3");
    CHECK(payload.output.rfind("rank,entity,value\n", 0) == 0);
}

TEST_CASE("cli: --data and KB_DATASET select the dataset") {
    REQUIRE_CLI();
    const std::string asset = quoted(asset_path());
    const RunResult by_flag = run_cli(cli, "validate --data " + asset);
    CHECK(by_flag.exit_code == 0);
    CHECK(by_flag.output == "ok: 256 records, 16 seasons, 58 clubs, 17 countries\n");

    const RunResult by_env = run("KB_DATASET=" + asset + " " + quoted(cli) +
                                 " rank --top 5 2>/dev/null");
    CHECK(by_env.exit_code == 0);
    CHECK(by_env.output == kRankEuclideanW2Top5);

    CHECK(run("KB_DATASET=/does/not/exist.csv " + quoted(cli) + " rank 2>/dev/null")
              .exit_code == 2);
    // an explicit --data wins over the environment
    const RunResult flag_wins = run("KB_DATASET=/does/not/exist.csv " + quoted(cli) +
                                    " rank --data " + asset + " --top 5 2>/dev/null");
    CHECK(flag_wins.exit_code == 0);
    CHECK(flag_wins.output == kRankEuclideanW2Top5);
}

TEST_CASE("cli: kernel selection does not change results") {
    REQUIRE_CLI();
    const std::string args = "rank --index euclidean --weights W2";
    const RunResult normal = run_cli(cli, args);
    const RunResult scalar =
        run("KB_KERNELS=scalar " + quoted(cli) + " " + args + " 2>/dev/null");
    CHECK(normal.exit_code == 0);
    CHECK(scalar.exit_code == 0);
    CHECK(normal.output == scalar.output);
}

TEST_CASE("cli: axioms reports the expected violation pattern") {
    REQUIRE_CLI();
    const RunResult result = run_cli(cli, "axioms --trials 500");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("seed: 42\n") != std::string::npos);
    CHECK(result.output.find("trials: 500\n") != std::string::npos);
    CHECK(result.output.find("pattern: expected\n") != std::string::npos);
    CHECK(result.output.find("UNEXPECTED") == std::string::npos);
    CHECK(run_cli(cli, "axioms --trials 500").output == result.output);
}

TEST_CASE("cli: plot renders a series CSV") {
    REQUIRE_CLI();
    const TempFile series("plot_input.csv", run_cli(cli, "hhi --scope countries").output);
    const RunResult svg = run_cli(cli, "plot " + quoted(series.path) + " --title Countries");
    CHECK(svg.exit_code == 0);
    CHECK(svg.output.rfind("<?xml", 0) == 0);
    CHECK(svg.output.find("<polyline") != std::string::npos);
    CHECK(svg.output.find("<title>Countries</title>") != std::string::npos);
    CHECK(run_cli(cli, "plot " + quoted(series.path) + " --title Countries").output ==
          svg.output);

    const TempFile broken("plot_broken.csv", "not,a,series\n");
    CHECK(run_cli(cli, "plot " + quoted(broken.path)).exit_code == 2);
    CHECK(run_cli(cli, "plot /does/not/exist.csv").exit_code == 2);
    CHECK(run_cli(cli, "plot").exit_code == 2);
}

TEST_CASE("cli: output files match stdout") {
    REQUIRE_CLI();
    const TempFile sink("rank_out.csv", "");
    const RunResult direct = run_cli(cli, "rank --top 5");
    const RunResult redirected =
        run_cli(cli, "rank --top 5 -o " + quoted(sink.path));
    CHECK(redirected.exit_code == 0);
    CHECK(redirected.output.empty());
    std::ifstream in(sink.path, std::ios::binary);
    std::string written((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(written == direct.output);
}

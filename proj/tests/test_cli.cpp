#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pex/pa_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

// Runs the CLI binary with a shell command line; stdout captured to a file.
RunResult run_cli(const fs::path& dir, const std::string& args) {
    fs::path out = dir / "stdout.txt";
    std::string cmd = std::string(PEX_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                      (dir / "stderr.txt").string();
    int rc = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WEXITSTATUS(rc);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    res.stdout_text = ss.str();
    return res;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("pex_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("gen-group, decompose, extend pipeline reproduces the golden file") {
    TempDir tmp;
    auto r1 = run_cli(tmp.path, "gen-group --family agl1 --q 4 -o " + (tmp.path / "g.pa").string());
    CHECK(r1.exit_code == 0);
    auto g = pex::read_pa(tmp.path / "g.pa");
    CHECK(g.pa.num_rows() == 12);
    CHECK(*g.find("family") == "agl1");

    auto r2 = run_cli(tmp.path, "decompose --group " + (tmp.path / "g.pa").string() + " --mode cyclic -o " +
                                    (tmp.path / "blk").string());
    CHECK(r2.exit_code == 0);
    REQUIRE(fs::exists(tmp.path / "blk003.pa"));

    std::ofstream desc(tmp.path / "sys.json");
    desc << R"({"n":4,"d":4,
      "blocks":[{"file":"blk001.pa"},{"file":"blk002.pa"},{"file":"blk003.pa"}],
      "P":[[0,2],[1,3],[4]], "Q":[[0,1],[2,3],[4]]})";
    desc.close();
    auto r3 = run_cli(tmp.path, "extend --mode simple --system " + (tmp.path / "sys.json").string() + " -o " +
                                    (tmp.path / "ext.pa").string() + " --verify");
    CHECK(r3.exit_code == 0);
    CHECK(slurp(tmp.path / "ext.pa") == slurp(fs::path(PEX_DATA_DIR) / "ext_agl4_golden.pa"));
}

TEST_CASE("verify exit codes") {
    TempDir tmp;
    fs::path golden = fs::path(PEX_DATA_DIR) / "ext_agl4_golden.pa";
    CHECK(run_cli(tmp.path, "verify --pa " + golden.string() + " --distance 4 --mode full").exit_code == 0);
    CHECK(run_cli(tmp.path, "verify --pa " + golden.string() + " --distance 5 --mode full").exit_code == 1);

    // corrupt copy: duplicate a row, claim distance 1
    auto f = pex::read_pa(golden);
    f.pa.append(f.pa.row_perm(0));
    f.pa.certified_min_distance.reset();
    pex::write_pa(f, tmp.path / "corrupt.pa");
    auto r = run_cli(tmp.path, "--json verify --pa " + (tmp.path / "corrupt.pa").string() + " --distance 1 --mode full");
    CHECK(r.exit_code == 1);
    auto j = json::parse(r.stdout_text);
    CHECK(j.at("status") == "fail");
    CHECK(j.at("metrics").at("report").at("min_distance_found") == 0);
    CHECK(j.at("metrics").at("report").contains("witness_pair"));

    // usage errors
    CHECK(run_cli(tmp.path, "verify --pa nope.pa").exit_code == 2);
    CHECK(run_cli(tmp.path, "verify --pa nope.pa --distance 3 --mode full").exit_code == 2);
    CHECK(run_cli(tmp.path, "verify --pa " + golden.string() + " --distance 4 --mode sampled").exit_code == 2);
    CHECK(run_cli(tmp.path, "frobnicate").exit_code == 2);
}

TEST_CASE("json summaries share a stable schema") {
    TempDir tmp;
    for (const std::string& args :
         {std::string("gen-group --family agl1 --q 5 -o ") + (tmp.path / "g5.pa").string(),
          std::string("gen-mols --q 4 -o ") + (tmp.path / "m4.mols").string(),
          std::string("ledger conjecture --n 118 --bound 936")}) {
        auto r = run_cli(tmp.path, "--json " + args);
        INFO(args);
        CHECK(r.exit_code == 0);
        auto j = json::parse(r.stdout_text);
        for (const char* key : {"command", "inputs", "outputs", "metrics", "status"}) CHECK(j.contains(key));
        CHECK(j.at("status") == "ok");
    }
}

TEST_CASE("seeded search-coset runs are byte-identical") {
    TempDir tmp;
    auto r0 = run_cli(tmp.path, "gen-group --family pgl2 --q 5 -o " + (tmp.path / "g.pa").string());
    REQUIRE(r0.exit_code == 0);
    std::string cmd = "search-coset --mode random --group " + (tmp.path / "g.pa").string() +
                      " --distance 4 --budget 300 --seed 11 -o ";
    CHECK(run_cli(tmp.path, cmd + (tmp.path / "r1.pa").string()).exit_code == 0);
    CHECK(run_cli(tmp.path, cmd + (tmp.path / "r2.pa").string()).exit_code == 0);
    auto a = slurp(tmp.path / "r1.pa"), b = slurp(tmp.path / "r2.pa");
    CHECK(a == b);
    CHECK(!a.empty());

    // randomized commands demand a seed
    CHECK(run_cli(tmp.path, "search-coset --mode random --group " + (tmp.path / "g.pa").string() +
                                " --distance 4 --budget 10 -o " + (tmp.path / "r3.pa").string())
              .exit_code == 2);
}

TEST_CASE("search-coset ilp finds and revalidates representatives") {
    TempDir tmp;
    run_cli(tmp.path, "gen-group --family agl1 --q 5 -o " + (tmp.path / "g.pa").string());
    auto r = run_cli(tmp.path, "--json search-coset --mode ilp --group " + (tmp.path / "g.pa").string() +
                                   " --distance 4 --count 2 -o " + (tmp.path / "reps.pa").string());
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.stdout_text);
    CHECK(j.at("metrics").at("found") == 2);
    auto reps = pex::read_pa(tmp.path / "reps.pa");
    CHECK(reps.pa.num_rows() == 2);
    CHECK(*reps.find("d") == "4");
}

TEST_CASE("search-partition greedy and ilp agree on the 4-symbol instance") {
    TempDir tmp;
    run_cli(tmp.path, "gen-group --family agl1 --q 4 -o " + (tmp.path / "g.pa").string());
    run_cli(tmp.path, "decompose --group " + (tmp.path / "g.pa").string() + " --mode cyclic -o " +
                          (tmp.path / "blk").string());
    std::string blocks = (tmp.path / "blk001.pa").string() + "," + (tmp.path / "blk002.pa").string();
    auto rg = run_cli(tmp.path, "--json search-partition --mode greedy --blocks " + blocks + " --symbols k=2");
    REQUIRE(rg.exit_code == 0);
    auto jg = json::parse(rg.stdout_text);
    CHECK(jg.at("metrics").at("coverage") == 8);

    auto ri = run_cli(tmp.path, "--json search-partition --mode ilp --blocks " + blocks + " --symbols k=2");
    REQUIRE(ri.exit_code == 0);
    auto ji = json::parse(ri.stdout_text);
    CHECK(ji.at("metrics").at("coverage") == 8);
    CHECK(ji.at("metrics").at("proven_optimal") == true);

    auto rl = run_cli(tmp.path, "search-partition --mode ilp --blocks " + blocks + " --symbols k=2 --export-lp " +
                                    (tmp.path / "model.lp").string());
    CHECK(rl.exit_code == 0);
    auto lp = slurp(tmp.path / "model.lp");
    CHECK(lp.find("Maximize") == 0);
    CHECK(lp.find("Binary") != std::string::npos);
}

TEST_CASE("kron subcommand") {
    TempDir tmp;
    run_cli(tmp.path, "gen-group --family agl1 --q 3 -o " + (tmp.path / "g3.pa").string());
    run_cli(tmp.path, "decompose --group " + (tmp.path / "g3.pa").string() + " --mode cyclic -o " +
                          (tmp.path / "b").string());
    std::string blocks = (tmp.path / "b001.pa").string() + "," + (tmp.path / "b002.pa").string();
    auto r = run_cli(tmp.path, "--json kron --blockwise --verify --left " + blocks + " --right " + blocks +
                                   " -o " + (tmp.path / "prod.pa").string());
    REQUIRE(r.exit_code == 0);
    auto j = json::parse(r.stdout_text);
    CHECK(j.at("metrics").at("rows") == 18);
    CHECK(j.at("metrics").at("measured_min_distance") == 8);

    auto re = run_cli(tmp.path, "--json kron --extend --verify --left " + blocks + " --right " + blocks + " -o " +
                                    (tmp.path / "ext.pa").string());
    REQUIRE(re.exit_code == 0);
    auto je = json::parse(re.stdout_text);
    CHECK(je.at("metrics").at("bound") == 18);
    CHECK(je.at("metrics").at("n") == 10);
}

TEST_CASE("ledger subcommands") {
    TempDir tmp;
    fs::path csv = tmp.path / "ledger.csv";
    auto r1 = run_cli(tmp.path, "ledger record --file " + csv.string() +
                                    " --n 39 --d 37 --bound 1301 --method two-step --artifact a.pa "
                                    "--verified-mode full --history " +
                                    (tmp.path / "h.jsonl").string());
    CHECK(r1.exit_code == 0);
    // a smaller bound later does not lower the current entry
    run_cli(tmp.path, "ledger record --file " + csv.string() +
                          " --n 39 --d 37 --bound 195 --method mols --source published");
    auto r2 = run_cli(tmp.path, "--json ledger compare --file " + csv.string());
    CHECK(r2.exit_code == 0);
    auto j = json::parse(r2.stdout_text);
    REQUIRE(j.at("metrics").at("rows").size() == 1);
    CHECK(j.at("metrics").at("rows")[0].at("verdict") == "match");

    CHECK(run_cli(tmp.path, "ledger conjecture --n 145 --bound 1429").exit_code == 1);
    CHECK(run_cli(tmp.path, "ledger conjecture --n 118 --bound 936").exit_code == 0);
    CHECK(run_cli(tmp.path, "ledger conjecture --embedded").exit_code == 0);
}

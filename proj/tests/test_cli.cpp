#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* env = std::getenv("COGNET_CLI");
    REQUIRE_MESSAGE(env != nullptr, "COGNET_CLI must point at the cognet binary");
    return env;
}

int run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing file: " << path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::path("cli_test_tmp") / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("validate maps admissibility to exit codes") {
    CHECK(run("validate") == 0);

    const fs::path dir = fresh_dir("validate");
    const fs::path cfg = dir / "bad.cfg";
    std::ofstream(cfg) << "path_loss_alpha = 2\n";
    CHECK(run("--config " + cfg.string() + " validate") == 2);
    CHECK(run("--config " + (dir / "missing.cfg").string() + " validate") == 2);
}

TEST_CASE("unknown flags exit with the usage code") {
    CHECK(run("--no-such-flag validate") == 2);
    CHECK(run("frobnicate") == 2);
}

TEST_CASE("domain errors exit with the numeric code") {
    const fs::path dir = fresh_dir("numeric");
    const fs::path cfg = dir / "eta0.cfg";
    std::ofstream(cfg) << "eta_fraction = 0\n"; // C0 = 0
    CHECK(run("--config " + cfg.string() + " --out " + dir.string() +
              " per-radius solve") == 3);
}

TEST_CASE("placement output and manifest") {
    const fs::path dir = fresh_dir("place");
    CHECK(run("--seed 5 --out " + dir.string() + " place --n-mode fixed --n 5") == 0);
    const std::string csv = slurp(dir / "placement.csv");
    CHECK(csv.rfind("role,pair_id,x,y", 0) == 0);
    int ctx_rows = 0;
    std::istringstream is(csv);
    std::string line;
    while (std::getline(is, line))
        if (line.rfind("ctx,", 0) == 0) ++ctx_rows;
    CHECK(ctx_rows == 5);
    CHECK(fs::exists(dir / "manifest_place.json"));
}

TEST_CASE("same seed gives byte-identical csv output") {
    const fs::path a = fresh_dir("det_a"), b = fresh_dir("det_b");
    const std::string args = "--seed 99 interference mc --trials 200";
    CHECK(run("--out " + a.string() + " " + args) == 0);
    CHECK(run("--out " + b.string() + " " + args) == 0);
    CHECK(slurp(a / "interference_mc.csv") == slurp(b / "interference_mc.csv"));

    const fs::path c = fresh_dir("det_c");
    CHECK(run("--out " + c.string() + " --seed 100 interference mc --trials 200") == 0);
    CHECK(slurp(a / "interference_mc.csv") != slurp(c / "interference_mc.csv"));
}

TEST_CASE("dump-raw writes per-trial draws") {
    const fs::path dir = fresh_dir("raw");
    CHECK(run("--seed 3 --dump-raw --out " + dir.string() +
              " interference mc --trials 50") == 0);
    const std::string raw = slurp(dir / "interference_mc_raw.csv");
    CHECK(raw.rfind("trial,I0", 0) == 0);
    // Header plus one row per trial.
    CHECK(std::count(raw.begin(), raw.end(), '\n') == 51);
}

TEST_CASE("replay reproduces the run byte for byte") {
    const fs::path dir = fresh_dir("replay_src");
    CHECK(run("--seed 12 --out " + dir.string() + " bounds grid --r0-list 1,2,4") == 0);
    const std::string original = slurp(dir / "bounds_grid.csv");

    const fs::path replay_dir = fresh_dir("replay_dst");
    CHECK(run("--out " + replay_dir.string() + " replay " +
              (dir / "manifest_bounds_grid.json").string()) == 0);
    CHECK(slurp(replay_dir / "bounds_grid.csv") == original);
}

TEST_CASE("figure8 sweep pins its header and the R0=2 exact value") {
    const fs::path dir = fresh_dir("fig8");
    CHECK(run("--out " + dir.string() + " bounds figure8") == 0);
    const std::string csv = slurp(dir / "figure8.csv");
    CHECK(csv.rfind("R0,lb1,lb2,ub,exact", 0) == 0);
    // Second data row is R0=2; its exact column is pi/9.
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    std::getline(is, line);
    std::getline(is, line);
    CHECK(line.rfind("2,", 0) == 0);
    CHECK(line.find("0.349065850399") != std::string::npos);
}

TEST_CASE("infeasible receiver placement exits with the placement code") {
    const fs::path dir = fresh_dir("placefail");
    const fs::path cfg = dir / "dense.cfg";
    // eps_c exclusions cover essentially the whole disc, so pairing must fail.
    std::ofstream(cfg) << "density_lambda = 3\nrx_protect_eps_c = 1.9\ndmax = 2\n";
    CHECK(run("--config " + cfg.string() + " --out " + dir.string() +
              " place --n-mode fixed --n 50") == 4);
}

TEST_CASE("lattice scan emits the theta/value/tail columns") {
    const fs::path dir = fresh_dir("lattice");
    CHECK(run("--out " + dir.string() +
              " interference lattice --K 20 --theta-grid 8") == 0);
    const std::string csv = slurp(dir / "lattice_scan.csv");
    CHECK(csv.rfind("theta,value,tail_bound", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
}

} // TEST_SUITE

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ghwforge/families.hpp"
#include "ghwforge/json_io.hpp"

using namespace ghwforge;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path() / "ghwforge_cli_tests";
    fs::create_directories(dir);
    const fs::path out = dir / ("out" + std::to_string(counter++) + ".txt");
    const std::string cmd =
        std::string(GHWFORGE_BIN) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

fs::path fixture_dir() {
    const fs::path dir = fs::temp_directory_path() / "ghwforge_cli_fixtures";
    fs::create_directories(dir);
    return dir;
}

std::string write_elliptic_files(std::string* sets_path) {
    const auto [code, sets] = elliptic_f4_example();
    const fs::path dir = fixture_dir();
    const fs::path code_file = dir / "elliptic.json";
    const fs::path sets_file = dir / "elliptic_sets.json";
    save_json_file(code_file.string(), code_to_json(code));
    save_json_file(sets_file.string(), subset_system_to_json(sets));
    if (sets_path != nullptr) *sets_path = sets_file.string();
    return code_file.string();
}

}  // namespace

TEST_CASE("gf info prints the canonical field") {
    const RunResult r = run("gf info --q 9");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"modulus\": [") != std::string::npos);
    CHECK(r.out.find("\"p\": 3") != std::string::npos);
    const RunResult bad = run("gf info --q 12");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("code ghw prints the hierarchy and honors --method") {
    std::string sets_file;
    const std::string code_file = write_elliptic_files(&sets_file);
    for (const std::string method : {"auto", "subcode", "zeroset"}) {
        const RunResult r = run("code ghw " + code_file + " --method " + method);
        CHECK(r.exit_code == 0);
        CHECK(r.out.substr(0, 6) == "5 7 8\n");
    }
    const RunResult md = run("code mindist " + code_file);
    CHECK(md.exit_code == 0);
    CHECK(md.out.substr(0, 2) == "5\n");
}

TEST_CASE("code ghw on an identity code") {
    const fs::path file = fixture_dir() / "identity.json";
    save_json_file(file.string(),
                   code_to_json(LinearCode(Matrix::identity(Field::make(2, 1), 4))));
    const RunResult r = run("code ghw " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 8) == "1 2 3 4\n");
}

TEST_CASE("code check-thm21 passes on a valid generator") {
    const std::string code_file = write_elliptic_files(nullptr);
    const RunResult r = run("code check-thm21 " + code_file);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("solve exit codes: 2 infeasible, 0 feasible, 1 error") {
    std::string sets_file;
    const std::string code_file = write_elliptic_files(&sets_file);

    const RunResult infeasible = run("solve " + code_file + " " + sets_file);
    CHECK(infeasible.exit_code == 2);
    CHECK(infeasible.out.find("\"witness\": [") != std::string::npos);
    CHECK(infeasible.out.find("1,") != std::string::npos);

    const fs::path empty_sets = fixture_dir() / "empty_sets.json";
    save_json_file(empty_sets.string(),
                   subset_system_to_json(SubsetSystem(8, {{}, {}, {}})));
    const RunResult feasible =
        run("solve " + code_file + " " + empty_sets.string());
    CHECK(feasible.exit_code == 0);
    CHECK(feasible.out.find("\"status\": \"feasible\"") != std::string::npos);

    const RunResult error = run("solve " + code_file + " /no/such/file.json");
    CHECK(error.exit_code == 1);

    // --oracle agreement keeps the exit code
    const RunResult with_oracle =
        run("solve --oracle " + code_file + " " + sets_file);
    CHECK(with_oracle.exit_code == 2);
}

TEST_CASE("sets check modes and exit codes") {
    std::string sets_file;
    const std::string code_file = write_elliptic_files(&sets_file);

    CHECK(run("sets check " + sets_file + " --mode card").exit_code == 0);
    CHECK(run("sets check " + sets_file + " --mode mds").exit_code == 0);
    CHECK(run("sets check " + sets_file + " --mode ghw --code " + code_file)
              .exit_code == 0);
    CHECK(run("sets check " + sets_file + " --mode ghw").exit_code == 1);

    const fs::path fat = fixture_dir() / "fat_sets.json";
    save_json_file(fat.string(), subset_system_to_json(SubsetSystem(
                                     8, {{0, 1, 2, 3, 4}, {5}, {6}})));
    CHECK(run("sets check " + fat.string() + " --mode card").exit_code == 2);
}

TEST_CASE("construct rs / rm1 / cubic write loadable codes") {
    const fs::path dir = fixture_dir();
    const fs::path rs = dir / "rs.json";
    CHECK(run("--out " + rs.string() + " construct rs --q 11 --n 6 --k 3")
              .exit_code == 0);
    const LinearCode rs_code = code_from_json(load_json_file(rs.string()));
    CHECK(rs_code.length() == 6);
    CHECK(rs_code.dimension() == 3);

    const fs::path rm = dir / "rm.json";
    CHECK(run("--out " + rm.string() + " construct rm1 --q 2 --m 3").exit_code == 0);
    const LinearCode rm_code = code_from_json(load_json_file(rm.string()));
    CHECK(rm_code.length() == 8);
    CHECK(rm_code.dimension() == 4);

    const fs::path curve = dir / "curve.json";
    PlaneCubic cubic;
    cubic.coeffs = {4, 0, 0, 0, 0, 1, 0, 1, 0, 0};
    cubic.line = {0, 0, 1};
    save_json_file(curve.string(), cubic_to_json(cubic));
    const fs::path cubic_code = dir / "cubic.json";
    CHECK(run("--out " + cubic_code.string() +
              " construct cubic --q 5 --curve " + curve.string())
              .exit_code == 0);
    const LinearCode cc = code_from_json(load_json_file(cubic_code.string()));
    CHECK(cc.length() == 7);
    CHECK(cc.dimension() == 3);
}

TEST_CASE("paper verify passes and reports enough checks") {
    const fs::path out = fixture_dir() / "verify.json";
    const RunResult r = run("--out " + out.string() + " paper verify");
    CHECK(r.exit_code == 0);
    const auto j = load_json_file(out.string());
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() >= 10);
}

TEST_CASE("falsify finds the elliptic counterexample and is byte-stable") {
    std::string sets_file;
    const std::string code_file = write_elliptic_files(&sets_file);
    const fs::path out1 = fixture_dir() / "falsify1.json";
    const fs::path out2 = fixture_dir() / "falsify2.json";
    const std::string args = "falsify --code " + code_file +
                             " --mode ghw --seed 5 --trials 10000";
    CHECK(run("--out " + out1.string() + " " + args).exit_code == 0);
    CHECK(run("--out " + out2.string() + " " + args).exit_code == 0);
    std::ifstream a(out1), b(out2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    const auto j = load_json_file(out1.string());
    CHECK(j["found"] == true);

    // the emitted counterexample re-verifies through the CLI solve path
    const fs::path system_file = fixture_dir() / "counterexample_sets.json";
    save_json_file(system_file.string(), j["system"]);
    CHECK(run("solve --oracle " + code_file + " " + system_file.string())
              .exit_code == 2);
}

TEST_CASE("falsify exits 3 when no counterexample exists in budget") {
    // the verified-safe GF(11) point set; consecutive points would be
    // falsifiable through equal-sum pair triples
    const RunResult r = run(
        "falsify --family rs --q 11 --n 6 --k 3 --points 0,1,2,3,4,6 "
        "--mode mds --seed 3 --trials 500");
    CHECK(r.exit_code == 3);
}

TEST_CASE("falsify on RM(1,3)/GF(2) with cardinality+ghw gating") {
    const RunResult r = run(
        "falsify --family rm1 --q 2 --m 3 "
        "--mode cardinality+ghw --seed 11 --trials 10000");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"found\": true") != std::string::npos);
}

TEST_CASE("GHWFORGE_BUDGET caps enumeration") {
    const std::string code_file = write_elliptic_files(nullptr);
    const fs::path dir = fixture_dir();
    const std::string cmd = "GHWFORGE_BUDGET=5 " + std::string(GHWFORGE_BIN) +
                            " code ghw " + code_file + " > " +
                            (dir / "budget.txt").string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 1);
    std::ifstream in(dir / "budget.txt");
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("budget") != std::string::npos);
}

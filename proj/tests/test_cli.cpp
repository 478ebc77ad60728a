#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "smatrix/constructions.hpp"
#include "smatrix/io.hpp"
#include "smatrix/matrix.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const char* exe = std::getenv("SMATRIX_CLI");
    REQUIRE_MESSAGE(exe != nullptr, "SMATRIX_CLI must point at the binary");
    const std::string cmd = '"' + std::string(exe) + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        result.output.append(buf, got);
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("smatrix_cli_" + std::to_string(::getpid()));
        std::filesystem::remove_all(d);
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path_of(const std::string& name) {
    return (scratch_dir() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), ("missing file " + path).c_str());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("construct writes a validated matrix and check confirms equality") {
    const std::string mat = path_of("s7.txt");
    const CliResult built =
        run_cli("construct --kind smatrix-qr --order 7 --out " + mat);
    CHECK(built.exit_code == 0);
    CHECK(built.output.find("validated: true") != std::string::npos);

    const smatrix::Matrix s = smatrix::read_matrix_file(mat);
    CHECK(smatrix::is_smatrix(s));

    const std::string report = path_of("s7.json");
    const CliResult checked =
        run_cli("check --input " + mat + " --out " + report);
    CHECK(checked.exit_code == 0);
    CHECK(checked.output.find("smatrix-equality") != std::string::npos);
    const auto j = nlohmann::json::parse(slurp(report));
    CHECK(j["equality_class"] == "smatrix-equality");
    CHECK(j["n"] == 7);
}

TEST_CASE("check handles signed constructions through the product bound") {
    const std::string mat = path_of("h4.txt");
    CHECK(run_cli("construct --kind hadamard-sylvester --order 4 --out " + mat)
              .exit_code == 0);
    const CliResult checked = run_cli("check --input " + mat);
    CHECK(checked.exit_code == 0);
    CHECK(checked.output.find("signed matrix") != std::string::npos);
    CHECK(checked.output.find("exact structural equality") != std::string::npos);
}

TEST_CASE("construct reports usage and domain failures distinctly") {
    CHECK(run_cli("construct --kind made-up --order 4").exit_code == 2);
    CHECK(run_cli("construct --order 4").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
    // Power-of-two constraint violated: valid usage, invalid domain.
    CHECK(run_cli("construct --kind hadamard-sylvester --order 12").exit_code == 1);
    CHECK(run_cli("construct --kind smatrix-qr --order 6").exit_code == 1);
    CHECK(run_cli("check --input " + path_of("no_such_file.txt")).exit_code == 1);
}

TEST_CASE("unparseable input exits 1 with a positioned diagnostic") {
    const std::string bad = path_of("bad.txt");
    {
        std::ofstream out(bad);
        out << "2 2\n1 2\n3 oops\n";
    }
    const CliResult r = run_cli("check --input " + bad);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("line 3") != std::string::npos);
    CHECK(r.output.find("column 3") != std::string::npos);
}

TEST_CASE("the smatrix kind shorthand maps to the residue construction") {
    const CliResult r = run_cli("construct --kind smatrix --order 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("validated: true") != std::string::npos);
}

TEST_CASE("paley construction covers non-power-of-two orders") {
    const CliResult r = run_cli("construct --kind hadamard-paley --order 12");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("validated: true") != std::string::npos);
    const CliResult s =
        run_cli("construct --kind smatrix-from-hadamard --order 11");
    CHECK(s.exit_code == 0);
    CHECK(s.output.find("order 11") != std::string::npos);
}

TEST_CASE("audit selectors run against matrix files") {
    const std::string id4 = path_of("id4.txt");
    smatrix::write_matrix_file(smatrix::Matrix::identity(4), id4);
    const CliResult prop = run_cli("audit --input " + id4 + " --lemma prop");
    CHECK(prop.exit_code == 0);
    CHECK(prop.output.find("hypothesis not met") != std::string::npos);

    const std::string id8 = path_of("id8.txt");
    smatrix::write_matrix_file(smatrix::Matrix::identity(8), id8);
    const CliResult idx =
        run_cli("audit --input " + id8 + " --lemma indices --t 3");
    CHECK(idx.exit_code == 0);
    CHECK(idx.output.find("selected 4 rows") != std::string::npos);

    const std::string id16 = path_of("id16.txt");
    smatrix::write_matrix_file(smatrix::Matrix::identity(16), id16);
    const std::string out = path_of("rounded.json");
    const CliResult rp = run_cli("audit --input " + id16 +
                                 " --lemma rounded --out " + out);
    CHECK(rp.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["t"] == 4);
    CHECK(j["indices"].size() == 5);

    CHECK(run_cli("audit --input " + id4 + " --lemma nonsense").exit_code == 2);
    CHECK(run_cli("audit --input " + id4 + " --lemma indices --t 2").exit_code == 1);
}

TEST_CASE("scan emits csv and rejects bad ranges") {
    const CliResult direct = run_cli("scan --from 1000 --to 1010");
    CHECK(direct.exit_code == 0);
    CHECK(direct.output.rfind("n,alpha_lower,l1_upper,contradiction\n", 0) == 0);
    CHECK(direct.output.find("\n1000,") != std::string::npos);

    const std::string out = path_of("scan.csv");
    const CliResult filed = run_cli("scan --from 1000 --to 1100 --out " + out);
    CHECK(filed.exit_code == 0);
    CHECK(filed.output.find("holds everywhere") != std::string::npos);
    CHECK(slurp(out).find("1100,") != std::string::npos);

    CHECK(run_cli("scan --from 998 --to 1010").exit_code == 1);
    CHECK(run_cli("scan --from 1001 --to 1010").exit_code == 1);
}

TEST_CASE("optimize writes reproducible reports and a best matrix file") {
    const std::string out1 = path_of("run1.json");
    const std::string out2 = path_of("run2.json");
    const std::string args = "optimize --n 3 --starts 4 --seed 5 --out ";
    const CliResult a = run_cli(args + out1);
    CHECK(a.exit_code == 0);
    CHECK(a.output.find("best ||A^-1||_F") != std::string::npos);
    const CliResult b = run_cli(args + out2);
    CHECK(b.exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));  // byte-identical reruns

    const auto j = nlohmann::json::parse(slurp(out1));
    CHECK(j["n"] == 3);
    CHECK(j["best_value"].get<double>() > 1.0);
    CHECK(j["gap"].get<double>() > -1e-6);
    // The best point also lands next to the report in matrix text form.
    const smatrix::Matrix best =
        smatrix::read_matrix_file(path_of("run1.best.txt"));
    CHECK(best.rows() == 3);
}

TEST_CASE("optimize accepts a key=value config file") {
    const std::string cfg = path_of("opt.cfg");
    {
        std::ofstream out(cfg);
        out << "# tightened run\n"
            << "max_iters = 500\n"
            << "step_init = 0.1  # larger first step\n"
            << "record_trajectory = true\n";
    }
    const std::string out = path_of("cfg_run.json");
    const CliResult r = run_cli("optimize --n 2 --starts 2 --seed 1 --config " +
                                cfg + " --out " + out);
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["n"] == 2);  // the explicit flag wins
    CHECK(j["trajectory"].is_array());

    const std::string bad = path_of("bad.cfg");
    {
        std::ofstream o(bad);
        o << "stepsize = 0.1\n";  // unknown key
    }
    CHECK(run_cli("optimize --n 2 --starts 2 --seed 1 --config " + bad)
              .exit_code == 1);
}

TEST_CASE("oracle prints the exhaustive minimum") {
    const CliResult r = run_cli("oracle --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("minimum ||A^-1||_F = 1.5") != std::string::npos);
    CHECK(r.output.find("6 binary matrices") != std::string::npos);

    const std::string out = path_of("oracle2.json");
    CHECK(run_cli("oracle --n 2 --out " + out).exit_code == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["minimizer_count"] == 2);
    CHECK(j["minimizers"].size() == 2);

    CHECK(run_cli("oracle --n 5").exit_code == 1);
}

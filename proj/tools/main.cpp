// Command-line front end: construction, bound checks, structure audits,
// the scalar inequality scan, and the box-constrained optimizer.
//
// Exit codes: 0 success, 1 domain or input error, 2 usage error,
// 3 counterexample found (a below-bound report or a negative optimizer gap).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "smatrix/audit.hpp"
#include "smatrix/bounds.hpp"
#include "smatrix/constructions.hpp"
#include "smatrix/io.hpp"
#include "smatrix/linalg.hpp"
#include "smatrix/optimizer.hpp"
#include "smatrix/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw smatrix::Error("cannot open '" + path + "' for writing");
    out << body;
    if (!out.flush()) throw smatrix::Error("write to '" + path + "' failed");
}

// Preserves a violating matrix losslessly next to its bound report so the
// claim can be replayed through `check`.
void dump_counterexample(const smatrix::Matrix& a, const smatrix::json& report,
                         const std::string& stem) {
    smatrix::write_matrix_file(a, stem + ".matrix.txt");
    write_text_file(stem + ".report.json", smatrix::dump_json(report));
    std::cout << "counterexample artifacts: " << stem << ".matrix.txt, "
              << stem << ".report.json\n";
}

int run_construct(const std::string& kind, std::size_t order,
                  const std::string& out_path) {
    using namespace smatrix;
    Matrix body;
    bool valid = false;
    if (kind == "hadamard-sylvester") {
        unsigned k = 0;
        while ((1ULL << k) < order) ++k;
        if ((1ULL << k) != order) {
            throw DomainError("order must be a power of two");
        }
        body = sylvester_hadamard(k).body;
        valid = is_hadamard(body);
    } else if (kind == "hadamard-paley") {
        if (order < 4) throw DomainError("order must be at least 4");
        body = paley_hadamard(order - 1).body;
        valid = is_hadamard(body);
    } else if (kind == "smatrix-qr" || kind == "smatrix") {
        body = quadratic_residue_smatrix(order).body;
        valid = is_smatrix(body);
    } else if (kind == "smatrix-from-hadamard") {
        // Needs a Hadamard matrix of order one larger.
        const std::size_t h_order = order + 1;
        HadamardMatrix h;
        if ((h_order & (h_order - 1)) == 0) {
            unsigned k = 0;
            while ((1ULL << k) < h_order) ++k;
            h = sylvester_hadamard(k);
        } else {
            h = paley_hadamard(order);
        }
        body = smatrix_from_hadamard(h).body;
        valid = is_smatrix(body);
    } else {
        throw DomainError("unknown construction kind '" + kind + "'");
    }
    std::cout << kind << " order " << body.rows() << " validated: "
              << (valid ? "true" : "false") << "\n";
    if (!out_path.empty()) {
        write_matrix_file(body, out_path);
        std::cout << "wrote " << out_path << "\n";
    } else {
        std::cout << matrix_to_text(body);
    }
    return valid ? kExitOk : kExitDomain;
}

int run_check(const std::string& input, double tolerance,
              const std::string& out_path) {
    using namespace smatrix;
    const Matrix a = read_matrix_file(input);
    bool negative = false;
    for (double v : a.entries()) negative = negative || v < 0.0;

    json report;
    int code = kExitOk;
    if (negative) {
        // Signed input: only the inverse-vs-max product bound applies.
        const PropositionReport rep = proposition_report(a, tolerance);
        report = to_json(rep);
        std::cout << "signed matrix, order " << rep.n
                  << ": ||A^-1||_F * ||A||_max = " << rep.product
                  << (rep.equality ? " (exact structural equality)" : "")
                  << "\n";
    } else {
        const BoundReport rep = bound_report(a, tolerance);
        report = to_json(rep);
        std::cout << "order " << rep.n << ": ||A^-1||_F = " << rep.inv_frobenius
                  << ", target bound = " << rep.sloane_bound << ", class = "
                  << to_string(rep.equality_class) << "\n";
        if (rep.equality_class == EqualityClass::BelowConjecture) {
            dump_counterexample(a, report, "counterexample");
            code = kExitCounterexample;
        }
    }
    if (!out_path.empty()) {
        write_text_file(out_path, dump_json(report));
        std::cout << "wrote " << out_path << "\n";
    }
    return code;
}

int run_audit(const std::string& input, const std::string& lemma, int t,
              const std::string& out_path) {
    using namespace smatrix;
    const Matrix b = read_matrix_file(input);
    json report;
    if (lemma == "prop") {
        const PropAudit audit = audit_prop(b);
        report = to_json(audit);
        std::cout << "order " << audit.n << ": hypothesis "
                  << (audit.hypothesis_met ? "met" : "not met")
                  << ", c = " << audit.c
                  << ", identity residuals = " << audit.prop1_residual << " / "
                  << audit.prop3_residual
                  << ", norm margin = " << audit.prop2_margin << "\n";
    } else if (lemma == "indices") {
        const IndexCertificate cert = find_good_indices(b, t < 0 ? 3 : t);
        report = to_json(cert);
        std::cout << "order " << cert.n << ", t = " << cert.t
                  << ": score sum = " << cert.score_sum << ", selected "
                  << cert.entries.size() << " rows, per-index bounds "
                  << (cert.all_bounds_ok ? "all hold" : "violated") << "\n";
    } else if (lemma == "rounded") {
        const RoundedPair pair = extract_rounded_pair(b, t < 0 ? 4 : t);
        report = to_json(pair);
        std::cout << "order " << pair.n << ", t = " << pair.t << ": gram "
                  << (pair.gram_ok ? "exact" : "defective")
                  << ", projection gaps "
                  << (pair.gaps_ok ? "within" : "outside")
                  << " thresholds\n";
    } else {
        throw DomainError("unknown lemma selector '" + lemma + "'");
    }
    if (!out_path.empty()) {
        write_text_file(out_path, dump_json(report));
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitOk;
}

int run_scan(long long from, long long to, const std::string& out_path) {
    using namespace smatrix;
    const auto rows = contradiction_scan(from, to);
    bool all_hold = true;
    for (const auto& row : rows) all_hold = all_hold && row.contradiction;
    const std::string csv = scan_to_csv(rows);
    if (!out_path.empty()) {
        write_text_file(out_path, csv);
        std::cout << "scanned " << rows.size() << " even orders in [" << from
                  << ", " << to << "]: contradiction "
                  << (all_hold ? "holds everywhere" : "FAILS somewhere")
                  << "\nwrote " << out_path << "\n";
    } else {
        std::cout << csv;
    }
    return all_hold ? kExitOk : kExitDomain;
}

// key=value lines; '#' starts a comment. Unknown keys are an error so typos
// do not silently fall back to defaults.
void apply_config_file(smatrix::OptimizerConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw smatrix::Error("cannot open '" + path + "' for reading");
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                throw smatrix::Error("config line is not key=value: " + line);
            }
            continue;
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "n") cfg.n = std::stoull(value);
        else if (key == "starts") cfg.starts = std::stoull(value);
        else if (key == "max_iters") cfg.max_iters = std::stoull(value);
        else if (key == "step_init") cfg.step_init = std::stod(value);
        else if (key == "step_shrink") cfg.step_shrink = std::stod(value);
        else if (key == "singularity_floor") cfg.singularity_floor = std::stod(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "tolerance") cfg.tolerance = std::stod(value);
        else if (key == "record_trajectory") cfg.record_trajectory = value == "true";
        else throw smatrix::Error("unknown config key '" + key + "'");
    }
}

int run_optimize(const smatrix::OptimizerConfig& cfg, const std::string& out_path) {
    using namespace smatrix;
    const OptimizerRun run = projected_gradient_minimize(cfg);
    const json report = to_json(run, cfg);
    std::cout << "n = " << cfg.n << ", " << cfg.starts
              << " starts: best ||A^-1||_F = " << run.best_value
              << ", bound = " << run.bound << ", gap = " << run.gap << "\n";
    if (!out_path.empty()) {
        write_text_file(out_path, dump_json(report));
        const auto dot = out_path.rfind('.');
        const std::string stem =
            dot == std::string::npos ? out_path : out_path.substr(0, dot);
        write_matrix_file(run.best_matrix, stem + ".best.txt");
        std::cout << "wrote " << out_path << " and " << stem << ".best.txt\n";
    }
    if (run.gap < -1e-6) {
        dump_counterexample(run.best_matrix, report, "counterexample");
        return kExitCounterexample;
    }
    return kExitOk;
}

int run_oracle(std::size_t n, const std::string& out_path) {
    using namespace smatrix;
    const OracleResult res = binary_oracle(n);
    std::cout << "n = " << n << ": minimum ||A^-1||_F = " << res.min_value
              << " attained by " << res.minimizers.size()
              << " binary matrices\n";
    if (!out_path.empty()) {
        json j;
        j["n"] = n;
        j["min_value"] = res.min_value;
        j["minimizer_count"] = res.minimizers.size();
        json mins = json::array();
        for (const Matrix& m : res.minimizers) mins.push_back(to_json(m));
        j["minimizers"] = std::move(mins);
        write_text_file(out_path, dump_json(j));
        std::cout << "wrote " << out_path << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification and search toolkit for Frobenius-norm lower "
                 "bounds on inverses of non-negative matrices"};
    app.require_subcommand(1);

    std::string kind, input, lemma, out_path, config_path;
    std::size_t order = 0;
    double tolerance = smatrix::kEqualityTolerance;
    int t = -1;
    long long from = 1000, to = 1000;
    smatrix::OptimizerConfig cfg;

    auto* construct = app.add_subcommand("construct", "Build a validated matrix");
    construct->add_option("--kind", kind, "Construction family")
        ->required()
        ->check(CLI::IsMember({"hadamard-sylvester", "hadamard-paley",
                               "smatrix-qr", "smatrix-from-hadamard",
                               "smatrix"}));  // shorthand for smatrix-qr
    construct->add_option("--order", order, "Output matrix order")->required();
    construct->add_option("--out", out_path, "Write the matrix here");

    auto* check = app.add_subcommand("check", "Evaluate the bound report");
    check->add_option("--input", input, "Matrix file")->required();
    check->add_option("--tolerance", tolerance, "Equality tolerance");
    check->add_option("--out", out_path, "Write the JSON report here");

    auto* audit = app.add_subcommand("audit", "Run a structure audit");
    audit->add_option("--input", input, "Matrix file")->required();
    audit->add_option("--lemma", lemma, "Audit selector")
        ->required()
        ->check(CLI::IsMember({"prop", "indices", "rounded"}));
    audit->add_option("--t", t, "Certificate size parameter");
    audit->add_option("--out", out_path, "Write the JSON report here");

    auto* scan = app.add_subcommand("scan", "Replay the scalar contradiction chain");
    scan->add_option("--from", from, "First even order")->required();
    scan->add_option("--to", to, "Last even order")->required();
    scan->add_option("--out", out_path, "Write the CSV here");

    auto* optimize = app.add_subcommand("optimize", "Minimize ||A^-1||_F over the box");
    optimize->add_option("--n", cfg.n, "Matrix order")->required();
    optimize->add_option("--starts", cfg.starts, "Multi-start count")->required();
    optimize->add_option("--seed", cfg.seed, "Random seed")->required();
    optimize->add_option("--config", config_path, "key=value config file");
    optimize->add_option("--out", out_path, "Write the JSON run report here");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive binary minimum");
    oracle->add_option("--n", cfg.n, "Matrix order (at most 4)")->required();
    oracle->add_option("--out", out_path, "Write the JSON result here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(kind, order, out_path);
        if (check->parsed()) return run_check(input, tolerance, out_path);
        if (audit->parsed()) return run_audit(input, lemma, t, out_path);
        if (scan->parsed()) return run_scan(from, to, out_path);
        if (optimize->parsed()) {
            if (!config_path.empty()) {
                smatrix::OptimizerConfig file_cfg = cfg;
                apply_config_file(file_cfg, config_path);
                // Explicit flags win over file values.
                file_cfg.n = cfg.n;
                file_cfg.starts = cfg.starts;
                file_cfg.seed = cfg.seed;
                cfg = file_cfg;
            }
            return run_optimize(cfg, out_path);
        }
        if (oracle->parsed()) return run_oracle(cfg.n, out_path);
    } catch (const smatrix::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const smatrix::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

#include "smatrix/serialize.hpp"

#include <sstream>

namespace smatrix {

json to_json(const Matrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Vector& v) {
    json out = json::array();
    for (double e : v.entries()) out.push_back(e);
    return out;
}

json to_json(const BoundReport& r) {
    json j;
    j["n"] = r.n;
    j["inv_frobenius"] = r.inv_frobenius;
    j["max_entry"] = r.max_entry;
    j["hadamard_bound"] = r.hadamard_bound;
    j["sloane_bound"] = r.sloane_bound;
    if (r.cheng_even_bound) {
        j["cheng_even_bound"] = *r.cheng_even_bound;
    } else {
        j["cheng_even_bound"] = nullptr;
    }
    j["slack_vs_sloane"] = r.slack_vs_sloane;
    j["equality_class"] = to_string(r.equality_class);
    return j;
}

json to_json(const PropositionReport& r) {
    json j;
    j["n"] = r.n;
    j["inv_frobenius"] = r.inv_frobenius;
    j["max_entry"] = r.max_entry;
    j["product"] = r.product;
    j["structural"] = r.structural;
    j["equality"] = r.equality;
    return j;
}

json to_json(const ChainReport& r) {
    json j;
    j["inner_FG"] = r.inner_FG;
    j["lhs"] = r.lhs;
    j["normF_sq"] = r.normF_sq;
    j["normG_sq"] = r.normG_sq;
    j["h_upper"] = r.h_upper;
    j["chain_holds"] = r.chain_holds;
    return j;
}

json to_json(const PropAudit& r) {
    json j;
    j["n"] = r.n;
    j["c"] = r.c;
    j["r"] = to_json(r.r);
    j["inv_frobenius"] = r.inv_frobenius;
    j["hypothesis_met"] = r.hypothesis_met;
    j["prop1_residual"] = r.prop1_residual;
    j["prop2_margin"] = r.prop2_margin;
    j["prop3_residual"] = r.prop3_residual;
    return j;
}

json to_json(const IndexCertificate& r) {
    json j;
    j["n"] = r.n;
    j["t"] = r.t;
    j["hypothesis_met"] = r.hypothesis_met;
    j["score_sum"] = r.score_sum;
    json entries = json::array();
    for (const IndexEntry& e : r.entries) {
        json je;
        je["index"] = e.index;
        je["score"] = e.score;
        je["h_column_sq"] = e.h_column_sq;
        je["l1_round_gap"] = e.l1_round_gap;
        je["r_i"] = e.r_i;
        je["row_sum_rounded"] = e.row_sum_rounded;
        je["bounds_ok"] = e.bounds_ok;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["all_bounds_ok"] = r.all_bounds_ok;
    return j;
}

json to_json(const RoundedPair& r) {
    json j;
    j["n"] = r.n;
    j["t"] = r.t;
    j["hypothesis_met"] = r.hypothesis_met;
    j["indices"] = r.indices;
    j["C_hat"] = to_json(r.C_hat);
    j["y"] = to_json(r.y);
    j["gram_ok"] = r.gram_ok;
    j["gram_diag_defect"] = r.gram_diag_defect;
    j["gram_offdiag_defect"] = r.gram_offdiag_defect;
    j["y_norm_sq"] = r.y_norm_sq;
    j["y_norm_ok"] = r.y_norm_ok;
    j["projection_gaps"] = to_json(r.projection_gaps);
    j["offdiag_threshold"] = r.offdiag_threshold;
    j["diag_threshold"] = r.diag_threshold;
    j["gaps_ok"] = r.gaps_ok;
    j["cc_offdiag_estimate"] = r.cc_offdiag_estimate;
    j["cc_offdiag_below_7_10"] = r.cc_offdiag_below_7_10;
    j["round_dist_bound"] = r.round_dist_bound;
    j["round_dist_below_3_10"] = r.round_dist_below_3_10;
    return j;
}

json to_json(const ContradictionLedger& r) {
    json j;
    j["n"] = r.n;
    j["t"] = r.t;
    j["ratio"] = r.ratio;
    j["ratio_in_range"] = r.ratio_in_range;
    j["mean_lo"] = r.mean_lo;
    j["mean_hi"] = r.mean_hi;
    j["mean_sq_lower"] = r.mean_sq_lower;
    j["alpha_lower"] = r.alpha_lower;
    j["alpha_gt_39_100"] = r.alpha_gt_39_100;
    j["l1_upper"] = r.l1_upper;
    j["contradiction"] = r.contradiction;
    return j;
}

json to_json(const OptimizerRun& r, const OptimizerConfig& config) {
    json j;
    j["n"] = config.n;
    j["seed"] = config.seed;
    j["starts"] = config.starts;
    j["best_value"] = r.best_value;
    j["bound"] = r.bound;
    j["gap"] = r.gap;
    j["iterations_used"] = r.iterations_used;
    j["converged"] = r.converged;
    j["start_index"] = r.start_index;
    json starts = json::array();
    for (const StartSummary& s : r.starts) {
        json js;
        js["start_index"] = s.start_index;
        js["value"] = s.value;
        js["iterations"] = s.iterations;
        js["converged"] = s.converged;
        js["failed"] = s.failed;
        starts.push_back(std::move(js));
    }
    j["start_summaries"] = std::move(starts);
    j["best_matrix"] = to_json(r.best_matrix);
    if (!r.trajectory.empty()) j["trajectory"] = r.trajectory;
    return j;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::string scan_to_csv(const std::vector<ContradictionLedger>& rows) {
    std::ostringstream out;
    out << "n,alpha_lower,l1_upper,contradiction\n";
    out.precision(17);
    for (const ContradictionLedger& r : rows) {
        out << r.n << ',' << r.alpha_lower << ',' << r.l1_upper << ','
            << (r.contradiction ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace smatrix

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "smatrix/audit.hpp"
#include "smatrix/bounds.hpp"
#include "smatrix/matrix.hpp"
#include "smatrix/optimizer.hpp"

namespace smatrix {

// All reports serialize through nlohmann::ordered_json: field order is
// fixed and doubles print in shortest round-trip form, so equal inputs
// give byte-identical output.
using json = nlohmann::ordered_json;

json to_json(const Matrix& a);
json to_json(const Vector& v);
json to_json(const BoundReport& r);
json to_json(const PropositionReport& r);
json to_json(const ChainReport& r);
json to_json(const PropAudit& r);
json to_json(const IndexCertificate& r);
json to_json(const RoundedPair& r);
json to_json(const ContradictionLedger& r);
json to_json(const OptimizerRun& r, const OptimizerConfig& config);

std::string dump_json(const json& j);  // 2-space indent plus trailing newline

// "n,alpha_lower,l1_upper,contradiction" rows.
std::string scan_to_csv(const std::vector<ContradictionLedger>& rows);

}  // namespace smatrix

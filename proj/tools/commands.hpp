#pragma once

#include "report.hpp"

#include "uqs/whittaker.hpp"

#include <string>
#include <vector>

namespace uqs::cli {

RootSystem make_root_system(const RunConfig& cfg);

// Exact scalars travel as strings: "3", "-1/8", "1 + 2*e^2 (m=5)". Numbers are accepted on input.
std::string scalar_string(const Cyc& x);
Cyc parse_scalar(const json& value);

// eta file: {"l": [...], "x_minus": {"(1,1)": "..."}, "x_plus": {...}, "m": 3}. Missing x-maps mean zero,
// except that a file without "x_minus" is completed to the slice character of c when c is given.
CentralCharacter eta_from_json(const WhittakerContext& ctx, const json& j, const std::vector<Cyc>* c);
json eta_to_json(const CentralCharacter& eta);
json load_json_file(const std::string& path);

// dim Sigma_s = (l - l') + 2 D_0 + l(s), from the fixed space, the fixed roots and the length.
int slice_dimension(const RootSystem& rs, const AdaptedOrdering& ao);

Certificate run_roots(const RunConfig& cfg);
Certificate run_carter(const RunConfig& cfg);
Certificate run_ordering(const RunConfig& cfg);
Certificate run_relations(const RunConfig& cfg);
Certificate run_ueta(const RunConfig& cfg);
Certificate run_verify_dkp(const RunConfig& cfg);
Certificate run_walg(const RunConfig& cfg);

// One certificate per Weyl group element, or per conjugacy class (minimal-length representative) in
// "classes" mode; items run on cfg.jobs threads and are reported in enumeration order.
std::vector<Certificate> run_sweep(const RunConfig& cfg);

// Dispatch by subcommand name ("roots", ..., "verify dkp", "walg", "sweep").
Report run_command(const std::string& command, const RunConfig& cfg);

}  // namespace uqs::cli

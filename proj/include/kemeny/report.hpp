#pragma once

#include <nlohmann/json.hpp>

#include "kemeny/chain.hpp"
#include "kemeny/hitting.hpp"

namespace kemeny {

struct AnalyzeOptions {
    unsigned k_max = 4;
    unsigned series_len = 20;
};

nlohmann::ordered_json poly_to_json(const Polynomial& p);
nlohmann::ordered_json ratfunc_to_json(const RationalFunction& f);

/// Full analysis report for one chain: stationary law, characteristic
/// polynomials, Kemeny constant by all three routes, factorial moments and
/// the identity-check verdicts. Deterministic: same chain, same bytes.
nlohmann::ordered_json analyze_report(const Chain& c, const AnalyzeOptions& opts);

bool all_checks_pass(const nlohmann::ordered_json& report);

/// One-screen human summary of a report.
std::string report_summary(const nlohmann::ordered_json& report);

}  // namespace kemeny

#include "kemeny/report.hpp"

#include <sstream>

namespace kemeny {

using nlohmann::ordered_json;

ordered_json poly_to_json(const Polynomial& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

ordered_json ratfunc_to_json(const RationalFunction& f) {
    ordered_json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

ordered_json analyze_report(const Chain& c, const AnalyzeOptions& opts) {
    const std::size_t d = c.size();
    const CharBundle bundle = CharBundle::compute(c);

    ordered_json report;
    report["report_version"] = 1;
    report["chain"] = c.to_json();

    ordered_json rho = ordered_json::array();
    for (const auto& r : stationary(c)) rho.push_back(r.str());
    report["stationary"] = std::move(rho);
    report["Z"] = bundle.Z.str();
    report["Z_decimal"] = bundle.Z.decimal();

    report["det_poly"] = poly_to_json(bundle.det_poly);
    report["k0_poly"] = poly_to_json(bundle.k0);
    ordered_json pis;
    for (std::size_t v = 0; v < d; ++v) pis[c.states()[v]] = poly_to_json(bundle.pi[v]);
    report["pi_polys"] = std::move(pis);

    const KemenyResult kem = kemeny(c);
    ordered_json kj;
    kj["by_mean_hitting"] = kem.by_mean_hitting.str();
    kj["by_polynomial"] = kem.by_polynomial.str();
    kj["by_eigenvalues"] = kem.by_eigenvalues;
    kj["Q1"] = kem.Q1.str();
    kj["decimal"] = kem.by_mean_hitting.decimal();
    report["kemeny"] = std::move(kj);

    const MomentTable moments = factorial_moments(c, opts.k_max);
    ordered_json mj;
    mj["k_max"] = opts.k_max;
    ordered_json cells = ordered_json::array();
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
            ordered_json cell;
            cell["u"] = c.states()[u];
            cell["v"] = c.states()[v];
            ordered_json vals = ordered_json::array();
            for (const auto& m : moments.values[u][v]) vals.push_back(m.str());
            cell["values"] = std::move(vals);
            cells.push_back(std::move(cell));
        }
    mj["table"] = std::move(cells);
    report["moments"] = std::move(mj);

    ordered_json checks = ordered_json::array();
    for (const auto& check : verify_identities(c)) {
        ordered_json cj;
        cj["name"] = check.name;
        cj["pass"] = check.pass;
        if (!check.pass) cj["witness"] = check.witness;
        checks.push_back(std::move(cj));
    }
    report["identity_checks"] = std::move(checks);

    return report;
}

bool all_checks_pass(const ordered_json& report) {
    for (const auto& check : report.at("identity_checks"))
        if (!check.at("pass").get<bool>()) return false;
    return true;
}

std::string report_summary(const ordered_json& report) {
    std::ostringstream os;
    const auto& states = report.at("chain").at("states");
    os << "chain: " << states.size() << " states [";
    for (std::size_t i = 0; i < states.size(); ++i)
        os << (i ? ", " : "") << states[i].get<std::string>();
    os << "]\n";
    os << "stationary:";
    for (const auto& r : report.at("stationary")) os << " " << r.get<std::string>();
    os << "\nZ = " << report.at("Z").get<std::string>() << "\n";
    os << "kemeny constant = " << report.at("kemeny").at("by_mean_hitting").get<std::string>()
       << " (" << report.at("kemeny").at("decimal").get<std::string>() << ")\n";
    for (const auto& check : report.at("identity_checks")) {
        os << (check.at("pass").get<bool>() ? "PASS" : "FAIL") << " "
           << check.at("name").get<std::string>();
        if (!check.at("pass").get<bool>())
            os << " [" << check.value("witness", std::string{}) << "]";
        os << "\n";
    }
    return os.str();
}

}  // namespace kemeny

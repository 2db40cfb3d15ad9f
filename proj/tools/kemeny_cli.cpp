// Command-line surface for exact Markov-chain hitting-time analysis.
//
// Subcommands:
//   analyze    full report (stationary law, polynomials, Kemeny constant,
//              moments, identity-check verdicts) as JSON
//   gf         one hitting-time generating function + its series prefix
//   plot-data  CSV samples of the pi_v polynomials on [0,1]
//   simulate   seeded Monte Carlo with exact-vs-empirical comparison
//
// Exit codes: 0 success (analyze: all identity checks pass), 1 identity-check
// failure or step-cap overrun, 2 parse/validation/usage errors.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "kemeny/mcsim.hpp"
#include "kemeny/report.hpp"

namespace {

using namespace kemeny;

struct CommonArgs {
    std::string input;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--input", args.input, "chain input file")->required();
    cmd->add_option("--format", args.format, "input format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", args.out, "output file (default: stdout)");
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open output file '" + path + "'");
    f << text;
}

int run_analyze(const CommonArgs& common, const AnalyzeOptions& opts) {
    const Chain chain = Chain::from_file(common.input, common.format);
    const auto report = analyze_report(chain, opts);
    const std::string text = report.dump(2) + "\n";
    if (common.out.empty()) {
        std::cout << text;
    } else {
        write_output(common.out, text);
        std::cout << report_summary(report);
    }
    return all_checks_pass(report) ? 0 : 1;
}

int run_gf(const CommonArgs& common, const std::string& u_label, const std::string& v_label,
           unsigned t, unsigned series_len) {
    const Chain chain = Chain::from_file(common.input, common.format);
    const std::size_t u = chain.index_of(u_label), v = chain.index_of(v_label);
    const HittingGF g = hitting_gf(chain, u, v, t);

    std::ostringstream os;
    os << "G_{" << u_label << "," << v_label << "}^{>=" << t << "}(x) = " << g.gf.str() << "\n";
    os << "num: " << poly_to_json(g.gf.num()).dump() << "\n";
    os << "den: " << poly_to_json(g.gf.den()).dump() << "\n";
    os << "series:";
    for (const auto& p : g.gf.series(series_len)) os << " " << p.str();
    os << "\n";
    write_output(common.out, os.str());
    return 0;
}

int run_plot_data(const CommonArgs& common, unsigned samples) {
    if (samples < 2) throw ParseError("--samples must be >= 2");
    const Chain chain = Chain::from_file(common.input, common.format);
    const auto bundle = CharBundle::compute(chain);

    std::ostringstream os;
    os << "x";
    for (std::size_t v = 1; v <= chain.size(); ++v) os << ",pi_" << v;
    os << "\n";
    for (unsigned i = 0; i < samples; ++i) {
        const Rational x(static_cast<long>(i), static_cast<long>(samples - 1));
        os << x.decimal();
        for (const auto& pi : bundle.pi) os << "," << pi.eval(x).decimal();
        os << "\n";
    }
    write_output(common.out, os.str());
    return 0;
}

int run_simulate(const CommonArgs& common, const std::string& u_label,
                 const std::optional<std::string>& v_label, unsigned t, const SimConfig& cfg,
                 const std::optional<std::string>& geo_x0) {
    const Chain chain = Chain::from_file(common.input, common.format);
    const std::size_t u = chain.index_of(u_label);

    if (geo_x0) {
        const Rational x0 = Rational::parse(*geo_x0);
        const auto sim = simulate_geometric_stop(chain, u, x0, cfg);
        const auto exact = geometric_stop_law(chain, u, x0);
        const double n = static_cast<double>(sim.n_paths);
        std::cout << "geometric stop at x0 = " << x0.str() << ", " << sim.n_paths << " paths, seed "
                  << cfg.seed << "\n";
        std::cout << "state,empirical,exact,delta,z\n";
        for (std::size_t s = 0; s < chain.size(); ++s) {
            const double emp = static_cast<double>(sim.counts[s]) / n;
            const double ex = exact[s].to_double();
            const double se = std::sqrt(ex * (1.0 - ex) / n);
            const double z = se > 0.0 ? (emp - ex) / se : 0.0;
            std::cout << chain.states()[s] << "," << emp << "," << exact[s].str() << ","
                      << (emp - ex) << "," << z << "\n";
        }
        return 0;
    }

    std::optional<std::size_t> v;
    if (v_label) v = chain.index_of(*v_label);
    const auto sim = simulate_hitting(chain, u, v, t, cfg);

    Rational exact_mean =
        v ? mean_hitting_shifted(chain, u, *v, t)
          : q_shift(chain, t) / CharBundle::compute(chain).Z;
    const double ex = exact_mean.to_double();
    const double z = sim.std_error > 0.0 ? (sim.mean - ex) / sim.std_error : 0.0;

    std::cout << "hitting simulation: u=" << u_label << (v_label ? ", v=" + *v_label : ", X~rho")
              << ", t=" << t << ", paths=" << sim.n_paths << ", seed=" << cfg.seed << "\n";
    std::cout << "empirical mean = " << sim.mean << " (SE " << sim.std_error << ")\n";
    std::cout << "exact mean     = " << exact_mean.str() << " (" << exact_mean.decimal() << ")\n";
    std::cout << "delta = " << (sim.mean - ex) << ", z = " << z << "\n";

    if (!common.out.empty()) {
        std::ostringstream os;
        os << "m,count,exact_probability\n";
        std::vector<std::vector<Rational>> dp;
        std::uint64_t dp_max = 0;
        if (v && t == 0) {
            dp_max = sim.histogram.empty() ? 0 : sim.histogram.rbegin()->first;
            dp = dp_hitting_oracle(chain, *v, dp_max);
        }
        for (const auto& [m, count] : sim.histogram) {
            os << m << "," << count << ",";
            if (v && t == 0) os << dp[u][m].str();
            os << "\n";
        }
        write_output(common.out, os.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hitting-time and Kemeny-constant analysis of finite Markov chains"};
    app.require_subcommand(1);

    CommonArgs common;
    AnalyzeOptions opts;
    std::string u_label, v_label;
    unsigned t = 0;
    SimConfig cfg;
    cfg.n_paths = 10000;
    unsigned samples = 101;
    std::string geo_x0;

    auto* analyze = app.add_subcommand("analyze", "full exact analysis report");
    add_common(analyze, common);
    analyze->add_option("--kmax", opts.k_max, "highest factorial moment order")
        ->check(CLI::Range(0u, 8u));
    analyze->add_option("--series-len", opts.series_len, "series prefix length");

    auto* gf = app.add_subcommand("gf", "hitting-time generating function");
    add_common(gf, common);
    gf->add_option("--u", u_label, "start state")->required();
    gf->add_option("--v", v_label, "target state")->required();
    gf->add_option("--t", t, "shift t")->check(CLI::Range(0u, kMaxShift));
    gf->add_option("--series-len", opts.series_len, "series prefix length");

    auto* plot = app.add_subcommand("plot-data", "CSV samples of the pi_v polynomials on [0,1]");
    add_common(plot, common);
    plot->add_option("--samples", samples, "sample count, >= 2");

    auto* sim = app.add_subcommand("simulate", "seeded Monte Carlo vs exact values");
    add_common(sim, common);
    sim->add_option("--u", u_label, "start state")->required();
    auto* vopt = sim->add_option("--v", v_label, "target state (default: X drawn from rho)");
    sim->add_option("--t", t, "shift t")->check(CLI::Range(0u, kMaxShift));
    sim->add_option("--seed", cfg.seed, "RNG seed");
    sim->add_option("--paths", cfg.n_paths, "number of simulated paths");
    auto* geo = sim->add_option("--geometric", geo_x0, "sample C at a Geometric(1-x0) time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(common, opts);
        if (gf->parsed()) return run_gf(common, u_label, v_label, t, opts.series_len);
        if (plot->parsed()) return run_plot_data(common, samples);
        if (sim->parsed())
            return run_simulate(common, u_label,
                                vopt->count() ? std::optional(v_label) : std::nullopt, t, cfg,
                                geo->count() ? std::optional(geo_x0) : std::nullopt);
    } catch (const StepCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ChainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

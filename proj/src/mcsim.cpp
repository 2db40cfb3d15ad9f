#include "kemeny/mcsim.hpp"

#include <cmath>
#include <stdexcept>

#include "kemeny/hitting.hpp"

namespace kemeny {

namespace {

std::vector<std::vector<double>> cumulative_rows(const RationalMatrix& m) {
    std::vector<std::vector<double>> cum(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        double acc = 0.0;
        cum[i].reserve(m[i].size());
        for (const auto& p : m[i]) {
            acc += p.to_double();
            cum[i].push_back(acc);
        }
        cum[i].back() = 1.0;  // absorb rounding in the last bucket
    }
    return cum;
}

std::size_t sample_index(const std::vector<double>& cum, double r) {
    for (std::size_t j = 0; j + 1 < cum.size(); ++j)
        if (r < cum[j]) return j;
    return cum.size() - 1;
}

}  // namespace

std::vector<std::vector<Rational>> dp_hitting_oracle(const Chain& c, std::size_t v,
                                                     std::size_t m_max) {
    if (v >= c.size()) throw UnknownState("state index out of range");
    const std::size_t d = c.size();
    std::vector<std::vector<Rational>> table(d, std::vector<Rational>(m_max + 1, Rational(0)));
    table[v][0] = Rational(1);

    // taboo[w] = P_w(tau_v^{>=1} = m) for w != v, built stepwise; starting mass
    // at v is absorbed at m = 0, so rows u != v follow the pure taboo recursion
    std::vector<Rational> prev(d, Rational(0));
    for (std::size_t m = 1; m <= m_max; ++m) {
        std::vector<Rational> cur(d, Rational(0));
        for (std::size_t u = 0; u < d; ++u) {
            if (m == 1) {
                cur[u] = c.at(u, v);
            } else {
                for (std::size_t w = 0; w < d; ++w) {
                    if (w == v) continue;
                    cur[u] += c.at(u, w) * prev[w];
                }
            }
        }
        for (std::size_t u = 0; u < d; ++u)
            if (u != v) table[u][m] = cur[u];
        prev = std::move(cur);
    }
    return table;
}

SimSummary simulate_hitting(const Chain& c, std::size_t u, std::optional<std::size_t> v,
                            unsigned t, const SimConfig& cfg) {
    if (u >= c.size() || (v && *v >= c.size())) throw UnknownState("state index out of range");
    if (cfg.n_paths < 1) throw std::invalid_argument("n_paths must be >= 1");
    if (cfg.max_steps < c.size()) throw std::invalid_argument("max_steps must be >= d");

    const auto cum = cumulative_rows(c.matrix());
    std::vector<double> rho_cum;
    if (!v) {
        double acc = 0.0;
        for (const auto& p : stationary(c)) {
            acc += p.to_double();
            rho_cum.push_back(acc);
        }
        rho_cum.back() = 1.0;
    }

    SimSummary sum;
    sum.n_paths = cfg.n_paths;
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t path = 0; path < cfg.n_paths; ++path) {
        SplitMix64 rng = SplitMix64::substream(cfg.seed, path);
        const std::size_t target = v ? *v : sample_index(rho_cum, rng.uniform());

        std::uint64_t tau = 0;
        std::size_t state = u;
        if (!(t == 0 && state == target)) {
            bool hit = false;
            for (std::uint64_t k = 1; k <= cfg.max_steps; ++k) {
                state = sample_index(cum[state], rng.uniform());
                if (k >= t && state == target) {
                    tau = k;
                    hit = true;
                    break;
                }
            }
            if (!hit)
                throw StepCapExceeded("path " + std::to_string(path) + " exceeded " +
                                      std::to_string(cfg.max_steps) + " steps");
        }
        s1 += static_cast<double>(tau);
        s2 += static_cast<double>(tau) * static_cast<double>(tau);
        ++sum.histogram[tau];
    }

    const double n = static_cast<double>(cfg.n_paths);
    sum.mean = s1 / n;
    sum.variance = cfg.n_paths > 1 ? (s2 - n * sum.mean * sum.mean) / (n - 1.0) : 0.0;
    if (sum.variance < 0.0) sum.variance = 0.0;
    sum.std_error = std::sqrt(sum.variance / n);
    return sum;
}

GeoStopSummary simulate_geometric_stop(const Chain& c, std::size_t u, const Rational& x0,
                                       const SimConfig& cfg) {
    if (u >= c.size()) throw UnknownState("state index out of range");
    if (x0 <= Rational(0) || x0 >= Rational(1))
        throw std::invalid_argument("x0 must lie in (0,1)");
    const double px = x0.to_double();
    const auto cum = cumulative_rows(c.matrix());

    GeoStopSummary sum;
    sum.n_paths = cfg.n_paths;
    sum.counts.assign(c.size(), 0);
    for (std::size_t path = 0; path < cfg.n_paths; ++path) {
        SplitMix64 rng = SplitMix64::substream(cfg.seed, path);
        std::size_t state = u;
        // Geo(1-x0) on {0,1,...}: keep stepping while a coin with P = x0 succeeds
        std::size_t steps = 0;
        while (rng.uniform() < px) {
            state = sample_index(cum[state], rng.uniform());
            if (++steps > cfg.max_steps)
                throw StepCapExceeded("geometric time exceeded max_steps");
        }
        ++sum.counts[state];
    }
    return sum;
}

}  // namespace kemeny

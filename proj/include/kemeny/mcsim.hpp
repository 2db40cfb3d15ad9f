#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kemeny/chain.hpp"

namespace kemeny {

struct SimConfig {
    std::uint64_t seed = 0;
    std::size_t n_paths = 1;
    std::size_t max_steps = 1'000'000;  // hitting is a.s. finite; the cap only catches bugs
};

/// SplitMix64. Used both as the per-path stream generator and as the mixer
/// that derives substream states from (seed, path index), so identical
/// configs give bit-identical runs regardless of scheduling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : s_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d9bb3446ecb3bfULL;
        return z ^ (z >> 31);
    }
    /// uniform in [0,1), 53 bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed);
        const std::uint64_t a = mixer.next();
        mixer.s_ ^= index;
        const std::uint64_t b = mixer.next();
        return SplitMix64(a ^ (b + 0x9e3779b97f4a7c15ULL * index));
    }

private:
    std::uint64_t s_;
};

/// Exact first-passage law P_u(tau_v^{>=0} = m) for every start u and
/// m = 0..m_max, by the taboo recursion (mass at v absorbed on first arrival).
/// Result is indexed [u][m].
std::vector<std::vector<Rational>> dp_hitting_oracle(const Chain& c, std::size_t v,
                                                     std::size_t m_max);

struct SimSummary {
    std::size_t n_paths = 0;
    double mean = 0.0;
    double variance = 0.0;   // unbiased sample variance
    double std_error = 0.0;  // sqrt(variance / n)
    std::map<std::uint64_t, std::uint64_t> histogram;
};

/// Seeded Monte Carlo estimate of tau_v^{>=t} started at u. When `v` is
/// absent, the target is drawn per path from the stationary law (the
/// tau_X^{>=t} setting). Throws StepCapExceeded if any path outruns
/// cfg.max_steps.
SimSummary simulate_hitting(const Chain& c, std::size_t u, std::optional<std::size_t> v,
                            unsigned t, const SimConfig& cfg);

struct GeoStopSummary {
    std::size_t n_paths = 0;
    std::vector<std::uint64_t> counts;  // per state
};

/// Empirical law of the chain at an independent Geometric(1-x0) time.
GeoStopSummary simulate_geometric_stop(const Chain& c, std::size_t u, const Rational& x0,
                                       const SimConfig& cfg);

}  // namespace kemeny

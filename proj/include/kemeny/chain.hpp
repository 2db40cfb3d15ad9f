#pragma once

#include <string>
#include <vector>

#include "kemeny/rational.hpp"

#include <nlohmann/json.hpp>

namespace kemeny {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Validated finite irreducible Markov chain.
///
/// Rows are proven stochastic by exact summation at construction, and the
/// positive-entry digraph must be strongly connected (reducible input is a
/// hard error). Immutable after construction.
class Chain {
public:
    Chain(std::vector<std::string> states, RationalMatrix matrix);

    static Chain from_json(const nlohmann::json& doc);
    static Chain from_json_text(const std::string& text);
    /// Square numeric grid; states are auto-named s0..s{d-1}.
    static Chain from_csv_text(const std::string& text);
    static Chain from_file(const std::string& path, const std::string& format /* "json" | "csv" */);

    std::size_t size() const { return states_.size(); }
    const std::vector<std::string>& states() const { return states_; }
    const RationalMatrix& matrix() const { return m_; }
    const Rational& at(std::size_t u, std::size_t v) const { return m_[u][v]; }

    /// Index of a state label; throws UnknownState.
    std::size_t index_of(const std::string& label) const;

    /// M with row and column v removed; ordering of the remaining states preserved.
    RationalMatrix delete_state(std::size_t v) const;
    /// M with column v zeroed, everything else unchanged.
    RationalMatrix zero_column(std::size_t v) const;

    nlohmann::ordered_json to_json() const;

    friend bool operator==(const Chain& a, const Chain& b) {
        return a.states_ == b.states_ && a.m_ == b.m_;
    }

private:
    std::vector<std::string> states_;
    RationalMatrix m_;
};

/// Strongly connected components of the positive-entry digraph (Tarjan),
/// in reverse topological order.
std::vector<std::vector<std::size_t>> strongly_connected_components(const RationalMatrix& m);

/// Throws NotIrreducible (with the component partition) unless there is a
/// single SCC covering all states.
void check_irreducible(const RationalMatrix& m);

}  // namespace kemeny

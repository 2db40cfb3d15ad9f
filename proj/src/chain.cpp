#include "kemeny/chain.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace kemeny {

namespace {

std::string component_message(const std::vector<std::vector<std::size_t>>& comps) {
    std::string msg = "chain is not irreducible; strongly connected components:";
    for (const auto& c : comps) {
        msg += " {";
        for (std::size_t i = 0; i < c.size(); ++i) msg += (i ? "," : "") + std::to_string(c[i]);
        msg += "}";
    }
    return msg;
}

}  // namespace

Chain::Chain(std::vector<std::string> states, RationalMatrix matrix)
    : states_(std::move(states)), m_(std::move(matrix)) {
    const std::size_t d = states_.size();
    if (d < 2) throw DimensionMismatch("chain needs at least 2 states, got " + std::to_string(d));
    if (m_.size() != d) throw DimensionMismatch("matrix has " + std::to_string(m_.size()) +
                                                " rows for " + std::to_string(d) + " states");
    std::set<std::string> seen;
    for (const auto& s : states_)
        if (!seen.insert(s).second) throw DuplicateStateLabel("duplicate state label '" + s + "'");
    for (std::size_t i = 0; i < d; ++i) {
        if (m_[i].size() != d)
            throw DimensionMismatch("row " + std::to_string(i) + " has " +
                                    std::to_string(m_[i].size()) + " entries, expected " +
                                    std::to_string(d));
        Rational sum(0);
        for (const auto& e : m_[i]) {
            if (e.sign() < 0)
                throw NegativeEntry("negative entry " + e.str() + " in row " + std::to_string(i));
            if (e > Rational(1))
                throw NotStochastic(i, "entry " + e.str() + " exceeds 1");
            sum += e;
        }
        if (sum != Rational(1)) throw NotStochastic(i, sum.str());
    }
    check_irreducible(m_);
}

std::size_t Chain::index_of(const std::string& label) const {
    const auto it = std::find(states_.begin(), states_.end(), label);
    if (it == states_.end()) throw UnknownState("unknown state '" + label + "'");
    return static_cast<std::size_t>(it - states_.begin());
}

RationalMatrix Chain::delete_state(std::size_t v) const {
    if (v >= size()) throw UnknownState("state index " + std::to_string(v) + " out of range");
    RationalMatrix out;
    out.reserve(size() - 1);
    for (std::size_t i = 0; i < size(); ++i) {
        if (i == v) continue;
        std::vector<Rational> row;
        row.reserve(size() - 1);
        for (std::size_t j = 0; j < size(); ++j)
            if (j != v) row.push_back(m_[i][j]);
        out.push_back(std::move(row));
    }
    return out;
}

RationalMatrix Chain::zero_column(std::size_t v) const {
    if (v >= size()) throw UnknownState("state index " + std::to_string(v) + " out of range");
    RationalMatrix out = m_;
    for (auto& row : out) row[v] = Rational(0);
    return out;
}

Chain Chain::from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("states") || !doc.contains("matrix"))
        throw ParseError("chain JSON must be an object with 'states' and 'matrix'");
    std::vector<std::string> states;
    for (const auto& s : doc.at("states")) states.push_back(s.get<std::string>());
    RationalMatrix m;
    for (const auto& row : doc.at("matrix")) {
        std::vector<Rational> r;
        for (const auto& e : row) {
            if (e.is_string())
                r.push_back(Rational::parse(e.get<std::string>()));
            else if (e.is_number_integer())
                r.push_back(Rational(e.get<long>()));
            else
                throw ParseError("matrix entries must be rational strings or integers");
        }
        m.push_back(std::move(r));
    }
    return Chain(std::move(states), std::move(m));
}

Chain Chain::from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return from_json(doc);
}

Chain Chain::from_csv_text(const std::string& text) {
    RationalMatrix m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<Rational> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(Rational::parse(cell));
        m.push_back(std::move(row));
    }
    std::vector<std::string> states;
    for (std::size_t i = 0; i < m.size(); ++i) states.push_back("s" + std::to_string(i));
    return Chain(std::move(states), std::move(m));
}

Chain Chain::from_file(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    if (format == "csv") return from_csv_text(buf.str());
    if (format == "json") return from_json_text(buf.str());
    throw ParseError("unknown input format '" + format + "'");
}

nlohmann::ordered_json Chain::to_json() const {
    nlohmann::ordered_json j;
    j["states"] = states_;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : m_) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& e : row) r.push_back(e.str());
        rows.push_back(std::move(r));
    }
    j["matrix"] = std::move(rows);
    return j;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const RationalMatrix& m) {
    const std::size_t n = m.size();
    // iterative Tarjan
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> comps;
    int next_index = 0;

    struct Frame {
        std::size_t v;
        std::size_t next_child;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [v, child] = call.back();
            if (child == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (child < n) {
                const std::size_t w = child++;
                if (m[v][w].is_zero()) continue;
                if (index[w] == -1) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                std::vector<std::size_t> comp;
                for (;;) {
                    const std::size_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                    if (w == v) break;
                }
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
            const std::size_t done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[done]);
        }
    }
    return comps;
}

void check_irreducible(const RationalMatrix& m) {
    auto comps = strongly_connected_components(m);
    if (comps.size() != 1) {
        std::string msg = component_message(comps);
        throw NotIrreducible(std::move(msg), std::move(comps));
    }
}

}  // namespace kemeny

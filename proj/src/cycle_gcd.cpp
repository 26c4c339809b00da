#include "chrobak/cycle_gcd.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "chrobak/errors.hpp"

namespace chrobak {

namespace {

using BoolMatrix = std::vector<std::vector<char>>;

// Component-induced adjacency over dense local indices.
BoolMatrix induced_matrix(const UnaryNfa& nfa, const std::vector<State>& component) {
    if (component.empty())
        throw std::invalid_argument("component must be nonempty");
    std::vector<int> local(nfa.state_count, -1);
    for (std::size_t i = 0; i < component.size(); ++i) {
        State q = component[i];
        if (q < 0 || q >= nfa.state_count || local[q] != -1)
            throw std::invalid_argument("component states must be distinct and in range");
        local[q] = static_cast<int>(i);
    }
    int k = static_cast<int>(component.size());
    BoolMatrix adj(k, std::vector<char>(k, 0));
    for (const auto& [u, v] : nfa.edges)
        if (local[u] != -1 && local[v] != -1)
            adj[local[u]][local[v]] = 1;
    return adj;
}

void require_nontrivial(const BoolMatrix& adj) {
    if (adj.size() >= 2)
        return;
    if (adj.size() == 1 && adj[0][0])
        return;
    throw std::invalid_argument("trivial component has no cycles");
}

BoolMatrix bool_multiply(const BoolMatrix& a, const BoolMatrix& b) {
    int k = static_cast<int>(a.size());
    BoolMatrix out(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (!a[i][j])
                continue;
            for (int l = 0; l < k; ++l)
                if (b[j][l])
                    out[i][l] = 1;
        }
    return out;
}

bool true_diagonal(const BoolMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i][i])
            return true;
    return false;
}

} // namespace

CycleProfile cycle_profile(const UnaryNfa& nfa, const std::vector<State>& component) {
    BoolMatrix adj = induced_matrix(nfa, component);
    require_nontrivial(adj);
    int k = static_cast<int>(adj.size());

    CycleProfile profile;
    profile.component_size = k;
    profile.states = component;
    BoolMatrix power = adj;
    for (int j = 1; j <= k; ++j) {
        if (true_diagonal(power))
            profile.witness_lengths.insert(j);
        if (j < k)
            power = bool_multiply(power, adj);
    }
    if (profile.witness_lengths.empty())
        throw std::invalid_argument("component is not strongly connected");
    profile.gcd_value = 0;
    for (std::int64_t j : profile.witness_lengths)
        profile.gcd_value = std::gcd(profile.gcd_value, j);
    return profile;
}

std::set<std::int64_t> cycle_lengths_via_powers(const UnaryNfa& nfa,
                                                const std::vector<State>& component) {
    return cycle_profile(nfa, component).witness_lengths;
}

std::int64_t scc_gcd(const UnaryNfa& nfa, const std::vector<State>& component) {
    return cycle_profile(nfa, component).gcd_value;
}

std::set<std::int64_t> simple_cycle_lengths(const UnaryNfa& nfa,
                                            const std::vector<State>& component,
                                            int limit) {
    if (static_cast<int>(component.size()) > limit)
        throw LimitError("component size " + std::to_string(component.size()) +
                         " exceeds the simple-cycle enumeration limit " + std::to_string(limit));
    BoolMatrix adj = induced_matrix(nfa, component);
    int k = static_cast<int>(adj.size());

    // each cycle is counted at its minimal vertex: only vertices >= start
    // may appear on the path
    std::set<std::int64_t> lengths;
    std::vector<char> on_path(k, 0);
    std::function<void(int, int, int)> extend = [&](int start, int u, int depth) {
        for (int v = 0; v < k; ++v) {
            if (!adj[u][v])
                continue;
            if (v == start)
                lengths.insert(depth + 1);
            else if (v > start && !on_path[v]) {
                on_path[v] = 1;
                extend(start, v, depth + 1);
                on_path[v] = 0;
            }
        }
    };
    for (int start = 0; start < k; ++start) {
        on_path[start] = 1;
        extend(start, start, 0);
        on_path[start] = 0;
    }
    return lengths;
}

std::int64_t simple_cycle_gcd_bruteforce(const UnaryNfa& nfa,
                                         const std::vector<State>& component,
                                         int limit) {
    auto lengths = simple_cycle_lengths(nfa, component, limit);
    if (lengths.empty())
        throw std::invalid_argument("component has no cycles");
    std::int64_t g = 0;
    for (std::int64_t l : lengths)
        g = std::gcd(g, l);
    return g;
}

} // namespace chrobak

#include "chrobak/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "chrobak/cycle_gcd.hpp"
#include "chrobak/errors.hpp"

namespace chrobak {

namespace {

constexpr std::int64_t kMaxChainSteps = std::int64_t{1} << 22;
constexpr std::int64_t kPathStepBudget = 5000000;

} // namespace

RhoShape rho_shape(const UnaryNfa& nfa, int state_limit) {
    if (state_limit < 1 || state_limit > 64)
        throw std::invalid_argument("determinization limit must be in [1, 64]");
    if (nfa.state_count > state_limit)
        throw LimitError("state count " + std::to_string(nfa.state_count) +
                         " exceeds the determinization limit " + std::to_string(state_limit));

    std::vector<std::uint64_t> succ_mask(nfa.state_count, 0);
    for (const auto& [u, v] : nfa.edges)
        succ_mask[u] |= std::uint64_t{1} << v;

    RhoShape shape;
    std::unordered_map<std::uint64_t, std::int64_t> first_seen;
    std::uint64_t subset = std::uint64_t{1} << nfa.initial;
    for (std::int64_t step = 0;; ++step) {
        auto [it, fresh] = first_seen.emplace(subset, step);
        if (!fresh) {
            shape.tail_length = it->second;
            shape.cycle_length = step - it->second;
            shape.subset_chain.resize(static_cast<std::size_t>(step));
            return shape;
        }
        if (step >= kMaxChainSteps)
            throw LimitError("subset chain exceeds the step budget");
        shape.subset_chain.push_back(subset);
        std::uint64_t next = 0;
        for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
            int q = std::countr_zero(rest);
            next |= succ_mask[q];
        }
        subset = next;
    }
}

EventuallyPeriodicSet determinize(const UnaryNfa& nfa, int state_limit) {
    RhoShape shape = rho_shape(nfa, state_limit);
    std::uint64_t final_mask = 0;
    for (State f : nfa.finals)
        final_mask |= std::uint64_t{1} << f;

    EventuallyPeriodicSet eps;
    eps.threshold = shape.tail_length;
    eps.period = shape.cycle_length;
    for (std::int64_t x = 0; x < shape.tail_length; ++x)
        if (shape.subset_chain[static_cast<std::size_t>(x)] & final_mask)
            eps.sporadic.insert(x);
    for (std::int64_t x = shape.tail_length; x < shape.tail_length + shape.cycle_length; ++x)
        if (shape.subset_chain[static_cast<std::size_t>(x)] & final_mask)
            eps.residues.insert(x % shape.cycle_length);
    return canonicalize(eps);
}

std::set<std::int64_t> enumerate_paths_lastscc(const NormalizedNfa& norm,
                                               const SccDecomposition& dec,
                                               int component,
                                               std::int64_t bound) {
    const UnaryNfa& a = norm.automaton;
    if (a.state_count > 12)
        throw LimitError("walk enumeration budget allows at most 12 states");
    if (bound > 40)
        throw LimitError("walk enumeration budget allows lengths up to 40");
    if (component < 0 || component >= static_cast<int>(dec.components.size()))
        throw std::invalid_argument("component id out of range");

    auto succ = successor_lists(a);
    int n = a.state_count;
    int tracks = static_cast<int>(dec.components.size()) + 1; // 0 = no nontrivial yet
    auto track_of = [&](State q, int prev) {
        return dec.nontrivial[dec.component_of[q]] ? dec.component_of[q] + 1 : prev;
    };

    // walk states (state, last nontrivial component) reachable per length
    auto idx = [&](State q, int t) { return q * tracks + t; };
    std::vector<char> cur(static_cast<std::size_t>(n) * tracks, 0), next;
    cur[idx(a.initial, track_of(a.initial, 0))] = 1;

    std::set<std::int64_t> lengths;
    for (std::int64_t len = 0; len <= bound; ++len) {
        if (cur[idx(norm.final_state, component + 1)])
            lengths.insert(len);
        if (len == bound)
            break;
        next.assign(cur.size(), 0);
        for (State q = 0; q < n; ++q)
            for (int t = 0; t < tracks; ++t) {
                if (!cur[idx(q, t)])
                    continue;
                for (State to : succ[q])
                    next[idx(to, track_of(to, t))] = 1;
            }
        cur.swap(next);
    }
    return lengths;
}

UnaryNfa example1_graph() {
    // 0..3 entry tail, 4 trunk anchor, 5..10 rest of the 7-cycle,
    // 11..14 the attached 5-cycle, 15..19 exit tail, 20 final
    UnaryNfa nfa;
    nfa.state_count = 21;
    nfa.initial = 0;
    nfa.finals = {20};
    auto chain = [&](std::vector<State> states) {
        for (std::size_t i = 0; i + 1 < states.size(); ++i)
            nfa.edges.insert({states[i], states[i + 1]});
    };
    chain({0, 1, 2, 3, 4});                // entry: 4 edges
    chain({4, 5, 6, 7, 8, 9, 10, 4});      // 7-cycle on the trunk
    chain({7, 11, 12, 13, 14, 7});         // 5-cycle hanging off state 7
    chain({4, 15, 16, 17, 18, 19, 20});    // exit: 6 edges
    return nfa;
}

ProgressionSet diophantine_overapprox(const UnaryNfa& nfa, int state_limit) {
    if (nfa.state_count > state_limit)
        throw LimitError("state count " + std::to_string(nfa.state_count) +
                         " exceeds the overapproximation limit " + std::to_string(state_limit));
    auto succ = successor_lists(nfa);

    // lengths of all simple initial-to-final paths
    std::set<std::int64_t> path_lengths;
    std::vector<char> on_path(nfa.state_count, 0);
    std::int64_t steps = 0;
    std::function<void(State, std::int64_t)> extend = [&](State q, std::int64_t depth) {
        if (nfa.finals.count(q))
            path_lengths.insert(depth);
        for (State t : succ[q]) {
            if (on_path[t])
                continue;
            if (++steps > kPathStepBudget)
                throw LimitError("simple-path enumeration exceeds the step budget");
            on_path[t] = 1;
            extend(t, depth + 1);
            on_path[t] = 0;
        }
    };
    on_path[nfa.initial] = 1;
    extend(nfa.initial, 0);

    // lengths of all simple cycles, anywhere in the graph
    std::set<std::int64_t> cycle_lengths;
    auto dec = decompose(nfa);
    for (std::size_t c = 0; c < dec.components.size(); ++c)
        if (dec.nontrivial[c])
            for (std::int64_t l : simple_cycle_lengths(nfa, dec.components[c], nfa.state_count))
                cycle_lengths.insert(l);

    ProgressionSet out;
    if (cycle_lengths.empty()) {
        for (std::int64_t x0 : path_lengths)
            out.insert({x0, 0});
        return out;
    }
    std::vector<std::int64_t> coins(cycle_lengths.begin(), cycle_lengths.end());
    auto semigroup = numerical_semigroup_decompose(coins, coins.back());
    for (std::int64_t x0 : path_lengths) {
        for (std::int64_t s : semigroup.sporadic)
            out.insert({x0 + s, 0});
        out.insert({x0 + semigroup.tail_offset, semigroup.gcd});
    }
    return out;
}

} // namespace chrobak

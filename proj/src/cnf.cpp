#include "chrobak/cnf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "chrobak/scc.hpp"

namespace chrobak {

void validate(const ChrobakNfa& cnf) {
    if (cnf.tail_length < 0)
        throw std::invalid_argument("tail length must be nonnegative");
    for (std::int64_t f : cnf.tail_finals)
        if (f < 0 || f > cnf.tail_length)
            throw std::invalid_argument("tail final out of [0, tail_length]");
    for (const auto& cycle : cnf.cycles) {
        if (cycle.period < 1)
            throw std::invalid_argument("cycle period must be positive");
        for (std::int64_t h : cycle.final_positions)
            if (h < 0 || h >= cycle.period)
                throw std::invalid_argument("cycle final position out of [0, period)");
    }
}

bool cnf_member(const ChrobakNfa& cnf, std::int64_t x) {
    if (x < 0)
        return false;
    if (x <= cnf.tail_length)
        return cnf.tail_finals.count(x) > 0;
    for (const auto& cycle : cnf.cycles)
        if (cycle.final_positions.count((x - cnf.tail_length - 1) % cycle.period))
            return true;
    return false;
}

std::int64_t cnf_state_count(const ChrobakNfa& cnf) {
    std::int64_t count = cnf.tail_length + 1;
    for (const auto& cycle : cnf.cycles)
        count += cycle.period;
    return count;
}

ChrobakNfa progressions_to_cnf(const ProgressionSet& ps) {
    ChrobakNfa cnf;
    for (const auto& p : ps)
        cnf.tail_length = std::max(cnf.tail_length, p.offset);
    std::map<std::int64_t, std::set<std::int64_t>> cycle_finals;
    for (const auto& p : ps) {
        if (p.period == 0) {
            cnf.tail_finals.insert(p.offset);
            continue;
        }
        for (std::int64_t x = p.offset; x <= cnf.tail_length; x += p.period)
            cnf.tail_finals.insert(x);
        std::int64_t h = p.offset - cnf.tail_length - 1; // < 0: reduce into [0, period)
        h = (h % p.period + p.period) % p.period;
        cycle_finals[p.period].insert(h);
    }
    for (auto& [period, finals] : cycle_finals)
        cnf.cycles.push_back({period, std::move(finals)});
    return cnf;
}

ProgressionSet cnf_to_progressions(const ChrobakNfa& cnf) {
    ProgressionSet ps;
    for (std::int64_t t : cnf.tail_finals)
        ps.insert({t, 0});
    for (const auto& cycle : cnf.cycles)
        for (std::int64_t h : cycle.final_positions)
            ps.insert({cnf.tail_length + 1 + h, cycle.period});
    return ps;
}

UnaryNfa cnf_to_nfa(const ChrobakNfa& cnf) {
    validate(cnf);
    UnaryNfa nfa;
    std::int64_t total = cnf_state_count(cnf);
    nfa.state_count = static_cast<int>(total);
    nfa.initial = 0;
    for (std::int64_t i = 0; i < cnf.tail_length; ++i)
        nfa.edges.insert({static_cast<State>(i), static_cast<State>(i + 1)});
    for (std::int64_t f : cnf.tail_finals)
        nfa.finals.insert(static_cast<State>(f));

    State next = static_cast<State>(cnf.tail_length + 1);
    State fan_out = static_cast<State>(cnf.tail_length);
    for (const auto& cycle : cnf.cycles) {
        State entry = next;
        nfa.edges.insert({fan_out, entry});
        for (std::int64_t h = 0; h < cycle.period; ++h) {
            State from = entry + static_cast<State>(h);
            State to = entry + static_cast<State>((h + 1) % cycle.period);
            nfa.edges.insert({from, to});
            if (cycle.final_positions.count(h))
                nfa.finals.insert(from);
        }
        next += static_cast<State>(cycle.period);
    }
    return nfa;
}

bool is_cnf(const UnaryNfa& nfa) {
    if (nfa.state_count < 1)
        return false;
    auto succ = successor_lists(nfa);

    std::vector<char> reachable(nfa.state_count, 0);
    std::vector<State> queue{nfa.initial};
    reachable[nfa.initial] = 1;
    while (!queue.empty()) {
        State q = queue.back();
        queue.pop_back();
        for (State t : succ[q])
            if (!reachable[t]) {
                reachable[t] = 1;
                queue.push_back(t);
            }
    }
    for (State q = 0; q < nfa.state_count; ++q)
        if (!reachable[q])
            return false;

    auto dec = decompose(nfa);
    auto on_cycle = [&](State q) { return dec.nontrivial[dec.component_of[q]]; };

    // every cycle state: exactly one successor, inside its own component
    for (State q = 0; q < nfa.state_count; ++q) {
        if (!on_cycle(q))
            continue;
        if (succ[q].size() != 1 || dec.component_of[succ[q][0]] != dec.component_of[q])
            return false;
    }
    if (on_cycle(nfa.initial))
        return false;

    // walk the deterministic tail to the fan-out state
    State cur = nfa.initial;
    std::vector<State> entries;
    bool fan_out_found = false;
    for (int steps = 0; steps <= nfa.state_count && !fan_out_found; ++steps) {
        const auto& out = succ[cur];
        bool all_cycle = !out.empty();
        for (State t : out)
            all_cycle = all_cycle && on_cycle(t);
        if (out.empty() || all_cycle) {
            entries = out;
            fan_out_found = true;
            break;
        }
        if (out.size() != 1 || on_cycle(out[0]))
            return false;
        cur = out[0];
    }
    if (!fan_out_found)
        return false;

    // one entry per cycle
    std::set<int> entered;
    for (State e : entries)
        if (!entered.insert(dec.component_of[e]).second)
            return false;
    return true;
}

} // namespace chrobak

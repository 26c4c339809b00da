#include "chrobak/scc.hpp"

#include <algorithm>
#include <stdexcept>

namespace chrobak {

SccDecomposition decompose(const UnaryNfa& nfa) {
    int n = nfa.state_count;
    auto succ = successor_lists(nfa);
    auto pred = predecessor_lists(nfa);

    // first pass: finish order on the successor graph, iteratively
    std::vector<State> finish_order;
    finish_order.reserve(n);
    std::vector<char> seen(n, 0);
    std::vector<std::pair<State, std::size_t>> stack;
    for (State s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        seen[s] = 1;
        stack.push_back({s, 0});
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            if (i < succ[u].size()) {
                State v = succ[u][i++];
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back({v, 0});
                }
            } else {
                finish_order.push_back(u);
                stack.pop_back();
            }
        }
    }

    // second pass: predecessor-graph sweeps in reverse finish order give the
    // components in topological order of the condensation
    SccDecomposition dec;
    dec.component_of.assign(n, -1);
    for (auto it = finish_order.rbegin(); it != finish_order.rend(); ++it) {
        if (dec.component_of[*it] != -1)
            continue;
        int id = static_cast<int>(dec.components.size());
        std::vector<State> comp;
        std::vector<State> queue{*it};
        dec.component_of[*it] = id;
        while (!queue.empty()) {
            State q = queue.back();
            queue.pop_back();
            comp.push_back(q);
            for (State t : pred[q])
                if (dec.component_of[t] == -1) {
                    dec.component_of[t] = id;
                    queue.push_back(t);
                }
        }
        std::sort(comp.begin(), comp.end());
        dec.components.push_back(std::move(comp));
    }

    dec.nontrivial.assign(dec.components.size(), false);
    for (std::size_t c = 0; c < dec.components.size(); ++c)
        dec.nontrivial[c] = dec.components[c].size() >= 2;
    for (const auto& [u, v] : nfa.edges) {
        if (u == v)
            dec.nontrivial[dec.component_of[u]] = true;
        if (dec.component_of[u] != dec.component_of[v])
            dec.condensation_edges.insert({dec.component_of[u], dec.component_of[v]});
    }
    return dec;
}

std::set<State> reach_states(const UnaryNfa& nfa, const std::vector<State>& from) {
    auto succ = successor_lists(nfa);
    std::vector<char> seen(nfa.state_count, 0);
    std::vector<State> queue;
    for (State q : from) {
        if (q < 0 || q >= nfa.state_count)
            throw std::invalid_argument("state out of range");
        if (!seen[q]) {
            seen[q] = 1;
            queue.push_back(q);
        }
    }
    while (!queue.empty()) {
        State q = queue.back();
        queue.pop_back();
        for (State t : succ[q])
            if (!seen[t]) {
                seen[t] = 1;
                queue.push_back(t);
            }
    }
    std::set<State> out;
    for (State q = 0; q < nfa.state_count; ++q)
        if (seen[q])
            out.insert(q);
    return out;
}

std::optional<UnaryNfa> build_restricted(const NormalizedNfa& norm,
                                         const SccDecomposition& dec,
                                         int component) {
    if (component < 0 || component >= static_cast<int>(dec.components.size()))
        throw std::invalid_argument("component id out of range");
    if (!dec.nontrivial[component])
        throw std::invalid_argument("restricted automaton requires a nontrivial component");

    const UnaryNfa& a = norm.automaton;
    auto reach_set = reach_states(a, dec.components[component]);
    std::vector<char> reach(a.state_count, 0);
    for (State q : reach_set)
        reach[q] = 1;

    std::vector<char> deleted(a.state_count, 0);
    for (std::size_t c = 0; c < dec.components.size(); ++c) {
        if (static_cast<int>(c) == component || !dec.nontrivial[c])
            continue;
        if (reach[dec.components[c].front()])
            for (State q : dec.components[c])
                deleted[q] = 1;
    }

    UnaryNfa cut;
    cut.state_count = a.state_count;
    cut.initial = a.initial;
    cut.finals = a.finals;
    for (const auto& [u, v] : a.edges) {
        if (deleted[u] || deleted[v])
            continue;
        if (!reach[u] && reach[v] && dec.component_of[v] != component)
            continue;
        cut.edges.insert({u, v});
    }
    return trim(cut);
}

} // namespace chrobak

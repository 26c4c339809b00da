#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chrobak/nfa.hpp"
#include "chrobak/oracle.hpp"
#include "chrobak/semilinear.hpp"

namespace chrobak::fixtures {

// L = {0}
inline UnaryNfa single_state() {
    return {1, 0, {0}, {}};
}

// L = even numbers
inline UnaryNfa two_cycle() {
    return {2, 0, {0}, {{0, 1}, {1, 0}}};
}

// L = {2}
inline UnaryNfa chain3() {
    return {3, 0, {2}, {{0, 1}, {1, 2}}};
}

// L = N
inline UnaryNfa self_loop() {
    return {1, 0, {0}, {{0, 0}}};
}

// L = 1 + 3N
inline UnaryNfa cycle_with_tail3() {
    return {4, 0, {1}, {{0, 1}, {1, 2}, {2, 3}, {3, 1}}};
}

// L = {1, 2}, two final states
inline UnaryNfa two_finals() {
    return {4, 0, {1, 3}, {{0, 1}, {0, 2}, {2, 3}}};
}

// L = {}
inline UnaryNfa empty_language() {
    return {2, 0, {1}, {}};
}

// L = {3 + 2k} ∪ {4 + 3k}: parallel cycles of length 2 and 3 behind a branch
inline UnaryNfa branch23() {
    return {8, 0, {3, 7},
            {{0, 1}, {0, 4}, {1, 2}, {2, 1}, {2, 3}, {4, 5}, {5, 6}, {6, 4}, {6, 7}}};
}

// Already in the normalized shape (fresh-looking initial 0, sink final).

// one nontrivial SCC (a self-loop) on the only path
inline UnaryNfa single_scc_graph() {
    return {3, 0, {2}, {{0, 1}, {1, 1}, {1, 2}}};
}

// a 2-cycle feeding a 3-cycle, with a bypass edge around the 3-cycle
inline UnaryNfa sequential_cycles_graph() {
    return {8, 0, {7},
            {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {2, 6}, {3, 4}, {4, 5}, {5, 3}, {5, 6}, {6, 7}}};
}

// a 2-cycle and a 3-cycle on parallel branches that merge before the final
inline UnaryNfa parallel_cycles_graph() {
    return {9, 0, {8},
            {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {3, 2}, {3, 7}, {4, 5}, {5, 6}, {6, 4}, {6, 7},
             {7, 8}}};
}

// Wraps a graph that already satisfies the normalized-shape invariants.
inline NormalizedNfa as_normalized(const UnaryNfa& nfa) {
    NormalizedNfa norm;
    norm.automaton = nfa;
    norm.final_state = *nfa.finals.begin();
    norm.zero_accepted = false;
    norm.n_prime = nfa.state_count;
    return norm;
}

// two 4-cycles joined into one SCC through 2-step connectors; the connector
// route closes a simple cycle of length 6, so the gcd drops to 2
inline UnaryNfa two_four_cycles() {
    return {10, 0, {0},
            {{0, 1}, {1, 2}, {2, 3}, {3, 0},      // first 4-cycle
             {4, 5}, {5, 6}, {6, 7}, {7, 4},      // second 4-cycle
             {0, 8}, {8, 4},                      // across
             {6, 9}, {9, 0}}};                    // and back
}

// the progression set behind the worked normal-form example
inline ProgressionSet worked_example_progressions() {
    return {{1, 0}, {2, 0}, {5, 3}, {5, 4}, {6, 4}, {4, 2}};
}

inline std::vector<std::pair<std::string, UnaryNfa>> named_fixtures() {
    return {
        {"single_state", single_state()},
        {"two_cycle", two_cycle()},
        {"chain3", chain3()},
        {"self_loop", self_loop()},
        {"cycle_with_tail3", cycle_with_tail3()},
        {"two_finals", two_finals()},
        {"empty_language", empty_language()},
        {"branch23", branch23()},
        {"single_scc_graph", single_scc_graph()},
        {"sequential_cycles_graph", sequential_cycles_graph()},
        {"parallel_cycles_graph", parallel_cycles_graph()},
        {"two_four_cycles", two_four_cycles()},
        {"example1", example1_graph()},
    };
}

} // namespace chrobak::fixtures

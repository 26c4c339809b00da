#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "chrobak/nfa.hpp"

namespace chrobak {

/// Cycle-length evidence for one nontrivial SCC: the closed-walk lengths
/// j in [1, |D|] witnessed on the diagonal of the boolean adjacency powers,
/// and their gcd (which equals the gcd of all simple cycle lengths of D).
struct CycleProfile {
    int component_size = 0;
    std::set<std::int64_t> witness_lengths;
    std::int64_t gcd_value = 0;
    std::vector<State> states; // dense index -> global state id
};

/// Boolean matrix powers M, M^2, ..., M^|D| over the component-induced
/// subgraph. Throws std::invalid_argument on a trivial component.
CycleProfile cycle_profile(const UnaryNfa& nfa, const std::vector<State>& component);

/// {j <= |D| : the j-th boolean power of D's adjacency matrix has a true
/// diagonal entry}.
std::set<std::int64_t> cycle_lengths_via_powers(const UnaryNfa& nfa,
                                                const std::vector<State>& component);

/// gcd of the lengths of all simple cycles of the nontrivial SCC D.
std::int64_t scc_gcd(const UnaryNfa& nfa, const std::vector<State>& component);

/// Lengths of all simple cycles (no repeated vertex) inside the component.
/// Exponential; throws LimitError when |component| > limit.
std::set<std::int64_t> simple_cycle_lengths(const UnaryNfa& nfa,
                                            const std::vector<State>& component,
                                            int limit = 10);

/// Testing oracle: gcd by explicit simple-cycle enumeration.
std::int64_t simple_cycle_gcd_bruteforce(const UnaryNfa& nfa,
                                         const std::vector<State>& component,
                                         int limit = 10);

} // namespace chrobak

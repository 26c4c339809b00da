#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "chrobak/nfa.hpp"
#include "chrobak/semilinear.hpp"

namespace chrobak {

struct ChrobakCycle {
    std::int64_t period = 1;                // j >= 1
    std::set<std::int64_t> final_positions; // subset of [0, period)

    bool operator==(const ChrobakCycle&) const = default;
};

/// Chrobak normal form: a deterministic tail q_0..q_m followed by one
/// nondeterministic fan-out into pairwise disjoint deterministic cycles.
/// A length x <= m is accepted iff x is a tail final; a length x > m is
/// accepted iff some cycle has (x - m - 1) mod period among its final
/// positions. Cycles may be absent (finite language).
struct ChrobakNfa {
    std::int64_t tail_length = 0;       // m
    std::set<std::int64_t> tail_finals; // subset of [0, m]
    std::vector<ChrobakCycle> cycles;   // ascending distinct periods

    bool operator==(const ChrobakNfa&) const = default;
};

// Throws std::invalid_argument on out-of-range finals or nonpositive periods.
void validate(const ChrobakNfa& cnf);

bool cnf_member(const ChrobakNfa& cnf, std::int64_t x);

/// m + 1 tail states plus the sum of the cycle periods.
std::int64_t cnf_state_count(const ChrobakNfa& cnf);

/// The largest offset becomes the tail length; singletons and the early
/// members of each progression land on the tail, the rest on one shared
/// cycle per distinct period with merged final positions.
ChrobakNfa progressions_to_cnf(const ProgressionSet& ps);

/// One singleton per tail final and one progression (m + 1 + h, period) per
/// cycle final position h. Linear time; denotes the same set.
ProgressionSet cnf_to_progressions(const ChrobakNfa& cnf);

/// Materializes the tail, the fan-out from q_m into each cycle's entry
/// state, and the cycle edges.
UnaryNfa cnf_to_nfa(const ChrobakNfa& cnf);

/// Structural check: a deterministic tail from the initial state, one
/// fan-out state, pairwise disjoint deterministic cycles, no other edges.
/// The degenerate no-cycle automaton (dead-end q_m) is accepted.
bool is_cnf(const UnaryNfa& nfa);

} // namespace chrobak

#pragma once

#include <cstdint>

#include "chrobak/nfa.hpp"

namespace chrobak {

/// Deterministic random NFA for fuzzing, reproducible across platforms and
/// implementations. Instance (seed, index) seeds an mt19937_64 through
/// seed_seq{lo(seed), hi(seed), lo(index), hi(index)} and draws, in order:
///   n       = 1 + next() % max_states
///   density = 0.1 * (1 + next() % 3)
///   one uniform unit draw per ordered pair (u, v), row-major, self-loops
///   included: the edge is present iff the draw < density
///   one uniform unit draw per state ascending: final iff the draw < 0.3
/// The initial state is 0. Unit draws are (next() >> 11) * 2^-53.
UnaryNfa random_nfa(std::uint64_t seed, std::uint64_t index, int max_states);

} // namespace chrobak

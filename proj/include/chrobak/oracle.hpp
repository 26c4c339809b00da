#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "chrobak/nfa.hpp"
#include "chrobak/scc.hpp"
#include "chrobak/semilinear.hpp"

namespace chrobak {

/// The tail-plus-cycle shape of the subset-construction chain S_0, S_1, ...
/// with S_0 = {initial} and S_{i+1} the successor union of S_i. The chain
/// stores the tail_length + cycle_length distinct subsets as bitmasks
/// (bit q = state q); the subset at index tail_length + cycle_length equals
/// the one at tail_length.
struct RhoShape {
    std::vector<std::uint64_t> subset_chain;
    std::int64_t tail_length = 0;
    std::int64_t cycle_length = 1;
};

/// Throws LimitError when state_count > state_limit or the chain would
/// exceed 2^22 subsets; state_limit itself must be at most 64.
RhoShape rho_shape(const UnaryNfa& nfa, int state_limit = 20);

/// Ground-truth language of the NFA via unary subset construction,
/// canonicalized. Exponential in the worst case; an oracle, not a product
/// path.
EventuallyPeriodicSet determinize(const UnaryNfa& nfa, int state_limit = 20);

/// Lengths <= bound of initial-to-final walks whose last vertex inside a
/// nontrivial component lies in `component`, computed by an exhaustive
/// walk-state product independent of build_restricted. Budget: at most 12
/// states and bound <= 40, else LimitError.
std::set<std::int64_t> enumerate_paths_lastscc(const NormalizedNfa& norm,
                                               const SccDecomposition& dec,
                                               int component,
                                               std::int64_t bound);

/// Fixed 21-state fixture with two interdependent cycles: a 7-cycle on the
/// trunk and a 5-cycle hanging off it, so the 5-cycle cannot be traversed
/// without completing the 7-cycle. Language:
/// {10} ∪ {10 + 7x : x >= 0} ∪ {10 + 7x + 5y : x >= 1, y >= 0}.
UnaryNfa example1_graph();

/// The naive overapproximation that treats every simple-cycle length as
/// freely traversable: {x0 + a1*x1 + ... + ap*xp} over all simple-path
/// lengths x0 and all simple-cycle lengths ai of the whole graph, rendered
/// as a progression set through the numerical-semigroup decomposition.
/// Always a superset of the language; not equal in general (the cycles of
/// example1_graph defeat it). Throws LimitError when state_count >
/// state_limit or the path enumeration exceeds its step budget.
ProgressionSet diophantine_overapprox(const UnaryNfa& nfa, int state_limit = 12);

} // namespace chrobak

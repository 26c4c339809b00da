#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "chrobak/nfa.hpp"

namespace chrobak {

/// Strongly connected components of an automaton's digraph, with component
/// ids assigned in topological order of the condensation DAG. A component is
/// nontrivial iff it has at least two states or carries a self-loop.
struct SccDecomposition {
    std::vector<int> component_of;              // state -> component id
    std::vector<std::vector<State>> components; // id -> states, ascending
    std::set<std::pair<int, int>> condensation_edges;
    std::vector<bool> nontrivial;
};

// Kosaraju's two-pass algorithm.
SccDecomposition decompose(const UnaryNfa& nfa);

/// All states reachable (via >= 0 edges) from any state of `from`.
std::set<State> reach_states(const UnaryNfa& nfa, const std::vector<State>& from);

/// The restricted automaton A_D for a nontrivial component D: delete every
/// other nontrivial component reachable from D, delete every edge from a
/// state outside Reach(D) into Reach(D) - D, then trim. Its initial-to-final
/// paths are exactly those of the input whose last vertex inside a nontrivial
/// component lies in D. Returns nullopt when no such path exists.
/// Throws std::invalid_argument if `component` is trivial.
std::optional<UnaryNfa> build_restricted(const NormalizedNfa& norm,
                                         const SccDecomposition& dec,
                                         int component);

} // namespace chrobak

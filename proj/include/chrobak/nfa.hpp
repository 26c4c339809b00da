#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace chrobak {

using State = int;
using Edge = std::pair<State, State>;

/// NFA over a one-letter alphabet: a digraph with an initial state and a set
/// of final states. The language is the set of lengths of initial-to-final
/// paths (length 0 is accepted iff the initial state is final).
struct UnaryNfa {
    int state_count = 0;
    State initial = 0;
    std::set<State> finals;
    std::set<Edge> edges;

    bool operator==(const UnaryNfa&) const = default;
};

// Throws std::invalid_argument if any state index is out of [0, state_count).
void validate(const UnaryNfa& nfa);

std::vector<std::vector<State>> successor_lists(const UnaryNfa& nfa);
std::vector<std::vector<State>> predecessor_lists(const UnaryNfa& nfa);

/// Parses the line-oriented text format:
///   states <N>
///   initial <i>
///   final <i> [<i> ...]     (may repeat; union)
///   edge <u> <v>            (one per line)
/// '#'-prefixed lines and blank lines are ignored. `states` must precede any
/// index-bearing line. Throws ParseError with a 1-based line number.
UnaryNfa parse_nfa(const std::string& text);

/// Canonical rendering: `states`, `initial`, one sorted `final` line (omitted
/// when there are no finals), then lexicographically sorted `edge` lines.
std::string serialize_nfa(const UnaryNfa& nfa);

/// True iff some path of length exactly `length` leads from the initial state
/// to a final state. Runs in O(length * |edges|).
bool member(const UnaryNfa& nfa, std::int64_t length);

/// Acceptance flag for every length in [0, bound], by iterating the
/// reachable-state set once per length (O(bound * |edges|) time, O(n) space).
std::vector<bool> accepted_length_flags(const UnaryNfa& nfa, std::int64_t bound);

/// {x <= bound : x in L(nfa)}.
std::set<std::int64_t> accepted_up_to(const UnaryNfa& nfa, std::int64_t bound);

/// Restriction to states reachable from the initial state and co-reachable
/// from some final state, with states renumbered in ascending order.
/// Returns nullopt iff no final is reachable (empty language).
std::optional<UnaryNfa> trim(const UnaryNfa& nfa);

/// Shape required by the conversion pipeline: a single final state, no edge
/// into the initial state, no edge out of the final state, every state
/// reachable and co-reachable. Accepts exactly the positive-length words of
/// the original language; length 0 is tracked by `zero_accepted`.
struct NormalizedNfa {
    UnaryNfa automaton;
    State final_state = 0;
    bool zero_accepted = false;
    int n_prime = 0; // state count; the "n" plugged into every bound formula
};

struct NormalizeResult {
    bool zero_accepted = false;
    // nullopt iff the language contains no positive-length word.
    std::optional<NormalizedNfa> positive_part;
};

/// Trims, then reroutes paths through a fresh initial state and a fresh sink
/// final: q0' inherits the old initial's out-edges, every edge into a final
/// gains a copy into q_F', and q0'->q_F' is added when some length-1 word is
/// accepted. Path lengths >= 1 are preserved exactly.
NormalizeResult normalize(const UnaryNfa& nfa);

bool exact_length_path_exists(const UnaryNfa& nfa, std::int64_t length);
bool exact_length_path_exists(const NormalizedNfa& nfa, std::int64_t length);

} // namespace chrobak

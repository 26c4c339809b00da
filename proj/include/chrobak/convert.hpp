#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chrobak/cnf.hpp"
#include "chrobak/nfa.hpp"
#include "chrobak/scc.hpp"
#include "chrobak/semilinear.hpp"

namespace chrobak {

struct SccGcdInfo {
    int component = 0;
    int size = 0;
    std::int64_t gcd = 0;

    bool operator==(const SccGcdInfo&) const = default;
};

struct ConvertResult {
    ProgressionSet progressions;
    ChrobakNfa cnf;

    // diagnostics
    std::int64_t n_prime = 0;         // 0 when no positive-length word exists
    std::int64_t singleton_bound = 0; // B = 2*n'^2 + n'
    std::int64_t offset_bound = 0;    // exclusive upper bound 2*n'^2 + 3*n'
    std::vector<SccGcdInfo> scc_gcds; // nontrivial SCCs of the normalized automaton
    bool zero_accepted = false;
    bool empty_language = false;
};

/// Full conversion of a unary NFA to an equivalent union of arithmetic
/// progressions and an equivalent automaton in Chrobak normal form.
///
/// With n' the normalized state count and B = 2*n'^2 + n', the progression
/// set is: one singleton per accepted length <= B (computed on the automaton
/// as given), plus, for each nontrivial SCC D with d = gcd(D), a progression
/// (a, d) for every a in (B, 2*n'^2 + 3*n') such that the restricted
/// automaton A_D has an initial-to-final path of length exactly a, keeping
/// only the least such a per (D, residue class mod d). An empty language
/// yields the empty set.
///
/// Throws LimitError when the state count exceeds the supported range for
/// exact bound arithmetic (10^6 states).
ConvertResult convert(const UnaryNfa& nfa);

/// The periodic part of the pipeline: the pruned (offset, gcd(D)) pairs
/// passing the A_D exact-length check, over all nontrivial components.
/// `gcds` maps each nontrivial component id to its cycle gcd.
std::set<ArithmeticProgression> collect_progressions(const NormalizedNfa& norm,
                                                     const SccDecomposition& dec,
                                                     const std::map<int, std::int64_t>& gcds);

} // namespace chrobak

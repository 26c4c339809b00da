#include "chrobak/convert.hpp"

#include <stdexcept>

#include "chrobak/cycle_gcd.hpp"
#include "chrobak/errors.hpp"

namespace chrobak {

namespace {

constexpr int kMaxStates = 1000000; // exact int64 arithmetic for 2n'^2 + 3n'

} // namespace

std::set<ArithmeticProgression> collect_progressions(const NormalizedNfa& norm,
                                                     const SccDecomposition& dec,
                                                     const std::map<int, std::int64_t>& gcds) {
    std::int64_t n = norm.n_prime;
    std::int64_t singleton_bound = 2 * n * n + n;
    std::int64_t offset_bound = 2 * n * n + 3 * n; // exclusive

    std::set<ArithmeticProgression> out;
    for (int c = 0; c < static_cast<int>(dec.components.size()); ++c) {
        if (!dec.nontrivial[c])
            continue;
        std::int64_t d = gcds.at(c);
        auto restricted = build_restricted(norm, dec, c);
        if (!restricted)
            continue;
        auto flags = accepted_length_flags(*restricted, offset_bound - 1);
        std::set<std::int64_t> residues_taken;
        for (std::int64_t a = singleton_bound + 1; a < offset_bound; ++a) {
            if (!flags[static_cast<std::size_t>(a)])
                continue;
            if (residues_taken.insert(a % d).second)
                out.insert({a, d});
        }
    }
    return out;
}

ConvertResult convert(const UnaryNfa& nfa) {
    validate(nfa);
    if (nfa.state_count > kMaxStates)
        throw LimitError("state count " + std::to_string(nfa.state_count) +
                         " exceeds the supported range for exact bound arithmetic");

    ConvertResult result;
    auto norm = normalize(nfa);
    result.zero_accepted = norm.zero_accepted;
    if (!norm.positive_part) {
        if (norm.zero_accepted)
            result.progressions.insert({0, 0});
        result.empty_language = result.progressions.empty();
        result.cnf = progressions_to_cnf(result.progressions);
        return result;
    }

    const NormalizedNfa& positive = *norm.positive_part;
    std::int64_t n = positive.n_prime;
    result.n_prime = n;
    result.singleton_bound = 2 * n * n + n;
    result.offset_bound = 2 * n * n + 3 * n;

    // small lengths, including 0, straight off the input automaton
    for (std::int64_t x : accepted_up_to(nfa, result.singleton_bound))
        result.progressions.insert({x, 0});

    auto dec = decompose(positive.automaton);
    std::map<int, std::int64_t> gcds;
    for (int c = 0; c < static_cast<int>(dec.components.size()); ++c) {
        if (!dec.nontrivial[c])
            continue;
        std::int64_t d = scc_gcd(positive.automaton, dec.components[c]);
        gcds[c] = d;
        result.scc_gcds.push_back({c, static_cast<int>(dec.components[c].size()), d});
    }
    for (const auto& p : collect_progressions(positive, dec, gcds))
        result.progressions.insert(p);

    result.cnf = progressions_to_cnf(result.progressions);
    return result;
}

} // namespace chrobak

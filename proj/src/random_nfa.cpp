#include "chrobak/random_nfa.hpp"

#include <random>
#include <stdexcept>

namespace chrobak {

UnaryNfa random_nfa(std::uint64_t seed, std::uint64_t index, int max_states) {
    if (max_states < 1)
        throw std::invalid_argument("max_states must be positive");
    std::seed_seq sequence{static_cast<std::uint32_t>(seed),
                           static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(index),
                           static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 engine(sequence);
    // explicit modulo/shift draws, not std distributions, so that runs are
    // reproducible across standard-library implementations
    auto unit = [&]() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };

    UnaryNfa nfa;
    nfa.state_count = 1 + static_cast<int>(engine() % static_cast<std::uint64_t>(max_states));
    nfa.initial = 0;
    double density = 0.1 * static_cast<double>(1 + engine() % 3);
    for (State u = 0; u < nfa.state_count; ++u)
        for (State v = 0; v < nfa.state_count; ++v)
            if (unit() < density)
                nfa.edges.insert({u, v});
    for (State q = 0; q < nfa.state_count; ++q)
        if (unit() < 0.3)
            nfa.finals.insert(q);
    return nfa;
}

} // namespace chrobak

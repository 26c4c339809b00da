#include "chrobak/dot.hpp"

#include <sstream>

namespace chrobak {

std::string dot_cnf(const ChrobakNfa& cnf) {
    std::ostringstream out;
    out << "digraph chrobak {\n";
    out << "  rankdir=LR;\n";
    for (std::int64_t i = 0; i <= cnf.tail_length; ++i) {
        out << "  t" << i << " [shape=box label=\"q" << i << "\"";
        if (cnf.tail_finals.count(i))
            out << " style=filled";
        out << "];\n";
    }
    for (std::int64_t i = 0; i < cnf.tail_length; ++i)
        out << "  t" << i << " -> t" << i + 1 << ";\n";
    for (std::size_t c = 0; c < cnf.cycles.size(); ++c) {
        const auto& cycle = cnf.cycles[c];
        for (std::int64_t h = 0; h < cycle.period; ++h) {
            out << "  c" << c << "p" << h << " [shape=circle label=\"p" << c << "," << h << "\"";
            if (cycle.final_positions.count(h))
                out << " style=filled";
            out << "];\n";
        }
        out << "  t" << cnf.tail_length << " -> c" << c << "p0;\n";
        for (std::int64_t h = 0; h < cycle.period; ++h)
            out << "  c" << c << "p" << h << " -> c" << c << "p" << (h + 1) % cycle.period
                << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace chrobak

#pragma once

#include <string>

#include "chrobak/cnf.hpp"

namespace chrobak {

/// Graphviz rendering of a Chrobak-normal-form automaton: tail states as
/// boxes, cycle states as circles, final states filled.
std::string dot_cnf(const ChrobakNfa& cnf);

} // namespace chrobak

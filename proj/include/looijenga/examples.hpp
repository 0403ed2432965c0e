#pragma once

#include "looijenga/pair.hpp"

#include <string>
#include <vector>

namespace looijenga {

// Built-in corpus. Coordinates are deterministic named symbols (a, b, c, ...)
// for the generic members, -1 for the canonical-point members.
//   p2-axes     P^2 with one general point blown up on each coordinate axis
//   ye-p2-axes  the same combinatorial type with all coordinates at -1
//   f1-base     the toric pair F_1
//   cycle7      a pair whose boundary is a cycle of seven (-2)-curves
//   cycle8      F_1 after four node blowups and four interior blowups; the
//               boundary is a cycle of eight (-2)-curves
PairModel builtin_example(const std::string& name);
std::vector<std::string> builtin_example_names();

}  // namespace looijenga

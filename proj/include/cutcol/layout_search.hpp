#pragma once

#include "cutcol/graph.hpp"

namespace cutcol {

enum class LayoutStrategy { Exact, Greedy };

// Exact: subset dynamic program over prefixes minimizing the maximum cut,
// refused above `exact_limit` vertices. Greedy: repeatedly append the vertex
// whose placement minimizes the next cut, ties broken by smallest id.
LinearLayout find_layout(const Graph& g, LayoutStrategy strategy, int exact_limit = 20);

}  // namespace cutcol

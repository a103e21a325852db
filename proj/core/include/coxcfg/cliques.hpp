#pragma once

#include <cstddef>
#include <vector>

namespace coxcfg {

/// Dense symmetric adjacency, no loops.
using AdjacencyMatrix = std::vector<std::vector<char>>;

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, the list
/// sorted lexicographically.
std::vector<std::vector<std::size_t>> maximal_cliques(const AdjacencyMatrix& adjacency);

}  // namespace coxcfg

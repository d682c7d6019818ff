#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace silt {

/// Directed graph on vertices 0..size-1; for a Hasse diagram, edges point from larger to smaller.
struct CoverGraph {
    std::size_t size = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::vector<std::vector<std::size_t>> successors() const;
    std::vector<std::vector<std::size_t>> predecessors() const;
    /// Reflexive-transitive closure; reach[i][j] iff a directed path runs from i to j.
    std::vector<std::vector<bool>> reachability() const;
};

} // namespace silt

#include "silt/graph.hpp"

namespace silt {

std::vector<std::vector<std::size_t>> CoverGraph::successors() const {
    std::vector<std::vector<std::size_t>> out(size);
    for (auto [a, b] : edges) out[a].push_back(b);
    return out;
}

std::vector<std::vector<std::size_t>> CoverGraph::predecessors() const {
    std::vector<std::vector<std::size_t>> out(size);
    for (auto [a, b] : edges) out[b].push_back(a);
    return out;
}

std::vector<std::vector<bool>> CoverGraph::reachability() const {
    auto succ = successors();
    std::vector<std::vector<bool>> reach(size, std::vector<bool>(size, false));
    for (std::size_t s = 0; s < size; ++s) {
        std::vector<std::size_t> stack{s};
        reach[s][s] = true;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (auto w : succ[u])
                if (!reach[s][w]) {
                    reach[s][w] = true;
                    stack.push_back(w);
                }
        }
    }
    return reach;
}

} // namespace silt

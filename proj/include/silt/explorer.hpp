#pragma once

// Breadth-first enumeration of 2-term silting pairs by left mutation from Lambda.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "silt/graph.hpp"
#include "silt/silting.hpp"

namespace silt {

struct ExploreLimits {
    std::size_t max_nodes = 100000;
    std::size_t max_depth = 100000;
};

struct ExchangeEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t at = 0;  // registry id of the mutated summand
    bool operator==(const ExchangeEdge&) const = default;
};

struct ExchangeQuiver {
    AlgebraPtr algebra;
    std::shared_ptr<Registry> registry;
    std::vector<SiltingPair> nodes;  // node 0 is Lambda
    std::vector<std::size_t> depth;
    std::vector<ExchangeEdge> edges;
    bool complete = false;

    std::size_t max_depth() const;
    CoverGraph graph() const;
    PairModules modules(std::size_t node) const { return PairModules::from_ids(*registry, nodes[node]); }
};

/// workers == 0 uses the available hardware parallelism. Output does not depend on workers.
ExchangeQuiver explore(const AlgebraPtr& a, const ExploreLimits& limits = {}, std::size_t workers = 1);

/// leq[i][j] iff node i <= node j.
std::vector<std::vector<bool>> poset_relations(const ExchangeQuiver& eq, std::size_t workers = 1);
/// Edges equal the cover relations of pair_leq. Requires a complete quiver.
bool hasse_check(const ExchangeQuiver& eq, std::size_t workers = 1);

std::string to_dot(const ExchangeQuiver& eq);
nlohmann::json to_json(const ExchangeQuiver& eq);

/// The parts of the JSON schema needed downstream (counts, shape, sincerity).
struct PosetSummary {
    bool complete = false;
    std::size_t num_vertices = 0;
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<std::vector<std::size_t>>> summand_dims;
    std::vector<std::vector<std::size_t>> proj_part;
    std::vector<ExchangeEdge> edges;

    CoverGraph graph() const;
    std::vector<bool> sincere() const;
};
PosetSummary poset_summary(const nlohmann::json& j);
PosetSummary poset_summary(const ExchangeQuiver& eq);
std::string to_dot(const PosetSummary& s);

/// Runs f(i) for i in [0, n) on up to `workers` threads.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& f);

} // namespace silt

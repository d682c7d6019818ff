#pragma once

// Torsion classes of the order families, the weak order oracle, and poset isomorphism.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "silt/builtins.hpp"
#include "silt/explorer.hpp"
#include "silt/graph.hpp"

namespace silt {

enum class OrderFamily { hereditary, bass_v, auslander_bass_v, triangular_a2, custom };

OrderFamily family_from_name(const std::string& name);
std::string family_name(OrderFamily f);
/// Families where finite length is known to mean non-sincere.
bool supports_tors_assembly(OrderFamily f);

/// Per node: the silting pair is sincere (no projective part).
std::vector<bool> classify_sincere(const ExchangeQuiver& eq);

struct TorsHasse {
    enum class Kind { Fac, FacFl };
    struct Node {
        Kind kind;
        std::size_t pair;  // exchange-quiver node
    };
    std::vector<Node> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    CoverGraph graph() const { return {nodes.size(), edges}; }
    nlohmann::json to_json() const;
    std::string to_dot() const;
};

/// Exchange nodes (FacFl where sincere, Fac otherwise), then one Fac node per sincere pair;
/// edges are the exchange edges, their sincere restriction, and Fac N -> Fac N cap fl.
TorsHasse assemble_tors_hasse(OrderFamily family, const PosetSummary& eq);
TorsHasse assemble_tors_hasse(OrderFamily family, const ExchangeQuiver& eq);

struct WeakOrderPoset {
    std::size_t degree = 0;
    std::vector<std::vector<int>> elements;  // one-line notation, lexicographic
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (w, w s_i) with length + 1

    std::size_t length(std::size_t i) const;
    /// Edges from larger to smaller, matching exchange quivers.
    CoverGraph hasse_graph() const;
};

constexpr std::size_t kWeakOrderCap = 7;
WeakOrderPoset weak_order_hasse(std::size_t m, std::size_t cap = kWeakOrderCap);

/// Isomorphism of Hasse diagrams with a unique source and sink.
bool poset_isomorphic(const CoverGraph& a, const CoverGraph& b);

} // namespace silt

#pragma once

// Finite-dimensional path algebras kQ/I with length-homogeneous relations.
//
// Conventions used throughout the library:
//  * paths are written in traversal order; multiply(x, y) is "x, then y";
//  * a representation has a space per vertex and a map M_b : M_i -> M_j per arrow b : i -> j,
//    and a path a1 a2 ... ak acts as M_ak ... M_a1;
//  * the indecomposable projective P_v has basis the paths starting at v, with arrows
//    appended on the right;
//  * a homomorphism P_v -> P_u is left multiplication by an element of e_u A e_v
//    (paths from u to v), so composing homomorphisms is multiply() in the same order.

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "silt/exactmat.hpp"

namespace silt {

struct Arrow {
    std::string label;
    std::size_t source = 0;
    std::size_t target = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t vertex_index(std::string_view label) const;
    std::size_t arrow_index(std::string_view label) const;
    void validate() const;
};

struct PathWord {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;

    std::size_t length() const { return arrows.size(); }
    bool operator==(const PathWord&) const = default;
};

struct RelationTerm {
    std::int64_t coefficient = 1;
    std::vector<std::size_t> arrows;
};
using Relation = std::vector<RelationTerm>;

struct AlgebraPresentation {
    Field field;
    Quiver quiver;
    std::vector<Relation> relations;
    std::size_t nilpotency_bound = 2;
};

/// Coordinates over the global path basis of an algebra.
using Element = Vec;

class FiniteDimAlgebra {
  public:
    static std::shared_ptr<const FiniteDimAlgebra> build(AlgebraPresentation p);

    const AlgebraPresentation& presentation() const { return pres_; }
    const Field& field() const { return pres_.field; }
    const Quiver& quiver() const { return pres_.quiver; }
    std::size_t num_vertices() const { return pres_.quiver.vertices.size(); }
    std::size_t dimension() const { return basis_.size(); }

    const PathWord& basis_path(std::size_t i) const { return basis_[i]; }
    /// Global indices of basis paths from s to t, in basis order.
    std::span<const std::size_t> basis_between(std::size_t s, std::size_t t) const {
        return between_[s * num_vertices() + t];
    }
    /// Position of a global basis index inside its basis_between() list.
    std::size_t local_index(std::size_t global) const { return local_[global]; }
    std::size_t trivial(std::size_t v) const { return trivial_[v]; }

    Element zero() const { return Element(dimension(), 0); }
    Element unit(std::size_t i) const;
    /// Expansion of an arbitrary path over the basis (zero when length >= bound).
    Element expand_path(std::size_t source, std::span<const std::size_t> arrows) const;
    Element multiply(const Element& x, const Element& y) const;
    Element add(const Element& x, const Element& y) const;
    Element sub(const Element& x, const Element& y) const;
    Element scale(const Element& x, Scalar s) const;
    bool is_zero(const Element& x) const;
    /// Coefficient of the trivial path e_v.
    Scalar trivial_coefficient(const Element& x, std::size_t v) const { return x[trivial_[v]]; }
    /// Inverse of an element of e_v A e_v with nonzero trivial coefficient.
    Element local_inverse(const Element& x, std::size_t v) const;

    /// Number of basis paths starting at v, i.e. dim_k P_v.
    std::size_t paths_from(std::size_t v) const;

  private:
    FiniteDimAlgebra() = default;

    struct Sparse {
        std::vector<std::pair<std::size_t, Scalar>> terms;
    };

    AlgebraPresentation pres_;
    std::vector<PathWord> basis_;
    std::vector<std::vector<std::size_t>> between_;
    std::vector<std::size_t> local_;
    std::vector<std::size_t> trivial_;
    // every path of length < bound, keyed by (source, arrows)
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, Sparse> expansion_;
    std::vector<Sparse> table_;                             // basis products, dim x dim
};

using AlgebraPtr = std::shared_ptr<const FiniteDimAlgebra>;

} // namespace silt

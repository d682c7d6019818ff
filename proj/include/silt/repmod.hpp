#pragma once

// Linear algebra on modules: Hom spaces, radicals, covers, presentations.

#include <optional>
#include <span>
#include <vector>

#include "silt/complex.hpp"
#include "silt/rep.hpp"

namespace silt {

std::vector<RepMap> hom_basis(const Rep& m, const Rep& n);
std::size_t hom_dim(const Rep& m, const Rep& n);

/// Complete when both modules are indecomposable; otherwise only "true" is conclusive.
bool is_isomorphic(const Rep& m, const Rep& n);

/// Radical of m at vertex v as a column basis (sum of images of incoming arrows).
Matrix radical_basis(const Rep& m, std::size_t v);

struct TopResult {
    Rep top;
    RepMap quotient;
};
TopResult top(const Rep& m);

struct ProjectiveCover {
    std::vector<std::size_t> vertices;  // one entry per indecomposable summand
    std::vector<Vec> generators;        // image of e_v for each summand
    Rep module;
    RepMap epi;

    std::vector<std::size_t> multiplicities(std::size_t num_vertices) const;
};
ProjectiveCover projective_cover(const Rep& m);

TwoTermComplex min_projective_presentation(const Rep& m);

struct Cokernel {
    Rep module;
    RepMap projection;
};
struct Kernel {
    Rep module;
    RepMap inclusion;
};
Cokernel cokernel(const RepMap& h);
Kernel kernel(const RepMap& h);

/// x is a quotient of a finite direct sum of copies of generators.
bool fac_contains(const Rep& generators, const Rep& x);

/// Sum over vertices of the trace of the component maps.
Scalar trace(const RepMap& endo);

/// End(m)/rad End(m) is the ground field, which forces m indecomposable.
bool is_indecomposable(const Rep& m);

/// Number of isomorphism classes of indecomposable summands of m.
std::size_t count_summands(const Rep& m);

/// Multiplicity of each listed indecomposable as a summand of x. The list must be pairwise
/// non-isomorphic indecomposables with split endomorphism rings.
std::vector<std::size_t> summand_multiplicities(const Rep& x, std::span<const Rep> indecomposables);

/// Multiplicities if x is isomorphic to a direct sum of the listed modules, else nullopt.
std::optional<std::vector<std::size_t>> decompose_against(const Rep& x, std::span<const Rep> indecomposables);

} // namespace silt

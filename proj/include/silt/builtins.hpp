#pragma once

// Reductions of the order families used by the acceptance suite, as quiver presentations.

#include <string>

#include "silt/algebra.hpp"

namespace silt {

/// Cyclic quiver on n vertices modulo all paths of length n*level (the level-th reduction).
AlgebraPresentation hereditary_truncation(std::size_t n, std::size_t level, const Field& f = Field());
AlgebraPresentation hereditary_reduction(std::size_t n, const Field& f = Field());
/// Double quiver of A_{n+1} modulo every 2-cycle.
AlgebraPresentation auslander_bass_v_reduction(std::size_t n, const Field& f = Field());
AlgebraPresentation bass_v_reduction(const Field& f = Field());
/// Linear A_2 quiver, no relations.
AlgebraPresentation triangular_example_reduction(const Field& f = Field());

/// Builtin by CLI name: hereditary, bass_v, auslander_bass_v, triangular_a2.
AlgebraPresentation builtin_presentation(const std::string& name, std::size_t n, const Field& f = Field());

} // namespace silt

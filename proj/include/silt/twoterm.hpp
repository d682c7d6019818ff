#pragma once

// Two-term complexes of projectives: the homotopy-category side of the theory.

#include <cstdint>
#include <vector>

#include "silt/complex.hpp"

namespace silt {

using GVector = std::vector<std::int64_t>;

/// Hom_K(p, q[1]) == 0, i.e. g o d_p - d_q o f reaches every map P_{-1} -> Q_0.
bool hom_shift_vanishes(const TwoTermComplex& p, const TwoTermComplex& q);
bool is_presilting(const TwoTermComplex& p);

/// Homotopy-equivalent complex with every entry of d in the radical, and with every
/// summand of the form P_v -> 0 exposed as a zero column.
TwoTermComplex minimality_reduce(const TwoTermComplex& p);

Rep h0(const TwoTermComplex& p);
/// Multiplicity of P_v[1] as a summand, per vertex.
std::vector<std::size_t> rho1(const TwoTermComplex& p);

/// q <= p in the silting order (p >= q iff Hom(p, q[1]) == 0).
bool silt_leq(const TwoTermComplex& p, const TwoTermComplex& q);

GVector g_vector(const TwoTermComplex& p);

/// Number of isomorphism classes of indecomposable summands.
std::size_t count_summands(const TwoTermComplex& p);

/// add p == add q, tested as equal summand counts of p, q and p + q.
bool additively_equivalent(const TwoTermComplex& p, const TwoTermComplex& q);

/// Presilting with as many indecomposable summands as the algebra has vertices.
bool is_silting(const TwoTermComplex& p);

// Completions are returned up to additive equivalence: they contain p and need not be basic.

/// p + C(f)[-1] for a right (add p)-approximation f of Lambda[1]; minimality reduced.
TwoTermComplex bongartz_completion(const TwoTermComplex& p);
/// p + C(g) for a left (add p)-approximation g of Lambda; minimality reduced.
TwoTermComplex co_bongartz_completion(const TwoTermComplex& p);

} // namespace silt

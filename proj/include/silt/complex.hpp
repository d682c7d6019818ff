#pragma once

#include <cstdint>
#include <vector>

#include "silt/rep.hpp"

namespace silt {

/// A complex P_{-1} -> P_0 of projectives. Summand k of P_{-1} is P_{degree_minus1[k]},
/// summand r of P_0 is P_{degree0[r]}, and d[r][k] lies in e_{degree0[r]} A e_{degree_minus1[k]}.
struct TwoTermComplex {
    AlgebraPtr algebra;
    std::vector<std::size_t> degree_minus1;
    std::vector<std::size_t> degree0;
    std::vector<std::vector<Element>> d;

    static TwoTermComplex zero(AlgebraPtr a);
    /// Lambda e in degree 0 for e = sum of the given vertices.
    static TwoTermComplex stalk0(AlgebraPtr a, const std::vector<std::size_t>& vertices);
    /// Lambda e in degree -1.
    static TwoTermComplex stalk1(AlgebraPtr a, const std::vector<std::size_t>& vertices);
    static TwoTermComplex lambda(AlgebraPtr a);
    static TwoTermComplex lambda_shift(AlgebraPtr a);

    std::vector<std::int64_t> mult_neg1() const;
    std::vector<std::int64_t> mult_0() const;
    std::size_t num_vertices() const { return algebra->num_vertices(); }

    /// The differential as a module map between the associated representations.
    RepMap differential() const;
    /// Entries lie in the right corners e_r A e_c.
    bool well_formed() const;
};

TwoTermComplex direct_sum(const TwoTermComplex& a, const TwoTermComplex& b);

} // namespace silt
